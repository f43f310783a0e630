#include "demazure/cvmod.hpp"

#include "demazure/qalg.hpp"

#include <map>
#include <mutex>

namespace demazure {

mpz_class cv_dimension(const Partition& xi) {
    mpz_class d = 1;
    for (long n : xi.parts()) d *= n + 1;
    return d;
}

namespace {
std::mutex g_cv_mutex;
std::map<std::vector<long>, GradedCharacter> g_cv_memo;

GradedCharacter cv_char_uncached(const Partition& xi) {
    if (xi.empty()) return irr_char(0);
    if (xi.num_parts() == 1) return irr_char(static_cast<int>(xi.part(0)));
    SesTransforms t = ses_transforms(xi);
    return cv_char(t.plus) + shift(cv_char(t.minus), static_cast<int>(t.shift));
}
}  // namespace

GradedCharacter cv_char(const Partition& xi) {
    {
        std::lock_guard<std::mutex> lock(g_cv_mutex);
        auto it = g_cv_memo.find(xi.parts());
        if (it != g_cv_memo.end()) return it->second;
    }
    GradedCharacter c = cv_char_uncached(xi);
    std::lock_guard<std::mutex> lock(g_cv_mutex);
    return g_cv_memo.emplace(xi.parts(), std::move(c)).first->second;
}

namespace {

/// Check every inequality (r, j) whose indices are all assigned once
/// positions pos..k hold values; called with r = pos + 1 (1-based).
bool constraints_ok_at(const std::vector<long>& n, const std::vector<long>& tail_n,
                       const std::vector<long>& i, const std::vector<long>& tail_i,
                       size_t r) {
    const size_t k = n.size();
    long ir1 = i[r - 2];                          // i_{r-1}
    long ir = (r - 1 < k) ? i[r - 1] : 0;         // i_r (0 past the end)
    long suffix2 = (r < k) ? 2 * tail_i[r] : 0;   // 2 sum_{l >= r+1} i_l
    for (size_t j = 1; j <= r - 1; ++j) {
        long lhs = static_cast<long>(j) * ir1 + static_cast<long>(j + 1) * ir + suffix2;
        if (lhs > tail_n[r - j]) return false;
    }
    return true;
}

void enumerate_rec(const std::vector<long>& n, const std::vector<long>& tail_n,
                   std::vector<long>& i, std::vector<long>& tail_i, size_t pos,
                   std::vector<std::vector<long>>& out) {
    const size_t k = n.size();
    if (pos == 0) {
        out.push_back(i);
        return;
    }
    // bound from the (r = pos+1, j = 1) inequality
    long suffix = (pos < k) ? tail_i[pos] : 0;
    long bound = tail_n[pos] - 2 * suffix;
    if (bound < 0) return;
    for (long v = 0; v <= bound; ++v) {
        i[pos - 1] = v;
        tail_i[pos - 1] = v + suffix;
        if (constraints_ok_at(n, tail_n, i, tail_i, pos + 1))
            enumerate_rec(n, tail_n, i, tail_i, pos - 1, out);
    }
    i[pos - 1] = 0;
    tail_i[pos - 1] = suffix;
}

}  // namespace

std::vector<std::vector<long>> enumerate_basis(const Partition& xi) {
    const auto& n = xi.parts();
    const size_t k = n.size();
    if (k == 0) return {{}};
    // tail_n[r] = sum_{p = r..k} n_p, 1-based
    std::vector<long> tail_n(k + 2, 0);
    for (size_t r = k; r >= 1; --r) tail_n[r] = tail_n[r + 1] + n[r - 1];
    std::vector<long> i(k, 0), tail_i(k, 0);
    std::vector<std::vector<long>> out;
    enumerate_rec(n, tail_n, i, tail_i, k, out);
    return out;
}

GradedCharacter basis_char(const Partition& xi) {
    GradedCharacter c;
    const long total = xi.size();
    for (const auto& tuple : enumerate_basis(xi)) {
        long drop = 0, grade = 0;
        for (size_t r = 0; r < tuple.size(); ++r) {
            drop += tuple[r];
            grade += static_cast<long>(r) * tuple[r];
        }
        c.add(static_cast<int>(total - 2 * drop),
              QPoly::monomial(static_cast<int>(grade)));
    }
    return c;
}

GradedCharacter weyl_char(int m) {
    if (m < 0) throw std::domain_error("weyl_char: m < 0");
    GradedCharacter c;
    for (int l = 0; 2 * l <= m; ++l)
        c += irr_char(m - 2 * l) * (qbinom(m, l) - qbinom(m, l - 1));
    return c;
}

}  // namespace demazure
