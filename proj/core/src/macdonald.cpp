#include "demazure/macdonald.hpp"

#include "demazure/cvmod.hpp"
#include "demazure/qalg.hpp"

#include <algorithm>
#include <string>

namespace demazure {

namespace {
std::pair<long, long> orbit_key(long a, long b) {
    if (a < 0 || b < 0) throw std::domain_error("SymPoly2: negative exponent");
    return {std::max(a, b), std::min(a, b)};
}
}  // namespace

QRat SymPoly2::coeff(long a, long b) const {
    auto it = terms_.find(orbit_key(a, b));
    return it == terms_.end() ? QRat() : it->second;
}

void SymPoly2::add(long a, long b, const QRat& c) {
    if (c.is_zero()) return;
    auto key = orbit_key(a, b);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly2 SymPoly2::operator+(const SymPoly2& o) const {
    SymPoly2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
    return r;
}

SymPoly2 SymPoly2::operator-(const SymPoly2& o) const {
    SymPoly2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, -c);
    return r;
}

SymPoly2 SymPoly2::operator*(const SymPoly2& o) const {
    // Expand both factors to the full monomial basis, convolve there, and
    // fold the symmetric result back into orbit representatives.
    auto expand = [](const SymPoly2& p) {
        std::map<std::pair<long, long>, QRat> mono;
        for (const auto& [k, c] : p.terms_) {
            mono[{k.first, k.second}] += c;
            if (k.first != k.second) mono[{k.second, k.first}] += c;
        }
        return mono;
    };
    auto ma = expand(*this), mb = expand(o);
    std::map<std::pair<long, long>, QRat> prod;
    for (const auto& [ka, ca] : ma)
        for (const auto& [kb, cb] : mb)
            prod[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    SymPoly2 r;
    for (const auto& [k, c] : prod)
        if (k.first >= k.second) r.add(k.first, k.second, c);
    return r;
}

SymPoly2 SymPoly2::operator*(const QRat& c) const {
    SymPoly2 r;
    for (const auto& [k, v] : terms_) r.add(k.first, k.second, v * c);
    return r;
}

SymPoly2 SymPoly2::shifted_diagonal(long k) const {
    if (k < 0) throw std::domain_error("shifted_diagonal: negative shift");
    SymPoly2 r;
    for (const auto& [key, c] : terms_) r.add(key.first + k, key.second + k, c);
    return r;
}

SymPoly2 gm(long m) {
    if (m < 0) throw std::domain_error("gm: m < 0");
    // Truncate each factor of prod_i 1/(x_i y; q)_infty to
    // sum_{k<=m} (x_i y)^k / (q;q)_k, convolve the two series in y on the
    // full monomial basis, then read off the y^m coefficient.
    std::vector<QRat> factor(m + 1);
    for (long k = 0; k <= m; ++k)
        factor[k] = QRat(QPoly(1), qpochhammer(static_cast<int>(k)));
    std::map<std::pair<long, long>, QRat> ym;
    for (long a = 0; a <= m; ++a) ym[{a, m - a}] += factor[a] * factor[m - a];
    SymPoly2 r;
    for (const auto& [k, c] : ym) {
        if (k.first < k.second) continue;
        QRat mirror = ym[{k.second, k.first}];
        if (mirror != c) throw std::logic_error("gm: series coefficient not symmetric");
        r.add(k.first, k.second, c);
    }
    return r;
}

SymPoly2 gm_closed(long m) {
    if (m < 0) throw std::domain_error("gm_closed: m < 0");
    SymPoly2 r;
    for (long a = m; 2 * a >= m; --a) {
        long b = m - a;
        r.add(a, b, QRat(QPoly(1), qpochhammer(static_cast<int>(a)) *
                                       qpochhammer(static_cast<int>(b))));
    }
    return r;
}

SymPoly2 macdonald_p(long l1, long l2) {
    if (l2 < 0 || l1 < l2) throw std::domain_error("macdonald_p: not a two-row partition");
    SymPoly2 p = gm(l1 - l2) * QRat(qpochhammer(static_cast<int>(l1 - l2)));
    for (const auto& [k, c] : p.terms())
        if (!c.is_polynomial())
            throw std::logic_error("macdonald_p: denominator failed to clear");
    return p.shifted_diagonal(l2);
}

namespace {

/// b_lambda(s; q, 0) for the cell s = (row, col), 1-indexed, of a two-row
/// partition: 1/(1 - q^{arm+1}) when the leg is zero, 1 otherwise, and 1
/// for cells outside the partition.
QRat b_factor(long row1, long row2, long i, long j) {
    long len = (i == 1) ? row1 : (i == 2) ? row2 : 0;
    if (j > len) return QRat(1);
    long arm = len - j;
    long colheight = (j <= row2) ? 2 : 1;
    long leg = colheight - i;
    if (leg != 0) return QRat(1);
    return QRat(QPoly(1), QPoly(1) - QPoly::monomial(static_cast<int>(arm + 1)));
}

/// Arm/leg product formula for phi_{lambda/(n)}: over every column meeting
/// the skew lambda - (n), multiply b_lambda over the cells of lambda in
/// that column and divide by b_(n) over the cells of (n) in it.
QRat pieri_armleg(long n, long l1, long l2) {
    QRat phi(1);
    auto column = [&](long j) {
        long top = (j <= l2) ? 2 : (j <= l1) ? 1 : 0;
        for (long i = 1; i <= top; ++i) phi *= b_factor(l1, l2, i, j);
        if (j <= n) phi /= b_factor(n, 0, 1, j);
    };
    for (long j = n + 1; j <= l1; ++j) column(j);
    for (long j = 1; j <= l2; ++j) column(j);
    return phi;
}

}  // namespace

std::map<std::pair<long, long>, QRat> pieri_expand(long n, long m) {
    if (m < 0) throw std::domain_error("pieri_expand: m < 0");
    if (n < m) throw std::domain_error("pieri_expand: requires n >= m");
    SymPoly2 residual = macdonald_p(n, 0) * gm(m);
    std::map<std::pair<long, long>, QRat> solve;
    const long total = n + m;
    // Triangular by dominance: the monomial x1^{l1} x2^{l2} appears only in
    // P_lambda for lambda dominating (l1, l2), so peel from the top row down.
    for (long l1 = total; 2 * l1 >= total && l1 >= n; --l1) {
        long l2 = total - l1;
        QRat phi = residual.coeff(l1, l2);
        if (phi.is_zero()) continue;
        residual -= macdonald_p(l1, l2) * phi;
        solve.emplace(std::make_pair(l1, l2), std::move(phi));
    }
    if (!residual.is_zero())
        throw InconsistentPieri("pieri_expand: linear solve left a residual");
    for (const auto& [lam, phi] : solve) {
        QRat direct = pieri_armleg(n, lam.first, lam.second);
        if (direct != phi)
            throw InconsistentPieri(
                "pieri_expand: arm/leg product disagrees with linear solve at lambda = (" +
                std::to_string(lam.first) + "," + std::to_string(lam.second) + ")");
    }
    return solve;
}

GradedCharacter sympoly_to_character(const SymPoly2& p) {
    GradedCharacter c;
    for (const auto& [k, v] : p.terms()) {
        if (!v.is_polynomial())
            throw NonPolynomialCoefficient("sympoly_to_character: coefficient " + v.to_text() +
                                           " at orbit (" + std::to_string(k.first) + "," +
                                           std::to_string(k.second) + ") is not polynomial");
        int w = static_cast<int>(k.first - k.second);
        c.add(w, v.num());
        if (w != 0) c.add(-w, v.num());
    }
    return c;
}

}  // namespace demazure
