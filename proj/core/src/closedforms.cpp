#include "demazure/closedforms.hpp"

#include "demazure/cvmod.hpp"
#include "demazure/qalg.hpp"

namespace demazure {

namespace {
/// Partition (first, 1^ones); first >= 1, ones >= 0.
Partition hook_shape(long first, long ones) {
    std::vector<long> parts{first};
    parts.insert(parts.end(), ones, 1);
    return Partition(std::move(parts));
}
}  // namespace

GradedCharacter hook_char_closed(long first, long ones) {
    if (first < 1 || ones < 0)
        throw ShapeNotHook("hook_char_closed: (" + std::to_string(first) + ", 1^" +
                           std::to_string(ones) + ") is not a hook");
    GradedCharacter c;
    if (first >= ones) {
        // V(k+r, 1^k), k = ones, r = first - ones
        long k = ones, r = first - ones;
        for (long p = 0; p <= k; ++p)
            c += irr_char(static_cast<int>(r + 2 * (k - p))) *
                 qbinom(static_cast<int>(k), static_cast<int>(p)).shifted(static_cast<int>(p));
    } else if (ones == first + 1) {
        // V(k, 1^{k+1}), k = first
        long k = first;
        for (long p = 0; p <= k; ++p)
            c += irr_char(static_cast<int>(1 + 2 * p)) *
                 qbinom(static_cast<int>(k + 1), static_cast<int>(p + 1))
                     .shifted(static_cast<int>(k - p));
    } else {
        // V(k, 1^{k+r}), k = first, r = ones - first >= 2
        long k = first, r = ones - first;
        for (long p = 0; p <= k; ++p)
            c += irr_char(static_cast<int>(r + 2 * (k - p))) *
                 qbinom(static_cast<int>(k + r), static_cast<int>(p)).shifted(static_cast<int>(p));
        for (long p = k + 1; 2 * p <= 2 * k + r; ++p) {
            QPoly coef = qbinom(static_cast<int>(k + r), static_cast<int>(p)) -
                         qbinom(static_cast<int>(k + r), static_cast<int>(p - k - 1))
                             .shifted(static_cast<int>(2 * k + r + 1 - 2 * p));
            c += irr_char(static_cast<int>(2 * k + r - 2 * p)) * coef.shifted(static_cast<int>(p));
        }
    }
    return c;
}

bool kus_recursion_wide(long k, long r) {
    GradedCharacter lhs = cv_char(hook_shape(k + r, k));
    GradedCharacter inner = irr_char(static_cast<int>(r));
    for (long i = 2; i <= k; ++i) inner += cv_char(hook_shape(i + r, i - 2));
    GradedCharacter rhs = cv_char(hook_shape(k + r + 1, k - 1)) + shift(inner, static_cast<int>(k));
    return lhs == rhs;
}

bool kus_recursion_tall(long k, long r) {
    GradedCharacter lhs = cv_char(hook_shape(k, k + r));
    GradedCharacter inner = weyl_char(static_cast<int>(r));
    for (long i = 2; i <= k; ++i) inner += cv_char(hook_shape(i, i + r - 2));
    GradedCharacter rhs =
        cv_char(hook_shape(k + 1, k + r - 1)) + shift(inner, static_cast<int>(k + r));
    return lhs == rhs;
}

std::vector<Partition> weyl_tensor_irr_quotients(long m, long n) {
    if (m < 1 || n < 1) throw std::domain_error("weyl_tensor_irr_quotients: need m, n >= 1");
    std::vector<Partition> out;
    if (m > n) {
        for (long i = 0; i <= n; ++i) out.push_back(hook_shape(i + 1, m - n + i - 1));
    } else {
        out.push_back(n - m == 0 ? Partition() : Partition{n - m});
        for (long i = 1; i <= m; ++i) out.push_back(hook_shape(n - m + i + 1, i - 1));
    }
    return out;
}

IrreducibleDecomposition weyl_tensor_irr_multiplicities(long m, long n) {
    if (m < 1 || n < 1)
        throw std::domain_error("weyl_tensor_irr_multiplicities: need m, n >= 1");
    IrreducibleDecomposition d;
    auto put = [&](long i, QPoly p) {
        if (!p.is_zero()) d.parts.emplace(static_cast<int>(m + n - 2 * i), std::move(p));
    };
    if (m <= n) {
        for (long i = 0; i <= m; ++i) put(i, qbinom(static_cast<int>(m), static_cast<int>(i)));
    } else {
        for (long i = 0; i <= n; ++i) put(i, qbinom(static_cast<int>(m), static_cast<int>(i)));
        for (long i = n + 1; 2 * i <= n + m; ++i)
            put(i, qbinom(static_cast<int>(m), static_cast<int>(i)) -
                       qbinom(static_cast<int>(m), static_cast<int>(i - n - 1)));
    }
    return d;
}

bool dim_sum_check(long m, long n) {
    mpz_class total = 0;
    for (const auto& xi : weyl_tensor_irr_quotients(m, n)) total += cv_dimension(xi);
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(m));
    expected *= n + 1;
    return total == expected;
}

GradedCharacter char_2a1b_weyl_form(long a, long b) {
    if (a < 0 || b < 0) throw std::domain_error("char_2a1b_weyl_form: negative argument");
    GradedCharacter c;
    for (long k = 0; k <= a; ++k) {
        long e = k * (a + b) - k * (k - 1) / 2;
        QPoly coef = qbinom(static_cast<int>(a), static_cast<int>(k)).shifted(static_cast<int>(e));
        if (k % 2) coef = -coef;
        c += weyl_char(static_cast<int>(b + 2 * (a - k))) * coef;
    }
    return c;
}

FlagDecomposition char_2a1b_demazure_form(long a, long b) {
    if (a < 0 || b < 0) throw std::domain_error("char_2a1b_demazure_form: negative argument");
    FlagDecomposition d;
    d.level = 2;
    long half = b / 2, chalf = (b + 1) / 2;
    for (long k = 0; k <= half; ++k) {
        QPoly p = qbinom(static_cast<int>(half), static_cast<int>(k))
                      .shifted(static_cast<int>(k * (a + chalf)));
        if (!p.is_zero()) d.parts.emplace(static_cast<int>(2 * a + b - 2 * k), std::move(p));
    }
    return d;
}

GradedCharacter tensor_weyl_weyl_pieri_form(long n, long m) {
    if (n < 0 || m < 0) throw std::domain_error("tensor_weyl_weyl_pieri_form: negative argument");
    GradedCharacter c;
    for (long i = 0; i <= std::min(n, m); ++i) {
        QPoly coef = qbinom(static_cast<int>(n), static_cast<int>(i)) *
                     qbinom(static_cast<int>(m), static_cast<int>(i)) *
                     falling_q_product(static_cast<int>(i));
        c += weyl_char(static_cast<int>(n + m - 2 * i)) * coef;
    }
    return c;
}

GradedCharacter tensor_weyl_weyl_truncated_form(long n, long m) {
    if (n < m) throw OrderViolation("tensor_weyl_weyl_truncated_form: needs n >= m");
    if (m < 0) throw std::domain_error("tensor_weyl_weyl_truncated_form: negative argument");
    GradedCharacter c;
    for (long k = 0; k <= m; ++k) {
        std::vector<long> parts(m - k, 2);
        parts.insert(parts.end(), n - m, 1);
        c += cv_char(Partition(std::move(parts))) * qbinom(static_cast<int>(m), static_cast<int>(k));
    }
    return c;
}

std::vector<FiltrationQuotient> weyl_tensor_weyl_quotients(long n, long m) {
    if (n < m) throw OrderViolation("weyl_tensor_weyl_quotients: needs n >= m");
    if (m < 1) throw std::domain_error("weyl_tensor_weyl_quotients: need m >= 1");
    std::vector<FiltrationQuotient> out;
    for (long r = 0; r <= m; ++r) {
        const QPoly& mult = qbinom(static_cast<int>(m), static_cast<int>(r));
        Partition xi = truncated_weyl_partition(m + n - 2 * r, n - r);
        for (int g = 0; g <= mult.degree(); ++g) {
            mpz_class c = mult.coeff(g);
            for (mpz_class t = 0; t < c; ++t) out.push_back(FiltrationQuotient{g, xi});
        }
    }
    return out;
}

FlagDecomposition weyl_tensor_level2_multiplicities(long n, long m) {
    if (n < m) throw OrderViolation("weyl_tensor_level2_multiplicities: needs n >= m");
    if (m < 0) throw std::domain_error("weyl_tensor_level2_multiplicities: negative argument");
    FlagDecomposition d;
    d.level = 2;
    const long half = (n - m) / 2, chalf = (n - m + 1) / 2;
    auto put = [&](long s, QPoly p) {
        if (!p.is_zero()) d.parts.emplace(static_cast<int>(m + n - 2 * s), std::move(p));
    };
    for (long s = 0; s <= half; ++s) {
        QPoly p;
        for (long k = 0; k <= std::min(s, m); ++k)
            p += (qbinom(static_cast<int>(m), static_cast<int>(k)) *
                  qbinom(static_cast<int>(half), static_cast<int>(s - k)))
                     .shifted(static_cast<int>((s - k) * (m - k + chalf)));
        put(s, std::move(p));
    }
    for (long j = 1; j <= m; ++j) {
        long s = j + half;
        QPoly p;
        for (long k = 0; k <= std::min(m - j, half); ++k)
            p += (qbinom(static_cast<int>(m), static_cast<int>(k + j)) *
                  qbinom(static_cast<int>(half), static_cast<int>(half - k)))
                     .shifted(static_cast<int>((half - k) * (m - k - j + chalf)));
        put(s, std::move(p));
    }
    return d;
}

namespace {
BinomialMatrix binomial_matrix(long r, long i) {
    BinomialMatrix m;
    m.entries.assign(i, std::vector<mpz_class>(i));
    for (long p = 0; p < i; ++p)
        for (long c = 0; c < i; ++c)
            mpz_bin_uiui(m.entries[p][c].get_mpz_t(), static_cast<unsigned long>(r + c),
                         static_cast<unsigned long>(p));
    return m;
}
}  // namespace

BinomialMatrix matrix_A(long r, long i) {
    if (i < 1 || r < i) throw std::domain_error("matrix_A: requires r >= i >= 1");
    return binomial_matrix(r, i);
}

BinomialMatrix matrix_B(long r, long i) {
    if (r < 1 || r >= i) throw std::domain_error("matrix_B: requires 1 <= r < i");
    return binomial_matrix(r, i);
}

mpz_class determinant(const BinomialMatrix& m) {
    // Bareiss fraction-free elimination; all divisions exact.
    auto a = m.entries;
    const size_t n = a.size();
    mpz_class sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t r = k + 1; r < n; ++r)
            for (size_t c = k + 1; c < n; ++c)
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? sign : sign * a[n - 1][n - 1];
}

bool is_invertible(const BinomialMatrix& m) { return determinant(m) != 0; }

}  // namespace demazure
