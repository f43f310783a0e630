/**
 * @file macdonald.hpp
 * @brief Two-variable symmetric polynomials over q-rational coefficients:
 *        the generating coefficients g_m, specialized Macdonald polynomials
 *        P_lambda(x;q,0), Pieri coefficients, and the bridge back to graded
 *        characters.
 */
#pragma once

#include "demazure/character.hpp"
#include "demazure/qrat.hpp"

#include <map>
#include <utility>

namespace demazure {

struct InconsistentPieri : std::logic_error {
    using std::logic_error::logic_error;
};
struct NonPolynomialCoefficient : std::domain_error {
    using std::domain_error::domain_error;
};

/**
 * Symmetric polynomial in x1, x2 stored by orbit representative: the key
 * (a, b) with a >= b >= 0 stands for x1^a x2^b + x1^b x2^a when a != b and
 * for x1^a x2^a when a == b. No zero coefficients are stored; products are
 * formed by full monomial expansion and re-collection, which keeps symmetry
 * by construction.
 */
class SymPoly2 {
public:
    SymPoly2() = default;
    SymPoly2(long c) { add(0, 0, QRat(c)); }

    const std::map<std::pair<long, long>, QRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of the orbit of x1^a x2^b (argument order irrelevant).
    QRat coeff(long a, long b) const;

    /// Add c times the orbit of x1^a x2^b.
    void add(long a, long b, const QRat& c);

    SymPoly2 operator+(const SymPoly2& o) const;
    SymPoly2 operator-(const SymPoly2& o) const;
    SymPoly2 operator*(const SymPoly2& o) const;
    SymPoly2 operator*(const QRat& c) const;
    SymPoly2& operator+=(const SymPoly2& o) { *this = *this + o; return *this; }
    SymPoly2& operator-=(const SymPoly2& o) { *this = *this - o; return *this; }

    bool operator==(const SymPoly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymPoly2& o) const { return terms_ != o.terms_; }

    /// Multiply by (x1 x2)^k, i.e. shift both exponents.
    SymPoly2 shifted_diagonal(long k) const;

private:
    std::map<std::pair<long, long>, QRat> terms_;
};

/// Coefficient of y^m in prod_i 1/(x_i y; q)_infty, computed by truncating
/// each factor to sum_{k <= m} (x_i y)^k / (q;q)_k and convolving.
SymPoly2 gm(long m);

/// The same coefficient from the closed form
/// sum_{a+b=m} x1^a x2^b / ((q;q)_a (q;q)_b); cross-checks gm.
SymPoly2 gm_closed(long m);

/// Specialized Macdonald polynomial P_lambda(x;q,0) for a two-row lambda:
/// P_(m,0) = (q;q)_m g_m and P_(l1,l2) = (x1 x2)^{l2} P_(l1-l2,0).
SymPoly2 macdonald_p(long l1, long l2);

/// Pieri coefficients phi_{lambda/(n)} in
/// P_n g_m = sum_lambda phi_{lambda/(n)} P_lambda, over two-row lambda
/// containing (n) with |lambda| = n + m. Computed both by the arm/leg
/// product formula and by a triangular linear solve against the P_lambda
/// basis; throws InconsistentPieri if the routes disagree. Requires n >= m.
std::map<std::pair<long, long>, QRat> pieri_expand(long n, long m);

/// Substitute x1 -> weight +1, x2 -> weight -1: the orbit of x1^a x2^b
/// lands at weights a-b and b-a. Throws NonPolynomialCoefficient unless
/// every coefficient has denominator 1.
GradedCharacter sympoly_to_character(const SymPoly2& p);

}  // namespace demazure
