/**
 * @file qpoly.hpp
 * @brief Dense integer-coefficient polynomials in the grading variable q.
 *
 * QPoly is the universal coefficient object of the library: graded
 * dimensions, multiplicities and q-binomials are all values of this type.
 * Coefficients are arbitrary-precision integers (GMP); storage is a dense
 * ascending coefficient vector with no trailing zeros, so the zero
 * polynomial is the empty vector.
 */
#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace demazure {

class QPoly {
public:
    QPoly() = default;
    QPoly(long c) { if (c != 0) coeffs_.emplace_back(c); }
    QPoly(const mpz_class& c) { if (c != 0) coeffs_.push_back(c); }
    explicit QPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    QPoly(std::initializer_list<long> coeffs);

    /// c * q^k
    static QPoly monomial(int k, const mpz_class& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    mpz_class coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool has_negative_coeff() const;
    /// Value at q = 1 (total dimension when this is a graded dimension).
    mpz_class eval_one() const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly operator+(const QPoly& o) const { QPoly r = *this; r += o; return r; }
    QPoly operator-(const QPoly& o) const { QPoly r = *this; r -= o; return r; }
    QPoly operator*(const QPoly& o) const;
    QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }

    /// Multiply by q^r.
    QPoly shifted(int r) const;

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return coeffs_ != o.coeffs_; }
    /// Lexicographic on coefficient vectors; only used as a map key order.
    bool operator<(const QPoly& o) const { return coeffs_ < o.coeffs_; }

    /// Quotient of an exact division; throws std::domain_error if the
    /// divisor is zero or the division leaves a remainder.
    QPoly divide_exact(const QPoly& divisor) const;

    /// True division attempt: quotient stored in q, remainder returned.
    QPoly divmod(const QPoly& divisor, QPoly& q) const;

    /// Ascending-power text, "1" coefficients omitted: "1+q+2q^2".
    std::string to_text() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// gcd of integer contents; 0 for the zero polynomial.
mpz_class int_content(const QPoly& p);

/// p divided by its content, sign chosen so the leading coefficient is positive.
QPoly primitive_part(const QPoly& p);

/// Primitive polynomial gcd over Q (primitive PRS); result has positive
/// leading coefficient. gcd(0, p) = primitive_part(p).
QPoly poly_gcd(QPoly a, QPoly b);

}  // namespace demazure
