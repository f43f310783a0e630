/**
 * @file qrat.hpp
 * @brief Rational functions in q, kept in reduced normal form.
 *
 * Needed for Macdonald/Pieri coefficients such as 1/(q;q)_a. Invariants
 * after every operation: the denominator is nonzero, numerator and
 * denominator share no nonconstant factor, their integer contents are
 * coprime, and the lowest nonzero coefficient of the denominator is
 * positive.
 */
#pragma once

#include "demazure/qpoly.hpp"

namespace demazure {

class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(long v) : num_(v), den_(1) {}
    QRat(QPoly p) : num_(std::move(p)), den_(1) {}
    QRat(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == QPoly(1); }

    QRat operator-() const;
    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    QRat& operator+=(const QRat& o) { *this = *this + o; return *this; }
    QRat& operator-=(const QRat& o) { *this = *this - o; return *this; }
    QRat& operator*=(const QRat& o) { *this = *this * o; return *this; }
    QRat& operator/=(const QRat& o) { *this = *this / o; return *this; }

    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    std::string to_text() const;

private:
    void normalize();
    QPoly num_;
    QPoly den_;
};

/// a/b == c/d decided by cross multiplication; exercised by tests against
/// the normal-form equality above.
bool cross_equal(const QRat& a, const QRat& b);

}  // namespace demazure
