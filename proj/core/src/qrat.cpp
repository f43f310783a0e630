#include "demazure/qrat.hpp"

#include <stdexcept>

namespace demazure {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
    normalize();
}

void QRat::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    mpz_class cn = int_content(num_);
    mpz_class cd = int_content(den_);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    // sign carried by the numerator: lowest nonzero denominator coeff > 0
    int low = 0;
    while (den_.coeff(low) == 0) ++low;
    if (den_.coeff(low) < 0) c = -c;
    if (c != 1) {
        std::vector<mpz_class> n2, d2;
        for (const auto& x : num_.coeffs()) n2.push_back(x / c);
        for (const auto& x : den_.coeffs()) d2.push_back(x / c);
        num_ = QPoly(std::move(n2));
        den_ = QPoly(std::move(d2));
    }
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::operator+(const QRat& o) const {
    return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const {
    return QRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator*(const QRat& o) const {
    return QRat(num_ * o.num_, den_ * o.den_);
}

QRat QRat::operator/(const QRat& o) const {
    if (o.is_zero()) throw std::domain_error("QRat: division by zero");
    return QRat(num_ * o.den_, den_ * o.num_);
}

std::string QRat::to_text() const {
    if (is_polynomial()) return num_.to_text();
    return "(" + num_.to_text() + ")/(" + den_.to_text() + ")";
}

bool cross_equal(const QRat& a, const QRat& b) {
    return a.num() * b.den() == b.num() * a.den();
}

}  // namespace demazure
