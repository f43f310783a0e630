#include "demazure/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace demazure {

QPoly::QPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

QPoly QPoly::monomial(int k, const mpz_class& c) {
    if (k < 0) throw std::domain_error("QPoly::monomial: negative exponent");
    QPoly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, mpz_class(0));
        p.coeffs_[k] = c;
    }
    return p;
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

bool QPoly::has_negative_coeff() const {
    for (const auto& c : coeffs_)
        if (c < 0) return true;
    return false;
}

mpz_class QPoly::eval_one() const {
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return QPoly(std::move(out));
}

QPoly QPoly::shifted(int r) const {
    if (r < 0) throw std::domain_error("QPoly::shifted: negative shift");
    if (is_zero() || r == 0) return *this;
    std::vector<mpz_class> out(coeffs_.size() + r, mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + r] = coeffs_[i];
    return QPoly(std::move(out));
}

QPoly QPoly::divmod(const QPoly& divisor, QPoly& q) const {
    if (divisor.is_zero()) throw std::domain_error("QPoly: division by zero");
    std::vector<mpz_class> rem = coeffs_;
    const int dd = divisor.degree();
    const mpz_class& lead = divisor.coeffs_.back();
    std::vector<mpz_class> quot;
    if (degree() >= dd) quot.assign(degree() - dd + 1, mpz_class(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        mpz_class f = rem[i] / lead;
        if (f * lead != rem[i]) break;  // not divisible at this step; leave in remainder
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.coeffs_[j];
    }
    q = QPoly(std::move(quot));
    return QPoly(std::move(rem));
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
    QPoly q;
    QPoly r = divmod(divisor, q);
    if (!r.is_zero()) throw std::domain_error("QPoly::divide_exact: inexact division");
    return q;
}

std::string QPoly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

mpz_class int_content(const QPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    mpz_class g = int_content(p);
    if (p.coeffs().back() < 0) g = -g;
    std::vector<mpz_class> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c / g);
    return QPoly(std::move(out));
}

QPoly poly_gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder keeps everything in Z[q]
        int k = a.degree() - b.degree() + 1;
        QPoly scaled = a;
        QPoly lead = QPoly(b.coeffs().back());
        for (int i = 0; i < k; ++i) scaled *= lead;
        QPoly q;
        QPoly r = scaled.divmod(b, q);
        a = b;
        b = primitive_part(r);
    }
    return a;
}

}  // namespace demazure
