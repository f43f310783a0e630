#include "demazure/character.hpp"

#include "demazure/cvmod.hpp"

namespace demazure {

QPoly GradedCharacter::at(int w) const {
    auto it = weights_.find(w);
    return it == weights_.end() ? QPoly() : it->second;
}

int GradedCharacter::max_weight() const {
    if (weights_.empty()) throw std::logic_error("max_weight of zero character");
    return weights_.rbegin()->first;
}

void GradedCharacter::add(int w, const QPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = weights_.try_emplace(w, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) weights_.erase(it);
    }
}

GradedCharacter& GradedCharacter::operator+=(const GradedCharacter& o) {
    for (const auto& [w, p] : o.weights_) add(w, p);
    return *this;
}

GradedCharacter& GradedCharacter::operator-=(const GradedCharacter& o) {
    for (const auto& [w, p] : o.weights_) add(w, -p);
    return *this;
}

GradedCharacter GradedCharacter::operator+(const GradedCharacter& o) const {
    GradedCharacter r = *this;
    r += o;
    return r;
}

GradedCharacter GradedCharacter::operator-(const GradedCharacter& o) const {
    GradedCharacter r = *this;
    r -= o;
    return r;
}

GradedCharacter GradedCharacter::operator*(const QPoly& p) const {
    GradedCharacter r;
    if (p.is_zero()) return r;
    for (const auto& [w, q] : weights_) r.add(w, q * p);
    return r;
}

bool GradedCharacter::is_weight_symmetric() const {
    for (const auto& [w, p] : weights_)
        if (at(-w) != p) return false;
    return true;
}

bool GradedCharacter::has_negative_coeff() const {
    for (const auto& [w, p] : weights_)
        if (p.has_negative_coeff()) return true;
    return false;
}

GradedCharacter irr_char(int k) {
    if (k < 0) throw std::domain_error("irr_char: k < 0");
    GradedCharacter c;
    for (int w = -k; w <= k; w += 2) c.add(w, QPoly(1));
    return c;
}

GradedCharacter tensor(const GradedCharacter& a, const GradedCharacter& b) {
    GradedCharacter r;
    for (const auto& [u, p] : a.weights())
        for (const auto& [v, q] : b.weights()) r.add(u + v, p * q);
    return r;
}

GradedCharacter shift(const GradedCharacter& a, int r) {
    if (r < 0) throw std::domain_error("shift: r < 0");
    GradedCharacter out;
    for (const auto& [w, p] : a.weights()) out.add(w, p.shifted(r));
    return out;
}

IrreducibleDecomposition decompose_irreducible(const GradedCharacter& c) {
    if (!c.is_weight_symmetric())
        throw NotAModuleCharacter("decompose_irreducible: weight symmetry fails");
    IrreducibleDecomposition d;
    if (c.is_zero()) return d;
    for (int k = c.max_weight(); k >= 0; --k) {
        QPoly m = c.at(k) - c.at(k + 2);
        if (m.is_zero()) continue;
        if (m.has_negative_coeff())
            throw NotAModuleCharacter("decompose_irreducible: negative multiplicity at V(" +
                                      std::to_string(k) + ")");
        d.parts.emplace(k, std::move(m));
    }
    return d;
}

GradedCharacter recompose(const IrreducibleDecomposition& d) {
    GradedCharacter c;
    for (const auto& [k, m] : d.parts) c += irr_char(k) * m;
    return c;
}

FlagDecomposition demazure_flag_decompose(const GradedCharacter& c, int level) {
    if (level < 1) throw std::domain_error("demazure_flag_decompose: level < 1");
    FlagDecomposition d;
    d.level = level;
    GradedCharacter residual = c;
    while (!residual.is_zero()) {
        int s = residual.max_weight();
        QPoly p = residual.at(s);
        if (s < 0)
            throw NoFlag("negative-weight residual at weight " + std::to_string(s));
        if (p.has_negative_coeff())
            throw NoFlag("negative multiplicity " + p.to_text() + " at weight " +
                         std::to_string(s));
        residual -= cv_char(demazure_partition(level, s)) * p;
        d.parts.emplace(s, std::move(p));
    }
    return d;
}

GradedCharacter recompose(const FlagDecomposition& d) {
    GradedCharacter c;
    for (const auto& [s, m] : d.parts)
        c += cv_char(demazure_partition(d.level, s)) * m;
    return c;
}

QPoly graded_dimension(const GradedCharacter& c) {
    QPoly s;
    for (const auto& [w, p] : c.weights()) s += p;
    return s;
}

mpz_class dimension(const GradedCharacter& c) {
    return graded_dimension(c).eval_one();
}

}  // namespace demazure
