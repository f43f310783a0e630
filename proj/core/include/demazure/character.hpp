/**
 * @file character.hpp
 * @brief Graded sl2 characters: the central algebraic value of the library.
 *
 * A GradedCharacter is a finitely supported map from integer weights
 * (multiples of the fundamental weight; rank is 1, so plain ints suffice)
 * to graded dimensions in Z[q]. Tensor products are weight convolutions,
 * the grade shift tau_r multiplies by q^r, and two decompositions are
 * provided: into irreducibles and into level-l Demazure characters.
 */
#pragma once

#include "demazure/qpoly.hpp"

#include <map>
#include <stdexcept>

namespace demazure {

struct NotAModuleCharacter : std::domain_error {
    using std::domain_error::domain_error;
};

/// The greedy flag solver found a negative multiplicity or a surviving
/// negative-weight residual: the character is not a nonnegative
/// combination of level-l Demazure characters.
struct NoFlag : std::domain_error {
    using std::domain_error::domain_error;
};

class GradedCharacter {
public:
    GradedCharacter() = default;

    const std::map<int, QPoly>& weights() const { return weights_; }
    bool is_zero() const { return weights_.empty(); }
    QPoly at(int w) const;
    /// Largest weight with nonzero polynomial; throws on the zero character.
    int max_weight() const;

    void add(int w, const QPoly& p);

    GradedCharacter operator+(const GradedCharacter& o) const;
    GradedCharacter operator-(const GradedCharacter& o) const;
    GradedCharacter& operator+=(const GradedCharacter& o);
    GradedCharacter& operator-=(const GradedCharacter& o);
    /// Every weight polynomial multiplied by p.
    GradedCharacter operator*(const QPoly& p) const;

    bool operator==(const GradedCharacter& o) const { return weights_ == o.weights_; }
    bool operator!=(const GradedCharacter& o) const { return weights_ != o.weights_; }

    bool is_weight_symmetric() const;
    bool has_negative_coeff() const;

private:
    std::map<int, QPoly> weights_;  // no zero polynomials stored
};

struct IrreducibleDecomposition {
    std::map<int, QPoly> parts;  ///< graded multiplicity of V(k)
};

struct FlagDecomposition {
    int level = 1;
    std::map<int, QPoly> parts;  ///< graded multiplicity of D(level, s)
};

/// ch V(k): weights k, k-2, ..., -k each with 1 at grade 0.
GradedCharacter irr_char(int k);

/// Weight-wise convolution; the character of the tensor product.
GradedCharacter tensor(const GradedCharacter& a, const GradedCharacter& b);

/// tau_r: multiply every polynomial by q^r.
GradedCharacter shift(const GradedCharacter& a, int r);

/// parts[k] = c[k] - c[k+2] for k >= 0; throws NotAModuleCharacter on
/// broken symmetry or a negative multiplicity.
IrreducibleDecomposition decompose_irreducible(const GradedCharacter& c);

/// Reassemble sum parts[k] * irr_char(k).
GradedCharacter recompose(const IrreducibleDecomposition& d);

/// Greedy top-weight elimination against level-l Demazure characters
/// (unitriangular leading terms, so no backtracking); throws NoFlag when
/// the character has no such nonnegative decomposition.
FlagDecomposition demazure_flag_decompose(const GradedCharacter& c, int level);

/// Reassemble sum parts[s] * ch D(level, s).
GradedCharacter recompose(const FlagDecomposition& d);

QPoly graded_dimension(const GradedCharacter& c);   ///< sum over weights
mpz_class dimension(const GradedCharacter& c);      ///< graded dimension at q=1

}  // namespace demazure
