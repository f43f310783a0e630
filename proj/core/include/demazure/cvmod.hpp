/**
 * @file cvmod.hpp
 * @brief Chari-Venkatesh module characters.
 *
 * Two independent routes to ch V(xi): the short-exact-sequence recursion
 * cv_char (memoized), and the brute-force monomial-basis oracle basis_char
 * built from the inequality system J(xi). The pair cross-checks every
 * character the library produces.
 */
#pragma once

#include "demazure/character.hpp"
#include "demazure/partition.hpp"

namespace demazure {

/// dim V(xi) = prod (n_i + 1); 1 for the zero partition.
mpz_class cv_dimension(const Partition& xi);

/// Graded character by the SES recursion:
/// cv_char(xi) = cv_char(xi+) + q^{(k-1)n_k} cv_char(xi-), base cases the
/// zero partition and single rows.
GradedCharacter cv_char(const Partition& xi);

/// All exponent tuples (i_1,...,i_k) of the monomial basis, each tuple
/// satisfying j i_{r-1} + (j+1) i_r + 2 sum_{l>r} i_l <= sum_{p>=r-j} n_p
/// for 2 <= r <= k+1, 1 <= j <= r-1 (i_s = 0 past the last part). The
/// all-zero tuple stands for the generator.
std::vector<std::vector<long>> enumerate_basis(const Partition& xi);

/// Character accumulated directly from the basis tuples: weight
/// |xi| - 2 sum i_r, grade sum (r-1) i_r. Independent oracle for cv_char.
GradedCharacter basis_char(const Partition& xi);

/// Closed-form graded Weyl character,
/// sum_l ([m l]_q - [m l-1]_q) ch V(m-2l); equals cv_char((1^m)).
GradedCharacter weyl_char(int m);

}  // namespace demazure
