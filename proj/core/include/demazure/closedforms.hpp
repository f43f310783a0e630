/**
 * @file closedforms.hpp
 * @brief Closed character and multiplicity formulas for tensor products of
 *        local Weyl, irreducible and level-2 Demazure modules, each checkable
 *        against the recursion/basis oracles in cvmod and the generic
 *        decompositions in character.hpp.
 */
#pragma once

#include "demazure/character.hpp"
#include "demazure/partition.hpp"

#include <vector>

namespace demazure {

struct ShapeNotHook : std::domain_error {
    using std::domain_error::domain_error;
};
struct OrderViolation : std::domain_error {
    using std::domain_error::domain_error;
};

/// One step of a CV filtration: q^shift times ch V(partition).
struct FiltrationQuotient {
    long shift = 0;
    Partition partition;
};

/// Closed-form graded character of the hook module V(first, 1^ones),
/// dispatching on the three displayed families (first >= ones + 1 with
/// r = first - ones >= 0; ones = first + 1; ones >= first + 2).
/// Throws ShapeNotHook when (first, ones) is not a hook shape.
GradedCharacter hook_char_closed(long first, long ones);

/// Both hook-character recursions; used by the verification sweeps.
bool kus_recursion_wide(long k, long r);   ///< V(k+r,1^k) family, k >= 1
bool kus_recursion_tall(long k, long r);   ///< V(k,1^{k+r}) family, k >= 1

/// CV filtration quotients of W_loc(m) (x) V(n), as partitions.
std::vector<Partition> weyl_tensor_irr_quotients(long m, long n);

/// [W_loc(m) (x) V(n) : V(m+n-2i)]_q by the closed branch formulas.
IrreducibleDecomposition weyl_tensor_irr_multiplicities(long m, long n);

/// true iff the quotient dimensions sum to 2^m (n+1).
bool dim_sum_check(long m, long n);

/// ch V(2^a, 1^b) as the alternating Weyl-character sum.
GradedCharacter char_2a1b_weyl_form(long a, long b);

/// Level-2 flag of V(2^a, 1^b): parts[2a+b-2k] = q^{k(a+ceil(b/2))} [floor(b/2) k]_q.
FlagDecomposition char_2a1b_demazure_form(long a, long b);

/// ch W_loc(n) (x) W_loc(m) via the Pieri-rule coefficients
/// [n i][m i](1-q)...(1-q^i).
GradedCharacter tensor_weyl_weyl_pieri_form(long n, long m);

/// Same character via sum_k [m k]_q ch V(2^{m-k}, 1^{n-m}); needs n >= m.
GradedCharacter tensor_weyl_weyl_truncated_form(long n, long m);

/// Filtration of W_loc(n) (x) W_loc(m) by shifted truncated Weyl modules;
/// one quotient per unit of each coefficient of [m r]_q. Needs n >= m.
std::vector<FiltrationQuotient> weyl_tensor_weyl_quotients(long n, long m);

/// Closed-form level-2 multiplicities [W_loc(n) (x) W_loc(m) : D(2, m+n-2s)]_q.
/// Needs n >= m.
FlagDecomposition weyl_tensor_level2_multiplicities(long n, long m);

/// Exact integer matrices with entries binom(r+col, row); invertibility of
/// both families underpins the filtration argument.
struct BinomialMatrix {
    std::vector<std::vector<mpz_class>> entries;  ///< square
};

BinomialMatrix matrix_A(long r, long i);  ///< requires r >= i >= 1
BinomialMatrix matrix_B(long r, long i);  ///< requires 1 <= r < i
mpz_class determinant(const BinomialMatrix& m);
bool is_invertible(const BinomialMatrix& m);

}  // namespace demazure
