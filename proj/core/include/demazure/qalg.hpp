/**
 * @file qalg.hpp
 * @brief Gaussian binomials and q-Pochhammer symbols.
 */
#pragma once

#include "demazure/qpoly.hpp"

namespace demazure {

/// Gaussian binomial [n r]_q. Zero unless n, r, n-r are all nonnegative.
/// Computed by the Pascal recurrence q^r [n-1 r] + [n-1 r-1] with a
/// memo table shared across threads.
const QPoly& qbinom(int n, int r);

/// [n r]_q built from the product/quotient definition by exact division;
/// independent cross-check for the recurrence path.
QPoly qbinom_by_division(int n, int r);

/// (q;q)_n = (1-q)(1-q^2)...(1-q^n); n must be nonnegative.
QPoly qpochhammer(int n);

/// (1-q)...(1-q^i): alias of qpochhammer so tensor formulas read naturally.
inline QPoly falling_q_product(int i) { return qpochhammer(i); }

}  // namespace demazure
