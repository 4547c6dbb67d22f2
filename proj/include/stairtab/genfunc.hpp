#pragma once

#include <map>

#include "stairtab/poly.hpp"
#include "stairtab/tableau.hpp"

namespace stairtab {

/// Schur-basis coefficients: partition -> polynomial in t, r (stored
/// with the same variable count as the expanded polynomial, all x
/// exponents zero).
using SchurExpansion = std::map<Partition, MultiPoly>;

/// Sum of x^wt(T) over enumerate_gst(shape, I, m).
MultiPoly gst_gf(const SkewShape& shape, const IndexSet& I, int m);

/// Skew Schur polynomial via the plain SSYT enumeration; agrees with
/// gst_gf(shape, ∅, m) and is kept on an independent code path.
MultiPoly schur_skew_poly(const SkewShape& shape, int m);
MultiPoly schur_poly(const Partition& p, int m);

/// Sum of x^wt(T) t^P(T) r^U(T) over enumerate_qtab(shape, ∅, m).
MultiPoly qtr_poly(const SkewShape& shape, int m);

/// Invariance under every adjacent swap x_i <-> x_{i+1}.
bool is_symmetric_poly(const MultiPoly& p);

/// Greedy leading-exponent elimination. Requires a polynomial
/// symmetric in x (t, r may appear); throws when the input is not
/// symmetric or a leading exponent fails to be a partition.
SchurExpansion schur_expand(const MultiPoly& p);

/// Sum of coeff_nu * s_nu over the expansion; inverse of schur_expand.
MultiPoly expansion_reconstruct(const SchurExpansion& expansion, int m);

/// t^P r^U tallies of the Yamanouchi-word tableaux of the shape, keyed
/// by their (necessarily partition) weight.
SchurExpansion yamanouchi_coeff_table(const SkewShape& shape, int m);

/// schur_skew_poly in 2m variables with x_{2i-1} -> t x_i and
/// x_{2i} -> r x_i.
MultiPoly doubled_substitution(const SkewShape& shape, int m);

/// Same sum as qtr_poly but enumerated by brute force through the
/// shifted-coordinate validity check; differential-testing twin.
MultiPoly shifted_q_poly(const SkewShape& shape, int n, int m);

}  // namespace stairtab
