#pragma once

#include <vector>

#include "stairtab/jdt.hpp"
#include "stairtab/tableau.hpp"

namespace stairtab {

/// Weight-preserving map G(δ(n)/μ, I) -> G(δ(n)/μ, I ∪ {1}): erase the
/// 1s, forward-slide into the holes right to left, reverse-slide into
/// the vacated outer strip top to bottom, and write the 1s back into
/// the freed inner cells. Requires 1 ∉ I and a staircase outer shape.
GstTableau phi_add_one(const GstTableau& t, const IndexSet& I, int n);

/// General step G(δ(n)/μ, I) -> G(δ(n)/μ, I ∪ {letter}): entries below
/// `letter` are frozen into an enlarged inner shape, the rest is
/// relabeled down by letter-1 and handed to phi_add_one with the
/// correspondingly shifted set.
GstTableau phi_add(const GstTableau& t, const IndexSet& I, int letter, int n);

/// Inverse step G(δ(n)/μ, I) -> G(δ(n)/μ, I \ {letter}), realized as
/// transpose, phi_add on the complement set, transpose back.
GstTableau phi_remove(const GstTableau& t, const IndexSet& I, int letter, int n);

/// Composite bijection G(δ(n)/μ, from) -> G(δ(n)/μ, to): elements of
/// from\to removed in descending order, then to\from added ascending.
GstTableau gst_transport(const GstTableau& t, const IndexSet& from, const IndexSet& to, int n);

/// Connected components of the cells holding `letter` (primed or not),
/// each returned as the path from its upper-right end to its
/// bottom-left end. A 2x2 block or a non-path component signals an
/// invalid input tableau and throws.
std::vector<std::vector<Cell>> ribbons(const QTableau& t, int letter);

/// Q(shape, I) -> Q(shape, I ∪ {letter}): within each ribbon of the
/// letter, every entry moves one step toward the bottom-left end and
/// the bottom-left entry wraps to the upper-right end.
QTableau psi_cycle(const QTableau& t, const IndexSet& I, int letter);

/// Q(shape, I) -> Q(shape, I \ {letter}): the reverse cycle.
QTableau psi_inverse(const QTableau& t, const IndexSet& I, int letter);

/// Composite bijection Q(shape, from) -> Q(shape, to) preserving the
/// weight and both prime counts.
QTableau qtab_transport(const QTableau& t, const IndexSet& from, const IndexSet& to);

/// Transpose the filling and flip every prime. Takes Q(λ'/μ', ∅) onto
/// Q(λ/μ, full set), preserving weight and swapping the prime counts.
QTableau transpose_prime_toggle(const QTableau& t);

}  // namespace stairtab
