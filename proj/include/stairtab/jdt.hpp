#pragma once

#include <map>
#include <set>
#include <vector>

#include "stairtab/tableau.hpp"

namespace stairtab {

/// Outcome of one slide: the re-shaped tableau, the last emptied box,
/// and every position the hole occupied (path front = slide target,
/// path back = vacated).
struct SlideResult {
    GstTableau tableau;
    Cell vacated;
    std::vector<Cell> path;
};

/// Forward slide into a removable cell of the inner shape. Neighbors
/// right and below compete; the lesser content moves, ties at a value
/// in I move the right neighbor and ties outside I the one below. The
/// result carries shape (outer minus vacated) / (inner minus hole).
SlideResult forward_jdt(const GstTableau& t, const IndexSet& I, Cell hole);

/// Reverse slide into a cell addable to the outer shape; mirror image
/// of forward_jdt (left/above compete, the greater moves, ties in I
/// move the left neighbor). Result shape: (outer plus hole) / (inner
/// plus vacated).
SlideResult reverse_jdt(const GstTableau& t, const IndexSet& I, Cell hole);

/// Raw entry board for multi-hole slide sequences; shapes evolve in
/// the caller's hands. Empty boxes read -inf on the border, inside
/// `inner`, or in `extra_inner`, and +inf everywhere else.
struct SlideBoard {
    Partition inner;
    std::set<Cell> extra_inner;
    std::map<Cell, int> filled;

    Content content(Cell c) const;
};

struct BoardSlide {
    Cell vacated;
    std::vector<Cell> path;
};

/// Unchecked slide primitives on a board; the hole cell must be empty.
BoardSlide board_forward_slide(SlideBoard& board, const IndexSet& I, Cell hole);
BoardSlide board_reverse_slide(SlideBoard& board, const IndexSet& I, Cell hole);

}  // namespace stairtab
