#include "stairtab/jdt.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace stairtab {

Content SlideBoard::content(Cell c) const {
    if (c.row <= 0 || c.col <= 0) return Content::neg_inf();
    auto it = filled.find(c);
    if (it != filled.end()) return Content::finite(it->second);
    if (inner.contains_cell(c) || extra_inner.count(c)) return Content::neg_inf();
    return Content::pos_inf();
}

BoardSlide board_forward_slide(SlideBoard& board, const IndexSet& I, Cell hole) {
    BoardSlide out;
    out.path.push_back(hole);
    Cell h = hole;
    for (;;) {
        Cell right{h.row, h.col + 1};
        Cell below{h.row + 1, h.col};
        Content cr = board.content(right);
        Content cb = board.content(below);
        Cell selected;
        if (cr == cb)
            selected = (cr.is_finite() && I.contains(cr.value())) ? right : below;
        else
            selected = cr < cb ? right : below;
        auto it = board.filled.find(selected);
        if (it == board.filled.end()) break;
        board.filled[h] = it->second;
        board.filled.erase(it);
        h = selected;
        out.path.push_back(h);
    }
    out.vacated = h;
    return out;
}

BoardSlide board_reverse_slide(SlideBoard& board, const IndexSet& I, Cell hole) {
    BoardSlide out;
    out.path.push_back(hole);
    Cell h = hole;
    for (;;) {
        Cell left{h.row, h.col - 1};
        Cell above{h.row - 1, h.col};
        Content cl = board.content(left);
        Content ca = board.content(above);
        Cell selected;
        if (cl == ca)
            selected = (cl.is_finite() && I.contains(cl.value())) ? left : above;
        else
            selected = ca < cl ? left : above;
        auto it = board.filled.find(selected);
        if (it == board.filled.end()) break;
        board.filled[h] = it->second;
        board.filled.erase(it);
        h = selected;
        out.path.push_back(h);
    }
    out.vacated = h;
    return out;
}

SlideResult forward_jdt(const GstTableau& t, const IndexSet& I, Cell hole) {
    const Partition& inner = t.shape().inner();
    auto removable = removable_cells(inner);
    if (std::find(removable.begin(), removable.end(), hole) == removable.end())
        throw std::invalid_argument("forward_jdt: hole is not a removable cell of the inner shape");
    if (!validate_gst(t, I))
        throw std::invalid_argument("forward_jdt: input tableau invalid for the given set");

    SlideBoard board{inner, {}, t.cell_map()};
    BoardSlide slide = board_forward_slide(board, I, hole);

    Partition new_inner = with_cell_removed(inner, hole);
    Partition new_outer = with_cell_removed(t.shape().outer(), slide.vacated);
    SlideResult out{GstTableau::from_cells(SkewShape(new_outer, new_inner), board.filled),
                    slide.vacated, std::move(slide.path)};
    assert(validate_gst(out.tableau, I));
    return out;
}

SlideResult reverse_jdt(const GstTableau& t, const IndexSet& I, Cell hole) {
    const Partition& outer = t.shape().outer();
    auto addable = addable_cells(outer);
    if (std::find(addable.begin(), addable.end(), hole) == addable.end())
        throw std::invalid_argument("reverse_jdt: hole is not addable to the outer shape");
    if (!validate_gst(t, I))
        throw std::invalid_argument("reverse_jdt: input tableau invalid for the given set");

    SlideBoard board{t.shape().inner(), {}, t.cell_map()};
    BoardSlide slide = board_reverse_slide(board, I, hole);

    Partition new_outer = with_cell_added(outer, hole);
    Partition new_inner = with_cell_added(t.shape().inner(), slide.vacated);
    SlideResult out{GstTableau::from_cells(SkewShape(new_outer, new_inner), board.filled),
                    slide.vacated, std::move(slide.path)};
    assert(validate_gst(out.tableau, I));
    return out;
}

}  // namespace stairtab
