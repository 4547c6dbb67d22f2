#include "stairtab/bijections.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace stairtab {

GstTableau phi_add_one(const GstTableau& t, const IndexSet& I, int n) {
    if (I.contains(1))
        throw std::invalid_argument("phi_add_one: letter 1 already in the index set");
    if (t.shape().outer() != staircase(n))
        throw std::invalid_argument("phi_add_one: outer shape is not the staircase");
    if (!validate_gst(t, I))
        throw std::invalid_argument("phi_add_one: input tableau invalid for the given set");

    SlideBoard board{t.shape().inner(), {}, {}};
    std::vector<Cell> holes;
    for (const auto& [c, v] : t.cells()) {
        if (v == 1)
            holes.push_back(c);
        else
            board.filled[c] = v;
    }
    if (holes.empty()) return t;

    // The erased cells form a horizontal strip along the inner rim.
    if (!is_horizontal_strip(holes))
        throw std::logic_error("phi_add_one: erased 1s do not form a horizontal strip");

    // Forward slides, rightmost hole first. Cells vacated on the outer
    // rim stay empty and read +inf for the remaining slides.
    std::sort(holes.begin(), holes.end(),
              [](const Cell& a, const Cell& b) { return a.col > b.col; });
    std::vector<Cell> outer_vacated;
    for (const Cell& hole : holes)
        outer_vacated.push_back(board_forward_slide(board, I, hole).vacated);

    // On the staircase the vacated strip is horizontal and vertical.
    if (!is_horizontal_strip(outer_vacated) || !is_vertical_strip(outer_vacated))
        throw std::logic_error("phi_add_one: vacated outer cells are not a two-way strip");

    // Reverse slides, highest first. Cells vacated on the inner rim are
    // treated as inside the inner shape (-inf) for the later slides.
    std::sort(outer_vacated.begin(), outer_vacated.end(),
              [](const Cell& a, const Cell& b) { return a.row < b.row; });
    std::vector<Cell> inner_vacated;
    for (const Cell& hole : outer_vacated) {
        BoardSlide slide = board_reverse_slide(board, I, hole);
        inner_vacated.push_back(slide.vacated);
        board.extra_inner.insert(slide.vacated);
    }
    if (!is_vertical_strip(inner_vacated))
        throw std::logic_error("phi_add_one: vacated inner cells are not a vertical strip");

    for (const Cell& c : inner_vacated) board.filled[c] = 1;
    GstTableau out = GstTableau::from_cells(t.shape(), board.filled);
    assert(validate_gst(out, I.with(1)));
    assert(weight(out) == weight(t));
    return out;
}

GstTableau phi_add(const GstTableau& t, const IndexSet& I, int letter, int n) {
    if (letter < 1 || letter > I.bound())
        throw std::invalid_argument("phi_add: letter outside [1, bound]");
    if (I.contains(letter))
        throw std::invalid_argument("phi_add: letter already in the index set");
    if (t.shape().outer() != staircase(n))
        throw std::invalid_argument("phi_add: outer shape is not the staircase");
    if (!validate_gst(t, I))
        throw std::invalid_argument("phi_add: input tableau invalid for the given set");
    if (letter == 1) return phi_add_one(t, I, n);

    // Freeze every cell holding an entry below `letter` into an
    // enlarged inner shape; along each row those cells are a prefix.
    std::vector<int> nu_parts(n, 0);
    std::map<Cell, int> frozen, active;
    for (const auto& [c, v] : t.cells()) {
        if (v < letter) {
            frozen[c] = v;
            nu_parts[c.row - 1] = std::max(nu_parts[c.row - 1], c.col);
        } else {
            active[c] = v - (letter - 1);
        }
    }
    const Partition& mu = t.shape().inner();
    for (int r = 1; r <= n; ++r) nu_parts[r - 1] = std::max(nu_parts[r - 1], mu.part(r));
    Partition nu(nu_parts);

    GstTableau sub = GstTableau::from_cells(SkewShape(staircase(n), nu), active);
    GstTableau moved = phi_add_one(sub, I.shifted_down(letter - 1), n);

    std::map<Cell, int> merged = frozen;
    for (const auto& [c, v] : moved.cells()) merged[c] = v + (letter - 1);
    GstTableau out = GstTableau::from_cells(t.shape(), merged);
    assert(validate_gst(out, I.with(letter)));
    return out;
}

GstTableau phi_remove(const GstTableau& t, const IndexSet& I, int letter, int n) {
    if (!I.contains(letter))
        throw std::invalid_argument("phi_remove: letter not in the index set");
    auto [transposed, complement] = transpose_gst(t, I);
    GstTableau moved = phi_add(transposed, complement, letter, n);
    auto [back, final_set] = transpose_gst(moved, complement.with(letter));
    assert(final_set == I.without(letter));
    return back;
}

GstTableau gst_transport(const GstTableau& t, const IndexSet& from, const IndexSet& to, int n) {
    if (from.bound() != to.bound())
        throw std::invalid_argument("gst_transport: index sets have different bounds");
    GstTableau cur = t;
    IndexSet current = from;
    std::vector<int> removals, additions;
    for (int i = 1; i <= from.bound(); ++i) {
        if (from.contains(i) && !to.contains(i)) removals.push_back(i);
        if (!from.contains(i) && to.contains(i)) additions.push_back(i);
    }
    for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
        cur = phi_remove(cur, current, *it, n);
        current = current.without(*it);
    }
    for (int i : additions) {
        cur = phi_add(cur, current, i, n);
        current = current.with(i);
    }
    return cur;
}

std::vector<std::vector<Cell>> ribbons(const QTableau& t, int letter) {
    std::set<Cell> cells;
    for (const auto& [c, e] : t.cells())
        if (e.value == letter) cells.insert(c);

    std::vector<std::vector<Cell>> out;
    std::set<Cell> seen;
    for (const Cell& start : cells) {
        if (seen.count(start)) continue;
        // edge-connected component
        std::set<Cell> comp;
        std::vector<Cell> queue{start};
        while (!queue.empty()) {
            Cell c = queue.back();
            queue.pop_back();
            if (!comp.insert(c).second) continue;
            for (Cell nb : {Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1},
                            Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}})
                if (cells.count(nb) && !comp.count(nb)) queue.push_back(nb);
        }
        for (const Cell& c : comp) {
            if (comp.count({c.row, c.col + 1}) && comp.count({c.row + 1, c.col}) &&
                comp.count({c.row + 1, c.col + 1}))
                throw std::logic_error("ribbons: 2x2 block found; input tableau is invalid");
            seen.insert(c);
        }
        // unique cell with no component neighbor above or to the right
        std::vector<Cell> heads;
        for (const Cell& c : comp)
            if (!comp.count({c.row - 1, c.col}) && !comp.count({c.row, c.col + 1}))
                heads.push_back(c);
        if (heads.size() != 1)
            throw std::logic_error("ribbons: component has no unique upper-right end");
        std::vector<Cell> path{heads[0]};
        while (path.size() < comp.size()) {
            Cell c = path.back();
            Cell left{c.row, c.col - 1};
            Cell below{c.row + 1, c.col};
            if (comp.count(left))
                path.push_back(left);
            else if (comp.count(below))
                path.push_back(below);
            else
                throw std::logic_error("ribbons: component is not a single ribbon path");
        }
        out.push_back(std::move(path));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

namespace {

QTableau cycle_ribbons(const QTableau& t, int letter, bool toward_bottom_left) {
    auto ribs = ribbons(t, letter);
    std::map<Cell, PrimedEntry> cells = t.cell_map();
    for (const auto& path : ribs) {
        std::size_t k = path.size();
        if (k < 2) continue;
        if (toward_bottom_left) {
            PrimedEntry last = cells.at(path[k - 1]);
            for (std::size_t j = k - 1; j > 0; --j) cells[path[j]] = cells.at(path[j - 1]);
            cells[path[0]] = last;
        } else {
            PrimedEntry first = cells.at(path[0]);
            for (std::size_t j = 0; j + 1 < k; ++j) cells[path[j]] = cells.at(path[j + 1]);
            cells[path[k - 1]] = first;
        }
    }
    return QTableau::from_cells(t.shape(), cells);
}

}  // namespace

QTableau psi_cycle(const QTableau& t, const IndexSet& I, int letter) {
    if (letter < 1 || letter > I.bound())
        throw std::invalid_argument("psi_cycle: letter outside [1, bound]");
    if (I.contains(letter))
        throw std::invalid_argument("psi_cycle: letter already in the index set");
    if (!validate_qtab(t, I))
        throw std::invalid_argument("psi_cycle: input tableau invalid for the given set");
    QTableau out = cycle_ribbons(t, letter, true);
    assert(validate_qtab(out, I.with(letter)));
    return out;
}

QTableau psi_inverse(const QTableau& t, const IndexSet& I, int letter) {
    if (letter < 1 || letter > I.bound())
        throw std::invalid_argument("psi_inverse: letter outside [1, bound]");
    if (!I.contains(letter))
        throw std::invalid_argument("psi_inverse: letter not in the index set");
    if (!validate_qtab(t, I))
        throw std::invalid_argument("psi_inverse: input tableau invalid for the given set");
    QTableau out = cycle_ribbons(t, letter, false);
    assert(validate_qtab(out, I.without(letter)));
    return out;
}

QTableau qtab_transport(const QTableau& t, const IndexSet& from, const IndexSet& to) {
    if (from.bound() != to.bound())
        throw std::invalid_argument("qtab_transport: index sets have different bounds");
    QTableau cur = t;
    IndexSet current = from;
    std::vector<int> removals, additions;
    for (int i = 1; i <= from.bound(); ++i) {
        if (from.contains(i) && !to.contains(i)) removals.push_back(i);
        if (!from.contains(i) && to.contains(i)) additions.push_back(i);
    }
    for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
        cur = psi_inverse(cur, current, *it);
        current = current.without(*it);
    }
    for (int i : additions) {
        cur = psi_cycle(cur, current, i);
        current = current.with(i);
    }
    return cur;
}

QTableau transpose_prime_toggle(const QTableau& t) {
    if (!validate_qtab(t, IndexSet::empty(0)))
        throw std::invalid_argument("transpose_prime_toggle: input not valid under the empty set");
    std::map<Cell, PrimedEntry> cells;
    for (const auto& [c, e] : t.cells())
        cells[{c.col, c.row}] = PrimedEntry{e.value, !e.primed};
    return QTableau::from_cells(t.shape().conjugated(), cells);
}

}  // namespace stairtab
