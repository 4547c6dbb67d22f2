#include "stairtab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stairtab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition::part: index must be >= 1");
    return i <= length() ? parts_[i - 1] : 0;
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains_cell(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.row <= length() && c.col <= part(c.row);
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition staircase(int n) {
    if (n < 0) throw std::invalid_argument("staircase: n must be >= 0");
    std::vector<int> parts(n);
    for (int i = 0; i < n; ++i) parts[i] = n - i;
    return Partition(parts);
}

Partition conjugate(const Partition& p) {
    std::vector<int> parts(p.part(1));
    for (int j = 1; j <= p.part(1); ++j) {
        int count = 0;
        for (int i = 1; i <= p.length(); ++i)
            if (p.part(i) >= j) ++count;
        parts[j - 1] = count;
    }
    return Partition(parts);
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

Partition add_staircase(const Partition& p, int n) {
    if (p.length() > n)
        throw std::invalid_argument("add_staircase: partition has more than n parts");
    std::vector<int> parts(n);
    for (int i = 1; i <= n; ++i) parts[i - 1] = p.part(i) + (n - i + 1);
    return Partition(parts);
}

std::vector<Cell> removable_cells(const Partition& p) {
    std::vector<Cell> out;
    for (int i = 1; i <= p.length(); ++i)
        if (p.part(i) > p.part(i + 1)) out.push_back({i, p.part(i)});
    return out;
}

std::vector<Cell> addable_cells(const Partition& p) {
    std::vector<Cell> out;
    for (int i = 1; i <= p.length() + 1; ++i)
        if (i == 1 || p.part(i - 1) > p.part(i)) out.push_back({i, p.part(i) + 1});
    return out;
}

Partition with_cell_removed(const Partition& p, Cell c) {
    if (c.row < 1 || p.part(c.row) != c.col || p.part(c.row + 1) >= c.col)
        throw std::invalid_argument("with_cell_removed: cell is not removable");
    std::vector<int> parts = p.parts();
    parts[c.row - 1] -= 1;
    return Partition(parts);
}

Partition with_cell_added(const Partition& p, Cell c) {
    if (c.row < 1 || c.row > p.length() + 1 || p.part(c.row) + 1 != c.col ||
        (c.row > 1 && p.part(c.row - 1) < c.col))
        throw std::invalid_argument("with_cell_added: cell is not addable");
    std::vector<int> parts = p.parts();
    if (c.row > p.length()) parts.push_back(0);
    parts[c.row - 1] += 1;
    return Partition(parts);
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_))
        throw std::invalid_argument("SkewShape: inner partition not contained in outer");
}

int SkewShape::size() const { return outer_.size() - inner_.size(); }

bool SkewShape::contains_cell(Cell c) const {
    return outer_.contains_cell(c) && !inner_.contains_cell(c);
}

SkewShape SkewShape::conjugated() const {
    return SkewShape(conjugate(outer_), conjugate(inner_));
}

std::string SkewShape::to_string() const {
    return outer_.to_string() + "/" + inner_.to_string();
}

std::vector<Cell> skew_cells(const SkewShape& shape) {
    std::vector<Cell> out;
    for (int r = 1; r <= shape.outer().length(); ++r)
        for (int c = shape.inner().part(r) + 1; c <= shape.outer().part(r); ++c)
            out.push_back({r, c});
    return out;
}

bool is_horizontal_strip(std::span<const Cell> cells) {
    std::set<int> cols;
    for (const Cell& c : cells)
        if (!cols.insert(c.col).second) return false;
    return true;
}

bool is_vertical_strip(std::span<const Cell> cells) {
    std::set<int> rows;
    for (const Cell& c : cells)
        if (!rows.insert(c.row).second) return false;
    return true;
}

}  // namespace stairtab
