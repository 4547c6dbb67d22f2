#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace stairtab {

/// Box position in matrix coordinates, 1-indexed. Row or column 0 only
/// ever appears in virtual border queries inside jdt slides.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// Weakly decreasing list of positive parts. Canonical form stores no
/// trailing zeros, so equal diagrams compare equal; componentwise
/// comparisons zero-pad instead.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    /// 1-indexed part; rows beyond the last part read as 0.
    int part(int i) const;
    /// Number of cells of the Young diagram.
    int size() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    bool contains_cell(Cell c) const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;

  private:
    std::vector<int> parts_;
};

/// The staircase (n, n-1, ..., 1); n = 0 gives the empty partition.
Partition staircase(int n);

/// Transpose of the diagram; an involution.
Partition conjugate(const Partition& p);

/// Componentwise containment with zero padding.
bool contains(const Partition& outer, const Partition& inner);

/// Adds (n, n-1, ..., 1) to p, giving a strictly decreasing partition
/// with n parts. Requires length(p) <= n.
Partition add_staircase(const Partition& p, int n);

/// Outer corners: cells whose removal leaves a partition.
std::vector<Cell> removable_cells(const Partition& p);

/// Cells whose addition yields a partition.
std::vector<Cell> addable_cells(const Partition& p);

/// p minus one removable cell / plus one addable cell. Throws if the
/// cell is not removable (resp. addable).
Partition with_cell_removed(const Partition& p, Cell c);
Partition with_cell_added(const Partition& p, Cell c);

/// Pair of nested partitions; the diagram is outer minus inner.
class SkewShape {
  public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    /// Number of skew cells.
    int size() const;
    bool contains_cell(Cell c) const;
    SkewShape conjugated() const;

    auto operator<=>(const SkewShape&) const = default;

    std::string to_string() const;

  private:
    Partition outer_;
    Partition inner_;
};

/// Row-major (top-to-bottom, left-to-right) list of the skew cells.
std::vector<Cell> skew_cells(const SkewShape& shape);

/// At most one cell per column.
bool is_horizontal_strip(std::span<const Cell> cells);
/// At most one cell per row.
bool is_vertical_strip(std::span<const Cell> cells);

}  // namespace stairtab
