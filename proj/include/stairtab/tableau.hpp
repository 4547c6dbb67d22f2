#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stairtab/partition.hpp"

namespace stairtab {

/// Finite truncation I ∩ [1, bound] of a set of letters. Letters in the
/// set are row-distinct in a GST, letters outside are column-distinct;
/// the complement is taken within [1, bound].
class IndexSet {
  public:
    IndexSet() = default;
    IndexSet(int bound, std::span<const int> members);
    IndexSet(int bound, std::initializer_list<int> members);

    static IndexSet empty(int bound) { return IndexSet(bound, {}); }
    static IndexSet full(int bound);

    int bound() const { return bound_; }
    bool contains(int letter) const {
        return letter >= 1 && letter <= bound_ && (bits_ >> letter) & 1;
    }
    bool is_empty() const { return bits_ == 0; }

    IndexSet with(int letter) const;
    IndexSet without(int letter) const;
    IndexSet complemented() const;
    /// {j - k : j ∈ I, j > k}, over the bound reduced by k.
    IndexSet shifted_down(int k) const;

    std::vector<int> members() const;
    std::string to_string() const;

    bool operator==(const IndexSet&) const = default;

  private:
    std::uint64_t bits_ = 0;
    int bound_ = 0;
};

/// Extended integer: -inf, a finite value, or +inf. Border and empty
/// boxes report these during jdt content queries.
class Content {
  public:
    static Content neg_inf() { return Content(-1, 0); }
    static Content pos_inf() { return Content(+1, 0); }
    static Content finite(int v) { return Content(0, v); }

    bool is_finite() const { return kind_ == 0; }
    bool is_neg_inf() const { return kind_ < 0; }
    bool is_pos_inf() const { return kind_ > 0; }
    int value() const;

    bool operator==(const Content&) const = default;
    bool operator<(const Content& o) const {
        if (kind_ != o.kind_) return kind_ < o.kind_;
        return kind_ == 0 && value_ < o.value_;
    }

  private:
    Content(int kind, int value) : kind_(kind), value_(value) {}
    int kind_;
    int value_;
};

/// Multiplicity vector of the letters of a filling; index i counts the
/// letter i, trailing zeros are trimmed.
class WeightVector {
  public:
    WeightVector() = default;
    explicit WeightVector(std::vector<int> counts);

    int count(int letter) const;
    int length() const { return static_cast<int>(counts_.size()); }
    int total() const;
    const std::vector<int>& counts() const { return counts_; }
    bool is_partition_shape() const;
    Partition to_partition() const;

    auto operator<=>(const WeightVector&) const = default;

  private:
    std::vector<int> counts_;
};

/// Filling of a skew shape by positive integers; entries are stored
/// row-major in skew-cell order. Validity against an index set is a
/// separate query (validate_gst), not part of the value.
class GstTableau {
  public:
    GstTableau() = default;
    GstTableau(SkewShape shape, std::vector<int> entries);
    static GstTableau from_cells(const SkewShape& shape, const std::map<Cell, int>& cells);

    const SkewShape& shape() const { return shape_; }
    const std::vector<int>& entries() const { return entries_; }
    int entry(Cell c) const;
    int cell_count() const { return static_cast<int>(entries_.size()); }
    std::vector<std::pair<Cell, int>> cells() const;
    std::map<Cell, int> cell_map() const;
    int max_entry() const;

    auto operator<=>(const GstTableau&) const = default;

  private:
    SkewShape shape_;
    std::vector<int> entries_;
};

/// Letter of the primed alphabet 1' < 1 < 2' < 2 < ... (the relative
/// order of i and i' is what an index set permutes).
struct PrimedEntry {
    int value = 1;
    bool primed = false;
    auto operator<=>(const PrimedEntry&) const = default;
    std::string to_string() const;
};

/// Strict order a <_I b on the primed alphabet: values compare first;
/// within a value, i < i' when i ∈ I and i' < i otherwise.
bool primed_less(PrimedEntry a, PrimedEntry b, const IndexSet& I);
bool primed_leq(PrimedEntry a, PrimedEntry b, const IndexSet& I);

/// Filling of a skew shape by primed/unprimed letters, row-major.
class QTableau {
  public:
    QTableau() = default;
    QTableau(SkewShape shape, std::vector<PrimedEntry> entries);
    static QTableau from_cells(const SkewShape& shape, const std::map<Cell, PrimedEntry>& cells);

    const SkewShape& shape() const { return shape_; }
    const std::vector<PrimedEntry>& entries() const { return entries_; }
    PrimedEntry entry(Cell c) const;
    int cell_count() const { return static_cast<int>(entries_.size()); }
    std::vector<std::pair<Cell, PrimedEntry>> cells() const;
    std::map<Cell, PrimedEntry> cell_map() const;
    int max_value() const;

    auto operator<=>(const QTableau&) const = default;

  private:
    SkewShape shape_;
    std::vector<PrimedEntry> entries_;
};

using Word = std::vector<int>;

/// Content of an arbitrary non-negative position: filled cells report
/// their entry, border boxes (row or column 0) and empty boxes inside
/// the inner shape report -inf, empty boxes outside the outer shape
/// report +inf.
Content content_at(const GstTableau& t, Cell c);

/// Rows and columns weakly increase, letters in I are row-distinct,
/// letters outside I are column-distinct.
bool validate_gst(const GstTableau& t, const IndexSet& I);

/// All valid fillings with entries in [1, m], emitted in depth-first
/// row-major order with candidates ascending.
std::vector<GstTableau> enumerate_gst(const SkewShape& shape, const IndexSet& I, int m);

/// Rows and columns weakly increase under <=_I, primed letters are
/// row-distinct, unprimed letters column-distinct. I = ∅ gives the
/// standard order 1' < 1 < 2' < 2 ...
bool validate_qtab(const QTableau& t, const IndexSet& I);

/// All valid fillings with values in [1, m]; candidate letters ascend
/// under <=_I, so the order is canonical per index set.
std::vector<QTableau> enumerate_qtab(const SkewShape& shape, const IndexSet& I, int m);

WeightVector weight(const GstTableau& t);
/// Primes are ignored: coordinate i counts both i and i'.
WeightVector weight(const QTableau& t);

/// (number of primed entries, number of unprimed entries).
std::pair<int, int> prime_counts(const QTableau& t);

/// Primed entries down columns from the rightmost column to the left,
/// then unprimed entries along rows from the bottom row up, left to
/// right; primes dropped.
Word reading_word(const QTableau& t);

/// Every suffix contains at least as many letters i as letters i+1.
bool is_yamanouchi(const Word& w);

/// Reflects the filling across the diagonal; the valid index set of the
/// result is the complement of I within [1, bound].
std::pair<GstTableau, IndexSet> transpose_gst(const GstTableau& t, const IndexSet& I);

/// Entry 2i-1 becomes primed i, entry 2i becomes unprimed i; takes
/// G(shape, odd letters) onto Q(shape, ∅).
QTableau gst_qtab_relabel(const GstTableau& t);
/// Inverse relabeling: primed i -> 2i-1, unprimed i -> 2i.
GstTableau qtab_gst_relabel(const QTableau& t);

/// Independent check of the three Q-tableau conditions after embedding
/// the filling at the shifted coordinates of the strict shapes
/// add_staircase(outer, n) / add_staircase(inner, n).
bool shifted_validate(const QTableau& t, int n);

/// Plain semistandard check: rows weakly increase, columns strictly
/// increase. Kept separate from the GST rules for differential testing.
bool is_ssyt(const GstTableau& t);
std::vector<GstTableau> enumerate_ssyt(const SkewShape& shape, int m);

/// Uniform-ish random valid filling via randomized backtracking, or
/// nullopt when no valid filling exists.
std::optional<GstTableau> sample_gst(const SkewShape& shape, const IndexSet& I, int m,
                                     std::mt19937_64& rng);
std::optional<QTableau> sample_qtab(const SkewShape& shape, const IndexSet& I, int m,
                                    std::mt19937_64& rng);

}  // namespace stairtab
