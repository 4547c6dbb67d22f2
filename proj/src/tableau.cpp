#include "stairtab/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace stairtab {

namespace {

constexpr int kMaxBound = 63;

// Index of the cell one step left/above within the row-major skew cell
// list, or -1 when that neighbor is not part of the shape.
struct NeighborIndex {
    std::vector<int> left;
    std::vector<int> above;
};

NeighborIndex neighbor_indices(const std::vector<Cell>& cells) {
    std::map<Cell, int> pos;
    for (std::size_t k = 0; k < cells.size(); ++k) pos[cells[k]] = static_cast<int>(k);
    NeighborIndex out;
    out.left.assign(cells.size(), -1);
    out.above.assign(cells.size(), -1);
    for (std::size_t k = 0; k < cells.size(); ++k) {
        auto l = pos.find({cells[k].row, cells[k].col - 1});
        if (l != pos.end()) out.left[k] = l->second;
        auto a = pos.find({cells[k].row - 1, cells[k].col});
        if (a != pos.end()) out.above[k] = a->second;
    }
    return out;
}

bool gst_cell_ok(int v, int left, int above, const IndexSet& I) {
    if (left != 0) {
        if (v < left) return false;
        if (v == left && I.contains(v)) return false;  // repeat in row
    }
    if (above != 0) {
        if (v < above) return false;
        if (v == above && !I.contains(v)) return false;  // repeat in column
    }
    return true;
}

bool qtab_cell_ok(PrimedEntry v, const PrimedEntry* left, const PrimedEntry* above,
                  const IndexSet& I) {
    if (left) {
        if (primed_less(v, *left, I)) return false;
        if (v.primed && v == *left) return false;  // primed repeat in row
    }
    if (above) {
        if (primed_less(v, *above, I)) return false;
        if (!v.primed && v == *above) return false;  // unprimed repeat in column
    }
    return true;
}

}  // namespace

IndexSet::IndexSet(int bound, std::span<const int> members) : bound_(bound) {
    if (bound < 0 || bound > kMaxBound)
        throw std::invalid_argument("IndexSet: bound must be in [0, 63]");
    for (int i : members) {
        if (i < 1 || i > bound)
            throw std::invalid_argument("IndexSet: member outside [1, bound]");
        bits_ |= std::uint64_t{1} << i;
    }
}

IndexSet::IndexSet(int bound, std::initializer_list<int> members)
    : IndexSet(bound, std::span<const int>(members.begin(), members.size())) {}

IndexSet IndexSet::full(int bound) {
    IndexSet s(bound, {});
    for (int i = 1; i <= bound; ++i) s.bits_ |= std::uint64_t{1} << i;
    return s;
}

IndexSet IndexSet::with(int letter) const {
    if (letter < 1 || letter > bound_)
        throw std::invalid_argument("IndexSet::with: letter outside [1, bound]");
    IndexSet s = *this;
    s.bits_ |= std::uint64_t{1} << letter;
    return s;
}

IndexSet IndexSet::without(int letter) const {
    if (letter < 1 || letter > bound_)
        throw std::invalid_argument("IndexSet::without: letter outside [1, bound]");
    IndexSet s = *this;
    s.bits_ &= ~(std::uint64_t{1} << letter);
    return s;
}

IndexSet IndexSet::complemented() const {
    IndexSet s = *this;
    s.bits_ = ~bits_ & (bound_ == kMaxBound ? ~std::uint64_t{1}
                                            : ((std::uint64_t{1} << (bound_ + 1)) - 2));
    return s;
}

IndexSet IndexSet::shifted_down(int k) const {
    if (k < 0 || k > bound_)
        throw std::invalid_argument("IndexSet::shifted_down: shift outside [0, bound]");
    IndexSet s(bound_ - k, {});
    for (int j = k + 1; j <= bound_; ++j)
        if (contains(j)) s.bits_ |= std::uint64_t{1} << (j - k);
    return s;
}

std::vector<int> IndexSet::members() const {
    std::vector<int> out;
    for (int i = 1; i <= bound_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string IndexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : members()) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

int Content::value() const {
    if (kind_ != 0) throw std::logic_error("Content::value: not finite");
    return value_;
}

WeightVector::WeightVector(std::vector<int> counts) : counts_(std::move(counts)) {
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
    for (int c : counts_)
        if (c < 0) throw std::invalid_argument("WeightVector: negative count");
}

int WeightVector::count(int letter) const {
    return letter >= 1 && letter <= length() ? counts_[letter - 1] : 0;
}

int WeightVector::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

bool WeightVector::is_partition_shape() const {
    for (std::size_t i = 1; i < counts_.size(); ++i)
        if (counts_[i - 1] < counts_[i]) return false;
    return true;
}

Partition WeightVector::to_partition() const {
    if (!is_partition_shape())
        throw std::invalid_argument("WeightVector::to_partition: counts not weakly decreasing");
    return Partition(counts_);
}

GstTableau::GstTableau(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shape_.size())
        throw std::invalid_argument("GstTableau: entry count does not match the shape");
    for (int v : entries_)
        if (v < 1) throw std::invalid_argument("GstTableau: entries must be positive");
}

GstTableau GstTableau::from_cells(const SkewShape& shape, const std::map<Cell, int>& cells) {
    std::vector<int> entries;
    entries.reserve(cells.size());
    for (const Cell& c : skew_cells(shape)) {
        auto it = cells.find(c);
        if (it == cells.end())
            throw std::invalid_argument("GstTableau::from_cells: missing cell of the shape");
        entries.push_back(it->second);
    }
    if (cells.size() != entries.size())
        throw std::invalid_argument("GstTableau::from_cells: entry outside the shape");
    return GstTableau(shape, std::move(entries));
}

int GstTableau::entry(Cell c) const {
    if (!shape_.contains_cell(c))
        throw std::invalid_argument("GstTableau::entry: cell outside the shape");
    int idx = 0;
    for (int r = 1; r < c.row; ++r)
        idx += shape_.outer().part(r) - shape_.inner().part(r);
    idx += c.col - shape_.inner().part(c.row) - 1;
    return entries_[idx];
}

std::vector<std::pair<Cell, int>> GstTableau::cells() const {
    std::vector<std::pair<Cell, int>> out;
    auto cs = skew_cells(shape_);
    out.reserve(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) out.emplace_back(cs[k], entries_[k]);
    return out;
}

std::map<Cell, int> GstTableau::cell_map() const {
    std::map<Cell, int> out;
    for (const auto& [c, v] : cells()) out[c] = v;
    return out;
}

int GstTableau::max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

std::string PrimedEntry::to_string() const {
    return std::to_string(value) + (primed ? "'" : "");
}

bool primed_less(PrimedEntry a, PrimedEntry b, const IndexSet& I) {
    if (a.value != b.value) return a.value < b.value;
    if (a.primed == b.primed) return false;
    return I.contains(a.value) ? !a.primed : a.primed;
}

bool primed_leq(PrimedEntry a, PrimedEntry b, const IndexSet& I) {
    return !primed_less(b, a, I);
}

QTableau::QTableau(SkewShape shape, std::vector<PrimedEntry> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shape_.size())
        throw std::invalid_argument("QTableau: entry count does not match the shape");
    for (const PrimedEntry& e : entries_)
        if (e.value < 1) throw std::invalid_argument("QTableau: values must be positive");
}

QTableau QTableau::from_cells(const SkewShape& shape, const std::map<Cell, PrimedEntry>& cells) {
    std::vector<PrimedEntry> entries;
    entries.reserve(cells.size());
    for (const Cell& c : skew_cells(shape)) {
        auto it = cells.find(c);
        if (it == cells.end())
            throw std::invalid_argument("QTableau::from_cells: missing cell of the shape");
        entries.push_back(it->second);
    }
    if (cells.size() != entries.size())
        throw std::invalid_argument("QTableau::from_cells: entry outside the shape");
    return QTableau(shape, std::move(entries));
}

PrimedEntry QTableau::entry(Cell c) const {
    if (!shape_.contains_cell(c))
        throw std::invalid_argument("QTableau::entry: cell outside the shape");
    int idx = 0;
    for (int r = 1; r < c.row; ++r)
        idx += shape_.outer().part(r) - shape_.inner().part(r);
    idx += c.col - shape_.inner().part(c.row) - 1;
    return entries_[idx];
}

std::vector<std::pair<Cell, PrimedEntry>> QTableau::cells() const {
    std::vector<std::pair<Cell, PrimedEntry>> out;
    auto cs = skew_cells(shape_);
    out.reserve(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) out.emplace_back(cs[k], entries_[k]);
    return out;
}

std::map<Cell, PrimedEntry> QTableau::cell_map() const {
    std::map<Cell, PrimedEntry> out;
    for (const auto& [c, e] : cells()) out[c] = e;
    return out;
}

int QTableau::max_value() const {
    int m = 0;
    for (const PrimedEntry& e : entries_) m = std::max(m, e.value);
    return m;
}

Content content_at(const GstTableau& t, Cell c) {
    if (c.row < 0 || c.col < 0)
        throw std::invalid_argument("content_at: coordinates must be non-negative");
    if (c.row == 0 || c.col == 0) return Content::neg_inf();
    if (t.shape().contains_cell(c)) return Content::finite(t.entry(c));
    if (t.shape().inner().contains_cell(c)) return Content::neg_inf();
    return Content::pos_inf();
}

bool validate_gst(const GstTableau& t, const IndexSet& I) {
    auto cells = skew_cells(t.shape());
    auto nb = neighbor_indices(cells);
    const auto& e = t.entries();
    for (std::size_t k = 0; k < cells.size(); ++k) {
        int left = nb.left[k] >= 0 ? e[nb.left[k]] : 0;
        int above = nb.above[k] >= 0 ? e[nb.above[k]] : 0;
        if (!gst_cell_ok(e[k], left, above, I)) return false;
    }
    return true;
}

std::vector<GstTableau> enumerate_gst(const SkewShape& shape, const IndexSet& I, int m) {
    if (m < 0) throw std::invalid_argument("enumerate_gst: m must be >= 0");
    auto cells = skew_cells(shape);
    auto nb = neighbor_indices(cells);
    std::vector<GstTableau> out;
    std::vector<int> filling(cells.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            out.emplace_back(shape, filling);
            return;
        }
        int left = nb.left[k] >= 0 ? filling[nb.left[k]] : 0;
        int above = nb.above[k] >= 0 ? filling[nb.above[k]] : 0;
        for (int v = std::max({1, left, above}); v <= m; ++v) {
            if (!gst_cell_ok(v, left, above, I)) continue;
            filling[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

bool validate_qtab(const QTableau& t, const IndexSet& I) {
    auto cells = skew_cells(t.shape());
    auto nb = neighbor_indices(cells);
    const auto& e = t.entries();
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const PrimedEntry* left = nb.left[k] >= 0 ? &e[nb.left[k]] : nullptr;
        const PrimedEntry* above = nb.above[k] >= 0 ? &e[nb.above[k]] : nullptr;
        if (!qtab_cell_ok(e[k], left, above, I)) return false;
    }
    return true;
}

std::vector<QTableau> enumerate_qtab(const SkewShape& shape, const IndexSet& I, int m) {
    if (m < 0) throw std::invalid_argument("enumerate_qtab: m must be >= 0");
    auto cells = skew_cells(shape);
    auto nb = neighbor_indices(cells);
    std::vector<PrimedEntry> alphabet;  // ascending under <=_I
    for (int v = 1; v <= m; ++v) {
        PrimedEntry p{v, true}, u{v, false};
        if (I.contains(v)) {
            alphabet.push_back(u);
            alphabet.push_back(p);
        } else {
            alphabet.push_back(p);
            alphabet.push_back(u);
        }
    }
    std::vector<QTableau> out;
    std::vector<PrimedEntry> filling(cells.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            out.emplace_back(shape, filling);
            return;
        }
        const PrimedEntry* left = nb.left[k] >= 0 ? &filling[nb.left[k]] : nullptr;
        const PrimedEntry* above = nb.above[k] >= 0 ? &filling[nb.above[k]] : nullptr;
        for (const PrimedEntry& v : alphabet) {
            if (!qtab_cell_ok(v, left, above, I)) continue;
            filling[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

WeightVector weight(const GstTableau& t) {
    std::vector<int> counts(t.max_entry(), 0);
    for (int v : t.entries()) counts[v - 1] += 1;
    return WeightVector(std::move(counts));
}

WeightVector weight(const QTableau& t) {
    std::vector<int> counts(t.max_value(), 0);
    for (const PrimedEntry& e : t.entries()) counts[e.value - 1] += 1;
    return WeightVector(std::move(counts));
}

std::pair<int, int> prime_counts(const QTableau& t) {
    int primed = 0;
    for (const PrimedEntry& e : t.entries())
        if (e.primed) ++primed;
    return {primed, t.cell_count() - primed};
}

Word reading_word(const QTableau& t) {
    Word w;
    w.reserve(t.cell_count());
    const Partition& outer = t.shape().outer();
    const Partition& inner = t.shape().inner();
    for (int c = outer.part(1); c >= 1; --c)
        for (int r = 1; r <= outer.length(); ++r) {
            if (!t.shape().contains_cell({r, c})) continue;
            PrimedEntry e = t.entry({r, c});
            if (e.primed) w.push_back(e.value);
        }
    for (int r = outer.length(); r >= 1; --r)
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) {
            PrimedEntry e = t.entry({r, c});
            if (!e.primed) w.push_back(e.value);
        }
    return w;
}

bool is_yamanouchi(const Word& w) {
    int maxletter = 0;
    for (int v : w) {
        if (v < 1) throw std::invalid_argument("is_yamanouchi: letters must be positive");
        maxletter = std::max(maxletter, v);
    }
    std::vector<int> counts(maxletter + 1, 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        counts[*it] += 1;
        if (*it > 1 && counts[*it] > counts[*it - 1]) return false;
    }
    return true;
}

std::pair<GstTableau, IndexSet> transpose_gst(const GstTableau& t, const IndexSet& I) {
    if (!validate_gst(t, I))
        throw std::invalid_argument("transpose_gst: input invalid for the given set");
    std::map<Cell, int> cells;
    for (const auto& [c, v] : t.cells()) cells[{c.col, c.row}] = v;
    return {GstTableau::from_cells(t.shape().conjugated(), cells), I.complemented()};
}

QTableau gst_qtab_relabel(const GstTableau& t) {
    std::map<Cell, PrimedEntry> cells;
    for (const auto& [c, v] : t.cells()) cells[c] = PrimedEntry{(v + 1) / 2, v % 2 == 1};
    return QTableau::from_cells(t.shape(), cells);
}

GstTableau qtab_gst_relabel(const QTableau& t) {
    std::map<Cell, int> cells;
    for (const auto& [c, e] : t.cells()) cells[c] = 2 * e.value - (e.primed ? 1 : 0);
    return GstTableau::from_cells(t.shape(), cells);
}

namespace {

// Standard shifted-alphabet order 1' < 1 < 2' < 2 < ..., written out
// afresh so the shifted path shares no comparison code with <=_I.
bool shifted_leq(PrimedEntry a, PrimedEntry b) {
    int ra = 2 * a.value - (a.primed ? 1 : 0);
    int rb = 2 * b.value - (b.primed ? 1 : 0);
    return ra <= rb;
}

}  // namespace

bool shifted_validate(const QTableau& t, int n) {
    if (t.shape().outer().length() > n)
        throw std::invalid_argument("shifted_validate: outer shape longer than n");
    Partition big_outer = add_staircase(t.shape().outer(), n);
    Partition big_inner = add_staircase(t.shape().inner(), n);
    std::map<Cell, PrimedEntry> shifted;
    for (const auto& [c, e] : t.cells()) {
        Cell sc{c.row, c.col + n};
        // shifted diagram of a strict partition: row r spans columns
        // [r + inner_r, r + outer_r - 1]
        if (sc.col < sc.row + big_inner.part(sc.row) ||
            sc.col > sc.row + big_outer.part(sc.row) - 1)
            throw std::logic_error("shifted_validate: embedded cell outside the shifted shape");
        shifted[sc] = e;
    }
    for (const auto& [c, e] : shifted) {
        if (c.row == c.col && e.primed) return false;  // diagonal convention
        auto left = shifted.find({c.row, c.col - 1});
        if (left != shifted.end()) {
            if (!shifted_leq(left->second, e)) return false;
            if (e.primed && left->second == e) return false;
        }
        auto above = shifted.find({c.row - 1, c.col});
        if (above != shifted.end()) {
            if (!shifted_leq(above->second, e)) return false;
            if (!e.primed && above->second == e) return false;
        }
    }
    return true;
}

bool is_ssyt(const GstTableau& t) {
    for (const auto& [c, v] : t.cells()) {
        Cell left{c.row, c.col - 1};
        if (t.shape().contains_cell(left) && t.entry(left) > v) return false;
        Cell above{c.row - 1, c.col};
        if (t.shape().contains_cell(above) && t.entry(above) >= v) return false;
    }
    return true;
}

std::vector<GstTableau> enumerate_ssyt(const SkewShape& shape, int m) {
    if (m < 0) throw std::invalid_argument("enumerate_ssyt: m must be >= 0");
    auto cells = skew_cells(shape);
    auto nb = neighbor_indices(cells);
    std::vector<GstTableau> out;
    std::vector<int> filling(cells.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            out.emplace_back(shape, filling);
            return;
        }
        int lo = 1;
        if (nb.left[k] >= 0) lo = std::max(lo, filling[nb.left[k]]);
        if (nb.above[k] >= 0) lo = std::max(lo, filling[nb.above[k]] + 1);
        for (int v = lo; v <= m; ++v) {
            filling[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

std::optional<GstTableau> sample_gst(const SkewShape& shape, const IndexSet& I, int m,
                                     std::mt19937_64& rng) {
    auto cells = skew_cells(shape);
    auto nb = neighbor_indices(cells);
    std::vector<int> filling(cells.size(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == cells.size()) return true;
        int left = nb.left[k] >= 0 ? filling[nb.left[k]] : 0;
        int above = nb.above[k] >= 0 ? filling[nb.above[k]] : 0;
        std::vector<int> cand;
        for (int v = 1; v <= m; ++v)
            if (gst_cell_ok(v, left, above, I)) cand.push_back(v);
        std::shuffle(cand.begin(), cand.end(), rng);
        for (int v : cand) {
            filling[k] = v;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return GstTableau(shape, filling);
}

std::optional<QTableau> sample_qtab(const SkewShape& shape, const IndexSet& I, int m,
                                    std::mt19937_64& rng) {
    auto cells = skew_cells(shape);
    auto nb = neighbor_indices(cells);
    std::vector<PrimedEntry> filling(cells.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == cells.size()) return true;
        const PrimedEntry* left = nb.left[k] >= 0 ? &filling[nb.left[k]] : nullptr;
        const PrimedEntry* above = nb.above[k] >= 0 ? &filling[nb.above[k]] : nullptr;
        std::vector<PrimedEntry> cand;
        for (int v = 1; v <= m; ++v)
            for (bool primed : {true, false}) {
                PrimedEntry e{v, primed};
                if (qtab_cell_ok(e, left, above, I)) cand.push_back(e);
            }
        std::shuffle(cand.begin(), cand.end(), rng);
        for (const PrimedEntry& e : cand) {
            filling[k] = e;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return QTableau(shape, filling);
}

}  // namespace stairtab
