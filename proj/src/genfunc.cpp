#include "stairtab/genfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace stairtab {

namespace {

ExponentKey weight_key(const WeightVector& wt, int m, int t, int r) {
    if (wt.length() > m) throw std::logic_error("weight exceeds the variable count");
    std::vector<int> x(m, 0);
    for (int i = 1; i <= wt.length(); ++i) x[i - 1] = wt.count(i);
    return ExponentKey{std::move(x), t, r};
}

}  // namespace

MultiPoly gst_gf(const SkewShape& shape, const IndexSet& I, int m) {
    MultiPoly out(m);
    for (const GstTableau& t : enumerate_gst(shape, I, m))
        out.add_term(weight_key(weight(t), m, 0, 0), 1);
    return out;
}

MultiPoly schur_skew_poly(const SkewShape& shape, int m) {
    MultiPoly out(m);
    for (const GstTableau& t : enumerate_ssyt(shape, m))
        out.add_term(weight_key(weight(t), m, 0, 0), 1);
    return out;
}

MultiPoly schur_poly(const Partition& p, int m) {
    return schur_skew_poly(SkewShape(p, Partition()), m);
}

MultiPoly qtr_poly(const SkewShape& shape, int m) {
    MultiPoly out(m);
    for (const QTableau& t : enumerate_qtab(shape, IndexSet::empty(m), m)) {
        auto [primed, unprimed] = prime_counts(t);
        out.add_term(weight_key(weight(t), m, primed, unprimed), 1);
    }
    return out;
}

bool is_symmetric_poly(const MultiPoly& p) {
    for (int i = 1; i < p.num_vars(); ++i)
        if (p.with_x_swapped(i, i + 1) != p) return false;
    return true;
}

SchurExpansion schur_expand(const MultiPoly& p) {
    if (!is_symmetric_poly(p))
        throw std::invalid_argument("schur_expand: polynomial is not symmetric in x");
    const int m = p.num_vars();
    SchurExpansion out;
    MultiPoly rest = p;
    while (!rest.is_zero()) {
        // Greatest key carries the lexicographically largest x-exponent.
        std::vector<int> lead = rest.terms().rbegin()->first.x;
        for (std::size_t i = 1; i < lead.size(); ++i)
            if (lead[i - 1] < lead[i])
                throw std::invalid_argument("schur_expand: leading exponent is not a partition");
        MultiPoly coeff(m);
        for (const auto& [e, c] : rest.terms())
            if (e.x == lead) coeff.add_term(ExponentKey{std::vector<int>(m, 0), e.t, e.r}, c);
        Partition nu(lead);
        rest = rest - coeff * schur_poly(nu, m);
        out.emplace(std::move(nu), std::move(coeff));
    }
    return out;
}

MultiPoly expansion_reconstruct(const SchurExpansion& expansion, int m) {
    MultiPoly out(m);
    for (const auto& [nu, coeff] : expansion) out += coeff * schur_poly(nu, m);
    return out;
}

SchurExpansion yamanouchi_coeff_table(const SkewShape& shape, int m) {
    SchurExpansion out;
    for (const QTableau& t : enumerate_qtab(shape, IndexSet::empty(m), m)) {
        if (!is_yamanouchi(reading_word(t))) continue;
        WeightVector wt = weight(t);
        if (!wt.is_partition_shape())
            throw std::logic_error("yamanouchi_coeff_table: Yamanouchi weight not a partition");
        auto [primed, unprimed] = prime_counts(t);
        auto [it, inserted] = out.try_emplace(wt.to_partition(), MultiPoly(m));
        it->second.add_term(ExponentKey{std::vector<int>(m, 0), primed, unprimed}, 1);
    }
    return out;
}

MultiPoly doubled_substitution(const SkewShape& shape, int m) {
    MultiPoly doubled = schur_skew_poly(shape, 2 * m);
    std::vector<MultiPoly::VarSub> subs(2 * m);
    for (int i = 1; i <= m; ++i) {
        std::vector<int> x(m, 0);
        x[i - 1] = 1;
        subs[2 * i - 2] = MultiPoly::VarSub{1, x, 1, 0};  // x_{2i-1} -> t x_i
        subs[2 * i - 1] = MultiPoly::VarSub{1, x, 0, 1};  // x_{2i}   -> r x_i
    }
    return doubled.substituted(m, subs);
}

MultiPoly shifted_q_poly(const SkewShape& shape, int n, int m) {
    if (shape.outer().length() > n)
        throw std::invalid_argument("shifted_q_poly: outer shape longer than n");
    MultiPoly out(m);
    auto cells = skew_cells(shape);
    const std::size_t count = cells.size();
    if (count == 0) return MultiPoly::constant(m, 1);
    if (m == 0) return out;
    // Brute force over all (2m)^count fillings, independently of the
    // backtracking enumerator.
    std::vector<int> digits(count, 0);
    const int letters = 2 * m;
    for (;;) {
        std::vector<PrimedEntry> filling(count);
        for (std::size_t k = 0; k < count; ++k)
            filling[k] = PrimedEntry{digits[k] / 2 + 1, digits[k] % 2 == 0};
        QTableau t(shape, filling);
        if (shifted_validate(t, n)) {
            auto [primed, unprimed] = prime_counts(t);
            std::vector<int> x(m, 0);
            for (int i = 1; i <= weight(t).length(); ++i) x[i - 1] = weight(t).count(i);
            out.add_term(ExponentKey{std::move(x), primed, unprimed}, 1);
        }
        std::size_t k = 0;
        while (k < count && ++digits[k] == letters) digits[k++] = 0;
        if (k == count) break;
    }
    return out;
}

}  // namespace stairtab
