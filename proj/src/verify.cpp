#include "stairtab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "stairtab/bijections.hpp"
#include "stairtab/genfunc.hpp"

namespace stairtab {

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::thm1: return "thm1";
        case TheoremId::thm2: return "thm2";
        case TheoremId::thm3: return "thm3";
        case TheoremId::thm4: return "thm4";
        case TheoremId::cor_tr_sym: return "cor-tr-sym";
        case TheoremId::prop_tr: return "prop-tr";
        case TheoremId::cor_final: return "cor-final";
        case TheoremId::jdt_laws: return "jdt-laws";
        case TheoremId::psi_laws: return "psi-laws";
    }
    throw std::logic_error("to_string: unknown theorem id");
}

TheoremId theorem_from_string(const std::string& s) {
    for (TheoremId id : {TheoremId::thm1, TheoremId::thm2, TheoremId::thm3, TheoremId::thm4,
                         TheoremId::cor_tr_sym, TheoremId::prop_tr, TheoremId::cor_final,
                         TheoremId::jdt_laws, TheoremId::psi_laws})
        if (to_string(id) == s) return id;
    throw std::invalid_argument("unknown theorem id: " + s);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("STAIRTAB_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw std::invalid_argument("STAIRTAB_SEED: not an unsigned integer");
    }
    return 20250811ull;
}

std::vector<Partition> subpartitions(const Partition& bound) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int row, int prev) -> void {
        out.emplace_back(parts);
        if (row > bound.length()) return;
        int hi = std::min(prev, bound.part(row));
        for (int v = hi; v >= 1; --v) {
            parts.push_back(v);
            self(self, row + 1, v);
            parts.pop_back();
        }
    };
    rec(rec, 1, bound.part(1));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int prev) -> void {
        out.emplace_back(parts);
        for (int v = std::min(remaining, prev); v >= 1; --v) {
            parts.push_back(v);
            self(self, remaining - v, v);
            parts.pop_back();
        }
    };
    rec(rec, max_size, max_size);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IndexSet> all_index_sets(int m) {
    if (m < 0 || m > 20) throw std::invalid_argument("all_index_sets: m outside [0, 20]");
    std::vector<IndexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> members;
        for (int i = 1; i <= m; ++i)
            if ((mask >> (i - 1)) & 1) members.push_back(i);
        out.emplace_back(m, members);
    }
    return out;
}

namespace {

using Failure = std::optional<Json>;

Json poly_pair(const char* reason, const MultiPoly& left, const MultiPoly& right) {
    Json j;
    j["reason"] = reason;
    j["left"] = to_json(left);
    j["right"] = to_json(right);
    return j;
}

Failure check_poly_equal(const char* reason, const MultiPoly& left, const MultiPoly& right) {
    if (left == right) return std::nullopt;
    return poly_pair(reason, left, right);
}

// ---------------------------------------------------------------- thm1

Failure check_thm1(int n, const Partition& mu, const IndexSet& from, const IndexSet& to,
                   int m) {
    SkewShape shape(staircase(n), mu);
    std::vector<GstTableau> dom = enumerate_gst(shape, from, m);
    std::vector<GstTableau> cod = enumerate_gst(shape, to, m);
    std::vector<GstTableau> images;
    images.reserve(dom.size());
    for (const GstTableau& t : dom) {
        GstTableau image = gst_transport(t, from, to, n);
        Json witness;
        witness["tableau"] = to_json(t);
        witness["image"] = to_json(image);
        if (!validate_gst(image, to)) {
            witness["reason"] = "image not a valid tableau for the target set";
            return witness;
        }
        if (weight(image) != weight(t)) {
            witness["reason"] = "transport changed the weight";
            return witness;
        }
        GstTableau back = gst_transport(image, to, from, n);
        if (back != t) {
            witness["reason"] = "round trip does not restore the tableau";
            witness["back"] = to_json(back);
            return witness;
        }
        images.push_back(std::move(image));
    }
    std::sort(images.begin(), images.end());
    for (std::size_t i = 1; i < images.size(); ++i)
        if (images[i - 1] == images[i]) {
            Json j;
            j["reason"] = "transport is not injective";
            j["image"] = to_json(images[i]);
            return j;
        }
    std::sort(cod.begin(), cod.end());
    if (images != cod) {
        Json j;
        j["reason"] = "transport image does not equal the codomain";
        j["domain_count"] = dom.size();
        j["codomain_count"] = cod.size();
        return j;
    }
    return check_poly_equal("generating functions differ across index sets",
                            gst_gf(shape, from, m), gst_gf(shape, to, m));
}

// ------------------------------------------------------- jdt slide laws

bool steps_forward(const std::vector<Cell>& path) {
    for (std::size_t i = 1; i < path.size(); ++i) {
        Cell d{path[i].row - path[i - 1].row, path[i].col - path[i - 1].col};
        if (!(d == Cell{0, 1} || d == Cell{1, 0})) return false;
    }
    return true;
}

bool steps_backward(const std::vector<Cell>& path) {
    for (std::size_t i = 1; i < path.size(); ++i) {
        Cell d{path[i].row - path[i - 1].row, path[i].col - path[i - 1].col};
        if (!(d == Cell{0, -1} || d == Cell{-1, 0})) return false;
    }
    return true;
}

Json law_witness(const char* law, const char* reason, const GstTableau& t, const IndexSet& I) {
    Json j;
    j["reason"] = reason;
    j["law"] = law;
    j["set"] = I.members();
    j["tableau"] = to_json(t);
    return j;
}

Failure jdt_laws_on(const GstTableau& t, const IndexSet& I) {
    // J1 with path monotonicity, plus output validity.
    for (Cell hole : removable_cells(t.shape().inner())) {
        SlideResult fwd = forward_jdt(t, I, hole);
        if (!validate_gst(fwd.tableau, I))
            return law_witness("J1", "forward slide produced an invalid tableau", t, I);
        if (!steps_forward(fwd.path) || fwd.path.front() != hole || fwd.path.back() != fwd.vacated)
            return law_witness("J1", "forward path is not a right/down walk", t, I);
        SlideResult back = reverse_jdt(fwd.tableau, I, fwd.vacated);
        if (back.tableau != t || back.vacated != hole)
            return law_witness("J1", "reverse slide does not undo the forward slide", t, I);
    }
    // J2 mirrored.
    for (Cell hole : addable_cells(t.shape().outer())) {
        SlideResult rev = reverse_jdt(t, I, hole);
        if (!validate_gst(rev.tableau, I))
            return law_witness("J2", "reverse slide produced an invalid tableau", t, I);
        if (!steps_backward(rev.path) || rev.path.front() != hole || rev.path.back() != rev.vacated)
            return law_witness("J2", "reverse path is not a left/up walk", t, I);
        SlideResult back = forward_jdt(rev.tableau, I, rev.vacated);
        if (back.tableau != t || back.vacated != hole)
            return law_witness("J2", "forward slide does not undo the reverse slide", t, I);
    }
    // J3/J4: forward into (k,l) then (i,j).
    for (Cell first : removable_cells(t.shape().inner())) {
        SlideResult s1 = forward_jdt(t, I, first);
        for (Cell second : removable_cells(s1.tableau.shape().inner())) {
            SlideResult s2 = forward_jdt(s1.tableau, I, second);
            int k = first.row, l = first.col, i = second.row, j = second.col;
            int kp = s1.vacated.row, lp = s1.vacated.col;
            int ip = s2.vacated.row, jp = s2.vacated.col;
            if (i >= k && j < l && !(ip >= kp && jp < lp))
                return law_witness("J3", "emptied boxes violate the forward order law", t, I);
            if (i < k && j >= l && !(ip < kp && jp >= lp))
                return law_witness("J4", "emptied boxes violate the forward order law", t, I);
        }
    }
    // J5/J6: reverse into (i,j) then (k,l).
    for (Cell first : addable_cells(t.shape().outer())) {
        SlideResult s1 = reverse_jdt(t, I, first);
        for (Cell second : addable_cells(s1.tableau.shape().outer())) {
            SlideResult s2 = reverse_jdt(s1.tableau, I, second);
            int i = first.row, j = first.col, k = second.row, l = second.col;
            int ip = s1.vacated.row, jp = s1.vacated.col;
            int kp = s2.vacated.row, lp = s2.vacated.col;
            if (i >= k && j < l && !(ip >= kp && jp < lp))
                return law_witness("J5", "emptied boxes violate the reverse order law", t, I);
            if (i < k && j >= l && !(ip < kp && jp >= lp))
                return law_witness("J6", "emptied boxes violate the reverse order law", t, I);
        }
    }
    return std::nullopt;
}

Failure check_jdt_laws(int n, const Partition& mu, const IndexSet& I, int m) {
    SkewShape shape(staircase(n), mu);
    for (const GstTableau& t : enumerate_gst(shape, I, m))
        if (Failure f = jdt_laws_on(t, I)) return f;
    return std::nullopt;
}

Failure check_jdt_laws_random(int n, int m, long cases, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Partition> mus = subpartitions(staircase(n));
    std::vector<IndexSet> sets = all_index_sets(m);
    // remember combinations whose tableau set is empty
    std::set<std::pair<std::size_t, std::size_t>> infeasible;
    long done = 0;
    while (done < cases) {
        std::size_t mi = rng() % mus.size();
        std::size_t si = rng() % sets.size();
        if (infeasible.count({mi, si})) continue;
        auto t = sample_gst(SkewShape(staircase(n), mus[mi]), sets[si], m, rng);
        if (!t) {
            infeasible.emplace(mi, si);
            continue;
        }
        if (Failure f = jdt_laws_on(*t, sets[si])) return f;
        ++done;
    }
    return std::nullopt;
}

// ------------------------------------------------------------ psi laws

Failure psi_laws_on(const QTableau& t, const IndexSet& I,
                    std::optional<int> only_letter = std::nullopt) {
    auto [primed, unprimed] = prime_counts(t);
    for (int letter = 1; letter <= I.bound(); ++letter) {
        if (only_letter && letter != *only_letter) continue;
        QTableau moved = I.contains(letter) ? psi_inverse(t, I, letter)
                                            : psi_cycle(t, I, letter);
        IndexSet target = I.contains(letter) ? I.without(letter) : I.with(letter);
        Json witness;
        witness["letter"] = letter;
        witness["set"] = I.members();
        witness["tableau"] = to_json(t);
        witness["image"] = to_json(moved);
        if (!validate_qtab(moved, target)) {
            witness["reason"] = "cycled tableau invalid for the target set";
            return witness;
        }
        auto [p2, u2] = prime_counts(moved);
        if (weight(moved) != weight(t) || p2 != primed || u2 != unprimed) {
            witness["reason"] = "cycle changed the weight or prime counts";
            return witness;
        }
        QTableau back = I.contains(letter) ? psi_cycle(moved, target, letter)
                                           : psi_inverse(moved, target, letter);
        if (back != t) {
            witness["reason"] = "opposite cycle does not restore the tableau";
            return witness;
        }
    }
    return std::nullopt;
}

Failure check_psi_transport(const SkewShape& shape, const IndexSet& from, const IndexSet& to,
                            int m) {
    std::vector<QTableau> dom = enumerate_qtab(shape, from, m);
    std::vector<QTableau> cod = enumerate_qtab(shape, to, m);
    std::vector<QTableau> images;
    images.reserve(dom.size());
    for (const QTableau& t : dom) {
        QTableau image = qtab_transport(t, from, to);
        Json witness;
        witness["tableau"] = to_json(t);
        witness["image"] = to_json(image);
        if (!validate_qtab(image, to)) {
            witness["reason"] = "transport image invalid for the target set";
            return witness;
        }
        if (weight(image) != weight(t) || prime_counts(image) != prime_counts(t)) {
            witness["reason"] = "transport changed the weight or prime counts";
            return witness;
        }
        if (qtab_transport(image, to, from) != t) {
            witness["reason"] = "round trip does not restore the tableau";
            return witness;
        }
        images.push_back(std::move(image));
    }
    std::sort(images.begin(), images.end());
    for (std::size_t i = 1; i < images.size(); ++i)
        if (images[i - 1] == images[i]) {
            Json j;
            j["reason"] = "transport is not injective";
            j["image"] = to_json(images[i]);
            return j;
        }
    std::sort(cod.begin(), cod.end());
    if (images != cod) {
        Json j;
        j["reason"] = "transport image does not equal the codomain";
        j["domain_count"] = dom.size();
        j["codomain_count"] = cod.size();
        return j;
    }
    return std::nullopt;
}

Failure check_psi_laws(const SkewShape& shape, const IndexSet& from, const IndexSet& to,
                       int m, std::optional<int> only_letter) {
    for (const QTableau& t : enumerate_qtab(shape, from, m))
        if (Failure f = psi_laws_on(t, from, only_letter)) return f;
    return check_psi_transport(shape, from, to, m);
}

Failure check_psi_laws_random(int m, long cases, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    struct Case {
        SkewShape shape;
        bool infeasible = false;
    };
    std::vector<Case> pool;
    for (const Partition& lambda : partitions_up_to(8)) {
        if (lambda.size() < 6) continue;
        for (const Partition& mu : subpartitions(lambda))
            pool.push_back({SkewShape(lambda, mu)});
    }
    std::vector<IndexSet> sets = all_index_sets(m);
    long done = 0;
    while (done < cases) {
        Case& c = pool[rng() % pool.size()];
        if (c.infeasible) continue;
        const IndexSet& I = sets[rng() % sets.size()];
        auto t = sample_qtab(c.shape, I, m, rng);
        if (!t) {
            c.infeasible = true;  // conservative: drop the shape
            continue;
        }
        if (Failure f = psi_laws_on(*t, I)) return f;
        ++done;
    }
    return std::nullopt;
}

// ------------------------------------------------- polynomial theorems

Failure check_thm2(int n, const Partition& mu, int m) {
    return check_poly_equal("skew Schur polynomials of mu and its conjugate differ",
                            schur_skew_poly(SkewShape(staircase(n), mu), m),
                            schur_skew_poly(SkewShape(staircase(n), conjugate(mu)), m));
}

Failure check_thm3(const SkewShape& shape, int m) {
    return check_poly_equal("Yamanouchi reconstruction does not match the Q-polynomial",
                            qtr_poly(shape, m),
                            expansion_reconstruct(yamanouchi_coeff_table(shape, m), m));
}

Failure check_thm4(int n, const Partition& mu, int m) {
    return check_poly_equal("doubled substitution does not match the Q-polynomial",
                            doubled_substitution(SkewShape(staircase(n), mu), m),
                            qtr_poly(SkewShape(staircase(n), mu), m));
}

Failure check_cor_tr_sym(int n, const Partition& mu, int m) {
    MultiPoly q = qtr_poly(SkewShape(staircase(n), mu), m);
    if (Failure f = check_poly_equal("Q-polynomial not symmetric in t and r",
                                     q, q.swapped_tr()))
        return f;
    return check_poly_equal("Q-polynomials of mu and its conjugate differ", q,
                            qtr_poly(SkewShape(staircase(n), conjugate(mu)), m));
}

Failure check_prop_tr(const SkewShape& shape, int m) {
    return check_poly_equal("t/r swap does not match the conjugate shape",
                            qtr_poly(shape, m).swapped_tr(),
                            qtr_poly(shape.conjugated(), m));
}

Failure check_cor_final(const SkewShape& shape, int m) {
    return check_poly_equal("Q-Schur specializations of conjugate shapes differ",
                            qtr_poly(shape, m).at_t_r_one(),
                            qtr_poly(shape.conjugated(), m).at_t_r_one());
}

// ------------------------------------------------------------ dispatch

int require_n(const VerifyParams& p) {
    if (!p.n || *p.n < 0) throw std::invalid_argument("verify: parameter n missing or negative");
    return *p.n;
}

Partition mu_or_empty(const VerifyParams& p) { return p.mu.value_or(Partition()); }

Partition require_lambda(const VerifyParams& p) {
    if (!p.lambda) throw std::invalid_argument("verify: parameter lambda missing");
    return *p.lambda;
}

void require_mu_in_staircase(const Partition& mu, int n) {
    if (!contains(staircase(n), mu))
        throw std::invalid_argument("verify: mu is not contained in the staircase of n");
}

SkewShape require_skew(const VerifyParams& p) {
    Partition lambda = require_lambda(p);
    Partition mu = mu_or_empty(p);
    if (!contains(lambda, mu))
        throw std::invalid_argument("verify: mu is not contained in lambda");
    return SkewShape(lambda, mu);
}

IndexSet set_or_empty(const std::optional<IndexSet>& s, int m) {
    if (!s) return IndexSet::empty(m);
    if (s->bound() != m) {
        // re-bound the same membership to the working alphabet
        std::vector<int> members = s->members();
        for (int i : members)
            if (i > m) throw std::invalid_argument("verify: set member exceeds m");
        return IndexSet(m, members);
    }
    return *s;
}

}  // namespace

VerifyReport run_verify(TheoremId id, const VerifyParams& params) {
    auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.theorem = id;
    Failure failure;
    VerifyParams echo;

    switch (id) {
        case TheoremId::thm1: {
            int n = require_n(params);
            Partition mu = mu_or_empty(params);
            require_mu_in_staircase(mu, n);
            int m = params.m.value_or(3);
            IndexSet from = set_or_empty(params.set, m);
            IndexSet to = set_or_empty(params.set2, m);
            echo.n = n;
            echo.mu = mu;
            echo.set = from;
            echo.set2 = to;
            echo.m = m;
            failure = check_thm1(n, mu, from, to, m);
            break;
        }
        case TheoremId::thm2: {
            int n = require_n(params);
            Partition mu = mu_or_empty(params);
            require_mu_in_staircase(mu, n);
            int m = params.m.value_or(3);
            echo.n = n;
            echo.mu = mu;
            echo.m = m;
            failure = check_thm2(n, mu, m);
            break;
        }
        case TheoremId::thm3: {
            SkewShape shape = require_skew(params);
            if (params.n) {
                require_mu_in_staircase(shape.inner(), *params.n);
                if (shape.outer().length() > *params.n)
                    throw std::invalid_argument("verify: lambda longer than n");
            }
            int m = params.m.value_or(shape.size());
            echo.lambda = shape.outer();
            echo.mu = shape.inner();
            echo.m = m;
            failure = check_thm3(shape, m);
            break;
        }
        case TheoremId::thm4: {
            int n = require_n(params);
            Partition mu = mu_or_empty(params);
            require_mu_in_staircase(mu, n);
            int m = params.m.value_or(3);
            echo.n = n;
            echo.mu = mu;
            echo.m = m;
            failure = check_thm4(n, mu, m);
            break;
        }
        case TheoremId::cor_tr_sym: {
            int n = require_n(params);
            Partition mu = mu_or_empty(params);
            require_mu_in_staircase(mu, n);
            int m = params.m.value_or(3);
            echo.n = n;
            echo.mu = mu;
            echo.m = m;
            failure = check_cor_tr_sym(n, mu, m);
            break;
        }
        case TheoremId::prop_tr: {
            SkewShape shape = require_skew(params);
            int m = params.m.value_or(3);
            echo.lambda = shape.outer();
            echo.mu = shape.inner();
            echo.m = m;
            failure = check_prop_tr(shape, m);
            break;
        }
        case TheoremId::cor_final: {
            int n = require_n(params);
            SkewShape shape = require_skew(params);
            if (shape.outer().length() > n)
                throw std::invalid_argument("verify: lambda longer than n");
            if (shape.outer().part(1) > n)
                throw std::invalid_argument("verify: lambda_1 exceeds n");
            require_mu_in_staircase(shape.inner(), n);
            int m = params.m.value_or(3);
            echo.n = n;
            echo.lambda = shape.outer();
            echo.mu = shape.inner();
            echo.m = m;
            failure = check_cor_final(shape, m);
            break;
        }
        case TheoremId::jdt_laws: {
            int n = require_n(params);
            int m = params.m.value_or(3);
            if (params.random_cases && *params.random_cases > 0) {
                std::uint64_t seed = params.seed.value_or(default_seed());
                echo.n = n;
                echo.m = m;
                echo.random_cases = *params.random_cases;
                echo.seed = seed;
                failure = check_jdt_laws_random(n, m, *params.random_cases, seed);
            } else {
                Partition mu = mu_or_empty(params);
                require_mu_in_staircase(mu, n);
                IndexSet I = set_or_empty(params.set, m);
                echo.n = n;
                echo.mu = mu;
                echo.set = I;
                echo.m = m;
                failure = check_jdt_laws(n, mu, I, m);
            }
            break;
        }
        case TheoremId::psi_laws: {
            int m = params.m.value_or(3);
            if (params.random_cases && *params.random_cases > 0) {
                std::uint64_t seed = params.seed.value_or(default_seed());
                echo.m = m;
                echo.random_cases = *params.random_cases;
                echo.seed = seed;
                failure = check_psi_laws_random(m, *params.random_cases, seed);
            } else {
                SkewShape shape = require_skew(params);
                IndexSet from = set_or_empty(params.set, m);
                IndexSet to = params.set2 ? set_or_empty(params.set2, m) : IndexSet::full(m);
                if (params.letter && (*params.letter < 1 || *params.letter > m))
                    throw std::invalid_argument("verify: letter outside [1, m]");
                echo.lambda = shape.outer();
                echo.mu = shape.inner();
                echo.set = from;
                echo.set2 = to;
                if (params.letter) echo.letter = *params.letter;
                echo.m = m;
                failure = check_psi_laws(shape, from, to, m, params.letter);
            }
            break;
        }
    }

    report.params = echo;
    report.pass = !failure.has_value();
    report.counterexample = std::move(failure);
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

namespace {

std::vector<VerifyParams> sweep_cases(TheoremId id, const SweepOptions& o) {
    std::vector<VerifyParams> cases;
    auto staircase_family = [&](auto&& emit) {
        for (int n = 1; n <= o.n_max; ++n)
            for (const Partition& mu : subpartitions(staircase(n))) {
                if (mu == staircase(n)) continue;  // empty shape
                emit(n, mu);
            }
    };
    auto skew_family = [&](auto&& emit) {
        for (const Partition& lambda : partitions_up_to(o.size_max))
            for (const Partition& mu : subpartitions(lambda)) {
                if (mu == lambda) continue;
                emit(lambda, mu);
            }
    };
    switch (id) {
        case TheoremId::thm1:
            staircase_family([&](int n, const Partition& mu) {
                for (const IndexSet& from : all_index_sets(o.m))
                    for (const IndexSet& to : all_index_sets(o.m)) {
                        VerifyParams p;
                        p.n = n;
                        p.mu = mu;
                        p.set = from;
                        p.set2 = to;
                        p.m = o.m;
                        cases.push_back(std::move(p));
                    }
            });
            break;
        case TheoremId::thm2:
        case TheoremId::thm4:
        case TheoremId::cor_tr_sym:
            staircase_family([&](int n, const Partition& mu) {
                VerifyParams p;
                p.n = n;
                p.mu = mu;
                p.m = o.m;
                cases.push_back(std::move(p));
            });
            break;
        case TheoremId::thm3:
        case TheoremId::prop_tr:
            skew_family([&](const Partition& lambda, const Partition& mu) {
                VerifyParams p;
                p.lambda = lambda;
                p.mu = mu;
                p.m = o.m;
                cases.push_back(std::move(p));
            });
            break;
        case TheoremId::cor_final:
            skew_family([&](const Partition& lambda, const Partition& mu) {
                if (lambda.length() > o.n_max || lambda.part(1) > o.n_max) return;
                VerifyParams p;
                p.n = o.n_max;
                p.lambda = lambda;
                p.mu = mu;
                p.m = o.m;
                cases.push_back(std::move(p));
            });
            break;
        case TheoremId::jdt_laws:
            staircase_family([&](int n, const Partition& mu) {
                for (const IndexSet& I : all_index_sets(o.m)) {
                    VerifyParams p;
                    p.n = n;
                    p.mu = mu;
                    p.set = I;
                    p.m = o.m;
                    cases.push_back(std::move(p));
                }
            });
            break;
        case TheoremId::psi_laws:
            skew_family([&](const Partition& lambda, const Partition& mu) {
                for (const IndexSet& I : all_index_sets(o.m)) {
                    VerifyParams p;
                    p.lambda = lambda;
                    p.mu = mu;
                    p.set = I;
                    p.set2 = I.complemented();
                    p.m = o.m;
                    cases.push_back(std::move(p));
                }
            });
            break;
    }
    return cases;
}

std::vector<VerifyReport> run_cases(const std::vector<VerifyParams>& cases, TheoremId id,
                                    int jobs) {
    std::vector<VerifyReport> out(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            try {
                out[i] = run_verify(id, cases[i]);
            } catch (const std::exception& e) {
                out[i].theorem = id;
                out[i].params = cases[i];
                out[i].pass = false;
                Json j;
                j["reason"] = "exception";
                j["what"] = e.what();
                out[i].counterexample = std::move(j);
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    return out;
}

}  // namespace

std::vector<VerifyReport> sweep(TheoremId id, const SweepOptions& options) {
    if (options.n_max < 1 || options.m < 1 || options.size_max < 1 || options.jobs < 1)
        throw std::invalid_argument("sweep: bounds must be >= 1");
    return run_cases(sweep_cases(id, options), id, options.jobs);
}

bool all_pass(std::span<const VerifyReport> reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerifyReport& r) { return r.pass; });
}

namespace {

Json params_to_json(const VerifyParams& p) {
    Json j = Json::object();
    if (p.n) j["n"] = *p.n;
    if (p.mu) j["mu"] = p.mu->parts();
    if (p.lambda) j["lambda"] = p.lambda->parts();
    if (p.set) j["set"] = p.set->members();
    if (p.set2) j["set2"] = p.set2->members();
    if (p.letter) j["letter"] = *p.letter;
    if (p.m) j["m"] = *p.m;
    if (p.random_cases) j["random_cases"] = *p.random_cases;
    if (p.seed) j["seed"] = *p.seed;
    return j;
}

std::string params_to_text(const VerifyParams& p) {
    std::ostringstream os;
    const char* sep = "";
    auto field = [&](const char* name, const std::string& value) {
        os << sep << name << "=" << value;
        sep = " ";
    };
    if (p.n) field("n", std::to_string(*p.n));
    if (p.mu) field("mu", p.mu->to_string());
    if (p.lambda) field("lambda", p.lambda->to_string());
    if (p.set) field("set", p.set->to_string());
    if (p.set2) field("set2", p.set2->to_string());
    if (p.letter) field("letter", std::to_string(*p.letter));
    if (p.m) field("m", std::to_string(*p.m));
    if (p.random_cases) field("random_cases", std::to_string(*p.random_cases));
    if (p.seed) field("seed", std::to_string(*p.seed));
    return os.str();
}

}  // namespace

Json report_to_json(const VerifyReport& report) {
    Json j;
    j["theorem"] = to_string(report.theorem);
    j["params"] = params_to_json(report.params);
    j["pass"] = report.pass;
    if (report.counterexample) j["counterexample"] = *report.counterexample;
    return j;
}

void emit_report_json(std::ostream& os, std::span<const VerifyReport> reports) {
    for (const VerifyReport& r : reports) os << report_to_json(r).dump() << '\n';
}

void emit_report_summary(std::ostream& os, std::span<const VerifyReport> reports) {
    std::size_t passed = 0;
    for (const VerifyReport& r : reports) {
        os << std::left << std::setw(11) << to_string(r.theorem) << ' '
           << (r.pass ? "PASS" : "FAIL") << ' ' << std::right << std::setw(6)
           << r.elapsed.count() << "ms  " << params_to_text(r.params) << '\n';
        if (r.pass) ++passed;
    }
    os << passed << "/" << reports.size() << " checks passed\n";
}

}  // namespace stairtab
