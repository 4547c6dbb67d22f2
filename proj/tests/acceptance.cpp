// Acceptance suite: every criterion is exact (zero tolerance) and runs at
// the scale pinned below; one pass/fail line is printed per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stairtab/bijections.hpp"
#include "stairtab/genfunc.hpp"
#include "stairtab/verify.hpp"

using namespace stairtab;

namespace {

struct Outcome {
    bool pass = true;
    long cases = 0;
    std::string detail;

    void fail(std::string why) {
        if (pass) detail = std::move(why);
        pass = false;
    }
};

std::string describe(const VerifyReport& r) {
    return report_to_json(r).dump();
}

// A1: transport bijections on staircases, elementwise and at the
// generating-function level. n <= 4, mu ⊆ δ(n), I, I' ⊆ {1,2,3}, m = 3.
Outcome a1() {
    Outcome out;
    for (int n = 1; n <= 4 && out.pass; ++n)
        for (const Partition& mu : subpartitions(staircase(n)))
            for (const IndexSet& from : all_index_sets(3))
                for (const IndexSet& to : all_index_sets(3)) {
                    VerifyParams p;
                    p.n = n;
                    p.mu = mu;
                    p.set = from;
                    p.set2 = to;
                    p.m = 3;
                    VerifyReport r = run_verify(TheoremId::thm1, p);
                    ++out.cases;
                    if (!r.pass) {
                        out.fail(describe(r));
                        return out;
                    }
                }
    return out;
}

// A2: slide laws J1-J6, exhaustive for n <= 3 and 10^4 seeded random
// cases at n = 5, m = 4.
Outcome a2() {
    Outcome out;
    for (int n = 1; n <= 3; ++n)
        for (const Partition& mu : subpartitions(staircase(n)))
            for (const IndexSet& I : all_index_sets(3)) {
                VerifyParams p;
                p.n = n;
                p.mu = mu;
                p.set = I;
                p.m = 3;
                VerifyReport r = run_verify(TheoremId::jdt_laws, p);
                ++out.cases;
                if (!r.pass) {
                    out.fail(describe(r));
                    return out;
                }
            }
    VerifyParams p;
    p.n = 5;
    p.m = 4;
    p.random_cases = 10000;
    p.seed = default_seed();
    VerifyReport r = run_verify(TheoremId::jdt_laws, p);
    out.cases += 10000;
    if (!r.pass) out.fail(describe(r));
    return out;
}

// A3: s_{δ/μ} = s_{δ/μ'}, bit-exact, n <= 4, m = min(5, |δ/μ|).
Outcome a3() {
    Outcome out;
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : subpartitions(staircase(n))) {
            SkewShape shape(staircase(n), mu);
            int m = std::min(5, shape.size());
            VerifyParams p;
            p.n = n;
            p.mu = mu;
            p.m = m;
            VerifyReport r = run_verify(TheoremId::thm2, p);
            ++out.cases;
            if (!r.pass) {
                out.fail(describe(r));
                return out;
            }
        }
    return out;
}

// A4: qtr = Yamanouchi reconstruction, every skew shape with at most 6
// cells (outer size <= 6), m = d.
Outcome a4() {
    Outcome out;
    for (const Partition& lambda : partitions_up_to(6))
        for (const Partition& mu : subpartitions(lambda)) {
            SkewShape shape(lambda, mu);
            VerifyParams p;
            p.lambda = lambda;
            p.mu = mu;
            p.m = shape.size();
            VerifyReport r = run_verify(TheoremId::thm3, p);
            ++out.cases;
            if (!r.pass) {
                out.fail(describe(r));
                return out;
            }
        }
    return out;
}

// A5: doubled substitution equals qtr, and qtr is t/r- and mu/mu'-
// symmetric on staircases. n <= 4, m <= 3.
Outcome a5() {
    Outcome out;
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : subpartitions(staircase(n)))
            for (int m = 1; m <= 3; ++m) {
                VerifyParams p;
                p.n = n;
                p.mu = mu;
                p.m = m;
                VerifyReport r4 = run_verify(TheoremId::thm4, p);
                VerifyReport rc = run_verify(TheoremId::cor_tr_sym, p);
                out.cases += 2;
                if (!r4.pass) {
                    out.fail(describe(r4));
                    return out;
                }
                if (!rc.pass) {
                    out.fail(describe(rc));
                    return out;
                }
            }
    return out;
}

// A6: Yamanouchi convention anchor. Counting unprimed-only Yamanouchi
// tableaux by weight reproduces the Littlewood-Richardson coefficients
// from the independent schur_expand route, for all shapes with at most
// 5 cells.
Outcome a6() {
    Outcome out;
    for (const Partition& lambda : partitions_up_to(5))
        for (const Partition& mu : subpartitions(lambda)) {
            SkewShape shape(lambda, mu);
            int m = std::max(1, shape.size());
            std::map<Partition, long long> counted;
            for (const QTableau& t : enumerate_qtab(shape, IndexSet::empty(m), m)) {
                if (prime_counts(t).first != 0) continue;
                if (!is_yamanouchi(reading_word(t))) continue;
                counted[weight(t).to_partition()] += 1;
            }
            std::map<Partition, long long> expanded;
            for (const auto& [nu, coeff] : schur_expand(schur_skew_poly(shape, m))) {
                if (coeff.is_zero()) continue;
                if (coeff.term_count() != 1 ||
                    coeff.terms().begin()->first.t != 0 ||
                    coeff.terms().begin()->first.r != 0) {
                    out.fail("expansion coefficient not a plain constant for shape " +
                             shape.to_string());
                    return out;
                }
                expanded[nu] = coeff.terms().begin()->second;
            }
            ++out.cases;
            if (counted != expanded) {
                out.fail("Yamanouchi counts disagree with schur_expand on " +
                         shape.to_string());
                return out;
            }
        }
    return out;
}

// A7: psi transport bijections (exhaustive |λ| <= 5 at m = 2 plus 10^4
// seeded random larger cases), the t/r swap against the conjugate
// shape for |λ| <= 6, and the t = r = 1 corollary when λ₁ <= n.
Outcome a7() {
    Outcome out;
    for (const Partition& lambda : partitions_up_to(5))
        for (const Partition& mu : subpartitions(lambda))
            for (const IndexSet& from : all_index_sets(2))
                for (const IndexSet& to : all_index_sets(2)) {
                    VerifyParams p;
                    p.lambda = lambda;
                    p.mu = mu;
                    p.set = from;
                    p.set2 = to;
                    p.m = 2;
                    VerifyReport r = run_verify(TheoremId::psi_laws, p);
                    ++out.cases;
                    if (!r.pass) {
                        out.fail(describe(r));
                        return out;
                    }
                }
    {
        VerifyParams p;
        p.m = 3;
        p.random_cases = 10000;
        p.seed = default_seed();
        VerifyReport r = run_verify(TheoremId::psi_laws, p);
        out.cases += 10000;
        if (!r.pass) {
            out.fail(describe(r));
            return out;
        }
    }
    for (const Partition& lambda : partitions_up_to(6))
        for (const Partition& mu : subpartitions(lambda)) {
            VerifyParams p;
            p.lambda = lambda;
            p.mu = mu;
            p.m = 3;
            VerifyReport r = run_verify(TheoremId::prop_tr, p);
            ++out.cases;
            if (!r.pass) {
                out.fail(describe(r));
                return out;
            }
            int n = std::max({1, lambda.length(), lambda.part(1)});
            for (int i = 1; i <= mu.length(); ++i) n = std::max(n, mu.part(i) + i - 1);
            VerifyParams q = p;
            q.n = n;
            VerifyReport rf = run_verify(TheoremId::cor_final, q);
            ++out.cases;
            if (!rf.pass) {
                out.fail(describe(rf));
                return out;
            }
        }
    return out;
}

// A8: differential oracles. Backtracking enumerations equal the naive
// filter-all-fillings oracles (|shape| <= 5, m <= 3) and the shifted
// enumeration path reproduces qtr (|shape| <= 5, m <= 2).
Outcome a8() {
    Outcome out;
    for (const Partition& lambda : partitions_up_to(5))
        for (const Partition& mu : subpartitions(lambda)) {
            SkewShape shape(lambda, mu);
            for (int m = 1; m <= 3; ++m)
                for (const IndexSet& I : all_index_sets(m)) {
                    ++out.cases;
                    if (enumerate_gst(shape, I, m) != oracles::brute_force_gst(shape, I, m)) {
                        out.fail("GST enumeration deviates from the oracle on " +
                                 shape.to_string() + " set " + I.to_string());
                        return out;
                    }
                    auto fast = enumerate_qtab(shape, I, m);
                    auto slow = oracles::brute_force_qtab(shape, I, m);
                    if (std::set<QTableau>(fast.begin(), fast.end()) !=
                        std::set<QTableau>(slow.begin(), slow.end())) {
                        out.fail("Q-tableau enumeration deviates from the oracle on " +
                                 shape.to_string() + " set " + I.to_string());
                        return out;
                    }
                }
            for (int m = 1; m <= 2; ++m) {
                ++out.cases;
                int n = std::max(1, lambda.length());
                if (shifted_q_poly(shape, n, m) != qtr_poly(shape, m)) {
                    out.fail("shifted enumeration deviates from qtr on " + shape.to_string());
                    return out;
                }
            }
        }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* label;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"A1", "staircase transport is a weight-preserving bijection", a1},
        {"A2", "slide laws J1-J6", a2},
        {"A3", "skew Schur equality for conjugate inner shapes", a3},
        {"A4", "Yamanouchi Schur expansion of the Q-polynomial", a4},
        {"A5", "doubled substitution and t/r symmetry on staircases", a5},
        {"A6", "Yamanouchi convention anchored to Littlewood-Richardson", a6},
        {"A7", "ribbon transport, t/r swap and the final corollary", a7},
        {"A8", "differential oracles for enumeration paths", a8},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome = c.run();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("%s %s: %s (cases=%ld, %lld ms)\n", c.id, c.label,
                    outcome.pass ? "PASS" : "FAIL", outcome.cases,
                    static_cast<long long>(ms));
        if (!outcome.pass) {
            std::printf("   %s\n", outcome.detail.c_str());
            all = false;
        }
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
