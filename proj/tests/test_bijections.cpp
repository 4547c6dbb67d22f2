#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "stairtab/bijections.hpp"
#include "stairtab/verify.hpp"

using namespace stairtab;

namespace {

GstTableau gst(const Partition& outer, const Partition& inner, std::vector<int> entries) {
    return GstTableau(SkewShape(outer, inner), std::move(entries));
}

QTableau qt(const Partition& outer, const Partition& inner,
            std::vector<PrimedEntry> entries) {
    return QTableau(SkewShape(outer, inner), std::move(entries));
}

constexpr PrimedEntry P(int v) { return PrimedEntry{v, true}; }
constexpr PrimedEntry U(int v) { return PrimedEntry{v, false}; }

}  // namespace

TEST_CASE("phi_add_one hand-traced example") {
    GstTableau t = gst(Partition({2, 1}), Partition(), {1, 1, 2});
    GstTableau out = phi_add_one(t, IndexSet::empty(2), 2);
    CHECK(out.entries() == std::vector<int>{1, 2, 1});
    CHECK(validate_gst(out, IndexSet(2, {1})));
    CHECK(weight(out) == weight(t));
}

TEST_CASE("phi_add_one leaves tableaux without 1s unchanged") {
    GstTableau t = gst(Partition({2, 1}), Partition(), {2, 2, 3});
    CHECK(phi_add_one(t, IndexSet::empty(3), 2) == t);
}

TEST_CASE("phi_add_one on immediately-terminating slides") {
    GstTableau t = gst(Partition({2, 1}), Partition({1}), {1, 1});
    GstTableau out = phi_add_one(t, IndexSet::empty(2), 2);
    CHECK(out == t);
    CHECK(validate_gst(out, IndexSet(2, {1})));
}

TEST_CASE("phi_add rejects bad preconditions") {
    GstTableau t = gst(Partition({2, 1}), Partition(), {1, 1, 2});
    CHECK_THROWS_AS(phi_add(t, IndexSet(2, {1}), 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(phi_remove(t, IndexSet::empty(2), 1, 2), std::invalid_argument);
    GstTableau wrong_shape = gst(Partition({2, 2}), Partition(), {1, 1, 2, 2});
    CHECK_THROWS_AS(phi_add(wrong_shape, IndexSet::empty(2), 1, 2), std::invalid_argument);
}

TEST_CASE("phi_add with letter above every entry is the identity") {
    GstTableau t = gst(Partition({2, 1}), Partition(), {1, 1, 2});
    CHECK(phi_add(t, IndexSet::empty(3), 3, 2) == t);
}

TEST_CASE("phi_add with letter 1 reduces to phi_add_one") {
    GstTableau t = gst(Partition({2, 1}), Partition(), {1, 1, 2});
    CHECK(phi_add(t, IndexSet::empty(2), 1, 2) == phi_add_one(t, IndexSet::empty(2), 2));
}

TEST_CASE("phi transport is a weight-preserving bijection, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const Partition& mu : subpartitions(staircase(n)))
            for (const IndexSet& from : all_index_sets(3))
                for (const IndexSet& to : all_index_sets(3)) {
                    VerifyParams params;
                    params.n = n;
                    params.mu = mu;
                    params.set = from;
                    params.set2 = to;
                    params.m = 3;
                    VerifyReport report = run_verify(TheoremId::thm1, params);
                    if (!report.pass) {
                        INFO(report_to_json(report).dump());
                        CHECK(report.pass);
                    }
                }
}

TEST_CASE("phi_remove undoes phi_add elementwise, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const Partition& mu : subpartitions(staircase(n))) {
            SkewShape shape(staircase(n), mu);
            for (const IndexSet& I : all_index_sets(3))
                for (int letter = 1; letter <= 3; ++letter) {
                    if (I.contains(letter)) continue;
                    for (const GstTableau& t : enumerate_gst(shape, I, 3)) {
                        GstTableau forward = phi_add(t, I, letter, n);
                        CHECK(validate_gst(forward, I.with(letter)));
                        CHECK(weight(forward) == weight(t));
                        CHECK(phi_remove(forward, I.with(letter), letter, n) == t);
                    }
                    for (const GstTableau& t : enumerate_gst(shape, I.with(letter), 3)) {
                        GstTableau back = phi_remove(t, I.with(letter), letter, n);
                        CHECK(validate_gst(back, I));
                        CHECK(phi_add(back, I, letter, n) == t);
                    }
                }
        }
}

TEST_CASE("ribbons") {
    QTableau t = qt(Partition({2, 1}), Partition(), {P(1), U(1), U(1)});
    auto ribs = ribbons(t, 1);
    REQUIRE(ribs.size() == 1);
    CHECK(ribs[0] == std::vector<Cell>{{1, 2}, {1, 1}, {2, 1}});
    CHECK(ribbons(t, 2).empty());

    auto singles = ribbons(qt(Partition({2, 2}), Partition({1}), {U(1), U(1), U(2)}), 1);
    REQUIRE(singles.size() == 2);
    CHECK(singles[0] == std::vector<Cell>{{1, 2}});
    CHECK(singles[1] == std::vector<Cell>{{2, 1}});
}

TEST_CASE("psi_cycle hand-traced example") {
    QTableau t = qt(Partition({2, 1}), Partition(), {P(1), U(1), U(1)});
    QTableau out = psi_cycle(t, IndexSet::empty(1), 1);
    CHECK(out.entries() == std::vector<PrimedEntry>{U(1), U(1), P(1)});
    CHECK(validate_qtab(out, IndexSet(1, {1})));
    CHECK(psi_inverse(out, IndexSet(1, {1}), 1) == t);
}

TEST_CASE("psi_cycle fixes tableaux without the letter and singleton ribbons") {
    QTableau no_letter = qt(Partition({2}), Partition(), {P(1), U(1)});
    CHECK(psi_cycle(no_letter, IndexSet::empty(2), 2) == no_letter);
    QTableau singles = qt(Partition({2, 2}), Partition({1}), {U(1), U(1), U(2)});
    CHECK(psi_cycle(singles, IndexSet::empty(2), 1) == singles);
}

TEST_CASE("psi laws hold exhaustively on small shapes") {
    for (const Partition& lambda : partitions_up_to(4))
        for (const Partition& mu : subpartitions(lambda))
            for (const IndexSet& I : all_index_sets(2)) {
                VerifyParams params;
                params.lambda = lambda;
                params.mu = mu;
                params.set = I;
                params.set2 = I.complemented();
                params.m = 2;
                VerifyReport report = run_verify(TheoremId::psi_laws, params);
                if (!report.pass) {
                    INFO(report_to_json(report).dump());
                    CHECK(report.pass);
                }
            }
}

TEST_CASE("transpose_prime_toggle") {
    QTableau t = qt(Partition({2}), Partition(), {P(1), U(1)});
    QTableau out = transpose_prime_toggle(t);
    CHECK(out.shape() == SkewShape(Partition({1, 1}), Partition()));
    CHECK(out.entries() == std::vector<PrimedEntry>{U(1), P(1)});
    CHECK(validate_qtab(out, IndexSet::full(1)));
    CHECK(transpose_prime_toggle(qt(Partition(), Partition(), {})).cell_count() == 0);
    CHECK_THROWS_AS(transpose_prime_toggle(qt(Partition({2}), Partition(), {U(1), P(1)})),
                    std::invalid_argument);
}

TEST_CASE("transpose_prime_toggle swaps the prime counts on small shapes") {
    for (const Partition& lambda : partitions_up_to(5))
        for (const Partition& mu : subpartitions(lambda)) {
            SkewShape shape(lambda, mu);
            for (const QTableau& t : enumerate_qtab(shape, IndexSet::empty(2), 2)) {
                QTableau image = transpose_prime_toggle(t);
                CHECK(validate_qtab(image, IndexSet::full(2)));
                CHECK(weight(image) == weight(t));
                auto [p, u] = prime_counts(t);
                CHECK(prime_counts(image) == std::pair<int, int>{u, p});
            }
        }
}

TEST_CASE("toggled transport realizes the conjugate-shape bijection") {
    // Q(lambda'/mu', empty) -> Q(lambda/mu, empty), weight kept, P and U
    // exchanged: transpose_prime_toggle then transport full -> empty.
    for (const Partition& lambda : partitions_up_to(5))
        for (const Partition& mu : subpartitions(lambda)) {
            SkewShape shape(lambda, mu);
            SkewShape conj = shape.conjugated();
            const int m = 2;
            std::set<QTableau> image;
            auto dom = enumerate_qtab(conj, IndexSet::empty(m), m);
            auto cod = enumerate_qtab(shape, IndexSet::empty(m), m);
            for (const QTableau& t : dom) {
                QTableau mid = transpose_prime_toggle(t);
                QTableau out = qtab_transport(mid, IndexSet::full(m), IndexSet::empty(m));
                CHECK(validate_qtab(out, IndexSet::empty(m)));
                CHECK(weight(out) == weight(t));
                auto [p, u] = prime_counts(t);
                CHECK(prime_counts(out) == std::pair<int, int>{u, p});
                image.insert(out);
            }
            CHECK(image.size() == dom.size());
            CHECK(image == std::set<QTableau>(cod.begin(), cod.end()));
        }
}
