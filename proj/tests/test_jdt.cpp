#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stairtab/jdt.hpp"
#include "stairtab/verify.hpp"

using namespace stairtab;

namespace {

GstTableau gst(const Partition& outer, const Partition& inner, std::vector<int> entries) {
    return GstTableau(SkewShape(outer, inner), std::move(entries));
}

}  // namespace

TEST_CASE("forward slide resolves ties by the index set") {
    GstTableau t = gst(Partition({2, 1}), Partition({1}), {1, 1});

    SlideResult below = forward_jdt(t, IndexSet::empty(2), {1, 1});
    CHECK(below.vacated == Cell{2, 1});
    CHECK(below.path == std::vector<Cell>{{1, 1}, {2, 1}});
    CHECK(below.tableau.shape() == SkewShape(Partition({2}), Partition()));
    CHECK(below.tableau.entries() == std::vector<int>{1, 1});

    SlideResult right = forward_jdt(t, IndexSet(2, {1}), {1, 1});
    CHECK(right.vacated == Cell{1, 2});
    CHECK(right.path == std::vector<Cell>{{1, 1}, {1, 2}});
    CHECK(right.tableau.shape() == SkewShape(Partition({1, 1}), Partition()));
    CHECK(right.tableau.entries() == std::vector<int>{1, 1});
}

TEST_CASE("forward slide with both neighbors outside stops at once") {
    GstTableau t = gst(Partition({1}), Partition({1}), {});
    SlideResult s = forward_jdt(t, IndexSet::empty(2), {1, 1});
    CHECK(s.vacated == Cell{1, 1});
    CHECK(s.path == std::vector<Cell>{{1, 1}});
    CHECK(s.tableau.shape() == SkewShape(Partition(), Partition()));
}

TEST_CASE("reverse slide pulls entries outward") {
    GstTableau t = gst(Partition({1}), Partition(), {2});
    SlideResult s = reverse_jdt(t, IndexSet::empty(2), {1, 2});
    CHECK(s.vacated == Cell{1, 1});
    CHECK(s.path == std::vector<Cell>{{1, 2}, {1, 1}});
    CHECK(s.tableau.shape() == SkewShape(Partition({2}), Partition({1})));
    CHECK(s.tableau.entry({1, 2}) == 2);
}

TEST_CASE("reverse slide immediate stop") {
    // above cell lies in the inner shape and the left box is the border
    GstTableau t = gst(Partition({1}), Partition({1}), {});
    SlideResult s = reverse_jdt(t, IndexSet::empty(1), {2, 1});
    CHECK(s.vacated == Cell{2, 1});
    CHECK(s.path == std::vector<Cell>{{2, 1}});
    CHECK(s.tableau.shape() == SkewShape(Partition({1, 1}), Partition({1, 1})));
}

TEST_CASE("illegal holes are rejected") {
    GstTableau t = gst(Partition({2, 1}), Partition({1}), {1, 1});
    CHECK_THROWS_AS(forward_jdt(t, IndexSet::empty(2), {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(reverse_jdt(t, IndexSet::empty(2), {1, 1}), std::invalid_argument);
    GstTableau bad = gst(Partition({2}), Partition(), {2, 1});
    CHECK_THROWS_AS(forward_jdt(bad, IndexSet::empty(2), {1, 1}), std::invalid_argument);
}

TEST_CASE("round trip restores the tableau after a forward slide") {
    GstTableau t = gst(Partition({3, 2}), Partition({1}), {1, 2, 1, 2});
    for (const IndexSet& I : all_index_sets(2)) {
        if (!validate_gst(t, I)) continue;
        SlideResult fwd = forward_jdt(t, I, {1, 1});
        SlideResult back = reverse_jdt(fwd.tableau, I, fwd.vacated);
        CHECK(back.tableau == t);
        CHECK(back.vacated == Cell{1, 1});
    }
}

TEST_CASE("slide laws J1-J6 hold exhaustively up to n = 4") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : subpartitions(staircase(n)))
            for (const IndexSet& I : all_index_sets(3)) {
                VerifyParams params;
                params.n = n;
                params.mu = mu;
                params.set = I;
                params.m = 3;
                VerifyReport report = run_verify(TheoremId::jdt_laws, params);
                if (!report.pass) {
                    INFO(report_to_json(report).dump());
                    CHECK(report.pass);
                }
            }
}

TEST_CASE("randomized slide-law smoke at n = 5, m = 4") {
    VerifyParams params;
    params.n = 5;
    params.m = 4;
    params.random_cases = 300;
    params.seed = 12345;
    VerifyReport report = run_verify(TheoremId::jdt_laws, params);
    if (!report.pass) INFO(report_to_json(report).dump());
    CHECK(report.pass);
}
