#include "pathrc/verify.hpp"

#include <set>

#include "doctest.h"

using namespace pathrc;

namespace {

SuiteSpec small_suite(int rank, std::vector<RectangleSeq> shapes) {
    SuiteSpec s;
    s.rank = rank;
    s.shapes = std::move(shapes);
    s.jobs = 2;
    return s;
}

}  // namespace

TEST_CASE("default shapes stay inside the advertised bounds") {
    for (int n = 1; n <= 3; ++n) {
        const auto shapes = default_shapes(n);
        CHECK(!shapes.empty());
        std::set<std::string> seen;
        for (const RectangleSeq& shape : shapes) {
            CHECK(shape.size() >= 1);
            CHECK(shape.size() <= 3);
            long area = 0;
            for (const Rect& b : shape) {
                CHECK(b.height >= 1);
                CHECK(b.height <= n + 1);
                CHECK(b.width >= 1);
                CHECK(b.width <= 2);
                area += static_cast<long>(b.height) * b.width;
            }
            CHECK(area <= 8);
            CHECK(seen.insert(detail::shape_header(shape)).second);
        }
        // Every admissible single rectangle is present.
        for (int r = 1; r <= n + 1; ++r)
            for (int s = 1; s <= 2; ++s)
                CHECK(seen.count(detail::shape_header({Rect{r, s}})) == 1);
    }
}

TEST_CASE("default suites cover ranks one to three with rank-3 showcases") {
    const auto suites = default_suites();
    REQUIRE(suites.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(suites[static_cast<std::size_t>(i)].rank == i + 1);
    const auto& shapes = suites[2].shapes;
    auto has = [&](const RectangleSeq& want) {
        return std::count(shapes.begin(), shapes.end(), want) == 1;
    };
    CHECK(has({{2, 2}, {3, 2}, {2, 2}}));
    CHECK(has({{4, 4}}));
    CHECK(has({{2, 1}, {4, 4}}));
    for (const SuiteSpec& s : suites) CHECK_NOTHROW(validate_suite(s));
}

TEST_CASE("direct-formula suites hold single rectangles and column pairs only") {
    const auto suites = psi_suites();
    REQUIRE(suites.size() == 3);
    for (const SuiteSpec& s : suites) {
        CHECK(s.toggles.psi_phi);
        CHECK_FALSE(s.toggles.main_diagram);
        CHECK(!s.shapes.empty());
        for (const RectangleSeq& shape : s.shapes) {
            REQUIRE(shape.size() <= 2);
            CHECK(shape.back().height <= 3);
            CHECK(shape.back().width <= 3);
            if (shape.size() == 2) {
                CHECK(shape[0].width == 1);
                CHECK(shape[0].height <= shape[1].height);
            }
        }
        CHECK_NOTHROW(validate_suite(s));
    }
}

TEST_CASE("suite validation rejects bad ranks, tall shapes and huge sweeps") {
    SuiteSpec bad_rank;
    bad_rank.rank = 0;
    CHECK_THROWS_AS(validate_suite(bad_rank), invalid_argument);

    SuiteSpec tall = small_suite(1, {{{3, 1}}});
    CHECK_THROWS_AS(validate_suite(tall), invalid_argument);

    SuiteSpec huge = small_suite(1, {{{1, 1}, {1, 1}}});
    huge.max_paths = 3;  // the shape holds four paths
    CHECK_THROWS_AS(validate_suite(huge), invalid_argument);
    huge.max_paths = 4;
    CHECK_NOTHROW(validate_suite(huge));
}

TEST_CASE("configuration enumeration matches hand-computed classical branching") {
    // Two boxes at rank 1: one empty configuration for the symmetric content,
    // one single-string configuration for the balanced content.
    const RectangleSeq boxes2 = {{1, 1}, {1, 1}};
    const auto sym = enumerate_configurations(1, boxes2, {2, 0});
    REQUIRE(sym.size() == 1);
    CHECK(sym[0].levels[0].empty());
    CHECK(sym[0].shape == boxes2);

    const auto balanced = enumerate_configurations(1, boxes2, {1, 1});
    REQUIRE(balanced.size() == 1);
    REQUIRE(balanced[0].levels[0].size() == 1);
    CHECK(balanced[0].levels[0][0] == RiggedString{1, 0});

    // Three boxes at rank 2 branch as 1 + 2 + 1 over the three dominant
    // contents, matching the multiplicities in the threefold product.
    const RectangleSeq boxes3 = {{1, 1}, {1, 1}, {1, 1}};
    CHECK(enumerate_configurations(2, boxes3, {3, 0, 0}).size() == 1);
    const auto adjoint = enumerate_configurations(2, boxes3, {2, 1, 0});
    REQUIRE(adjoint.size() == 2);
    std::set<int> labels;
    for (const auto& rc : adjoint) {
        REQUIRE(rc.levels[0].size() == 1);
        CHECK(rc.levels[0][0].length == 1);
        CHECK(rc.levels[1].empty());
        labels.insert(rc.levels[0][0].label);
    }
    CHECK(labels == std::set<int>{0, 1});
    const auto det = enumerate_configurations(2, boxes3, {1, 1, 1});
    REQUIRE(det.size() == 1);
    CHECK(det[0].levels[0].size() == 2);
    CHECK(det[0].levels[1].size() == 1);

    // A single 2x2 rectangle at rank 2 is classically irreducible: only its
    // own content admits a configuration, and it is the empty one.
    const RectangleSeq square = {{2, 2}};
    const auto top = enumerate_configurations(2, square, {2, 2, 0});
    REQUIRE(top.size() == 1);
    CHECK(top[0].levels[0].empty());
    CHECK(top[0].levels[1].empty());
    CHECK(enumerate_configurations(2, square, {2, 1, 1}).empty());
    CHECK(enumerate_configurations(2, square, {4, 0, 0}).empty());

    // Mismatched totals yield nothing; malformed weights are rejected.
    CHECK(enumerate_configurations(1, boxes2, {1, 0}).empty());
    CHECK_THROWS_AS(enumerate_configurations(1, boxes2, {2, 0, 0}), invalid_argument);
    CHECK_THROWS_AS(enumerate_configurations(1, boxes2, {0, 2}), invalid_argument);
    CHECK_THROWS_AS(enumerate_configurations(1, boxes2, {3, -1}), invalid_argument);
}

TEST_CASE("every configuration produced by enumeration is valid and sorted") {
    const RectangleSeq shape = {{1, 2}, {2, 1}};
    for (const std::vector<long>& lambda :
         {std::vector<long>{4, 0, 0}, {3, 1, 0}, {2, 2, 0}, {2, 1, 1}}) {
        const auto configs = enumerate_configurations(2, shape, lambda);
        std::string prev;
        for (const RiggedConfiguration& rc : configs) {
            CHECK_NOTHROW(validate_configuration(rc));
            CHECK(canonical_ambient(weight(rc)) == lambda);
            const std::string key = print_document(Document{rc});
            CHECK(prev < key);
            prev = key;
        }
    }
}

TEST_CASE("all checks pass on a small clean suite") {
    SuiteSpec s = small_suite(1, {{{1, 1}},
                                  {{2, 1}},
                                  {{1, 2}},
                                  {{2, 2}},
                                  {{1, 1}, {1, 1}},
                                  {{1, 2}, {1, 1}},
                                  {{2, 1}, {2, 2}},
                                  {{1, 1}, {2, 1}, {1, 2}}});
    const SuiteReport report = run_suite(s);
    REQUIRE(report.checks.size() == 7);
    for (const CheckReport& c : report.checks) {
        INFO(c.name);
        CHECK(c.discrepancies.empty());
    }
    CHECK(report.ok());
    CHECK(report.paths_checked > 0);
}

TEST_CASE("all checks pass on a rank-2 sample including a wide tail") {
    SuiteSpec s = small_suite(2, {{{2, 2}},
                                  {{3, 1}},
                                  {{1, 1}, {1, 1}, {1, 1}},
                                  {{2, 1}, {1, 2}},
                                  {{1, 1}, {2, 2}}});
    const SuiteReport report = run_suite(s);
    for (const CheckReport& c : report.checks) {
        INFO(c.name);
        CHECK(c.discrepancies.empty());
    }
}

TEST_CASE("tie-rule mutation breaks the main diagram") {
    SuiteSpec s = small_suite(1, {{{2, 2}}});
    s.slide.tie = TiePolicy::prefer_left;
    const auto bad = check_main_diagram(s);
    REQUIRE(!bad.empty());
    CHECK(bad[0].check == "main-diagram");
    CHECK(bad[0].expected != bad[0].actual);

    s.slide.tie = TiePolicy::prefer_above;
    CHECK(check_main_diagram(s).empty());
}

TEST_CASE("removal-cell mutation breaks the main diagram") {
    SuiteSpec s = small_suite(1, {{{1, 2}}});
    s.slide.remove_bottom_left = true;
    const auto bad = check_main_diagram(s);
    REQUIRE(!bad.empty());
    CHECK(bad[0].expected.substr(0, 9) == "undefined");

    s.slide.remove_bottom_left = false;
    CHECK(check_main_diagram(s).empty());
}

TEST_CASE("selection mutation on the configuration side breaks the main diagram") {
    SuiteSpec s = small_suite(1, {{{1, 1}, {1, 2}}});
    s.selection.pick_longest = true;
    const auto bad = check_main_diagram(s);
    REQUIRE(!bad.empty());

    s.selection.pick_longest = false;
    CHECK(check_main_diagram(s).empty());
}

TEST_CASE("a reported discrepancy reproduces from its serialized input") {
    SuiteSpec s = small_suite(1, {{{2, 2}}});
    s.slide.tie = TiePolicy::prefer_left;
    const auto bad = check_main_diagram(s);
    REQUIRE(!bad.empty());
    const Document doc = parse_document(bad[0].input);
    REQUIRE(std::holds_alternative<Path>(doc));
    const Path p = std::get<Path>(doc);
    const RiggedConfiguration straight = pr_bar(phi(p));
    bool mismatch = false;
    try {
        mismatch = !(phi(pr(p, s.slide)) == straight);
    } catch (const undefined_result&) {
        mismatch = true;
    }
    CHECK(mismatch);
    CHECK(phi(pr(p)) == straight);
}

TEST_CASE("reports are independent of the parallelism degree") {
    SuiteSpec seq = small_suite(2, {{{1, 2}, {1, 2}, {1, 2}}});
    seq.slide.remove_bottom_left = true;  // plenty of discrepancies to order
    seq.jobs = 1;
    SuiteSpec par = seq;
    par.jobs = 4;

    const auto a = check_main_diagram(seq);
    const auto b = check_main_diagram(par);
    REQUIRE(a.size() > 3);
    CHECK(a == b);

    seq.max_discrepancies = 3;
    par.max_discrepancies = 3;
    const auto ca = check_main_diagram(seq);
    const auto cb = check_main_diagram(par);
    REQUIRE(ca.size() == 3);
    CHECK(ca == cb);
    CHECK(std::equal(ca.begin(), ca.end(), a.begin()));
}

TEST_CASE("structural check rejects a tie-rule mutation through the traces") {
    // The mutated slide violates promotion order on the smallest crystal
    // where the tie matters, so the structural check also catches it.
    SuiteSpec s = small_suite(1, {{{2, 2}}});
    CHECK(check_structural(s).empty());
    CHECK(check_reductions(s).empty());
}

TEST_CASE("highest-weight correspondence holds over mixed shapes") {
    SuiteSpec s = small_suite(2, {{{1, 1}, {1, 1}, {1, 1}}, {{2, 2}}, {{1, 2}, {2, 1}}});
    CHECK(check_hw_correspondence(s).empty());
}
