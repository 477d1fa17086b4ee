#include "doctest.h"

#include "pathrc/rigged_config.hpp"

using namespace pathrc;

namespace {

/// Independent vacancy oracle: the literal double sum over all levels with an
/// explicitly built Cartan matrix of type A.
int naive_vacancy(const RiggedConfiguration& rc, int a, int i) {
    const int n = rc.rank;
    std::vector<std::vector<int>> cartan(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x) {
        cartan[x][x] = 2;
        if (x + 1 < n) {
            cartan[x][x + 1] = -1;
            cartan[x + 1][x] = -1;
        }
    }
    long p = 0;
    for (const Rect& r : rc.shape)
        if (r.height == a) p += std::min(i, r.width);
    for (int b = 1; b <= n; ++b)
        for (const RiggedString& s : rc.levels[b - 1])
            p -= cartan[a - 1][b - 1] * std::min(i, s.length);
    return static_cast<int>(p);
}

/// Builds a configuration by inserting single boxes (letters) from the right:
/// the image of a tensor product of 1x1 factors.
RiggedConfiguration rc_from_letters(int rank, const std::vector<int>& letters) {
    RiggedConfiguration rc = empty_configuration(rank);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        rc = lh_bar_inv(rc, *it).first;
    return rc;
}

/// The worked nine-box configuration over ((2,2),(1,2),(3,1)) at rank 3.
RiggedConfiguration nine_box_rc() {
    RiggedConfiguration rc;
    rc.rank = 3;
    rc.shape = {{2, 2}, {1, 2}, {3, 1}};
    rc.levels = {{{2, -1}}, {{1, 1}}, {{1, -1}}};
    return rc;
}

}  // namespace

TEST_CASE("vacancy numbers of the worked nine-box configuration") {
    const RiggedConfiguration rc = nine_box_rc();
    validate_configuration(rc);
    CHECK(vacancy(rc, 1, 2) == -1);
    CHECK(vacancy(rc, 2, 1) == 1);
    CHECK(vacancy(rc, 3, 1) == 0);
    CHECK(is_singular(rc, 1, rc.levels[0][0]));
    CHECK(is_singular(rc, 2, rc.levels[1][0]));
    CHECK_FALSE(is_singular(rc, 3, rc.levels[2][0]));  // colabel 1
    CHECK_FALSE(is_restricted(rc));                    // negative labels present
}

TEST_CASE("vacancy agrees with the literal Cartan double sum") {
    const RiggedConfiguration rc = nine_box_rc();
    for (int a = 1; a <= 3; ++a)
        for (int i = 1; i <= 5; ++i) CHECK(vacancy(rc, a, i) == naive_vacancy(rc, a, i));
    for (int len = 3; len <= 6; ++len) {
        const RiggedConfiguration built = rc_from_letters(3, std::vector<int>(len, (len % 3) + 1));
        for (int a = 1; a <= 3; ++a)
            for (int i = 1; i <= 4; ++i) CHECK(vacancy(built, a, i) == naive_vacancy(built, a, i));
    }
}

TEST_CASE("weight of the worked configuration") {
    const Weight w = weight(nine_box_rc());
    CHECK(w.fundamental == std::vector<long>{-1, 3, 0});
    CHECK(w.total_area == 9);
    CHECK(canonical_ambient(w) == std::vector<long>{3, 4, 1, 1});
}

TEST_CASE("validation rejects label above vacancy") {
    RiggedConfiguration rc = nine_box_rc();
    rc.levels[0][0].label = 0;  // vacancy is -1
    CHECK_THROWS_AS(validate_configuration(rc), invalid_argument);
}

TEST_CASE("single-box left-hat examples") {
    RiggedConfiguration empty1 = empty_configuration(1);
    empty1.shape = {{1, 1}};
    const auto [rk0, rest0] = lh_bar(empty1);
    CHECK(rk0 == 1);
    CHECK(rest0.shape.empty());

    RiggedConfiguration two = empty_configuration(1);  // the image of [2]
    two.shape = {{1, 1}};
    two.levels[0] = {{1, -1}};
    validate_configuration(two);
    const auto [rk1, rest1] = lh_bar(two);
    CHECK(rk1 == 2);
    CHECK(rest1.shape.empty());
    CHECK(rest1.levels[0].empty());
}

TEST_CASE("single-box insertions reach the expected configurations") {
    // Inserting the letter 2 into nothing at rank 1 gives the string (1,-1).
    const auto [rc2, d2] = lh_bar_inv(empty_configuration(1), 2);
    CHECK(rc2.shape == RectangleSeq{{1, 1}});
    CHECK(rc2.levels[0] == RiggedPartition{{1, -1}});
    CHECK(d2.at_level(1) == Selection::zero());
    CHECK(d2.at_level(0) == Selection::zero());

    // Inserting the letter 1 selects nothing anywhere.
    const auto [rc1, d1] = lh_bar_inv(empty_configuration(1), 1);
    CHECK(rc1.shape == RectangleSeq{{1, 1}});
    CHECK(rc1.levels[0].empty());
    CHECK(d1.at_level(1) == Selection::infinite());
}

TEST_CASE("left-hat round-trips its inverse on letter-built configurations") {
    const int rank = 2;
    std::vector<std::vector<int>> words{{1},      {2},       {3},      {1, 1},   {2, 1},
                                        {3, 1},   {3, 2},    {2, 2},   {3, 3},   {2, 1, 1},
                                        {3, 2, 1}, {3, 3, 2}, {2, 2, 1}, {3, 1, 1}, {3, 2, 2}};
    for (const auto& word : words) {
        const RiggedConfiguration rc = rc_from_letters(rank, word);
        validate_configuration(rc);
        for (int r = 1; r <= rank + 1; ++r) {
            const auto [grown, d] = lh_bar_inv(rc, r);
            validate_configuration(grown);
            // Selection lengths weakly decrease from level rank down to 0.
            for (int k = rank; k >= 1; --k)
                CHECK(d.at_level(k - 1).length_or_infinity() <= d.at_level(k).length_or_infinity());
            const auto [rk, back] = lh_bar(grown);
            CHECK(rk == r);
            CHECK(back == rc);
        }
    }
}

TEST_CASE("box-split and its inverse preserve vacancy numbers") {
    // The image of the column (1/2/4): a single string at level 3.
    RiggedConfiguration rc = empty_configuration(3);
    rc.shape = {{3, 1}};
    rc.levels[2] = {{1, -1}};
    validate_configuration(rc);

    const RiggedConfiguration split = lb_bar(rc);
    CHECK(split.shape == RectangleSeq{{1, 1}, {2, 1}});
    CHECK(split.levels[0] == RiggedPartition{{1, 0}});
    CHECK(split.levels[1] == RiggedPartition{{1, 1}});
    CHECK(split.levels[2] == RiggedPartition{{1, -1}});
    CHECK(vacancy(split, 3, 1) == vacancy(rc, 3, 1));  // untouched level keeps its vacancy

    CHECK(lb_bar_inv(split) == rc);
}

TEST_CASE("box-split inverse demands the singular strings") {
    RiggedConfiguration rc = empty_configuration(2);
    rc.shape = {{1, 1}, {1, 1}};
    CHECK_THROWS_AS(lb_bar_inv(rc), undefined_result);  // no singular length-1 string at level 1
}

TEST_CASE("left-split and its inverse on the worked configuration") {
    const RiggedConfiguration rc = nine_box_rc();
    const RiggedConfiguration split = ls_bar(rc);
    CHECK(split.shape == RectangleSeq{{2, 1}, {2, 1}, {1, 2}, {3, 1}});
    CHECK(split.levels == rc.levels);
    // Splitting raises the vacancy of short parts at the head level by one.
    CHECK(vacancy(split, 2, 1) == vacancy(rc, 2, 1) + 1);
    CHECK(ls_bar_inv(split) == rc);
}

TEST_CASE("left-split inverse domain condition") {
    // Head pair (1,1),(1,1) with a singular (colabel-0) short part at level 1.
    RiggedConfiguration rc = empty_configuration(1);
    rc.shape = {{1, 1}, {1, 1}};
    rc.levels[0] = {{1, 0}};  // vacancy of length 1 here is 2 - 2 = 0, colabel 0
    validate_configuration(rc);
    CHECK_THROWS_AS(ls_bar_inv(rc), undefined_result);
}

TEST_CASE("right-split keeps colabels and bumps short labels") {
    const RiggedConfiguration rc = nine_box_rc();
    RiggedConfiguration wide = rc;
    wide.shape = {{2, 2}, {1, 2}, {3, 2}};  // widen the trailing rectangle
    wide.levels[2][0].label = 0;            // keep it valid: vacancy grows with the width
    validate_configuration(wide);
    const RiggedConfiguration split = rs_bar(wide);
    CHECK(split.shape == RectangleSeq{{2, 2}, {1, 2}, {3, 1}, {3, 1}});
    CHECK(split.levels[2][0].label == 1);  // part of length 1 < 2 at level 3
    for (int a = 1; a <= 3; ++a)
        for (std::size_t i = 0; i < split.levels[a - 1].size(); ++i)
            CHECK(colabel(split, a, split.levels[a - 1][i]) == colabel(wide, a, wide.levels[a - 1][i]));
    CHECK_THROWS_AS(rs_bar(rc), invalid_argument);  // trailing width 1
}

TEST_CASE("crystal operators on configurations: rank-1 chain") {
    RiggedConfiguration top = empty_configuration(1);
    top.shape = {{1, 1}};
    const auto mid = f(top, 1);
    REQUIRE(mid.has_value());
    CHECK(mid->levels[0] == RiggedPartition{{1, -1}});
    CHECK_FALSE(f(*mid, 1).has_value());  // the chain has length two
    const auto back = e(*mid, 1);
    REQUIRE(back.has_value());
    CHECK(*back == top);
    CHECK_FALSE(e(top, 1).has_value());
}

TEST_CASE("lowering keeps colabels of untouched strings") {
    // The image of the column (1/3) at rank 2, lowered at index 1, equals the
    // image of the column (2/3): the level-2 label floats from -1 to 0.
    RiggedConfiguration one_three = empty_configuration(2);
    one_three.shape = {{2, 1}};
    one_three.levels[1] = {{1, -1}};
    validate_configuration(one_three);

    const auto lowered = f(one_three, 1);
    REQUIRE(lowered.has_value());
    CHECK(lowered->levels[0] == RiggedPartition{{1, -1}});
    CHECK(lowered->levels[1] == RiggedPartition{{1, 0}});
    validate_configuration(*lowered);

    const auto raised = e(*lowered, 1);
    REQUIRE(raised.has_value());
    CHECK(*raised == one_three);
}

TEST_CASE("crystal operators are mutually inverse on letter-built configurations") {
    std::vector<std::vector<int>> words{{1}, {2}, {3}, {2, 1}, {3, 2}, {3, 1}, {2, 2, 1}, {3, 2, 1}};
    for (const auto& word : words) {
        const RiggedConfiguration rc = rc_from_letters(2, word);
        for (int a = 1; a <= 2; ++a) {
            const auto down = f(rc, a);
            if (down) {
                validate_configuration(*down);
                const auto back = e(*down, a);
                REQUIRE(back.has_value());
                CHECK(*back == rc);
            }
            const auto up = e(rc, a);
            if (up) {
                validate_configuration(*up);
                const auto back = f(*up, a);
                REQUIRE(back.has_value());
                CHECK(*back == rc);
            }
        }
    }
}
