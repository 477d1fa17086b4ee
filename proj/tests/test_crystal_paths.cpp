#include "doctest.h"

#include "pathrc/crystal_paths.hpp"

using namespace pathrc;

namespace {
Tableau T(std::vector<std::vector<int>> rows) { return Tableau{std::move(rows)}; }

const Path nine_box{3, {T({{1, 2}, {2, 3}}), T({{1, 2}}), T({{1}, {2}, {4}})}};
}  // namespace

TEST_CASE("content and weight of the nine-box example") {
    validate_path(nine_box);
    CHECK(content(nine_box) == std::vector<long>{3, 4, 1, 1});
    const Weight w = weight(nine_box);
    CHECK(w.fundamental == std::vector<long>{-1, 3, 0});  // -L1 + 3*L2
    CHECK(w.total_area == 9);
    CHECK(canonical_ambient(w) == std::vector<long>{3, 4, 1, 1});
}

TEST_CASE("canonical ambient weight round-trips content on an enumerated family") {
    for (const Path& p : enumerate_paths(2, {{2, 1}, {1, 2}}))
        CHECK(canonical_ambient(weight(p)) == content(p));
}

TEST_CASE("crystal operator micro examples") {
    const Path col{2, {T({{1}, {2}})}};
    CHECK_FALSE(f(col, 1).has_value());  // the column is f1-stable

    const Path domino{2, {T({{1, 2}})}};
    REQUIRE(f(domino, 1).has_value());
    CHECK(*f(domino, 1) == Path{2, {T({{2, 2}})}});
    REQUIRE(e(domino, 1).has_value());
    CHECK(*e(domino, 1) == Path{2, {T({{1, 1}})}});

    // In this tensor convention the lowering operator acts on the right factor first.
    const Path ones{1, {T({{1}}), T({{1}})}};
    REQUIRE(f(ones, 1).has_value());
    CHECK(*f(ones, 1) == Path{1, {T({{1}}), T({{2}})}});

    const Path two_one{1, {T({{2}}), T({{1}})}};
    CHECK_FALSE(e(two_one, 1).has_value());
    CHECK(is_highest_weight(two_one));
    CHECK_FALSE(is_highest_weight(*f(ones, 1)));
}

TEST_CASE("f and e are mutually inverse and preserve semistandardness") {
    for (const Path& p : enumerate_paths(2, {{2, 1}, {1, 2}})) {
        for (int a = 1; a <= 2; ++a) {
            const auto down = f(p, a);
            if (down) {
                validate_path(*down);
                const auto back = e(*down, a);
                REQUIRE(back.has_value());
                CHECK(*back == p);
                auto c = content(p);
                --c[a - 1];
                ++c[a];
                CHECK(content(*down) == c);
            }
            const auto up = e(p, a);
            if (up) {
                validate_path(*up);
                const auto back = f(*up, a);
                REQUIRE(back.has_value());
                CHECK(*back == p);
            }
        }
    }
}

TEST_CASE("left peeling on the lifted running example") {
    // Lifted rank-4 path (33/55) x (23/34/45) x (23/34).
    const Path p0{4, {T({{3, 3}, {5, 5}}), T({{2, 3}, {3, 4}, {4, 5}}), T({{2, 3}, {3, 4}})}};
    validate_path(p0);

    const Path p1 = ls(p0);
    CHECK(p1 == Path{4,
                     {T({{3}, {5}}), T({{3}, {5}}), T({{2, 3}, {3, 4}, {4, 5}}),
                      T({{2, 3}, {3, 4}})}});

    const Path p2 = lb(p1);
    CHECK(p2 == Path{4,
                     {T({{5}}), T({{3}}), T({{3}, {5}}), T({{2, 3}, {3, 4}, {4, 5}}),
                      T({{2, 3}, {3, 4}})}});

    const auto [c3, p3] = lh(p2);
    CHECK(c3 == 5);
    CHECK(p3 == Path{4, {T({{3}}), T({{3}, {5}}), T({{2, 3}, {3, 4}, {4, 5}}), T({{2, 3}, {3, 4}})}});

    const auto [c4, p4] = lh(p3);
    CHECK(c4 == 3);
    CHECK(p4 == Path{4, {T({{3}, {5}}), T({{2, 3}, {3, 4}, {4, 5}}), T({{2, 3}, {3, 4}})}});
}

TEST_CASE("left peeling preconditions") {
    const Path p{2, {T({{1, 2}, {2, 3}})}};
    CHECK_THROWS_AS(lh(p), invalid_argument);
    CHECK_THROWS_AS(lb(p), invalid_argument);
    CHECK_THROWS_AS(ls(Path{2, {T({{1}, {2}})}}), invalid_argument);
    CHECK_THROWS_AS(lb(Path{2, {T({{1}})}}), invalid_argument);
}

TEST_CASE("path enumeration counts") {
    CHECK(enumerate_paths(1, {{1, 1}}).size() == 2);
    CHECK(enumerate_paths(3, {{2, 2}}).size() == 20);
    CHECK(enumerate_paths(3, {{3, 2}}).size() == 10);
    CHECK(enumerate_paths(3, {{4, 4}}).size() == 1);
    CHECK(enumerate_paths(3, {{2, 1}, {4, 4}}).size() == 6);
    CHECK(enumerate_paths(2, {{1, 1}, {1, 1}, {1, 1}}).size() == 27);

    const auto paths = enumerate_paths(1, {{1, 1}, {1, 1}});
    REQUIRE(paths.size() == 4);
    CHECK(paths.front() == Path{1, {T({{1}}), T({{1}})}});
    CHECK(paths.back() == Path{1, {T({{2}}), T({{2}})}});
}
