#include "doctest.h"

#include "pathrc/young.hpp"

using namespace pathrc;

namespace {
Tableau T(std::vector<std::vector<int>> rows) { return Tableau{std::move(rows)}; }
}  // namespace

TEST_CASE("semistandard validation") {
    CHECK(is_semistandard_rectangle(T({{1, 2}, {2, 3}}), 4));
    CHECK_FALSE(is_semistandard_rectangle(T({{1, 2}, {1, 3}}), 4));  // column not strict
    CHECK_FALSE(is_semistandard_rectangle(T({{2, 1}}), 4));          // row decreasing
    CHECK_FALSE(is_semistandard_rectangle(T({{1, 2}, {2, 5}}), 4));  // entry out of range
    CHECK_FALSE(is_semistandard_rectangle(T({{1, 2}, {2}}), 4));     // ragged
    CHECK_FALSE(is_semistandard_rectangle(T({}), 4));
}

TEST_CASE("reading words of the nine-box example path factors") {
    // Factors (12/23), (12), (1/2/4); the concatenated row word is 231212421
    // and the concatenated column word is 213212421.
    const Tableau f1 = T({{1, 2}, {2, 3}});
    const Tableau f2 = T({{1, 2}});
    const Tableau f3 = T({{1}, {2}, {4}});
    Word rw;
    for (const Tableau* t : {&f1, &f2, &f3}) {
        Word w = row_word(*t);
        rw.insert(rw.end(), w.begin(), w.end());
    }
    CHECK(rw == Word{2, 3, 1, 2, 1, 2, 4, 2, 1});
    Word cw;
    for (const Tableau* t : {&f1, &f2, &f3}) {
        Word w = col_word(*t);
        cw.insert(cw.end(), w.begin(), w.end());
    }
    CHECK(cw == Word{2, 1, 3, 2, 1, 2, 4, 2, 1});
}

TEST_CASE("row word of a column reads bottom to top") {
    CHECK(row_word(T({{1}, {2}, {4}})) == Word{4, 2, 1});
    CHECK(col_word(T({{1}, {2}, {4}})) == Word{4, 2, 1});
}

TEST_CASE("Schensted insertion recovers a straight-shape tableau from its words") {
    const Tableau t = T({{1, 2, 3, 4}, {2, 4, 4, 5}, {3, 6, 6, 6}, {5, 7, 7, 8}});
    CHECK(insert(row_word(t)) == t.rows);
    CHECK(insert(col_word(t)) == t.rows);
    CHECK(knuth_equivalent(row_word(t), col_word(t)));
    CHECK_FALSE(knuth_equivalent(Word{1, 2}, Word{2, 1}));
}

TEST_CASE("reverse slide: documented route with ties resolved upward") {
    // Hole at (4,4); the two ties (at (4,3) and (2,2)) must go to the cell above.
    const Tableau s = T({{1, 2, 2, 3}, {2, 3, 5, 5}, {4, 4, 6, 6}, {5, 6, 7, 0}});
    const SlideResult r = reverse_slide(s, Cell{4, 4});
    CHECK(r.tableau == T({{0, 1, 2, 3}, {2, 2, 3, 5}, {4, 4, 5, 6}, {5, 6, 6, 7}}));
    CHECK(r.route == SlideRoute{{4, 3}, {3, 3}, {2, 3}, {2, 2}, {1, 2}, {1, 1}});
}

TEST_CASE("reverse slide on the lifted 4x4 rectangle") {
    const Tableau s = T({{2, 3, 4, 5}, {3, 5, 5, 6}, {4, 7, 7, 7}, {6, 8, 8, 0}});
    const SlideResult r = reverse_slide(s, Cell{4, 4});
    CHECK(r.tableau == T({{0, 2, 4, 5}, {3, 3, 5, 6}, {4, 5, 7, 7}, {6, 7, 8, 8}}));
    CHECK(r.route == SlideRoute{{4, 3}, {4, 2}, {3, 2}, {2, 2}, {1, 2}, {1, 1}});
}

TEST_CASE("reverse slide tie policy changes the outcome (mutation hook)") {
    const Tableau s = T({{1, 2, 2, 3}, {2, 3, 5, 5}, {4, 4, 6, 6}, {5, 6, 7, 0}});
    const SlideResult wrong = reverse_slide(s, Cell{4, 4}, TiePolicy::prefer_left);
    CHECK(wrong.route != SlideRoute{{4, 3}, {3, 3}, {2, 3}, {2, 2}, {1, 2}, {1, 1}});
}

TEST_CASE("rectangle enumeration counts and order") {
    CHECK(enumerate_rect_tableaux(1, 1, 4).size() == 4);
    CHECK(enumerate_rect_tableaux(2, 2, 3).size() == 6);   // hook-content count
    CHECK(enumerate_rect_tableaux(2, 2, 4).size() == 20);  // hook-content count
    CHECK(enumerate_rect_tableaux(3, 2, 4).size() == 10);  // hook-content count
    CHECK(enumerate_rect_tableaux(5, 1, 4).empty());       // column taller than alphabet

    const auto one_by_two = enumerate_rect_tableaux(1, 2, 2);
    REQUIRE(one_by_two.size() == 3);
    CHECK(one_by_two[0] == T({{1, 1}}));
    CHECK(one_by_two[1] == T({{1, 2}}));
    CHECK(one_by_two[2] == T({{2, 2}}));

    for (const Tableau& t : enumerate_rect_tableaux(3, 2, 4))
        CHECK(is_semistandard_rectangle(t, 4));
}

TEST_CASE("superstandard rectangle") {
    CHECK(superstandard_rectangle(Rect{3, 2}) == T({{1, 1}, {2, 2}, {3, 3}}));
}
