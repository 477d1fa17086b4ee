#pragma once

/// @file young.hpp
/// @brief Rectangular semistandard tableaux: reading words, Schensted
///        insertion, Knuth equivalence, and the reverse jeu-de-taquin slide.

#include <algorithm>
#include <optional>
#include <vector>

#include "pathrc/core.hpp"

namespace pathrc {

/// A reading word (sequence of letters >= 1).
using Word = std::vector<int>;

/// Successive positions of the travelling hole during a reverse slide,
/// recorded after each swap; the last entry is always (1,1).
using SlideRoute = std::vector<Cell>;

/// A tableau stored as rows, top row first. Entries are letters >= 1;
/// the value 0 marks a hole during sliding.
struct Tableau {
    std::vector<std::vector<int>> rows;

    int height() const { return static_cast<int>(rows.size()); }
    int width() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    Rect shape() const { return Rect{height(), width()}; }

    /// 1-indexed access.
    int& at(int row, int col) { return rows[row - 1][col - 1]; }
    int at(int row, int col) const { return rows[row - 1][col - 1]; }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// True iff t is a rectangular semistandard filling with entries in
/// [1, max_entry]: rows weakly increase, columns strictly increase.
inline bool is_semistandard_rectangle(const Tableau& t, int max_entry) {
    if (t.rows.empty()) return false;
    const int w = t.width();
    if (w == 0) return false;
    for (const auto& row : t.rows)
        if (static_cast<int>(row.size()) != w) return false;
    for (int i = 1; i <= t.height(); ++i)
        for (int j = 1; j <= w; ++j) {
            const int v = t.at(i, j);
            if (v < 1 || v > max_entry) return false;
            if (j > 1 && t.at(i, j - 1) > v) return false;
            if (i > 1 && t.at(i - 1, j) >= v) return false;
        }
    return true;
}

/// Row word: rows read bottom to top, each row left to right.
/// (A single column b_1 < ... < b_r reads b_r ... b_1.)
inline Word row_word(const Tableau& t) {
    Word w;
    for (int i = t.height(); i >= 1; --i)
        for (int j = 1; j <= t.width(); ++j) w.push_back(t.at(i, j));
    return w;
}

/// Column word: columns read left to right, each column bottom to top.
inline Word col_word(const Tableau& t) {
    Word w;
    for (int j = 1; j <= t.width(); ++j)
        for (int i = t.height(); i >= 1; --i) w.push_back(t.at(i, j));
    return w;
}

/// Schensted row insertion of a word; returns the P-symbol (rows may have
/// different lengths). Two words are Knuth equivalent iff their P-symbols
/// coincide.
inline std::vector<std::vector<int>> insert(const Word& word) {
    std::vector<std::vector<int>> p;
    for (int x : word) {
        int carry = x;
        for (auto& row : p) {
            auto it = std::upper_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                carry = 0;
                break;
            }
            std::swap(carry, *it);
        }
        if (carry != 0) p.push_back({carry});
    }
    return p;
}

inline bool knuth_equivalent(const Word& a, const Word& b) {
    return insert(a) == insert(b);
}

/// Which neighbour wins a reverse-slide tie (equal entries above and left of
/// the hole). The slide that promotion uses takes the cell above; prefer_left
/// exists only as a deliberately wrong variant for the mutation harness.
enum class TiePolicy { prefer_above, prefer_left };

struct SlideResult {
    Tableau tableau;   ///< hole (value 0) has arrived at (1,1)
    SlideRoute route;  ///< hole positions after each swap
};

/// Reverse jeu-de-taquin: starting from a hole at `hole`, repeatedly swap the
/// hole with the larger of the cells above/left of it (ties per policy) until
/// it reaches (1,1).
inline SlideResult reverse_slide(const Tableau& t, Cell hole,
                                 TiePolicy tie = TiePolicy::prefer_above) {
    if (hole.row < 1 || hole.row > t.height() || hole.col < 1 || hole.col > t.width())
        throw invalid_argument("slide hole outside tableau");
    SlideResult res{t, {}};
    Cell cur = hole;
    res.tableau.at(cur.row, cur.col) = 0;
    while (!(cur.row == 1 && cur.col == 1)) {
        const bool has_above = cur.row > 1;
        const bool has_left = cur.col > 1;
        Cell from;
        if (has_above && has_left) {
            const int above = res.tableau.at(cur.row - 1, cur.col);
            const int left = res.tableau.at(cur.row, cur.col - 1);
            if (above > left)
                from = Cell{cur.row - 1, cur.col};
            else if (left > above)
                from = Cell{cur.row, cur.col - 1};
            else
                from = (tie == TiePolicy::prefer_above) ? Cell{cur.row - 1, cur.col}
                                                        : Cell{cur.row, cur.col - 1};
        } else if (has_above) {
            from = Cell{cur.row - 1, cur.col};
        } else {
            from = Cell{cur.row, cur.col - 1};
        }
        res.tableau.at(cur.row, cur.col) = res.tableau.at(from.row, from.col);
        res.tableau.at(from.row, from.col) = 0;
        cur = from;
        res.route.push_back(cur);
    }
    return res;
}

/// All semistandard height x width rectangles over the alphabet
/// [1, max_entry], sorted lexicographically by row word.
inline std::vector<Tableau> enumerate_rect_tableaux(int height, int width, int max_entry) {
    if (height < 1 || width < 1) throw invalid_argument("rectangle dimensions must be positive");
    std::vector<Tableau> out;
    if (height > max_entry) return out;  // no strictly increasing column fits
    Tableau t;
    t.rows.assign(height, std::vector<int>(width, 0));
    // Backtracking in row-major order; bounds keep rows weakly and columns
    // strictly increasing at all times.
    auto fill = [&](auto&& self, int i, int j) -> void {
        if (i > height) {
            out.push_back(t);
            return;
        }
        const int next_i = (j == width) ? i + 1 : i;
        const int next_j = (j == width) ? 1 : j + 1;
        int lo = 1;
        if (j > 1) lo = std::max(lo, t.at(i, j - 1));
        if (i > 1) lo = std::max(lo, t.at(i - 1, j) + 1);
        // Entries in this column below the current cell still need
        // height - i further strict increases, so cap accordingly.
        const int hi = max_entry - (height - i);
        for (int v = lo; v <= hi; ++v) {
            t.at(i, j) = v;
            self(self, next_i, next_j);
        }
        t.at(i, j) = 0;
    };
    fill(fill, 1, 1);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return row_word(a) < row_word(b);
    });
    return out;
}

/// The unique tableau of shape r x s and content (s^r): row i filled with i.
inline Tableau superstandard_rectangle(const Rect& r) {
    Tableau t;
    t.rows.assign(r.height, {});
    for (int i = 0; i < r.height; ++i) t.rows[i].assign(r.width, i + 1);
    return t;
}

}  // namespace pathrc
