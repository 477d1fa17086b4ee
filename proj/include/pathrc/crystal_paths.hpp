#pragma once

/// @file crystal_paths.hpp
/// @brief Tensor products of rectangular tableaux with the signature-rule
///        crystal operators and the left peeling maps lh / ls / lb.

#include <optional>
#include <utility>
#include <vector>

#include "pathrc/core.hpp"
#include "pathrc/young.hpp"

namespace pathrc {

/// A tensor product of rectangular semistandard factors over the alphabet
/// [1, rank+1], leftmost factor first.
struct Path {
    int rank = 0;
    std::vector<Tableau> factors;

    RectangleSeq shape() const {
        RectangleSeq s;
        s.reserve(factors.size());
        for (const Tableau& t : factors) s.push_back(t.shape());
        return s;
    }

    friend bool operator==(const Path&, const Path&) = default;
};

inline void validate_path(const Path& p) {
    if (p.rank < 1) throw invalid_argument("path rank must be >= 1");
    for (const Tableau& t : p.factors) {
        if (!is_semistandard_rectangle(t, p.rank + 1))
            throw invalid_argument("path factor is not a semistandard rectangle over the alphabet");
    }
}

/// Letter counts (x_1,...,x_{rank+1}): the ambient weight of the path.
inline std::vector<long> content(const Path& p) {
    std::vector<long> c(p.rank + 1, 0);
    for (const Tableau& t : p.factors)
        for (const auto& row : t.rows)
            for (int v : row) {
                if (v < 1 || v > p.rank + 1) throw invalid_argument("letter outside alphabet");
                ++c[v - 1];
            }
    return c;
}

inline Weight weight(const Path& p) { return weight_from_ambient(content(p)); }

namespace detail {

/// A letter's position inside a path (0-based factor, 1-based cell).
struct LetterRef {
    int factor;
    Cell cell;
};

/// Letters of the path in signature-reading order: factors left to right,
/// each factor by its row word (bottom row first, rows left to right).
inline std::vector<LetterRef> reading_order(const Path& p) {
    std::vector<LetterRef> refs;
    for (int fi = 0; fi < static_cast<int>(p.factors.size()); ++fi) {
        const Tableau& t = p.factors[fi];
        for (int i = t.height(); i >= 1; --i)
            for (int j = 1; j <= t.width(); ++j) refs.push_back({fi, Cell{i, j}});
    }
    return refs;
}

/// Bracketing for index a: letters a are '+', letters a+1 are '-'; a '-'
/// cancels against the nearest following '+'. Returns the surviving letter
/// positions (indices into reading_order).
struct Signature {
    std::vector<std::size_t> plus;   // surviving '+', increasing position
    std::vector<std::size_t> minus;  // surviving '-', increasing position
};

inline Signature bracket(const Path& p, const std::vector<LetterRef>& refs, int a) {
    Signature s;
    for (std::size_t i = 0; i < refs.size(); ++i) {
        const int v = p.factors[refs[i].factor].at(refs[i].cell.row, refs[i].cell.col);
        if (v == a) {
            if (!s.minus.empty())
                s.minus.pop_back();  // this '+' cancels the nearest open '-'
            else
                s.plus.push_back(i);
        } else if (v == a + 1) {
            s.minus.push_back(i);
        }
    }
    return s;
}

}  // namespace detail

/// Lowering operator: turns the rightmost surviving a into a+1.
inline std::optional<Path> f(const Path& p, int a) {
    if (a < 1 || a > p.rank) throw invalid_argument("crystal operator index out of range");
    const auto refs = detail::reading_order(p);
    const auto sig = detail::bracket(p, refs, a);
    if (sig.plus.empty()) return std::nullopt;
    const detail::LetterRef r = refs[sig.plus.back()];
    Path q = p;
    q.factors[r.factor].at(r.cell.row, r.cell.col) = a + 1;
    return q;
}

/// Raising operator: turns the leftmost surviving a+1 into a.
inline std::optional<Path> e(const Path& p, int a) {
    if (a < 1 || a > p.rank) throw invalid_argument("crystal operator index out of range");
    const auto refs = detail::reading_order(p);
    const auto sig = detail::bracket(p, refs, a);
    if (sig.minus.empty()) return std::nullopt;
    const detail::LetterRef r = refs[sig.minus.front()];
    Path q = p;
    q.factors[r.factor].at(r.cell.row, r.cell.col) = a;
    return q;
}

/// True iff every raising operator is undefined on p.
inline bool is_highest_weight(const Path& p) {
    const auto refs = detail::reading_order(p);
    for (int a = 1; a <= p.rank; ++a)
        if (!detail::bracket(p, refs, a).minus.empty()) return false;
    return true;
}

/// Left-hat: the leftmost factor is a single box; detach it.
inline std::pair<int, Path> lh(const Path& p) {
    if (p.factors.empty() || p.factors.front().shape() != Rect{1, 1})
        throw invalid_argument("lh requires a leading 1x1 factor");
    Path q{p.rank, {p.factors.begin() + 1, p.factors.end()}};
    return {p.factors.front().at(1, 1), q};
}

/// Left-split: the leftmost factor is r x s with s >= 2; split off its first
/// column as a new leading factor.
inline Path ls(const Path& p) {
    if (p.factors.empty()) throw invalid_argument("ls on empty path");
    const Tableau& t = p.factors.front();
    if (t.width() < 2) throw invalid_argument("ls requires a leading factor of width >= 2");
    Tableau col, rest;
    for (const auto& row : t.rows) {
        col.rows.push_back({row.front()});
        rest.rows.emplace_back(row.begin() + 1, row.end());
    }
    Path q{p.rank, {}};
    q.factors.reserve(p.factors.size() + 1);
    q.factors.push_back(std::move(col));
    q.factors.push_back(std::move(rest));
    q.factors.insert(q.factors.end(), p.factors.begin() + 1, p.factors.end());
    return q;
}

/// Box-split: the leftmost factor is a single column of height r >= 2; detach
/// its bottom box as a new leading 1x1 factor.
inline Path lb(const Path& p) {
    if (p.factors.empty()) throw invalid_argument("lb on empty path");
    const Tableau& t = p.factors.front();
    if (t.width() != 1 || t.height() < 2)
        throw invalid_argument("lb requires a leading single column of height >= 2");
    Tableau box{{{t.at(t.height(), 1)}}};
    Tableau rest;
    for (int i = 1; i < t.height(); ++i) rest.rows.push_back({t.at(i, 1)});
    Path q{p.rank, {}};
    q.factors.reserve(p.factors.size() + 1);
    q.factors.push_back(std::move(box));
    q.factors.push_back(std::move(rest));
    q.factors.insert(q.factors.end(), p.factors.begin() + 1, p.factors.end());
    return q;
}

/// Reading word of a whole path: the factors' row words concatenated from the
/// leftmost factor to the rightmost.
inline Word path_word(const Path& p) {
    Word w;
    for (const Tableau& t : p.factors) {
        const Word part = row_word(t);
        w.insert(w.end(), part.begin(), part.end());
    }
    return w;
}

/// All paths of the given shape at rank n, ordered lexicographically by the
/// factors' row words, leftmost factor most significant.
inline std::vector<Path> enumerate_paths(int n, const RectangleSeq& shape) {
    validate_shape(shape, n);
    std::vector<std::vector<Tableau>> choices;
    choices.reserve(shape.size());
    for (const Rect& r : shape) {
        choices.push_back(enumerate_rect_tableaux(r.height, r.width, n + 1));
        if (choices.back().empty()) return {};
    }
    std::vector<Path> out;
    Path cur{n, std::vector<Tableau>(shape.size())};
    auto build = [&](auto&& self, std::size_t i) -> void {
        if (i == choices.size()) {
            out.push_back(cur);
            return;
        }
        for (const Tableau& t : choices[i]) {
            cur.factors[i] = t;
            self(self, i + 1);
        }
    };
    build(build, 0);
    return out;
}

}  // namespace pathrc
