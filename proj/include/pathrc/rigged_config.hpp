#pragma once

/// @file rigged_config.hpp
/// @brief Unrestricted rigged configurations: vacancy numbers, crystal
///        operators, and the barred peeling/splitting maps that mirror
///        lh / ls / lb / rs on sequences of rectangles.

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "pathrc/core.hpp"

namespace pathrc {

/// One string of a rigged partition: a part together with its label (rigging).
struct RiggedString {
    int length = 0;
    int label = 0;
    friend bool operator==(const RiggedString&, const RiggedString&) = default;
};

/// The strings at one level, kept in canonical order: length descending,
/// label descending.
using RiggedPartition = std::vector<RiggedString>;

/// A sequence of rigged partitions nu^(1..rank) attached to a sequence of
/// rectangles. Vacancy numbers are always computed on demand, never stored.
struct RiggedConfiguration {
    int rank = 0;
    RectangleSeq shape;
    std::vector<RiggedPartition> levels;  ///< levels[a-1] is nu^(a)

    void canonicalize() {
        for (RiggedPartition& level : levels)
            std::sort(level.begin(), level.end(), [](const RiggedString& x, const RiggedString& y) {
                return x.length != y.length ? x.length > y.length : x.label > y.label;
            });
    }

    friend bool operator==(const RiggedConfiguration&, const RiggedConfiguration&) = default;
};

inline RiggedConfiguration empty_configuration(int rank) {
    RiggedConfiguration rc;
    rc.rank = rank;
    rc.levels.assign(rank, {});
    return rc;
}

/// True iff the two configurations carry the same partitions and labels,
/// ignoring the order of rectangles in the shape (the string data of a
/// configuration does not depend on that order).
inline bool same_levels(const RiggedConfiguration& a, const RiggedConfiguration& b) {
    return a.rank == b.rank && a.levels == b.levels;
}

/// Vacancy number p_i^{(a)} for a string of length i at level a:
/// sum_j min(i,j) L_j^{(a)} minus the Cartan pairing with the box counts of
/// the neighbouring levels. Levels outside [1, rank] contribute nothing.
inline int vacancy(const RiggedConfiguration& rc, int a, int i) {
    if (a < 1 || a > rc.rank) throw invalid_argument("vacancy level out of range");
    if (i < 0) throw invalid_argument("vacancy length must be >= 0");
    long p = 0;
    for (const Rect& r : rc.shape)
        if (r.height == a) p += std::min(i, r.width);
    auto strings_term = [&](int level) {
        long t = 0;
        if (level >= 1 && level <= rc.rank)
            for (const RiggedString& s : rc.levels[level - 1]) t += std::min(i, s.length);
        return t;
    };
    p -= 2 * strings_term(a);
    p += strings_term(a - 1);
    p += strings_term(a + 1);
    return static_cast<int>(p);
}

inline int colabel(const RiggedConfiguration& rc, int a, const RiggedString& s) {
    return vacancy(rc, a, s.length) - s.label;
}

inline bool is_singular(const RiggedConfiguration& rc, int a, const RiggedString& s) {
    return colabel(rc, a, s) == 0;
}

/// Unrestricted validity: positive lengths and every label at most its
/// vacancy number (colabels >= 0).
inline void validate_configuration(const RiggedConfiguration& rc) {
    validate_shape(rc.shape, rc.rank);
    if (static_cast<int>(rc.levels.size()) != rc.rank)
        throw invalid_argument("configuration must have exactly rank levels");
    for (int a = 1; a <= rc.rank; ++a)
        for (const RiggedString& s : rc.levels[a - 1]) {
            if (s.length < 1) throw invalid_argument("string lengths must be positive");
            if (s.label > vacancy(rc, a, s.length))
                throw invalid_argument("label exceeds vacancy number");
        }
}

/// Restricted validity additionally demands nonnegative labels.
inline bool is_restricted(const RiggedConfiguration& rc) {
    for (int a = 1; a <= rc.rank; ++a)
        for (const RiggedString& s : rc.levels[a - 1])
            if (s.label < 0 || s.label > vacancy(rc, a, s.length)) return false;
    return true;
}

/// Fundamental-basis weight of a configuration:
/// wt = sum_i i L_i^{(a)} Lambda_a - sum i m_i^{(a)} alpha_a.
inline Weight weight(const RiggedConfiguration& rc) {
    Weight w;
    w.rank = rc.rank;
    w.fundamental.assign(rc.rank, 0);
    w.total_area = total_area(rc.shape);
    std::vector<long> boxes(rc.rank + 2, 0);  // boxes[a] = |nu^(a)|, padded
    for (int a = 1; a <= rc.rank; ++a)
        for (const RiggedString& s : rc.levels[a - 1]) boxes[a] += s.length;
    for (int a = 1; a <= rc.rank; ++a) {
        long c = 0;
        for (const Rect& r : rc.shape)
            if (r.height == a) c += r.width;
        c -= -boxes[a - 1] + 2 * boxes[a] - boxes[a + 1];
        w.fundamental[a - 1] = c;
    }
    return w;
}

namespace detail {

/// Rebuilds labels so that every string listed in `keep_colabel` retains the
/// colabel it had in `before`; strings are matched by (level, position).
/// Used to implement "leaving all colabels fixed" for crystal operators.
struct ColabelSnapshot {
    std::vector<std::vector<int>> colabels;  // per level, per string position

    explicit ColabelSnapshot(const RiggedConfiguration& rc) {
        colabels.resize(rc.levels.size());
        for (int a = 1; a <= rc.rank; ++a) {
            colabels[a - 1].reserve(rc.levels[a - 1].size());
            for (const RiggedString& s : rc.levels[a - 1])
                colabels[a - 1].push_back(colabel(rc, a, s));
        }
    }
};

}  // namespace detail

/// Lowering operator at level a, "leaving all colabels fixed": among strings
/// of level a with label <= 0 pick the minimal label, breaking ties towards
/// the longest string, and lengthen it (new label = old - 1); if no such
/// string exists, add a new string (1, -1). All other strings keep their
/// colabels. Undefined if the result violates label <= vacancy.
inline std::optional<RiggedConfiguration> f(const RiggedConfiguration& rc, int a) {
    if (a < 1 || a > rc.rank) throw invalid_argument("crystal operator index out of range");
    const detail::ColabelSnapshot snap(rc);
    const RiggedPartition& level = rc.levels[a - 1];
    int chosen = -1;
    for (int i = 0; i < static_cast<int>(level.size()); ++i) {
        if (level[i].label > 0) continue;
        if (chosen == -1 || level[i].label < level[chosen].label ||
            (level[i].label == level[chosen].label && level[i].length > level[chosen].length))
            chosen = i;
    }
    RiggedConfiguration out = rc;
    int new_label;
    if (chosen == -1) {
        out.levels[a - 1].push_back(RiggedString{1, 0});  // label assigned below
        new_label = -1;
        chosen = static_cast<int>(out.levels[a - 1].size()) - 1;
    } else {
        out.levels[a - 1][chosen].length += 1;
        new_label = rc.levels[a - 1][chosen].label - 1;
    }
    // Restore colabels of all untouched strings against the new partition.
    for (int b = 1; b <= out.rank; ++b)
        for (int i = 0; i < static_cast<int>(out.levels[b - 1].size()); ++i) {
            if (b == a && i == chosen) continue;
            out.levels[b - 1][i].label =
                vacancy(out, b, out.levels[b - 1][i].length) - snap.colabels[b - 1][i];
        }
    out.levels[a - 1][chosen].label = new_label;
    // Only the modified string can break validity; check its neighbourhood.
    for (int b = std::max(1, a - 1); b <= std::min(out.rank, a + 1); ++b)
        for (const RiggedString& s : out.levels[b - 1])
            if (s.label > vacancy(out, b, s.length)) return std::nullopt;
    out.canonicalize();
    return out;
}

/// Raising operator at level a, "leaving all colabels fixed": among strings
/// of level a with label < 0 pick the minimal label, breaking ties towards
/// the shortest string, and shorten it (new label = old + 1, length-0 strings
/// disappear). Undefined if no label is negative.
inline std::optional<RiggedConfiguration> e(const RiggedConfiguration& rc, int a) {
    if (a < 1 || a > rc.rank) throw invalid_argument("crystal operator index out of range");
    const RiggedPartition& level = rc.levels[a - 1];
    int chosen = -1;
    for (int i = 0; i < static_cast<int>(level.size()); ++i) {
        if (level[i].label >= 0) continue;
        if (chosen == -1 || level[i].label < level[chosen].label ||
            (level[i].label == level[chosen].label && level[i].length < level[chosen].length))
            chosen = i;
    }
    if (chosen == -1) return std::nullopt;
    const detail::ColabelSnapshot snap(rc);
    RiggedConfiguration out = rc;
    out.levels[a - 1][chosen].length -= 1;
    const int new_label = rc.levels[a - 1][chosen].label + 1;
    for (int b = 1; b <= out.rank; ++b)
        for (int i = 0; i < static_cast<int>(out.levels[b - 1].size()); ++i) {
            if (b == a && i == chosen) continue;
            out.levels[b - 1][i].label =
                vacancy(out, b, out.levels[b - 1][i].length) - snap.colabels[b - 1][i];
        }
    out.levels[a - 1][chosen].label = new_label;
    if (out.levels[a - 1][chosen].length == 0)
        out.levels[a - 1].erase(out.levels[a - 1].begin() + chosen);
    out.canonicalize();
    return out;
}

/// One entry of a selection sequence: either a sentinel or the string that
/// was selected at that level (recorded before the box change).
struct Selection {
    enum class Kind { infinite, zero_length, chosen };
    Kind kind = Kind::zero_length;
    int length = 0;
    int label = 0;

    static Selection infinite() { return {Kind::infinite, 0, 0}; }
    static Selection zero() { return {Kind::zero_length, 0, 0}; }
    static Selection of(const RiggedString& s) { return {Kind::chosen, s.length, s.label}; }

    /// Length with the infinite sentinel mapped to a huge value, for
    /// monotonicity comparisons.
    long length_or_infinity() const {
        return kind == Kind::infinite ? std::numeric_limits<long>::max() : length;
    }
    friend bool operator==(const Selection&, const Selection&) = default;
};

/// Per-level selections for k = top, top-1, ..., 0 (entries[0] is level top).
struct SelectionSequence {
    int top = 0;
    std::vector<Selection> entries;

    const Selection& at_level(int k) const { return entries.at(static_cast<std::size_t>(top - k)); }
    friend bool operator==(const SelectionSequence&, const SelectionSequence&) = default;
};

namespace detail {

/// Removes one string equal to `s` from the level (canonical duplicates are
/// interchangeable).
inline void erase_one(RiggedPartition& level, const RiggedString& s) {
    auto it = std::find(level.begin(), level.end(), s);
    if (it == level.end()) throw internal_error("string to erase not found");
    level.erase(it);
}

}  // namespace detail

/// Left-hat on configurations: the leading rectangle is 1x1; peel it off,
/// removing one box from the selected singular strings (smallest length
/// >= the previous level's selection, scanning levels upward) and making the
/// shortened strings singular again. Returns the extracted letter rk and the
/// new configuration. Labels of untouched strings are preserved.
inline std::pair<int, RiggedConfiguration> lh_bar(const RiggedConfiguration& rc) {
    if (rc.shape.empty() || rc.shape.front() != Rect{1, 1})
        throw invalid_argument("lh_bar requires a leading 1x1 rectangle");
    int rk = rc.rank + 1;
    std::vector<RiggedString> selected(rc.rank + 1, RiggedString{0, 0});  // [a] for a in 1..rank
    int prev_len = 1;
    for (int a = 1; a <= rc.rank; ++a) {
        const RiggedString* best = nullptr;
        for (const RiggedString& s : rc.levels[a - 1]) {
            if (s.length < prev_len || !is_singular(rc, a, s)) continue;
            if (!best || s.length < best->length) best = &s;
        }
        if (!best) {
            rk = a;
            break;
        }
        selected[a] = *best;
        prev_len = best->length;
    }
    RiggedConfiguration out = rc;
    out.shape.erase(out.shape.begin());
    for (int a = 1; a < rk && a <= out.rank; ++a) {
        detail::erase_one(out.levels[a - 1], selected[a]);
        if (selected[a].length > 1)
            out.levels[a - 1].push_back(RiggedString{selected[a].length - 1, 0});
    }
    // Re-singularize the shortened strings against the final configuration.
    for (int a = 1; a < rk && a <= out.rank; ++a) {
        if (selected[a].length <= 1) continue;
        RiggedString& s = out.levels[a - 1].back();
        s.label = vacancy(out, a, s.length);
    }
    out.canonicalize();
    return {rk, out};
}

/// Inverse of lh_bar: prepend a 1x1 rectangle and add one box per level
/// k = r-1, ..., 1, each time to the longest singular string of length at
/// most the previous selection (falling back to a new string of length one),
/// making the grown strings singular again. Also returns the selection
/// sequence D_r (levels rank..0; infinite above r-1, (0,0) at level 0).
inline std::pair<RiggedConfiguration, SelectionSequence> lh_bar_inv(const RiggedConfiguration& rc,
                                                                    int r) {
    if (r < 1 || r > rc.rank + 1) throw invalid_argument("lh_bar_inv letter out of range");
    SelectionSequence d;
    d.top = rc.rank;
    d.entries.assign(rc.rank + 1, Selection::infinite());
    d.entries[rc.rank] = Selection::zero();  // level 0 sentinel

    std::vector<RiggedString> selected(rc.rank + 1, RiggedString{0, 0});
    std::vector<bool> grew_new(rc.rank + 1, false);
    long cap = std::numeric_limits<long>::max();
    for (int k = r - 1; k >= 1; --k) {
        const RiggedString* best = nullptr;
        for (const RiggedString& s : rc.levels[k - 1]) {
            if (s.length > cap || !is_singular(rc, k, s)) continue;
            if (!best || s.length > best->length) best = &s;
        }
        if (best) {
            selected[k] = *best;
            d.entries[d.top - k] = Selection::of(*best);
            cap = best->length;
        } else {
            grew_new[k] = true;  // zero-length fallback
            d.entries[d.top - k] = Selection::zero();
            cap = 0;
        }
    }
    RiggedConfiguration out = rc;
    out.shape.insert(out.shape.begin(), Rect{1, 1});
    std::vector<int> grown_length(rc.rank + 1, 0);
    for (int k = 1; k < r && k <= out.rank; ++k) {
        if (!grew_new[k]) detail::erase_one(out.levels[k - 1], selected[k]);
        grown_length[k] = selected[k].length + 1;
        out.levels[k - 1].push_back(RiggedString{grown_length[k], 0});
    }
    for (int k = 1; k < r && k <= out.rank; ++k) {
        RiggedString& s = out.levels[k - 1].back();
        s.label = vacancy(out, k, s.length);
    }
    out.canonicalize();
    return {std::move(out), std::move(d)};
}

/// Left-split on configurations: split the leading r x s rectangle (s >= 2)
/// into (r,1),(r,s-1). The string data is unchanged; vacancy numbers at level
/// r grow by one for parts shorter than s.
inline RiggedConfiguration ls_bar(const RiggedConfiguration& rc) {
    if (rc.shape.empty() || rc.shape.front().width < 2)
        throw invalid_argument("ls_bar requires a leading rectangle of width >= 2");
    RiggedConfiguration out = rc;
    const Rect head = out.shape.front();
    out.shape.front() = Rect{head.height, 1};
    out.shape.insert(out.shape.begin() + 1, Rect{head.height, head.width - 1});
    return out;
}

/// Inverse of ls_bar: merge a leading (r,1),(r,s) pair into (r,s+1). Defined
/// only when every part at level r of length <= s has colabel >= 1 (those
/// vacancy numbers drop by one). String data is unchanged.
inline RiggedConfiguration ls_bar_inv(const RiggedConfiguration& rc) {
    if (rc.shape.size() < 2 || rc.shape[0].width != 1 || rc.shape[0].height != rc.shape[1].height)
        throw invalid_argument("ls_bar_inv requires a leading (r,1),(r,s) pair");
    const int r = rc.shape[0].height;
    const int s = rc.shape[1].width;
    if (r <= rc.rank)  // no parts exist at level rank+1, so the condition is vacuous there
        for (const RiggedString& str : rc.levels[r - 1])
            if (str.length <= s && colabel(rc, r, str) < 1)
                throw undefined_result("ls-bar-inv-domain: a short part at the head level has colabel 0");
    RiggedConfiguration out = rc;
    out.shape.erase(out.shape.begin());
    out.shape.front() = Rect{r, s + 1};
    return out;
}

/// Box-split on configurations: split a leading (r,1), r >= 2, into
/// (1,1),(r-1,1) and add a singular length-1 string to levels 1..r-1.
/// Vacancy numbers are unchanged.
inline RiggedConfiguration lb_bar(const RiggedConfiguration& rc) {
    if (rc.shape.empty() || rc.shape.front().width != 1 || rc.shape.front().height < 2)
        throw invalid_argument("lb_bar requires a leading single column of height >= 2");
    const int r = rc.shape.front().height;
    RiggedConfiguration out = rc;
    out.shape.front() = Rect{1, 1};
    out.shape.insert(out.shape.begin() + 1, Rect{r - 1, 1});
    for (int a = 1; a < r; ++a) out.levels[a - 1].push_back(RiggedString{1, 0});
    for (int a = 1; a < r; ++a) {
        RiggedString& s = out.levels[a - 1].back();
        s.label = vacancy(out, a, 1);
    }
    out.canonicalize();
    return out;
}

/// Inverse of lb_bar: merge a leading (1,1),(r-1,1) pair into (r,1), removing
/// one singular length-1 string from each of the levels 1..r-1. Defined only
/// when all those strings exist. Labels of the remaining strings (and all
/// vacancy numbers) are unchanged.
inline RiggedConfiguration lb_bar_inv(const RiggedConfiguration& rc) {
    if (rc.shape.size() < 2 || rc.shape[0] != Rect{1, 1} || rc.shape[1].width != 1)
        throw invalid_argument("lb_bar_inv requires a leading (1,1),(r-1,1) pair");
    const int r = rc.shape[1].height + 1;
    RiggedConfiguration out = rc;
    out.shape.erase(out.shape.begin());
    out.shape.front() = Rect{r, 1};
    for (int a = 1; a < r; ++a) {
        const int want = vacancy(rc, a, 1);  // vacancies unchanged by this map
        auto& level = out.levels[a - 1];
        auto it = std::find(level.begin(), level.end(), RiggedString{1, want});
        if (it == level.end())
            throw undefined_result("lb-bar-inv-domain: missing singular length-1 string");
        level.erase(it);
    }
    return out;
}

/// Right-split on configurations: split the trailing r x s rectangle (s >= 2)
/// into (r,s-1),(r,1), raising labels by one for parts at level r shorter
/// than s. Colabels are unchanged.
inline RiggedConfiguration rs_bar(const RiggedConfiguration& rc) {
    if (rc.shape.empty() || rc.shape.back().width < 2)
        throw invalid_argument("rs_bar requires a trailing rectangle of width >= 2");
    const int r = rc.shape.back().height;
    const int s = rc.shape.back().width;
    RiggedConfiguration out = rc;
    out.shape.back() = Rect{r, s - 1};
    out.shape.push_back(Rect{r, 1});
    if (r <= rc.rank)  // no parts exist at level rank+1
        for (RiggedString& str : out.levels[r - 1])
            if (str.length < s) str.label += 1;
    out.canonicalize();
    return out;
}

}  // namespace pathrc
