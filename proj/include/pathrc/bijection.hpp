#pragma once

#include <utility>
#include <vector>

#include "pathrc/crystal_paths.hpp"
#include "pathrc/rigged_config.hpp"

namespace pathrc {

/// Selection data recorded while building the image of a path, indexed by
/// [factor][box row - 1][column counted from the right - 1].
using SelectionGrid = std::vector<std::vector<std::vector<SelectionSequence>>>;

struct PhiResult {
    RiggedConfiguration rc;
    SelectionGrid trace;
};

/// Maps a path to its rigged configuration, recording the selection sequence
/// of every box insertion. Factors are consumed right to left; within a
/// factor, columns right to left; within a column, rows top to bottom. Each
/// box insertion is followed by a head merge once the column has two or more
/// boxes, and each completed non-final column is merged into the growing
/// rectangle.
inline PhiResult phi_traced(const Path& p) {
    validate_path(p);
    RiggedConfiguration rc = empty_configuration(p.rank);
    SelectionGrid trace(p.factors.size());
    for (int fi = static_cast<int>(p.factors.size()) - 1; fi >= 0; --fi) {
        const Tableau& t = p.factors[fi];
        const int r = t.height();
        const int s = t.width();
        trace[fi].assign(r, std::vector<SelectionSequence>(s));
        for (int c = s; c >= 1; --c) {
            for (int row = 1; row <= r; ++row) {
                auto [grown, d] = lh_bar_inv(rc, t.at(row, c));
                rc = std::move(grown);
                trace[fi][row - 1][s - c] = std::move(d);
                if (row >= 2) rc = lb_bar_inv(rc);
            }
            if (c < s) rc = ls_bar_inv(rc);
        }
    }
    return {std::move(rc), std::move(trace)};
}

inline RiggedConfiguration phi(const Path& p) { return phi_traced(p).rc; }

/// The same map written as the literal recursion on the leading factor; used
/// to cross-check the iterative implementation.
inline RiggedConfiguration phi_reference(const Path& p) {
    validate_path(p);
    if (p.factors.empty()) return empty_configuration(p.rank);
    const Tableau& head = p.factors.front();
    if (head.width() >= 2) return ls_bar_inv(phi_reference(ls(p)));
    if (head.height() >= 2) return lb_bar_inv(phi_reference(lb(p)));
    const auto [letter, rest] = lh(p);
    return lh_bar_inv(phi_reference(rest), letter).first;
}

/// Inverts the path-to-configuration map. Throws undefined_result with reason
/// "not-in-image-phi" when the configuration is not the image of any path of
/// its rectangle sequence.
inline Path phi_inv(const RiggedConfiguration& input) {
    validate_configuration(input);
    Path p;
    p.rank = input.rank;
    RiggedConfiguration rc = input;
    for (const Rect& factor : input.shape) {
        const int r = factor.height;
        const int s = factor.width;
        std::vector<std::vector<int>> columns(s, std::vector<int>(r + 1, 0));
        for (int c = 1; c <= s; ++c) {
            if (s - c + 1 >= 2) rc = ls_bar(rc);
            for (int h = r; h >= 1; --h) {
                if (h >= 2) rc = lb_bar(rc);
                auto [letter, rest] = lh_bar(rc);
                rc = std::move(rest);
                columns[c - 1][h] = letter;
            }
        }
        Tableau t;
        t.rows.assign(r, std::vector<int>(s, 0));
        for (int h = 1; h <= r; ++h)
            for (int c = 1; c <= s; ++c) t.rows[h - 1][c - 1] = columns[c - 1][h];
        if (!is_semistandard_rectangle(t, input.rank + 1))
            throw undefined_result("not-in-image-phi: extracted factor is not semistandard");
        p.factors.push_back(std::move(t));
    }
    for (const RiggedPartition& level : rc.levels)
        if (!level.empty())
            throw undefined_result("not-in-image-phi: leftover strings after extracting all factors");
    return p;
}

namespace detail {

struct MergedDiagram {
    std::vector<std::vector<int>> rows;  ///< row j of the merged filling
    int column_height = 0;               ///< t, 0 when there is no column factor
    int rectangle_width = 0;             ///< c
};

/// Normalizes a single rectangle or a column-rectangle pair into the merged
/// filling whose row statistics drive the direct image construction.
inline MergedDiagram merge_for_direct_image(const Path& p) {
    validate_path(p);
    MergedDiagram m;
    if (p.factors.size() == 1) {
        m.rows = p.factors[0].rows;
        m.rectangle_width = p.factors[0].width();
        return m;
    }
    if (p.factors.size() != 2 || p.factors[0].width() != 1)
        throw invalid_argument("direct-image-shape: need one rectangle or a column times a rectangle");
    const Tableau& col = p.factors[0];
    const Tableau& rect = p.factors[1];
    const int t = col.height();
    if (t > rect.height())
        throw invalid_argument("direct-image-shape: column may not be taller than the rectangle");
    for (int k = 1; k <= t; ++k)
        if (col.at(k, 1) > rect.at(k, 1))
            throw invalid_argument("direct-image-shape: column entries must fit in front of the rectangle rows");
    m.rows = rect.rows;
    for (int k = 1; k <= t; ++k) m.rows[k - 1].insert(m.rows[k - 1].begin(), col.at(k, 1));
    m.column_height = t;
    m.rectangle_width = rect.width();
    return m;
}

}  // namespace detail

/// Per-level raw row statistics of the direct image: entry [k-1][j-1] counts
/// the boxes on row j (for j <= min(k, rows)) holding a number greater than k.
inline std::vector<std::vector<int>> psi_areas(const Path& p) {
    const detail::MergedDiagram m = detail::merge_for_direct_image(p);
    const int rows = static_cast<int>(m.rows.size());
    std::vector<std::vector<int>> areas(p.rank);
    for (int k = 1; k <= p.rank; ++k) {
        const int limit = std::min(k, rows);
        areas[k - 1].assign(limit, 0);
        for (int j = 1; j <= limit; ++j)
            for (int entry : m.rows[j - 1])
                if (entry > k) ++areas[k - 1][j - 1];
    }
    return areas;
}

/// Direct image of a single rectangle or column-rectangle path. All strings
/// are singular except, when a column factor is present, the parts at the
/// column-height level no wider than the rectangle, whose colabel is one.
inline RiggedConfiguration psi_tilde_general(const Path& p) {
    const detail::MergedDiagram m = detail::merge_for_direct_image(p);
    const std::vector<std::vector<int>> areas = psi_areas(p);
    RiggedConfiguration rc;
    rc.rank = p.rank;
    rc.shape = p.shape();
    rc.levels.assign(p.rank, {});
    for (int k = 1; k <= p.rank; ++k) {
        for (int count : areas[k - 1])
            if (count > 0) rc.levels[k - 1].push_back({count, 0});
        rc.canonicalize();
    }
    for (int k = 1; k <= p.rank; ++k)
        for (RiggedString& str : rc.levels[k - 1]) {
            str.label = vacancy(rc, k, str.length);
            if (k == m.column_height && str.length <= m.rectangle_width) str.label -= 1;
        }
    validate_configuration(rc);
    return rc;
}

/// Direct image of a single-rectangle path: every string singular.
inline RiggedConfiguration psi(const Path& p) {
    if (p.factors.size() != 1) throw invalid_argument("direct-image-shape: expected a single rectangle");
    return psi_tilde_general(p);
}

}  // namespace pathrc
