#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "pathrc/bijection.hpp"

namespace pathrc {

/// Hooks for deliberately perturbing the sliding operator in mutation runs.
struct SlidePolicy {
    TiePolicy tie = TiePolicy::prefer_above;
    /// Fault injection: start the slide from the bottom-left cell instead of
    /// the bottom-right corner.  Removing any bottom-row occurrence of the
    /// maximal letter is provably equivalent to corner removal (the corner
    /// hole first marches left through the run of maxima), so the only way
    /// to perturb the removal cell observably is to leave that run.
    bool remove_bottom_left = false;
};

/// Hook for deliberately perturbing the configuration-side slide.
struct RhoBarPolicy {
    bool pick_longest = false;  ///< select the longest admissible singular string instead of the shortest
};

/// Adds one to every entry, raising the rank by one.
inline Path lift(const Path& p) {
    validate_path(p);
    Path out = p;
    out.rank += 1;
    for (Tableau& t : out.factors)
        for (auto& row : t.rows)
            for (int& entry : row) entry += 1;
    return out;
}

/// Realizes the lift as the lowering-operator word f_1^{c_1} ... f_{n+1}^{c_{n+1}}
/// (rightmost factor applied first) with c the content of the path; returns
/// nothing if the word leaves the crystal.
inline std::optional<Path> lift_by_operators(const Path& p) {
    validate_path(p);
    const std::vector<long> content = canonical_ambient(weight(p));
    Path out = p;
    out.rank += 1;
    for (int a = out.rank; a >= 1; --a)
        for (long i = 0; i < content[a - 1]; ++i) {
            auto next = f(out, a);
            if (!next) return std::nullopt;
            out = std::move(*next);
        }
    return out;
}

struct RhoTrace {
    int factor_index = -1;  ///< factor the slide acted on; -1 on the identity branch
    SlideRoute route;
};

/// One promotion slide: find the rightmost factor holding the maximal letter
/// rank+1, remove its bottom-right occurrence, slide the hole to (1,1) and
/// fill in 1. Identity when no factor holds the maximal letter. Returns
/// nothing when the filled tableau is not semistandard.
inline std::optional<Path> rho(const Path& p, const SlidePolicy& pol = {}, RhoTrace* trace = nullptr) {
    validate_path(p);
    const int max_letter = p.rank + 1;
    int fi = -1;
    for (int i = static_cast<int>(p.factors.size()) - 1; i >= 0; --i) {
        const Tableau& t = p.factors[i];
        if (t.at(t.height(), t.width()) == max_letter) {
            fi = i;
            break;
        }
    }
    if (trace) *trace = RhoTrace{};
    if (fi < 0) return p;  // identity: the maximal letter only ever sits in a bottom-right corner

    const Tableau& t = p.factors[fi];
    const int r = t.height();
    const int s = t.width();
    const Cell hole = pol.remove_bottom_left ? Cell{r, 1} : Cell{r, s};
    SlideResult slid = reverse_slide(t, hole, pol.tie);
    slid.tableau.at(1, 1) = 1;
    if (!is_semistandard_rectangle(slid.tableau, max_letter)) return std::nullopt;
    if (trace) *trace = RhoTrace{fi, std::move(slid.route)};
    Path out = p;
    out.factors[fi] = std::move(slid.tableau);
    return out;
}

/// Promotion: lift, then one slide per occurrence of the new maximal letter,
/// then reinterpret at the original rank. Throws undefined_result with reason
/// "not-in-dom-rho" if a slide fails (possible only under mutation policies).
inline Path pr(const Path& p, const SlidePolicy& pol = {}) {
    Path q = lift(p);
    const int max_letter = q.rank + 1;
    long m = 0;
    for (const Tableau& t : q.factors)
        for (const auto& row : t.rows) m += std::count(row.begin(), row.end(), max_letter);
    for (long i = 0; i < m; ++i) {
        auto next = rho(q, pol);
        if (!next) throw undefined_result("not-in-dom-rho: a slide produced an invalid filling");
        q = std::move(*next);
    }
    q.rank -= 1;
    try {
        validate_path(q);
    } catch (const invalid_argument&) {
        // Reachable only under fault injection: a perturbed slide can leave
        // the old maximal letter in place, which no longer fits the alphabet.
        throw undefined_result("not-in-dom-rho: slides left the path outside the crystal");
    }
    return q;
}

namespace detail {

constexpr int orbit_cap(int rank) { return 4 * (rank + 2); }

}  // namespace detail

/// Inverse promotion by iterating around the (finite) promotion orbit.
inline Path pr_inverse(const Path& p) {
    Path z = p;
    for (int step = 0; step < detail::orbit_cap(p.rank); ++step) {
        Path next = pr(z);
        if (next == p) return z;
        z = std::move(next);
    }
    throw internal_error("promotion orbit did not close");
}

/// Affine operators on paths via promotion conjugation.
inline std::optional<Path> f0(const Path& p) {
    const auto moved = f(pr(p), 1);
    if (!moved) return std::nullopt;
    return pr_inverse(*moved);
}

inline std::optional<Path> e0(const Path& p) {
    const auto moved = e(pr(p), 1);
    if (!moved) return std::nullopt;
    return pr_inverse(*moved);
}

/// Syntactic location of the maximal letter, feeding the case analysis of the
/// slide-versus-peel commutation checks.
struct PathClass {
    bool has_max_letter = false;
    bool max_only_leftmost = false;    ///< vacuously true when no maximal letter occurs
    bool single_rectangle = false;
    bool leftmost_single_column = false;
};

inline PathClass classify(const Path& p) {
    validate_path(p);
    const int max_letter = p.rank + 1;
    PathClass c;
    bool max_beyond_leftmost = false;
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        const Tableau& t = p.factors[i];
        if (t.at(t.height(), t.width()) == max_letter) {
            c.has_max_letter = true;
            if (i > 0) max_beyond_leftmost = true;
        }
    }
    c.max_only_leftmost = !max_beyond_leftmost;
    c.single_rectangle = p.factors.size() == 1;
    c.leftmost_single_column = !p.factors.empty() && p.factors.front().width() == 1;
    return c;
}

/// Configuration-side lift: embed with an empty new top level, then apply the
/// lowering word f_1^{c_1} ... f_{n+1}^{c_{n+1}} (rightmost first) for the
/// canonical ambient weight c.
inline RiggedConfiguration lift_bar(const RiggedConfiguration& rc) {
    validate_configuration(rc);
    const std::vector<long> content = canonical_ambient(weight(rc));
    for (long c : content)
        if (c < 0) throw invalid_argument("lift requires a nonnegative ambient weight");
    RiggedConfiguration out = rc;
    out.rank += 1;
    out.levels.emplace_back();
    for (int a = out.rank; a >= 1; --a)
        for (long i = 0; i < content[a - 1]; ++i) {
            auto next = f(out, a);
            if (!next) throw internal_error("lift word left the configuration crystal");
            out = std::move(*next);
        }
    return out;
}

struct RhoBarResult {
    RiggedConfiguration rc;
    /// Strings selected per level before shortening, with the infinite
    /// sentinel at level 0; absent on the identity branch.
    std::optional<SelectionSequence> selections;
};

/// Configuration-side slide: pick the shortest singular string at the top
/// level, then per lower level the shortest singular string at least as long
/// as the previous pick; shorten them all by one and re-singularize. Identity
/// when the top level has no singular string; nothing when some lower level
/// has no admissible string or the shortened result is invalid.
inline std::optional<RhoBarResult> rho_bar(const RiggedConfiguration& input, const RhoBarPolicy& pol = {}) {
    validate_configuration(input);
    const int top = input.rank;
    std::vector<RiggedString> chosen(top + 1, RiggedString{0, 0});  // [k] for level k
    int bound = 1;
    for (int k = top; k >= 1; --k) {
        const RiggedString* best = nullptr;
        for (const RiggedString& s : input.levels[k - 1]) {
            if (s.length < bound || !is_singular(input, k, s)) continue;
            if (!best || (pol.pick_longest ? s.length > best->length : s.length < best->length))
                best = &s;
        }
        if (!best) {
            if (k == top) return RhoBarResult{input, std::nullopt};  // identity branch
            return std::nullopt;                                     // not well-defined
        }
        chosen[k] = *best;
        bound = best->length;
    }

    RiggedConfiguration out = input;
    for (int k = 1; k <= top; ++k) {
        detail::erase_one(out.levels[k - 1], chosen[k]);
        if (chosen[k].length > 1) out.levels[k - 1].push_back(RiggedString{chosen[k].length - 1, 0});
    }
    for (int k = 1; k <= top; ++k) {
        if (chosen[k].length <= 1) continue;
        RiggedString& s = out.levels[k - 1].back();
        s.label = vacancy(out, k, s.length);
    }
    out.canonicalize();
    try {
        validate_configuration(out);
    } catch (const invalid_argument&) {
        return std::nullopt;  // a preserved label exceeded its shrunken vacancy
    }

    SelectionSequence sel;
    sel.top = top;
    sel.entries.assign(static_cast<std::size_t>(top) + 1, Selection::infinite());
    for (int k = top; k >= 1; --k) sel.entries[static_cast<std::size_t>(top - k)] = Selection::of(chosen[k]);
    return RhoBarResult{std::move(out), std::move(sel)};
}

/// Configuration-side promotion: lift, slide once per box at the new top
/// level, drop the (now empty) top level. Throws undefined_result with reason
/// "rhobar-not-well-defined" when a slide fails or stalls.
inline RiggedConfiguration pr_bar(const RiggedConfiguration& rc, const RhoBarPolicy& pol = {}) {
    RiggedConfiguration out = lift_bar(rc);
    long m = 0;
    for (const RiggedString& s : out.levels.back()) m += s.length;
    for (long i = 0; i < m; ++i) {
        auto step = rho_bar(out, pol);
        if (!step) throw undefined_result("rhobar-not-well-defined: no admissible singular string at some level");
        if (!step->selections)
            throw undefined_result("rhobar-not-well-defined: boxes remain but the top level has no singular string");
        out = std::move(step->rc);
    }
    if (!out.levels.back().empty()) throw internal_error("top level not emptied by the slides");
    out.levels.pop_back();
    out.rank -= 1;
    validate_configuration(out);
    return out;
}

/// Inverse configuration-side promotion by orbit iteration.
inline RiggedConfiguration pr_bar_inverse(const RiggedConfiguration& rc) {
    RiggedConfiguration z = rc;
    for (int step = 0; step < detail::orbit_cap(rc.rank); ++step) {
        RiggedConfiguration next = pr_bar(z);
        if (next == rc) return z;
        z = std::move(next);
    }
    throw internal_error("configuration promotion orbit did not close");
}

/// For a single rectangle holding the maximal letter: per level, the size of
/// the part of the direct image losing a box under the slide, listed from the
/// top level down.
inline std::vector<int> rhobb_sequence(const Path& p, const SlidePolicy& pol = {}) {
    if (p.factors.size() != 1) throw invalid_argument("area slide sequence needs a single rectangle");
    const auto slid = rho(p, pol);
    if (!slid) throw undefined_result("not-in-dom-rho: the slide is undefined here");
    if (*slid == p) throw invalid_argument("area slide sequence needs the maximal letter present");
    const RiggedConfiguration before = psi(p);
    const RiggedConfiguration after = psi(*slid);
    std::vector<int> out;
    for (int k = p.rank; k >= 1; --k) {
        std::vector<int> a, b;
        for (const RiggedString& s : before.levels[k - 1]) a.push_back(s.length);
        for (const RiggedString& s : after.levels[k - 1]) b.push_back(s.length);
        int lost = -1;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i >= b.size() || a[i] != b[i]) {
                lost = a[i];
                break;
            }
        if (lost < 0) throw undefined_result("not-in-dom-rho: the slide removed no box at some level");
        std::vector<int> rebuilt = a;
        auto it = std::find(rebuilt.begin(), rebuilt.end(), lost);
        if (lost == 1)
            rebuilt.erase(it);
        else
            *it = lost - 1;
        std::sort(rebuilt.rbegin(), rebuilt.rend());
        if (rebuilt != b) throw undefined_result("not-in-dom-rho: the slide moved more than one box at a level");
        out.push_back(lost);
    }
    return out;
}

/// Factor permutation through the bijection: permute the rectangle sequence
/// of the image and map back.
inline Path r_matrix(const Path& p, const std::vector<int>& sigma) {
    validate_path(p);
    const std::size_t k = p.factors.size();
    if (sigma.size() != k) throw invalid_argument("permutation size must match the factor count");
    std::vector<bool> seen(k, false);
    for (int v : sigma) {
        if (v < 1 || v > static_cast<int>(k) || seen[v - 1])
            throw invalid_argument("not a permutation of 1..K");
        seen[v - 1] = true;
    }
    RiggedConfiguration rc = phi(p);
    const RectangleSeq old = rc.shape;
    for (std::size_t i = 0; i < k; ++i) rc.shape[i] = old[static_cast<std::size_t>(sigma[i]) - 1];
    return phi_inv(rc);
}

/// Right-split on paths, as the conjugation of the label bump by the bijection.
inline Path rs(const Path& p) {
    validate_path(p);
    if (p.factors.empty() || p.factors.back().width() < 2)
        throw invalid_argument("right-split needs a rightmost factor of width at least two");
    return phi_inv(rs_bar(phi(p)));
}

}  // namespace pathrc
