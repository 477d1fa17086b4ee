#pragma once

// Exhaustive verification harness: brute-force oracles (configuration
// enumeration, Knuth classes, crystal sweeps) and the commutation-diagram
// checks over desk-scale crystals.  Every check returns a list of
// serialized discrepancies; empty means the property held everywhere.

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "pathrc/bijection.hpp"
#include "pathrc/io.hpp"
#include "pathrc/promotion.hpp"

namespace pathrc {

struct CheckToggles {
    bool main_diagram = true;
    bool crystal_isomorphism = true;
    bool reductions = true;
    bool psi_phi = true;
    bool rmatrix = true;
    bool hw_correspondence = true;
    bool structural = true;
};

struct SuiteSpec {
    int rank = 1;
    std::vector<RectangleSeq> shapes;
    CheckToggles toggles;
    int jobs = 1;  ///< 0 = one thread per hardware core
    std::size_t max_discrepancies = 50;
    long max_paths = 5'000'000;  ///< ceiling on the estimated sweep size
    SlidePolicy slide;           ///< fault injection, path side of the main diagram
    RhoBarPolicy selection;      ///< fault injection, configuration side
};

struct Discrepancy {
    std::string check;
    std::string input;  ///< serialized offending document
    std::string expected;
    std::string actual;
    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

// ---------------------------------------------------------------------------
// Suite construction

/// All rectangle sequences with at most three factors, heights <= rank+1,
/// widths <= 2 and total area <= 8, in lexicographic order.
inline std::vector<RectangleSeq> default_shapes(int rank) {
    std::vector<Rect> rects;
    for (int r = 1; r <= rank + 1; ++r)
        for (int s = 1; s <= 2; ++s) rects.push_back(Rect{r, s});

    std::vector<RectangleSeq> out;
    RectangleSeq acc;
    auto extend = [&](auto&& self, long area) -> void {
        if (!acc.empty()) out.push_back(acc);
        if (acc.size() == 3) return;
        for (const Rect& b : rects) {
            const long a = area + static_cast<long>(b.height) * b.width;
            if (a > 8) continue;
            acc.push_back(b);
            self(self, a);
            acc.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

/// The default acceptance suites: ranks 1..3 over default_shapes, with the
/// three showcase shapes added at rank 3.
inline std::vector<SuiteSpec> default_suites() {
    std::vector<SuiteSpec> suites;
    for (int n = 1; n <= 3; ++n) {
        SuiteSpec s;
        s.rank = n;
        s.shapes = default_shapes(n);
        if (n == 3) {
            s.shapes.push_back({{2, 2}, {3, 2}, {2, 2}});
            s.shapes.push_back({{4, 4}});
            s.shapes.push_back({{2, 1}, {4, 4}});
        }
        suites.push_back(std::move(s));
    }
    return suites;
}

/// Suites exercising the direct image formula: single rectangles with
/// height, width <= 3 and the column-times-rectangle instances.
inline std::vector<SuiteSpec> psi_suites() {
    std::vector<SuiteSpec> suites;
    for (int n = 1; n <= 3; ++n) {
        SuiteSpec s;
        s.rank = n;
        s.toggles = CheckToggles{false, false, false, true, false, false, false};
        for (int r = 1; r <= std::min(n + 1, 3); ++r)
            for (int c = 1; c <= 3; ++c) {
                s.shapes.push_back({{r, c}});
                for (int t = 1; t <= r; ++t) s.shapes.push_back({{t, 1}, {r, c}});
            }
        suites.push_back(std::move(s));
    }
    return suites;
}

namespace detail {

inline std::string show(const Path& p) { return print_document(Document{p}); }
inline std::string show(const RiggedConfiguration& rc) { return print_document(Document{rc}); }

/// Runs a computation whose result is a serialized value, mapping an
/// undefined result to a comparable "undefined: <tag>" string.
template <class F>
std::string outcome(F&& f) {
    try {
        return f();
    } catch (const undefined_result& e) {
        return std::string("undefined: ") + e.what();
    }
}

inline long count_tableaux(int rank, const Rect& b) {
    static std::map<std::tuple<int, int, int>, long> cache;
    static std::mutex mu;
    const auto key = std::make_tuple(rank, b.height, b.width);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, static_cast<long>(enumerate_rect_tableaux(b.height, b.width, rank + 1).size()))
                 .first;
    return it->second;
}

inline long estimate_paths(int rank, const RectangleSeq& shape) {
    long total = 1;
    for (const Rect& b : shape) {
        const long c = count_tableaux(rank, b);
        if (c == 0) return 0;
        if (total > (1L << 60) / std::max(c, 1L)) return 1L << 60;
        total *= c;
    }
    return total;
}

/// Applies fn(item, sink) to each item; with several jobs the items are cut
/// into contiguous chunks processed concurrently and merged in input order,
/// so the result is independent of the parallelism degree.
template <class Item, class Fn>
void for_each_collect(const std::vector<Item>& items, int jobs, std::size_t cap,
                      std::vector<Discrepancy>& out, Fn&& fn) {
    auto guarded = [&fn](const Item& item, std::vector<Discrepancy>& sink) {
        try {
            fn(item, sink);
        } catch (const std::exception& e) {
            sink.push_back(Discrepancy{"internal", "", "no exception", e.what()});
        }
    };
    if (jobs == 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    jobs = std::clamp<int>(jobs, 1, 64);
    if (jobs == 1 || items.size() < 64) {
        for (const Item& item : items) {
            if (out.size() >= cap) return;
            guarded(item, out);
        }
        return;
    }
    const std::size_t chunk = (items.size() + jobs - 1) / jobs;
    std::vector<std::vector<Discrepancy>> buckets(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) {
        const std::size_t lo = chunk * static_cast<std::size_t>(j);
        const std::size_t hi = std::min(items.size(), lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, j, lo, hi] {
            for (std::size_t i = lo; i < hi && buckets[static_cast<std::size_t>(j)].size() < cap; ++i)
                guarded(items[i], buckets[static_cast<std::size_t>(j)]);
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& bucket : buckets)
        for (const Discrepancy& d : bucket) {
            if (out.size() >= cap) return;
            out.push_back(d);
        }
}

}  // namespace detail

/// Rejects suites whose shapes exceed the rank's alphabet or whose estimated
/// path counts exceed the configured ceiling.
inline void validate_suite(const SuiteSpec& spec) {
    if (spec.rank < 1) throw invalid_argument("suite rank must be at least 1");
    long total = 0;
    for (const RectangleSeq& shape : spec.shapes) {
        validate_shape(shape, spec.rank);
        total += detail::estimate_paths(spec.rank, shape);
        if (total > spec.max_paths) throw invalid_argument("suite exceeds the path ceiling");
    }
}

// ---------------------------------------------------------------------------
// Configuration enumeration (independent of the bijection)

namespace detail {

inline void partitions_of(int m, int max_part, std::vector<int>& acc,
                          std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(acc);
        return;
    }
    for (int part = std::min(m, max_part); part >= 1; --part) {
        acc.push_back(part);
        partitions_of(m - part, part, acc, out);
        acc.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions_of(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    partitions_of(m, m, acc, out);
    return out;
}

/// Weakly decreasing label tuples of the given size drawn from 0..cap.
inline void label_tuples(int size, int cap, int high, std::vector<int>& acc,
                         std::vector<std::vector<int>>& out) {
    if (size == 0) {
        out.push_back(acc);
        return;
    }
    for (int v = std::min(cap, high); v >= 0; --v) {
        acc.push_back(v);
        label_tuples(size - 1, cap, v, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

/// All restricted configurations over the shape whose weight has the given
/// dominant ambient vector: per-level box counts are forced linearly by the
/// weight, levels range over partitions of those counts, admissibility
/// requires every vacancy number nonnegative, and riggings range over
/// 0 <= label <= vacancy per string.
inline std::vector<RiggedConfiguration> enumerate_configurations(int rank, const RectangleSeq& shape,
                                                                 const std::vector<long>& lambda) {
    validate_shape(shape, rank);
    if (static_cast<int>(lambda.size()) != rank + 1)
        throw invalid_argument("ambient weight must have rank+1 entries");
    if (lambda.back() < 0) throw invalid_argument("ambient weight must be dominant");
    for (std::size_t j = 0; j + 1 < lambda.size(); ++j)
        if (lambda[j] < lambda[j + 1])
            throw invalid_argument("ambient weight must be dominant");

    std::vector<long> mu(static_cast<std::size_t>(rank) + 2, 0);
    for (const Rect& b : shape)
        for (int j = 1; j <= std::min(b.height, rank + 1); ++j)
            mu[static_cast<std::size_t>(j)] += b.width;
    if (std::accumulate(mu.begin(), mu.end(), 0L) !=
        std::accumulate(lambda.begin(), lambda.end(), 0L))
        return {};

    std::vector<int> boxes(static_cast<std::size_t>(rank) + 1, 0);
    long acc = 0;
    for (int a = 1; a <= rank; ++a) {
        acc += mu[static_cast<std::size_t>(a)] - lambda[static_cast<std::size_t>(a - 1)];
        if (acc < 0) return {};
        boxes[static_cast<std::size_t>(a)] = static_cast<int>(acc);
    }

    std::vector<std::vector<std::vector<int>>> level_choices;
    for (int a = 1; a <= rank; ++a)
        level_choices.push_back(detail::partitions_of(boxes[static_cast<std::size_t>(a)]));

    std::vector<RiggedConfiguration> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(rank), 0);
    while (true) {
        RiggedConfiguration rc = empty_configuration(rank);
        rc.shape = shape;
        int longest = 1;
        for (const Rect& b : shape) longest = std::max(longest, b.width);
        for (int a = 1; a <= rank; ++a) {
            for (int len : level_choices[static_cast<std::size_t>(a - 1)][pick[static_cast<std::size_t>(a - 1)]]) {
                rc.levels[static_cast<std::size_t>(a - 1)].push_back(RiggedString{len, 0});
                longest = std::max(longest, len);
            }
        }

        bool admissible = true;
        for (int a = 1; a <= rank && admissible; ++a)
            for (int i = 1; i <= longest && admissible; ++i)
                if (vacancy(rc, a, i) < 0) admissible = false;

        if (admissible) {
            // Group strings by length per level and enumerate all riggings.
            struct Group {
                int level;
                int length;
                int count;
                int cap;
            };
            std::vector<Group> groups;
            for (int a = 1; a <= rank; ++a) {
                const RiggedPartition& level = rc.levels[static_cast<std::size_t>(a - 1)];
                for (std::size_t i = 0; i < level.size();) {
                    std::size_t j = i;
                    while (j < level.size() && level[j].length == level[i].length) ++j;
                    groups.push_back(Group{a, level[i].length, static_cast<int>(j - i),
                                           static_cast<int>(vacancy(rc, a, level[i].length))});
                    i = j;
                }
            }
            std::vector<std::vector<std::vector<int>>> group_choices;
            for (const Group& g : groups) {
                std::vector<std::vector<int>> tuples;
                std::vector<int> lacc;
                detail::label_tuples(g.count, g.cap, g.cap, lacc, tuples);
                group_choices.push_back(std::move(tuples));
            }
            std::vector<std::size_t> lpick(groups.size(), 0);
            while (true) {
                RiggedConfiguration assigned = rc;
                for (std::size_t gi = 0; gi < groups.size(); ++gi) {
                    const Group& g = groups[gi];
                    const std::vector<int>& labels = group_choices[gi][lpick[gi]];
                    int placed = 0;
                    for (RiggedString& s : assigned.levels[static_cast<std::size_t>(g.level - 1)])
                        if (s.length == g.length) s.label = labels[static_cast<std::size_t>(placed++)];
                }
                assigned.canonicalize();
                out.push_back(std::move(assigned));
                std::size_t gi = 0;
                while (gi < groups.size() && ++lpick[gi] == group_choices[gi].size()) {
                    lpick[gi] = 0;
                    ++gi;
                }
                if (gi == groups.size()) break;
            }
        }

        std::size_t a = 0;
        while (a < pick.size() && ++pick[a] == level_choices[a].size()) {
            pick[a] = 0;
            ++a;
        }
        if (a == pick.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const RiggedConfiguration& x, const RiggedConfiguration& y) {
        return detail::show(x) < detail::show(y);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Diagram checks

/// Flagship check: the promotion square commutes through the bijection,
/// including agreement of undefined results under fault injection.
inline std::vector<Discrepancy> check_main_diagram(const SuiteSpec& spec) {
    std::vector<Discrepancy> out;
    for (const RectangleSeq& shape : spec.shapes) {
        if (out.size() >= spec.max_discrepancies) break;
        const std::vector<Path> paths = enumerate_paths(spec.rank, shape);
        detail::for_each_collect(paths, spec.jobs, spec.max_discrepancies, out,
                                 [&](const Path& p, std::vector<Discrepancy>& sink) {
            const std::string expected =
                detail::outcome([&] { return detail::show(phi(pr(p, spec.slide))); });
            const std::string actual =
                detail::outcome([&] { return detail::show(pr_bar(phi(p), spec.selection)); });
            if (expected != actual)
                sink.push_back(Discrepancy{"main-diagram", detail::show(p), expected, actual});
        });
    }
    return out;
}

/// The bijection intertwines the classical crystal operators and preserves
/// weights, with agreement of definedness.
inline std::vector<Discrepancy> check_crystal_isomorphism(const SuiteSpec& spec) {
    std::vector<Discrepancy> out;
    for (const RectangleSeq& shape : spec.shapes) {
        if (out.size() >= spec.max_discrepancies) break;
        const std::vector<Path> paths = enumerate_paths(spec.rank, shape);
        detail::for_each_collect(paths, spec.jobs, spec.max_discrepancies, out,
                                 [&](const Path& p, std::vector<Discrepancy>& sink) {
            const RiggedConfiguration rc = phi(p);
            if (!(weight(rc) == weight(p))) {
                sink.push_back(Discrepancy{"crystal-isomorphism", detail::show(p),
                                           "equal weights", "weights differ"});
                return;
            }
            for (int a = 1; a <= spec.rank; ++a) {
                const auto pf = f(p, a);
                const auto cf = f(rc, a);
                const std::string expected = pf ? detail::show(phi(*pf)) : "undefined";
                const std::string actual = cf ? detail::show(*cf) : "undefined";
                if (expected != actual)
                    sink.push_back(Discrepancy{"crystal-isomorphism", detail::show(p),
                                               "f_" + std::to_string(a) + " -> " + expected, actual});
                const auto pe = e(p, a);
                const auto ce = e(rc, a);
                const std::string eexpected = pe ? detail::show(phi(*pe)) : "undefined";
                const std::string eactual = ce ? detail::show(*ce) : "undefined";
                if (eexpected != eactual)
                    sink.push_back(Discrepancy{"crystal-isomorphism", detail::show(p),
                                               "e_" + std::to_string(a) + " -> " + eexpected, eactual});
            }
        });
    }
    return out;
}

/// The bijection agrees with the direct image formula on single rectangles
/// (where every string must come out singular) and on column-times-rectangle
/// paths satisfying the merge condition.
inline std::vector<Discrepancy> check_psi_phi(const SuiteSpec& spec) {
    std::vector<Discrepancy> out;
    for (const RectangleSeq& shape : spec.shapes) {
        if (out.size() >= spec.max_discrepancies) break;
        const bool single = shape.size() == 1;
        const bool column_pair = shape.size() == 2 && shape[0].width == 1 &&
                                 shape[0].height <= shape[1].height;
        if (!single && !column_pair) continue;
        const std::vector<Path> paths = enumerate_paths(spec.rank, shape);
        detail::for_each_collect(paths, spec.jobs, spec.max_discrepancies, out,
                                 [&](const Path& p, std::vector<Discrepancy>& sink) {
            RiggedConfiguration direct;
            try {
                direct = single ? psi(p) : psi_tilde_general(p);
            } catch (const invalid_argument&) {
                return;  // outside the merge condition's domain
            }
            const RiggedConfiguration image = phi(p);
            if (!(direct == image))
                sink.push_back(Discrepancy{"psi-phi", detail::show(p), detail::show(direct),
                                           detail::show(image)});
            if (single)
                for (int a = 1; a <= spec.rank; ++a)
                    for (const RiggedString& s : image.levels[static_cast<std::size_t>(a - 1)])
                        if (!is_singular(image, a, s))
                            sink.push_back(Discrepancy{"psi-phi", detail::show(p),
                                                       "all strings singular",
                                                       "non-singular string"});
        });
    }
    return out;
}

/// Factor permutation is a crystal isomorphism preserving the Knuth class,
/// an involution for the swap, and maps vacua to vacua; the right-split
/// matches its configuration-side conjugate, acts locally on the rightmost
/// factor, and commutes with the left operations.
inline std::vector<Discrepancy> check_rmatrix(const SuiteSpec& spec) {
    std::vector<Discrepancy> out;
    for (const RectangleSeq& shape : spec.shapes) {
        if (out.size() >= spec.max_discrepancies) break;
        const std::vector<Path> paths = enumerate_paths(spec.rank, shape);

        if (shape.size() == 2) {
            const Path vacuum{spec.rank,
                              {superstandard_rectangle(shape[0]), superstandard_rectangle(shape[1])}};
            const Path swapped_vacuum{
                spec.rank, {superstandard_rectangle(shape[1]), superstandard_rectangle(shape[0])}};
            if (!(r_matrix(vacuum, {2, 1}) == swapped_vacuum))
                out.push_back(Discrepancy{"rmatrix", detail::show(vacuum),
                                          detail::show(swapped_vacuum), "vacuum not preserved"});

            detail::for_each_collect(paths, spec.jobs, spec.max_discrepancies, out,
                                     [&](const Path& p, std::vector<Discrepancy>& sink) {
                if (!(r_matrix(p, {1, 2}) == p)) {
                    sink.push_back(Discrepancy{"rmatrix", detail::show(p), "identity permutation",
                                               "changed the path"});
                    return;
                }
                const Path q = r_matrix(p, {2, 1});
                if (!(r_matrix(q, {2, 1}) == p))
                    sink.push_back(Discrepancy{"rmatrix", detail::show(p), "involution",
                                               detail::show(q)});
                if (!knuth_equivalent(path_word(p), path_word(q)))
                    sink.push_back(Discrepancy{"rmatrix", detail::show(p), "Knuth class preserved",
                                               detail::show(q)});
                for (int a = 1; a <= spec.rank; ++a) {
                    const auto pf = f(p, a);
                    const auto qf = f(q, a);
                    const std::string expected = pf ? detail::show(r_matrix(*pf, {2, 1})) : "undefined";
                    const std::string actual = qf ? detail::show(*qf) : "undefined";
                    if (expected != actual)
                        sink.push_back(Discrepancy{"rmatrix", detail::show(p),
                                                   "f_" + std::to_string(a) + " commutes", actual});
                }
            });
        }

        if (out.size() >= spec.max_discrepancies) break;
        if (!shape.empty() && shape.back().width >= 2) {
            detail::for_each_collect(paths, spec.jobs, spec.max_discrepancies, out,
                                     [&](const Path& p, std::vector<Discrepancy>& sink) {
                const Path q = rs(p);
                if (!(phi(q) == rs_bar(phi(p))))
                    sink.push_back(Discrepancy{"rs", detail::show(p),
                                               "conjugate of the label shift", detail::show(q)});
                // The split acts locally on the rightmost factor: the head
                // factors pass through unchanged and the tail splits exactly
                // as it would on its own.
                const Path tail{p.rank, {p.factors.back()}};
                Path split = rs(tail);
                Path local{p.rank,
                           std::vector<Tableau>(p.factors.begin(), p.factors.end() - 1)};
                for (Tableau& t : split.factors) local.factors.push_back(std::move(t));
                if (!(q == local))
                    sink.push_back(Discrepancy{"rs", detail::show(p), detail::show(local),
                                               detail::show(q)});
                if (shape.size() < 2) return;
                const Rect head = shape.front();
                if (head.height == 1 && head.width == 1) {
                    const auto [letter, rest] = lh(p);
                    const auto [qletter, qrest] = lh(q);
                    if (letter != qletter || !(rs(rest) == qrest))
                        sink.push_back(Discrepancy{"rs", detail::show(p),
                                                   "commutes with box removal", detail::show(q)});
                } else if (head.width == 1 && head.height >= 2) {
                    if (!(rs(lb(p)) == lb(q)))
                        sink.push_back(Discrepancy{"rs", detail::show(p),
                                                   "commutes with box splitting", detail::show(q)});
                } else if (head.width >= 2) {
                    if (!(rs(ls(p)) == ls(q)))
                        sink.push_back(Discrepancy{"rs", detail::show(p),
                                                   "commutes with column splitting", detail::show(q)});
                }
            });
        }
    }
    return out;
}

/// Highest-weight paths correspond exactly to the enumerated restricted
/// configurations, for every dominant weight of the right total.
inline std::vector<Discrepancy> check_hw_correspondence(const SuiteSpec& spec) {
    std::vector<Discrepancy> out;
    for (const RectangleSeq& shape : spec.shapes) {
        if (out.size() >= spec.max_discrepancies) break;
        const long area = total_area(shape);
        std::map<std::vector<long>, std::set<std::string>> images;
        for (const Path& p : enumerate_paths(spec.rank, shape)) {
            if (!is_highest_weight(p)) continue;
            const std::vector<long> lambda = content(p);
            bool dominant = true;
            for (std::size_t j = 0; j + 1 < lambda.size(); ++j)
                if (lambda[j] < lambda[j + 1]) dominant = false;
            if (!dominant) {
                out.push_back(Discrepancy{"hw-correspondence", detail::show(p),
                                          "dominant content", "content not weakly decreasing"});
                continue;
            }
            images[lambda].insert(detail::show(phi(p)));
        }
        // Every dominant ambient vector of the right total, including those
        // with no highest-weight path at all.
        std::vector<std::vector<int>> partitions = detail::partitions_of(static_cast<int>(area));
        for (const std::vector<int>& part : partitions) {
            if (static_cast<int>(part.size()) > spec.rank + 1) continue;
            std::vector<long> lambda(part.begin(), part.end());
            lambda.resize(static_cast<std::size_t>(spec.rank) + 1, 0);
            std::set<std::string> expected;
            for (const RiggedConfiguration& rc : enumerate_configurations(spec.rank, shape, lambda))
                expected.insert(detail::show(rc));
            const auto it = images.find(lambda);
            const std::set<std::string> actual = it == images.end() ? std::set<std::string>{} : it->second;
            if (expected != actual) {
                std::ostringstream what;
                what << "lambda=(";
                for (std::size_t j = 0; j < lambda.size(); ++j)
                    what << (j ? "," : "") << lambda[j];
                what << ") over shape " << detail::shape_header(shape);
                out.push_back(Discrepancy{"hw-correspondence", what.str(),
                                          std::to_string(expected.size()) + " configurations",
                                          std::to_string(actual.size()) + " path images"});
                if (out.size() >= spec.max_discrepancies) break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Slide-domain closure and the reduction theorems

namespace detail {

struct DomSet {
    std::vector<Path> elements;  ///< deterministic order
    std::set<std::string> keys;
    bool contains(const Path& p) const { return keys.count(show(p)) > 0; }
};

/// The slide domain over the shape: every iterated slide image of a lifted
/// path, computed by closure.
inline DomSet compute_dom(int base_rank, const RectangleSeq& shape) {
    DomSet dom;
    for (const Path& p : enumerate_paths(base_rank, shape)) {
        Path q = lift(p);
        while (dom.keys.insert(show(q)).second) {
            dom.elements.push_back(q);
            const auto next = rho(q);
            if (!next || *next == q) break;
            q = *next;
        }
    }
    std::sort(dom.elements.begin(), dom.elements.end(),
              [](const Path& a, const Path& b) { return show(a) < show(b); });
    return dom;
}

struct DomCache {
    std::map<std::string, DomSet> sets;
    const DomSet& get(int base_rank, const RectangleSeq& shape) {
        const std::string key = std::to_string(base_rank) + "|" + shape_header(shape);
        auto it = sets.find(key);
        if (it == sets.end()) it = sets.emplace(key, compute_dom(base_rank, shape)).first;
        return it->second;
    }
};

inline RectangleSeq tail_shape(const RectangleSeq& shape) {
    return RectangleSeq(shape.begin() + 1, shape.end());
}

inline RectangleSeq lb_shape(const RectangleSeq& shape) {
    RectangleSeq out = {{1, 1}, {shape[0].height - 1, 1}};
    out.insert(out.end(), shape.begin() + 1, shape.end());
    return out;
}

inline RectangleSeq ls_shape(const RectangleSeq& shape) {
    RectangleSeq out = {{shape[0].height, 1}, {shape[0].height, shape[0].width - 1}};
    out.insert(out.end(), shape.begin() + 1, shape.end());
    return out;
}

inline RectangleSeq rs_shape(const RectangleSeq& shape) {
    RectangleSeq out(shape.begin(), shape.end() - 1);
    out.push_back(Rect{shape.back().height, shape.back().width - 1});
    out.push_back(Rect{shape.back().height, 1});
    return out;
}

inline RectangleSeq swap_shape(const RectangleSeq& shape) { return {shape[1], shape[0]}; }

inline bool selection_lengths_equal(const std::optional<SelectionSequence>& a,
                                    const std::optional<SelectionSequence>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    if (a->top != b->top) return false;
    for (int k = 0; k <= a->top; ++k)
        if (a->at_level(k).length_or_infinity() != b->at_level(k).length_or_infinity()) return false;
    return true;
}

}  // namespace detail

/// The reduction theorems: the slide and its configuration analogue commute
/// with the left operations off the leftmost-max class, with the right-split
/// and the factor swap on it, and the two slides correspond under the
/// bijection on the whole slide domain.
inline std::vector<Discrepancy> check_reductions(const SuiteSpec& spec) {
    std::vector<Discrepancy> out;
    detail::DomCache cache;
    for (const RectangleSeq& shape : spec.shapes) {
        if (out.size() >= spec.max_discrepancies) break;
        const detail::DomSet& dom = cache.get(spec.rank, shape);

        const bool head_box = shape[0].height == 1 && shape[0].width == 1;
        const bool head_column = shape[0].width == 1 && shape[0].height >= 2;
        const bool head_wide = shape[0].width >= 2;
        const bool tail_wide = shape.back().width >= 2;
        const bool two_factors = shape.size() == 2;

        // Membership oracles must exist before the parallel sweep.
        const detail::DomSet* dom_tail = head_box && shape.size() > 1
                                             ? &cache.get(spec.rank, detail::tail_shape(shape))
                                             : nullptr;
        const detail::DomSet* dom_lb =
            head_column ? &cache.get(spec.rank, detail::lb_shape(shape)) : nullptr;
        const detail::DomSet* dom_ls =
            head_wide ? &cache.get(spec.rank, detail::ls_shape(shape)) : nullptr;
        const detail::DomSet* dom_rs = tail_wide && shape.size() >= 2
                                           ? &cache.get(spec.rank, detail::rs_shape(shape))
                                           : nullptr;
        const detail::DomSet* dom_swap =
            two_factors ? &cache.get(spec.rank, detail::swap_shape(shape)) : nullptr;

        detail::for_each_collect(dom.elements, spec.jobs, spec.max_discrepancies, out,
                                 [&](const Path& q, std::vector<Discrepancy>& sink) {
            const RiggedConfiguration rc = phi(q);
            const auto slid = rho(q);
            const auto slid_bar = rho_bar(rc);

            // Step equivalence of the two slides through the bijection,
            // including the identity branches.
            {
                const std::string expected =
                    slid ? detail::show(phi(*slid)) : "undefined";
                const std::string actual = slid_bar ? detail::show(slid_bar->rc) : "undefined";
                if (expected != actual) {
                    sink.push_back(Discrepancy{"reduction-step", detail::show(q), expected, actual});
                    return;
                }
                const bool path_identity = slid && *slid == q;
                const bool rc_identity = slid_bar && !slid_bar->selections.has_value();
                if (slid && slid_bar && path_identity != rc_identity)
                    sink.push_back(Discrepancy{"reduction-step", detail::show(q),
                                               "identity branches agree", "identity branches differ"});
            }
            if (!slid || !slid_bar) return;

            const PathClass cls = classify(q);

            // Oracle for the classification itself: scan every cell.
            {
                bool has = false, beyond = false;
                for (std::size_t i = 0; i < q.factors.size(); ++i)
                    for (const auto& row : q.factors[i].rows)
                        for (int x : row)
                            if (x == q.rank + 1) {
                                has = true;
                                if (i > 0) beyond = true;
                            }
                if (cls.has_max_letter != has || cls.max_only_leftmost != !beyond)
                    sink.push_back(Discrepancy{"reduction-classify", detail::show(q),
                                               "cell scan", "corner classification differs"});
            }

            if (!cls.max_only_leftmost) {
                // Left operations commute with the slide off the
                // leftmost-max class, on both sides of the bijection.
                if (head_box && shape.size() > 1) {
                    const auto [letter, rest] = lh(q);
                    if (!dom_tail->contains(rest))
                        sink.push_back(Discrepancy{"reduction-lh", detail::show(q),
                                                   "box removal stays in the slide domain", "left"});
                    const auto slid_rest = rho(rest);
                    const auto [sletter, srest] = lh(*slid);
                    if (!slid_rest || letter != sletter || !(*slid_rest == srest))
                        sink.push_back(Discrepancy{"reduction-lh", detail::show(q),
                                                   "slide commutes with box removal",
                                                   slid_rest ? detail::show(*slid_rest) : "undefined"});
                    const auto [bletter, brc] = lh_bar(rc);
                    const auto bar_rest = rho_bar(brc);
                    if (bar_rest) {
                        const auto [aletter, arc] = lh_bar(slid_bar->rc);
                        if (aletter != bletter || !(arc == bar_rest->rc))
                            sink.push_back(Discrepancy{"reduction-lh-bar", detail::show(rc),
                                                       detail::show(bar_rest->rc),
                                                       detail::show(arc)});
                    }
                }
                if (head_column) {
                    const Path split = lb(q);
                    if (!dom_lb->contains(split))
                        sink.push_back(Discrepancy{"reduction-lb", detail::show(q),
                                                   "box split stays in the slide domain", "left"});
                    const auto slid_split = rho(split);
                    if (!slid_split || !(*slid_split == lb(*slid)))
                        sink.push_back(Discrepancy{"reduction-lb", detail::show(q),
                                                   "slide commutes with box splitting",
                                                   slid_split ? detail::show(*slid_split) : "undefined"});
                    const RiggedConfiguration brc = lb_bar(rc);
                    const auto bar_split = rho_bar(brc);
                    if (bar_split) {
                        const RiggedConfiguration arc = lb_bar(slid_bar->rc);
                        if (!(arc == bar_split->rc))
                            sink.push_back(Discrepancy{"reduction-lb-bar", detail::show(rc),
                                                       detail::show(bar_split->rc),
                                                       detail::show(arc)});
                    }
                }
                if (head_wide) {
                    const Path split = ls(q);
                    if (!dom_ls->contains(split))
                        sink.push_back(Discrepancy{"reduction-ls", detail::show(q),
                                                   "column split stays in the slide domain", "left"});
                    const auto slid_split = rho(split);
                    if (!slid_split || !(*slid_split == ls(*slid)))
                        sink.push_back(Discrepancy{"reduction-ls", detail::show(q),
                                                   "slide commutes with column splitting",
                                                   slid_split ? detail::show(*slid_split) : "undefined"});
                    const RiggedConfiguration brc = ls_bar(rc);
                    const auto bar_split = rho_bar(brc);
                    if (bar_split) {
                        const RiggedConfiguration arc = ls_bar(slid_bar->rc);
                        if (!(arc == bar_split->rc))
                            sink.push_back(Discrepancy{"reduction-ls-bar", detail::show(rc),
                                                       detail::show(bar_split->rc),
                                                       detail::show(arc)});
                    }
                }
            } else {
                // On the leftmost-max class: right-split and swap.
                if (shape.size() >= 2 && tail_wide) {
                    const Path split = rs(q);
                    const PathClass scls = classify(split);
                    if (!dom_rs->contains(split) || !scls.max_only_leftmost || scls.single_rectangle)
                        sink.push_back(Discrepancy{"reduction-rs", detail::show(q),
                                                   "right split stays in the class", detail::show(split)});
                    const auto slid_split = rho(split);
                    if (!slid_split || !(*slid_split == rs(*slid)))
                        sink.push_back(Discrepancy{"reduction-rs", detail::show(q),
                                                   "slide commutes with right split",
                                                   slid_split ? detail::show(*slid_split) : "undefined"});
                    const RiggedConfiguration brc = rs_bar(rc);
                    const auto bar_split = rho_bar(brc);
                    if (bar_split) {
                        const RiggedConfiguration arc = rs_bar(slid_bar->rc);
                        if (!(arc == bar_split->rc))
                            sink.push_back(Discrepancy{"reduction-rs-bar", detail::show(rc),
                                                       detail::show(bar_split->rc),
                                                       detail::show(arc)});
                        if (!detail::selection_lengths_equal(slid_bar->selections,
                                                             bar_split->selections))
                            sink.push_back(Discrepancy{"reduction-rs-bar", detail::show(rc),
                                                       "equal selection sequences",
                                                       "selection sequences differ"});
                    }
                }
                if (two_factors) {
                    const Path swapped = r_matrix(q, {2, 1});
                    if (!dom_swap->contains(swapped))
                        sink.push_back(Discrepancy{"reduction-rmap", detail::show(q),
                                                   "swap stays in the slide domain",
                                                   detail::show(swapped)});
                    const auto slid_swapped = rho(swapped);
                    if (!slid_swapped || !(*slid_swapped == r_matrix(*slid, {2, 1})))
                        sink.push_back(Discrepancy{"reduction-rmap", detail::show(q),
                                                   "slide commutes with the swap",
                                                   slid_swapped ? detail::show(*slid_swapped)
                                                                : "undefined"});
                }
            }
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural properties

/// Promotion order and weight rotation, selection-sequence monotonicity, the
/// per-trace monotonicity facts, and the box-count agreement after lifting.
inline std::vector<Discrepancy> check_structural(const SuiteSpec& spec) {
    std::vector<Discrepancy> out;
    for (const RectangleSeq& shape : spec.shapes) {
        if (out.size() >= spec.max_discrepancies) break;
        const std::vector<Path> paths = enumerate_paths(spec.rank, shape);
        detail::for_each_collect(paths, spec.jobs, spec.max_discrepancies, out,
                                 [&](const Path& p, std::vector<Discrepancy>& sink) {
            // Promotion has order dividing rank+1 and rotates the weight.
            Path cycled = p;
            for (int i = 0; i <= spec.rank; ++i) cycled = pr(cycled);
            if (!(cycled == p))
                sink.push_back(Discrepancy{"structural", detail::show(p),
                                           "promotion order divides rank+1", detail::show(cycled)});
            if (canonical_ambient(weight(pr(p))) != rotate_ambient(canonical_ambient(weight(p))))
                sink.push_back(Discrepancy{"structural", detail::show(p),
                                           "promotion rotates the weight", "rotation mismatch"});

            // Box count at the lifted top level equals the count of new
            // maximal letters.
            const Path lifted = lift(p);
            long maxima = 0;
            for (const Tableau& t : lifted.factors)
                for (const auto& row : t.rows)
                    maxima += std::count(row.begin(), row.end(), lifted.rank + 1);
            const RiggedConfiguration lifted_rc = phi(lifted);
            long boxes = 0;
            for (const RiggedString& s : lifted_rc.levels.back()) boxes += s.length;
            if (maxima != boxes)
                sink.push_back(Discrepancy{"structural", detail::show(p),
                                           std::to_string(maxima) + " lifted maxima",
                                           std::to_string(boxes) + " top boxes"});

            // Monotonicity of every recorded removal trace, plus the same
            // column / same row comparisons.
            for (const Path& subject : {p, lifted}) {
                const PhiResult traced = phi_traced(subject);
                const int rank = subject.rank;
                for (const auto& factor_grid : traced.trace) {
                    for (const auto& row_grid : factor_grid)
                        for (const SelectionSequence& d : row_grid)
                            for (int k = 1; k <= d.top; ++k)
                                if (d.at_level(k - 1).length_or_infinity() >
                                    d.at_level(k).length_or_infinity())
                                    sink.push_back(Discrepancy{"structural", detail::show(subject),
                                                               "removal selections weakly decrease",
                                                               "level " + std::to_string(k)});
                    // A box in row i only selects at levels i and above; the
                    // levels below are cancelled by the head merge, so the
                    // cross-box comparisons start at the deeper box's row.
                    const std::size_t rows = factor_grid.size();
                    const std::size_t cols = rows ? factor_grid[0].size() : 0;
                    for (std::size_t col = 0; col < cols; ++col)
                        for (std::size_t a = 0; a + 1 < rows; ++a)
                            for (int k = static_cast<int>(a) + 2; k <= rank; ++k)
                                if (factor_grid[a + 1][col].at_level(k).length_or_infinity() >
                                    factor_grid[a][col].at_level(k).length_or_infinity())
                                    sink.push_back(
                                        Discrepancy{"structural", detail::show(subject),
                                                    "same-column selections weakly decrease downward",
                                                    "row " + std::to_string(a + 2)});
                    for (std::size_t row = 0; row < rows; ++row)
                        for (std::size_t c = 0; c + 1 < cols; ++c)
                            for (int k = static_cast<int>(row) + 1; k <= rank; ++k) {
                                const long left = factor_grid[row][c].at_level(k).length_or_infinity();
                                const long right =
                                    factor_grid[row][c + 1].at_level(k).length_or_infinity();
                                const long inf = std::numeric_limits<long>::max();
                                const bool ok = left == inf ? right == inf : right > left;
                                if (!ok)
                                    sink.push_back(
                                        Discrepancy{"structural", detail::show(subject),
                                                    "same-row selections strictly increase leftward",
                                                    "row " + std::to_string(row + 1)});
                            }
                }
            }

            // Insertion selections weakly lengthen from the top level down
            // on every slide the configuration promotion performs.
            RiggedConfiguration rc = lift_bar(phi(p));
            long top_boxes = 0;
            for (const RiggedString& s : rc.levels.back()) top_boxes += s.length;
            for (long i = 0; i < top_boxes; ++i) {
                const auto res = rho_bar(rc);
                if (!res || !res->selections) {
                    sink.push_back(Discrepancy{"structural", detail::show(p),
                                               "configuration promotion completes",
                                               "slide " + std::to_string(i) + " stalled"});
                    break;
                }
                const SelectionSequence& sel = *res->selections;
                for (int k = 1; k <= sel.top; ++k)
                    if (sel.at_level(k - 1).length_or_infinity() <
                        sel.at_level(k).length_or_infinity())
                        sink.push_back(Discrepancy{"structural", detail::show(p),
                                                   "insertion selections weakly increase",
                                                   "level " + std::to_string(k)});
                rc = res->rc;
            }
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suite driver

struct CheckReport {
    std::string name;
    std::vector<Discrepancy> discrepancies;
};

struct SuiteReport {
    long paths_checked = 0;
    std::vector<CheckReport> checks;
    bool ok() const {
        for (const CheckReport& c : checks)
            if (!c.discrepancies.empty()) return false;
        return true;
    }
};

inline SuiteReport run_suite(const SuiteSpec& spec) {
    validate_suite(spec);
    SuiteReport report;
    for (const RectangleSeq& shape : spec.shapes)
        report.paths_checked += detail::estimate_paths(spec.rank, shape);
    const CheckToggles& t = spec.toggles;
    if (t.main_diagram) report.checks.push_back({"main-diagram", check_main_diagram(spec)});
    if (t.crystal_isomorphism)
        report.checks.push_back({"crystal-isomorphism", check_crystal_isomorphism(spec)});
    if (t.reductions) report.checks.push_back({"reductions", check_reductions(spec)});
    if (t.psi_phi) report.checks.push_back({"psi-phi", check_psi_phi(spec)});
    if (t.rmatrix) report.checks.push_back({"rmatrix", check_rmatrix(spec)});
    if (t.hw_correspondence)
        report.checks.push_back({"hw-correspondence", check_hw_correspondence(spec)});
    if (t.structural) report.checks.push_back({"structural", check_structural(spec)});
    return report;
}

}  // namespace pathrc
