#pragma once

/// @file core.hpp
/// @brief Shared primitive types for the path/rigged-configuration library:
///        rectangles, cells, weights, and the error taxonomy.

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathrc {

/// Raised when an input value violates a documented precondition
/// (malformed shapes, non-semistandard fillings, bad permutations, ...).
/// The CLI maps this to exit code 2.
struct invalid_argument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operator is simply not defined at the given input
/// (outside a domain, not in an image). The CLI maps this to exit code 3.
/// The machine-readable reason is the first token of what().
struct undefined_result : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised on internal consistency failures that indicate a bug, never a bad
/// input. The CLI maps this to exit code 1.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// A height x width rectangle, one tensor-factor shape.
struct Rect {
    int height = 0;
    int width = 0;
    friend bool operator==(const Rect&, const Rect&) = default;
    friend auto operator<=>(const Rect&, const Rect&) = default;
};

/// Ordered sequence of rectangle shapes (leftmost factor first).
using RectangleSeq = std::vector<Rect>;

/// Total number of boxes over all rectangles.
inline long total_area(const RectangleSeq& shape) {
    long area = 0;
    for (const Rect& r : shape) area += static_cast<long>(r.height) * r.width;
    return area;
}

inline void validate_shape(const RectangleSeq& shape, int rank) {
    if (rank < 1) throw invalid_argument("rank must be >= 1");
    for (const Rect& r : shape) {
        if (r.height < 1 || r.width < 1)
            throw invalid_argument("rectangle dimensions must be positive");
        if (r.height > rank + 1)
            throw invalid_argument("rectangle height exceeds alphabet size");
    }
}

/// 1-indexed (row, col) coordinate inside a tableau.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// A weight expressed in the fundamental-weight basis, together with the
/// total box count needed to pin down its canonical ambient representative.
struct Weight {
    int rank = 0;                       ///< number of fundamental weights
    std::vector<long> fundamental;      ///< coefficients c_1..c_rank
    long total_area = 0;                ///< sum of the ambient entries
    friend bool operator==(const Weight&, const Weight&) = default;
};

/// The unique ambient tuple (x_1,...,x_{rank+1}) with x_i - x_{i+1} equal to
/// the fundamental coefficients and with entries summing to total_area.
inline std::vector<long> canonical_ambient(const Weight& w) {
    const int n = w.rank;
    if (static_cast<int>(w.fundamental.size()) != n)
        throw invalid_argument("fundamental coefficient count mismatch");
    std::vector<long> x(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) x[i] = x[i + 1] + w.fundamental[i];
    const long sum = std::accumulate(x.begin(), x.end(), 0L);
    const long rem = w.total_area - sum;
    if (rem % (n + 1) != 0)
        throw invalid_argument("weight has no ambient representative of this area");
    const long shift = rem / (n + 1);
    for (long& e : x) e += shift;
    return x;
}

/// Inverse of canonical_ambient: ambient tuple -> fundamental coefficients.
inline Weight weight_from_ambient(const std::vector<long>& ambient) {
    if (ambient.empty()) throw invalid_argument("ambient weight must be nonempty");
    Weight w;
    w.rank = static_cast<int>(ambient.size()) - 1;
    w.fundamental.resize(w.rank);
    for (int a = 0; a < w.rank; ++a) w.fundamental[a] = ambient[a] - ambient[a + 1];
    w.total_area = std::accumulate(ambient.begin(), ambient.end(), 0L);
    return w;
}

/// One step of the cyclic rotation that promotion induces on ambient weights:
/// (x_1,...,x_{n+1}) -> (x_{n+1}, x_1, ..., x_n).
inline std::vector<long> rotate_ambient(const std::vector<long>& x) {
    if (x.empty()) return x;
    std::vector<long> out(x.size());
    out[0] = x.back();
    for (std::size_t i = 1; i < x.size(); ++i) out[i] = x[i - 1];
    return out;
}

}  // namespace pathrc
