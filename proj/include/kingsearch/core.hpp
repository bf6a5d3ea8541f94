#pragma once

// Tournaments on n labeled vertices: representation, explicit constructions
// and the structural predicates (degrees, kings, maximum out-degree
// vertices, zero in-degree).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kingsearch {

/// Index of a vertex in [0, n).
struct VertexId {
    std::size_t index = 0;

    constexpr VertexId() = default;
    constexpr explicit VertexId(std::size_t i) : index(i) {}

    friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// Directed arc `from -> to`.
struct Arc {
    VertexId from;
    VertexId to;

    friend constexpr bool operator==(const Arc&, const Arc&) = default;
};

/// Number of unordered pairs on n vertices.
constexpr std::uint64_t pair_count(std::uint64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Position of the pair {u, v}, u < v, in lexicographic pair order.
constexpr std::size_t pair_index(std::size_t n, std::size_t u, std::size_t v) noexcept {
    // Pairs starting at rows 0..u-1 precede row u.
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

/// All pairs (u, v) with u < v in lexicographic order.
inline std::vector<std::pair<std::size_t, std::size_t>> lexicographic_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(pair_count(n));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

/**
 * A complete orientation of the edges on n >= 1 vertices.
 *
 * Stored as one out-neighbourhood bit row per vertex, `words_per_row()`
 * 64-bit words wide, so arc lookup is O(1) and degree counts are
 * O(n / 64). Values are immutable once built; construct them through
 * `from_orientation` or the named constructors below.
 */
class Tournament {
public:
    /// Builds the tournament in which, for every pair u < v, `u_beats_v(u, v)`
    /// decides whether the arc is u -> v (true) or v -> u (false).
    template <class Orientation>
    static Tournament from_orientation(std::size_t n, Orientation&& u_beats_v) {
        Tournament t(n);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (std::invoke(u_beats_v, u, v)) {
                    t.set_bit(u, v);
                } else {
                    t.set_bit(v, u);
                }
            }
        }
        return t;
    }

    /// Builds from one bit per lexicographic pair; bit k set means the k-th
    /// pair (u, v) is oriented u -> v. Requires C(n,2) <= 64.
    static Tournament from_pair_mask(std::size_t n, std::uint64_t mask) {
        if (pair_count(n) > 64) {
            throw std::invalid_argument("from_pair_mask: more than 64 pairs");
        }
        std::size_t k = 0;
        return from_orientation(n, [&](std::size_t, std::size_t) { return ((mask >> k++) & 1U) != 0; });
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return words_; }

    /// True iff the arc u -> v is present. u != v.
    bool beats(VertexId u, VertexId v) const noexcept {
        return ((rows_[u.index * words_ + v.index / 64] >> (v.index % 64)) & 1U) != 0;
    }

    /// The arc between u and v, whichever direction it points.
    Arc arc_between(VertexId u, VertexId v) const noexcept {
        return beats(u, v) ? Arc{u, v} : Arc{v, u};
    }

    std::size_t out_degree(VertexId v) const noexcept {
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_; ++w) {
            d += static_cast<std::size_t>(std::popcount(rows_[v.index * words_ + w]));
        }
        return d;
    }

    std::size_t in_degree(VertexId v) const noexcept { return n_ - 1 - out_degree(v); }

    std::vector<std::size_t> out_degrees() const {
        std::vector<std::size_t> d(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            d[v] = out_degree(VertexId{v});
        }
        return d;
    }

    /// Out-neighbourhood of v as a bit row.
    const std::uint64_t* row(VertexId v) const noexcept { return rows_.data() + v.index * words_; }

    /// Every arc, listed per pair in lexicographic pair order.
    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        out.reserve(pair_count(n_));
        for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = u + 1; v < n_; ++v) {
                out.push_back(arc_between(VertexId{u}, VertexId{v}));
            }
        }
        return out;
    }

    friend bool operator==(const Tournament&, const Tournament&) = default;

private:
    explicit Tournament(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {
        if (n < 1) {
            throw std::invalid_argument("tournament needs at least one vertex");
        }
    }

    void set_bit(std::size_t from, std::size_t to) noexcept { rows_[from * words_ + to / 64] |= std::uint64_t{1} << (to % 64); }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

inline std::size_t out_degree(const Tournament& t, VertexId v) { return t.out_degree(v); }
inline std::size_t in_degree(const Tournament& t, VertexId v) { return t.in_degree(v); }

/// Vertex i beats i+1, ..., i+(n-1)/2 (mod n). Every out-degree is (n-1)/2.
inline Tournament make_rotational_regular(std::size_t n) {
    if (n < 1 || n % 2 == 0) {
        throw std::invalid_argument("make_rotational_regular: n must be odd and positive, got " + std::to_string(n));
    }
    const std::size_t half = (n - 1) / 2;
    return Tournament::from_orientation(n, [&](std::size_t u, std::size_t v) { return v - u <= half; });
}

/// Vertex i beats i+1, ..., i+n/2-1 (mod n); the diametral pair {i, i+n/2}
/// is oriented i -> i+n/2. Vertices 0..n/2-1 get out-degree n/2, the rest
/// n/2-1.
inline Tournament make_almost_regular(std::size_t n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("make_almost_regular: n must be even and >= 2, got " + std::to_string(n));
    }
    const std::size_t half = n / 2;
    // For u < v the distance v - u lies in [1, n-1]: below half means u beats v
    // rotationally, exactly half is the diametral pair (u is the lower index).
    return Tournament::from_orientation(n, [&](std::size_t u, std::size_t v) { return v - u <= half; });
}

/// Vertex u beats v whenever u < v.
inline Tournament make_transitive(std::size_t n) {
    return Tournament::from_orientation(n, [](std::size_t, std::size_t) { return true; });
}

inline bool is_regular(const Tournament& t) {
    if (t.size() % 2 == 0) return false;
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (t.out_degree(VertexId{v}) != (t.size() - 1) / 2) return false;
    }
    return true;
}

inline bool is_almost_regular(const Tournament& t) {
    const std::size_t n = t.size();
    if (n % 2 != 0) return false;
    std::size_t high = 0;
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t d = t.out_degree(VertexId{v});
        if (d == n / 2) {
            ++high;
        } else if (d + 1 != n / 2) {
            return false;
        }
    }
    return high == n / 2;
}

/// True iff every other vertex is reachable from x along a directed path of
/// length at most 2.
inline bool is_king(const Tournament& t, VertexId x) {
    const std::size_t words = t.words_per_row();
    std::vector<std::uint64_t> reach(t.row(x), t.row(x) + words);
    reach[x.index / 64] |= std::uint64_t{1} << (x.index % 64);
    for (std::size_t w = 0; w < t.size(); ++w) {
        if (w != x.index && t.beats(x, VertexId{w})) {
            const std::uint64_t* r = t.row(VertexId{w});
            for (std::size_t i = 0; i < words; ++i) reach[i] |= r[i];
        }
    }
    std::size_t covered = 0;
    for (std::uint64_t word : reach) covered += static_cast<std::size_t>(std::popcount(word));
    return covered == t.size();
}

inline std::vector<VertexId> kings(const Tournament& t) {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (is_king(t, VertexId{v})) out.push_back(VertexId{v});
    }
    return out;
}

/// Every vertex attaining the maximum out-degree, in ascending order.
inline std::vector<VertexId> mod_vertices(const Tournament& t) {
    const auto degrees = t.out_degrees();
    std::size_t best = 0;
    for (std::size_t d : degrees) best = std::max(best, d);
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < degrees.size(); ++v) {
        if (degrees[v] == best) out.push_back(VertexId{v});
    }
    return out;
}

inline bool is_mod_vertex(const Tournament& t, VertexId x) {
    const std::size_t dx = t.out_degree(x);
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (t.out_degree(VertexId{v}) > dx) return false;
    }
    return true;
}

/// The vertex of in-degree zero, if there is one (there is at most one).
inline std::optional<VertexId> zero_indegree_vertex(const Tournament& t) {
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (t.out_degree(VertexId{v}) == t.size() - 1) return VertexId{v};
    }
    return std::nullopt;
}

/// Calls fn(t) for each of the 2^C(n,2) tournaments on n vertices.
/// Requires C(n,2) < 64.
template <class Fn>
void for_each_tournament(std::size_t n, Fn&& fn) {
    const std::uint64_t pairs = pair_count(n);
    if (pairs >= 64) throw std::invalid_argument("for_each_tournament: too many pairs");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        fn(Tournament::from_pair_mask(n, mask));
    }
}

}  // namespace kingsearch
