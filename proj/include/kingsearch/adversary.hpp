#pragma once

// Lower-bound adversary for maximum out-degree search.
//
// During play the adversary answers strictly from a hidden regular (odd n)
// or almost regular (even n) tournament. Once the searcher names a vertex,
// `refute` looks for a way to orient the still-unasked pairs so that the
// named vertex is strictly out-degree-dominated.

#include <kingsearch/core.hpp>
#include <kingsearch/oracle.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace kingsearch {

/// Worst-case inquiry lower bound for finding a maximum out-degree vertex:
/// (n-1)^2/2 for odd n, (n-1)(n-2)/2 for even n.
constexpr std::uint64_t theorem1_lower_bound(std::uint64_t n) noexcept {
    if (n < 2) return 0;
    return n % 2 == 1 ? (n - 1) * (n - 1) / 2 : (n - 1) * (n - 2) / 2;
}

/**
 * Degree thresholds below which a claim can be refuted against the hidden
 * (almost) regular tournament.
 *
 * claimed_out: if d_plus(claimed) < claimed_out, starving the claimed vertex
 * refutes. witness_in: if d_minus(y) < witness_in for some y != claimed,
 * boosting y refutes.
 */
struct ParityThresholds {
    std::size_t claimed_out;
    std::size_t witness_in;
};

constexpr ParityThresholds parity_thresholds(std::size_t n) noexcept {
    if (n % 2 == 1) return {(n - 1) / 2, (n - 1) / 2};
    return {n / 2, n / 2 - 1};
}

/// How a refutation was found, in the order `refute` tries them.
enum class RefutationRoute : std::uint8_t {
    starve_claimed,  ///< unknown pairs at the claimed vertex point into it
    boost_witness,   ///< unknown pairs at one other vertex point out of it
    extremal,        ///< both of the above at once, for one witness
    enumeration,     ///< brute force over all completions
};

struct Refutation {
    Tournament completion;
    VertexId witness;  ///< lowest-index vertex out-dominating the claim in `completion`
    RefutationRoute route;
};

namespace detail {

/// Completion of k in which each unknown pair (u, v) is oriented by
/// `u_beats_v(u, v)`.
template <class Orient>
Tournament complete_with(const KnowledgeState& k, Orient&& u_beats_v) {
    std::size_t idx = 0;
    return Tournament::from_orientation(k.size(), [&](std::size_t u, std::size_t v) {
        switch (k.state(idx++)) {
            case PairState::forward: return true;
            case PairState::backward: return false;
            case PairState::unknown: break;
        }
        return static_cast<bool>(u_beats_v(u, v));
    });
}

inline std::optional<VertexId> lowest_dominator(const Tournament& t, VertexId claimed) {
    const std::size_t dc = t.out_degree(claimed);
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (t.out_degree(VertexId{v}) > dc) return VertexId{v};
    }
    return std::nullopt;
}

}  // namespace detail

/// Completion sending every unknown pair at `claimed` into it; other
/// unknown pairs follow `fill`.
inline Tournament starve_completion(const KnowledgeState& k, const Tournament& fill, VertexId claimed) {
    const std::size_t x = claimed.index;
    return detail::complete_with(k, [&](std::size_t u, std::size_t v) {
        if (u == x) return false;
        if (v == x) return true;
        return fill.beats(VertexId{u}, VertexId{v});
    });
}

/// Completion sending every unknown pair at `witness` out of it; other
/// unknown pairs follow `fill`.
inline Tournament boost_completion(const KnowledgeState& k, const Tournament& fill, VertexId witness) {
    const std::size_t y = witness.index;
    return detail::complete_with(k, [&](std::size_t u, std::size_t v) {
        if (u == y) return true;
        if (v == y) return false;
        return fill.beats(VertexId{u}, VertexId{v});
    });
}

/// Boost `witness` and starve `claimed` at once; the pair between them, if
/// open, goes witness -> claimed. Maximises out(witness) - out(claimed)
/// over all completions.
inline Tournament extremal_completion(const KnowledgeState& k, const Tournament& fill, VertexId claimed, VertexId witness) {
    const std::size_t x = claimed.index;
    const std::size_t y = witness.index;
    return detail::complete_with(k, [&](std::size_t u, std::size_t v) {
        if (u == y) return true;
        if (v == y) return false;
        if (u == x) return false;
        if (v == x) return true;
        return fill.beats(VertexId{u}, VertexId{v});
    });
}

/**
 * Tries to orient the unknown pairs of k so that `claimed` is not a maximum
 * out-degree vertex. Pairs not forced by a strategy follow `fill`.
 *
 * Attempts, in order: starve the claimed vertex (when its known out-degree
 * is below the parity threshold); boost each y != claimed in ascending
 * order (when d_minus(y) is below the threshold); the extremal completion
 * for each y that could still overtake the claim; and finally, when at most
 * `threshold` pairs are unknown, every completion. Returns the first
 * completion that works. An empty result means the claim holds in every
 * completion.
 *
 * Pure: neither k nor fill is modified.
 */
inline std::optional<Refutation> refute(const KnowledgeState& k, const Tournament& fill, VertexId claimed,
                                        std::size_t threshold = default_enumeration_threshold) {
    const std::size_t n = k.size();
    if (fill.size() != n) throw std::invalid_argument("refute: fill tournament has the wrong size");
    if (claimed.index >= n) throw std::out_of_range("refute: claimed vertex out of range");
    const auto thr = parity_thresholds(n);

    auto attempt = [&](Tournament t, RefutationRoute route) -> std::optional<Refutation> {
        if (auto w = detail::lowest_dominator(t, claimed)) return Refutation{std::move(t), *w, route};
        return std::nullopt;
    };

    if (k.d_plus(claimed) < thr.claimed_out) {
        if (auto r = attempt(starve_completion(k, fill, claimed), RefutationRoute::starve_claimed)) return r;
    }
    for (std::size_t y = 0; y < n; ++y) {
        if (y == claimed.index || k.d_minus(VertexId{y}) >= thr.witness_in) continue;
        if (auto r = attempt(boost_completion(k, fill, VertexId{y}), RefutationRoute::boost_witness)) return r;
    }
    for (std::size_t y = 0; y < n; ++y) {
        if (y == claimed.index) continue;
        if (k.d_plus(VertexId{y}) + k.unknown_at(VertexId{y}) <= k.d_plus(claimed)) continue;
        if (auto r = attempt(extremal_completion(k, fill, claimed, VertexId{y}), RefutationRoute::extremal)) return r;
    }
    if (k.unknown_pairs() <= threshold) {
        std::optional<Refutation> found;
        for_each_completion(k, [&](const Tournament& t) {
            found = attempt(t, RefutationRoute::enumeration);
            return !found.has_value();
        }, threshold);
        return found;
    }
    return std::nullopt;
}

/**
 * The adversary: a hidden tournament plus a mirror of what it has revealed.
 *
 * make_adversary picks the rotational regular tournament for odd n and the
 * almost regular one for even n. Any other hidden tournament may be
 * plugged in through the constructor for experiments; refutations are
 * still validated, only the lower-bound guarantee is lost.
 */
class AdversaryState {
public:
    explicit AdversaryState(Tournament hidden) : hidden_(std::move(hidden)), knowledge_(hidden_.size()) {}

    std::size_t size() const noexcept { return hidden_.size(); }

    Arc answer(const EdgeQuery& e) {
        if (e.v().index >= size()) throw std::out_of_range("query vertex out of range");
        if (auto known = knowledge_.known_arc(e)) return *known;
        const Arc a = hidden_.arc_between(e.u(), e.v());
        knowledge_.record(a);
        return a;
    }

    std::optional<Refutation> refute(VertexId claimed, std::size_t threshold = default_enumeration_threshold) const {
        return kingsearch::refute(knowledge_, hidden_, claimed, threshold);
    }

    const Tournament& hidden() const noexcept { return hidden_; }
    const KnowledgeState& knowledge() const noexcept { return knowledge_; }

private:
    Tournament hidden_;
    KnowledgeState knowledge_;
};

static_assert(OracleBackend<AdversaryState>);

inline AdversaryState make_adversary(std::size_t n) {
    if (n < 1) throw std::invalid_argument("make_adversary: n must be positive");
    return AdversaryState(n % 2 == 1 ? make_rotational_regular(n) : make_almost_regular(n));
}

inline std::optional<Refutation> refute(const AdversaryState& adv, VertexId claimed) { return adv.refute(claimed); }

struct WitnessDeficit {
    VertexId vertex;
    std::size_t d_minus;
    bool deficient;  ///< d_minus below the witness threshold
};

/// Where a claim stands against the parity thresholds.
struct DeficitAudit {
    VertexId claimed;
    std::size_t claimed_out;
    std::size_t claimed_out_threshold;
    bool claimed_deficient;
    std::size_t witness_in_threshold;
    std::vector<WitnessDeficit> others;
    bool any_witness_deficient;
    /// Sum of d_minus(z) over z != claimed. Never exceeds q; for a claim that
    /// survives the adversary it is at least theorem1_lower_bound(n).
    std::size_t in_degree_sum;
};

inline DeficitAudit degree_deficit_audit(const KnowledgeState& k, VertexId claimed) {
    const auto thr = parity_thresholds(k.size());
    DeficitAudit a{claimed, k.d_plus(claimed), thr.claimed_out, k.d_plus(claimed) < thr.claimed_out, thr.witness_in, {}, false, 0};
    for (std::size_t z = 0; z < k.size(); ++z) {
        if (z == claimed.index) continue;
        const std::size_t din = k.d_minus(VertexId{z});
        const bool deficient = din < thr.witness_in;
        a.others.push_back({VertexId{z}, din, deficient});
        a.any_witness_deficient = a.any_witness_deficient || deficient;
        a.in_degree_sum += din;
    }
    return a;
}

}  // namespace kingsearch
