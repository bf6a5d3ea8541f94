#pragma once

// Query algorithms that run against an OracleSession: the knockout search
// for a vertex of in-degree zero, exhaustive and early-stopping search for a
// maximum out-degree vertex, and soundness checks for claims.

#include <kingsearch/adversary.hpp>
#include <kingsearch/core.hpp>
#include <kingsearch/oracle.hpp>
#include <kingsearch/random.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace kingsearch {

enum class Outcome : std::uint8_t { found, not_found, certified_mod };

constexpr std::string_view to_string(Outcome o) noexcept {
    switch (o) {
        case Outcome::found: return "found";
        case Outcome::not_found: return "not-found";
        case Outcome::certified_mod: return "certified-mod";
    }
    return "?";
}

struct AlgorithmRun {
    std::optional<VertexId> claimed;
    Transcript transcript;
    Outcome outcome;
};

/// Knockout rounds: survivors are paired by ascending index (an odd one out
/// moves on unplayed) and each loser is dropped. Costs exactly n-1
/// inquiries on a fresh session; returns the last survivor.
template <class Backend>
VertexId knockout_survivor(OracleSession<Backend>& session) {
    std::vector<VertexId> alive;
    alive.reserve(session.size());
    for (std::size_t v = 0; v < session.size(); ++v) alive.emplace_back(v);
    while (alive.size() > 1) {
        std::vector<VertexId> next;
        next.reserve(alive.size() / 2 + 1);
        std::size_t i = 0;
        for (; i + 1 < alive.size(); i += 2) {
            next.push_back(session.query(EdgeQuery::canonical(alive[i], alive[i + 1])).from);
        }
        if (i < alive.size()) next.push_back(alive[i]);
        alive = std::move(next);
    }
    return alive.front();
}

/**
 * Decides whether the tournament has a vertex of in-degree zero.
 *
 * Only the knockout survivor z can be such a vertex. z is then checked
 * against every vertex; pairs settled during the knockout are not paid for
 * again and the check stops at the first arc into z. Fewer than 2n
 * inquiries in total.
 */
template <class Backend>
AlgorithmRun find_zero_indegree(OracleSession<Backend>& session) {
    const VertexId z = knockout_survivor(session);
    for (std::size_t w = 0; w < session.size(); ++w) {
        if (w == z.index) continue;
        if (session.query(EdgeQuery::canonical(z, VertexId{w})).to == z) {
            return {std::nullopt, session.transcript(), Outcome::not_found};
        }
    }
    return {z, session.transcript(), Outcome::found};
}

/// Asks every pair in lexicographic order and names the lowest-index
/// vertex of maximum out-degree.
template <class Backend>
AlgorithmRun find_mod_exhaustive(OracleSession<Backend>& session) {
    const std::size_t n = session.size();
    for (const auto& [u, v] : lexicographic_pairs(n)) session.query(u, v);
    const KnowledgeState& k = session.knowledge();
    std::size_t best = 0;
    for (std::size_t v = 1; v < n; ++v) {
        if (k.d_plus(VertexId{v}) > k.d_plus(VertexId{best})) best = v;
    }
    return {VertexId{best}, session.transcript(), Outcome::found};
}

/**
 * Lowest-index x with d_plus(x) >= d_plus(y) + unknown_at(y) for every
 * y != x, if any.
 *
 * Such an x has maximum out-degree in every completion of k. The converse
 * also holds: if the inequality fails for some y, sending every open pair
 * at y out of y and every other open pair at x into x makes y beat x. So
 * this is an exact test, in O(n).
 */
template <DegreeTally K>
std::optional<VertexId> certified_mod_vertex(const K& k) {
    const std::size_t n = k.size();
    if (n == 1) return VertexId{0};
    // potential(y) = d_plus(y) + unknown_at(y): the largest out-degree y can reach.
    auto potential = [&](std::size_t y) { return n - 1 - k.d_minus(VertexId{y}); };
    std::size_t top = 0, top_count = 0, second = 0;
    for (std::size_t y = 0; y < n; ++y) {
        const std::size_t p = potential(y);
        if (top_count == 0 || p > top) {
            if (top_count > 0) second = top;
            top = p;
            top_count = 1;
        } else if (p == top) {
            ++top_count;
        } else if (p > second) {
            second = p;
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        // Best rival of x: the top potential, unless x alone holds it.
        const std::size_t rival = (potential(x) == top && top_count == 1) ? second : top;
        if (k.d_plus(VertexId{x}) >= rival) return VertexId{x};
    }
    return std::nullopt;
}

template <DegreeTally K>
bool mod_certificate_holds(const K& k, VertexId x) {
    const std::size_t n = k.size();
    for (std::size_t y = 0; y < n; ++y) {
        if (y == x.index) continue;
        if (n - 1 - k.d_minus(VertexId{y}) > k.d_plus(x)) return false;
    }
    return true;
}

enum class QueryOrder : std::uint8_t { lexicographic, round_robin, random };

/**
 * A complete ordering of the pairs on n vertices.
 *
 * round_robin lists the rounds of the circle-method schedule (each round a
 * matching); random is a SplitMix64-driven shuffle of the lexicographic list.
 */
inline std::vector<EdgeQuery> make_query_order(std::size_t n, QueryOrder order, std::uint64_t seed = 0) {
    std::vector<EdgeQuery> out;
    out.reserve(pair_count(n));
    switch (order) {
        case QueryOrder::lexicographic:
        case QueryOrder::random:
            for (const auto& [u, v] : lexicographic_pairs(n)) out.emplace_back(u, v);
            if (order == QueryOrder::random) portable_shuffle(out, seed);
            break;
        case QueryOrder::round_robin: {
            const std::size_t m = n % 2 == 0 ? n : n + 1;  // vertex m-1 is a bye when n is odd
            if (m < 2) break;
            const std::size_t ring = m - 1;
            for (std::size_t r = 0; r < ring; ++r) {
                auto add = [&](std::size_t a, std::size_t b) {
                    if (a < n && b < n) out.push_back(EdgeQuery::canonical(VertexId{a}, VertexId{b}));
                };
                add(m - 1, r);
                for (std::size_t i = 1; i < m / 2; ++i) add((r + i) % ring, (r + ring - i) % ring);
            }
            break;
        }
    }
    return out;
}

/**
 * Asks pairs in `order` (already-known pairs are skipped) and stops as soon
 * as some vertex carries the certificate of certified_mod_vertex. The claim
 * is a maximum out-degree vertex in every completion, so it is correct for
 * whatever tournament backs the session.
 *
 * `order` must list every pair; stopping early is what saves inquiries.
 */
template <class Backend>
AlgorithmRun find_mod_certified(OracleSession<Backend>& session, std::span<const EdgeQuery> order) {
    if (order.size() < pair_count(session.size())) {
        throw std::invalid_argument("find_mod_certified: query order does not cover every pair");
    }
    for (const EdgeQuery& e : order) {
        if (auto x = certified_mod_vertex(session.knowledge())) {
            return {x, session.transcript(), Outcome::certified_mod};
        }
        session.query(e);
    }
    if (auto x = certified_mod_vertex(session.knowledge())) {
        return {x, session.transcript(), Outcome::certified_mod};
    }
    throw std::invalid_argument("find_mod_certified: query order does not cover every pair");
}

template <class Backend>
AlgorithmRun find_mod_certified(OracleSession<Backend>& session) {
    const auto order = make_query_order(session.size(), QueryOrder::lexicographic);
    return find_mod_certified(session, std::span<const EdgeQuery>(order));
}

enum class ClaimVerdict : std::uint8_t { sound, refutable };

/// Brute force: sound iff `claimed` is a maximum out-degree vertex in every
/// completion of k. Throws EnumerationLimitExceeded above `threshold`.
inline ClaimVerdict verify_claim_by_enumeration(const KnowledgeState& k, VertexId claimed,
                                                std::size_t threshold = default_enumeration_threshold) {
    bool sound = true;
    for_each_completion(k, [&](const Tournament& t) {
        sound = is_mod_vertex(t, claimed);
        return sound;
    }, threshold);
    return sound ? ClaimVerdict::sound : ClaimVerdict::refutable;
}

/**
 * Sound iff `claimed` is a maximum out-degree vertex in every completion.
 *
 * The degree certificate settles sound claims. Otherwise the answer comes
 * from enumeration when at most `threshold` pairs are open, and from an
 * explicit extremal completion above that.
 */
inline ClaimVerdict verify_claim(const KnowledgeState& k, VertexId claimed,
                                 std::size_t threshold = default_enumeration_threshold) {
    if (claimed.index >= k.size()) throw std::out_of_range("verify_claim: claimed vertex out of range");
    if (mod_certificate_holds(k, claimed)) return ClaimVerdict::sound;
    if (k.unknown_pairs() <= threshold) return verify_claim_by_enumeration(k, claimed, threshold);
    // Fill is irrelevant to the extremal completion's verdict; any tournament will do.
    if (refute(k, make_transitive(k.size()), claimed, 0)) return ClaimVerdict::refutable;
    throw std::logic_error("verify_claim: certificate failed but no completion refutes the claim");
}

}  // namespace kingsearch
