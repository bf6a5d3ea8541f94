#pragma once

// The binary-inquiry protocol. An OracleSession answers edge-orientation
// questions through a backend (a fixed tournament, or the adversary from
// adversary.hpp), counts distinct inquiries and records the transcript.

#include <kingsearch/core.hpp>
#include <kingsearch/errors.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace kingsearch {

/// An inquiry about the pair {u, v}, stored canonically with u < v.
class EdgeQuery {
public:
    EdgeQuery(VertexId u, VertexId v) : u_(u), v_(v) {
        if (!(u < v)) {
            throw std::invalid_argument("edge query needs u < v, got " + std::to_string(u.index) + " " +
                                        std::to_string(v.index));
        }
    }
    EdgeQuery(std::size_t u, std::size_t v) : EdgeQuery(VertexId{u}, VertexId{v}) {}

    /// The query for {a, b} in either order. a != b.
    static EdgeQuery canonical(VertexId a, VertexId b) { return b < a ? EdgeQuery(b, a) : EdgeQuery(a, b); }

    VertexId u() const noexcept { return u_; }
    VertexId v() const noexcept { return v_; }

    friend bool operator==(const EdgeQuery&, const EdgeQuery&) = default;

private:
    VertexId u_;
    VertexId v_;
};

/// What is known about a single pair.
enum class PairState : std::uint8_t { unknown = 0, forward = 1, backward = 2 };  // forward: u -> v for u < v

/// Anything exposing per-vertex known out/in arc counts.
template <class K>
concept DegreeTally = requires(const K k, VertexId v) {
    { k.size() } -> std::convertible_to<std::size_t>;
    { k.d_plus(v) } -> std::convertible_to<std::size_t>;
    { k.d_minus(v) } -> std::convertible_to<std::size_t>;
};

/**
 * Tri-state view of a partially revealed tournament.
 *
 * Keeps per-vertex tallies of arcs known to leave (d_plus) and enter
 * (d_minus) each vertex, plus the number q of decided pairs.
 */
class KnowledgeState {
public:
    explicit KnowledgeState(std::size_t n) : n_(n), pairs_(pair_count(n), PairState::unknown), d_plus_(n, 0), d_minus_(n, 0) {
        if (n < 1) throw std::invalid_argument("knowledge state needs at least one vertex");
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t q() const noexcept { return q_; }
    std::size_t unknown_pairs() const noexcept { return pairs_.size() - q_; }

    std::size_t d_plus(VertexId v) const noexcept { return d_plus_[v.index]; }
    std::size_t d_minus(VertexId v) const noexcept { return d_minus_[v.index]; }
    /// Undecided pairs incident to v.
    std::size_t unknown_at(VertexId v) const noexcept { return n_ - 1 - d_plus_[v.index] - d_minus_[v.index]; }

    PairState state(std::size_t k) const noexcept { return pairs_[k]; }
    PairState state(const EdgeQuery& e) const noexcept { return pairs_[index_of(e)]; }

    std::optional<Arc> known_arc(const EdgeQuery& e) const noexcept {
        switch (state(e)) {
            case PairState::forward: return Arc{e.u(), e.v()};
            case PairState::backward: return Arc{e.v(), e.u()};
            case PairState::unknown: break;
        }
        return std::nullopt;
    }

    std::size_t index_of(const EdgeQuery& e) const noexcept { return pair_index(n_, e.u().index, e.v().index); }

    /// Records an arc on an undecided pair. Recording a pair twice is a
    /// logic error and throws.
    void record(const Arc& a) {
        if (a.from == a.to || a.from.index >= n_ || a.to.index >= n_) {
            throw std::invalid_argument("arc endpoints out of range");
        }
        const auto e = EdgeQuery::canonical(a.from, a.to);
        PairState& s = pairs_[index_of(e)];
        if (s != PairState::unknown) throw std::logic_error("pair already decided");
        s = (a.from == e.u()) ? PairState::forward : PairState::backward;
        ++d_plus_[a.from.index];
        ++d_minus_[a.to.index];
        ++q_;
    }

    /// True iff t agrees with every decided pair.
    bool extended_by(const Tournament& t) const {
        if (t.size() != n_) return false;
        std::size_t k = 0;
        for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = u + 1; v < n_; ++v, ++k) {
                const PairState s = pairs_[k];
                if (s == PairState::unknown) continue;
                if ((s == PairState::forward) != t.beats(VertexId{u}, VertexId{v})) return false;
            }
        }
        return true;
    }

    friend bool operator==(const KnowledgeState&, const KnowledgeState&) = default;

private:
    std::size_t n_;
    std::vector<PairState> pairs_;
    std::vector<std::size_t> d_plus_;
    std::vector<std::size_t> d_minus_;
    std::size_t q_ = 0;
};

struct TranscriptRecord {
    EdgeQuery query;
    Arc answer;

    friend bool operator==(const TranscriptRecord&, const TranscriptRecord&) = default;
};

/// Distinct inquiries in the order they were first asked.
class Transcript {
public:
    void append(const EdgeQuery& e, const Arc& a) {
        const bool matches = (a.from == e.u() && a.to == e.v()) || (a.from == e.v() && a.to == e.u());
        if (!matches) throw std::invalid_argument("answer endpoints do not match the query");
        records_.push_back({e, a});
    }

    const std::vector<TranscriptRecord>& records() const noexcept { return records_; }
    std::size_t q() const noexcept { return records_.size(); }

    friend bool operator==(const Transcript&, const Transcript&) = default;

private:
    std::vector<TranscriptRecord> records_;
};

/// Rebuilds the knowledge state implied by a transcript.
inline KnowledgeState knowledge_from(std::size_t n, const Transcript& t) {
    KnowledgeState k(n);
    for (const auto& r : t.records()) k.record(r.answer);
    return k;
}

/// Anything that can answer inquiries on a fixed vertex set.
template <class B>
concept OracleBackend = requires(B b, const B cb, const EdgeQuery& e) {
    { cb.size() } -> std::convertible_to<std::size_t>;
    { b.answer(e) } -> std::same_as<Arc>;
};

/// Answers every inquiry from a fixed tournament.
class StaticOracle {
public:
    explicit StaticOracle(Tournament t) : t_(std::move(t)) {}

    std::size_t size() const noexcept { return t_.size(); }
    Arc answer(const EdgeQuery& e) const noexcept { return t_.arc_between(e.u(), e.v()); }
    const Tournament& tournament() const noexcept { return t_; }

private:
    Tournament t_;
};

/**
 * Stateful answering side of the inquiry protocol.
 *
 * A pair is charged once: asking it again returns the recorded arc, leaves
 * q untouched and bumps `repeated_queries()`. With a budget, a fresh pair
 * beyond the budget throws BudgetExhausted.
 */
template <OracleBackend Backend>
class OracleSession {
public:
    explicit OracleSession(Backend backend, std::optional<std::size_t> budget = std::nullopt)
        : backend_(std::move(backend)), knowledge_(backend_.size()), budget_(budget) {
        if (budget_ && *budget_ > pair_count(backend_.size())) {
            throw std::invalid_argument("budget exceeds the number of pairs");
        }
    }

    std::size_t size() const noexcept { return backend_.size(); }

    Arc query(const EdgeQuery& e) {
        if (e.v().index >= size()) throw std::out_of_range("query vertex out of range");
        if (auto known = knowledge_.known_arc(e)) {
            ++repeated_;
            return *known;
        }
        if (budget_ && transcript_.q() >= *budget_) {
            throw BudgetExhausted("inquiry budget of " + std::to_string(*budget_) + " exhausted");
        }
        const Arc a = backend_.answer(e);
        transcript_.append(e, a);
        knowledge_.record(a);
        return a;
    }

    Arc query(std::size_t u, std::size_t v) { return query(EdgeQuery(u, v)); }

    std::size_t q() const noexcept { return transcript_.q(); }
    std::size_t repeated_queries() const noexcept { return repeated_; }
    std::optional<std::size_t> budget() const noexcept { return budget_; }
    const Transcript& transcript() const noexcept { return transcript_; }
    const KnowledgeState& knowledge() const noexcept { return knowledge_; }
    Backend& backend() noexcept { return backend_; }
    const Backend& backend() const noexcept { return backend_; }

private:
    Backend backend_;
    KnowledgeState knowledge_;
    Transcript transcript_;
    std::optional<std::size_t> budget_;
    std::size_t repeated_ = 0;
};

template <class Backend>
const KnowledgeState& knowledge(const OracleSession<Backend>& session) noexcept {
    return session.knowledge();
}

inline OracleSession<StaticOracle> open_static_session(Tournament t, std::optional<std::size_t> budget = std::nullopt) {
    return OracleSession<StaticOracle>(StaticOracle(std::move(t)), budget);
}

/// Default cap on unknown pairs for completion enumeration (2^20 completions).
inline constexpr std::size_t default_enumeration_threshold = 20;

/**
 * Calls fn(t) for every tournament t extending k, in order of the binary
 * counter over the unknown pairs (lowest pair index = lowest bit, bit set
 * means u -> v). fn may return bool; returning false stops the walk.
 */
template <class Fn>
void for_each_completion(const KnowledgeState& k, Fn&& fn, std::size_t threshold = default_enumeration_threshold) {
    const std::size_t n = k.size();
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < pair_count(n); ++i) {
        if (k.state(i) == PairState::unknown) open.push_back(i);
    }
    if (open.size() > threshold || open.size() >= 64) {
        throw EnumerationLimitExceeded(std::to_string(open.size()) + " unknown pairs exceed the enumeration threshold of " +
                                       std::to_string(threshold));
    }
    std::vector<bool> forward(pair_count(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << open.size()); ++mask) {
        for (std::size_t i = 0; i < pair_count(n); ++i) forward[i] = k.state(i) == PairState::forward;
        for (std::size_t b = 0; b < open.size(); ++b) forward[open[b]] = ((mask >> b) & 1U) != 0;
        std::size_t idx = 0;
        auto t = Tournament::from_orientation(n, [&](std::size_t, std::size_t) { return forward[idx++]; });
        if constexpr (std::is_same_v<std::invoke_result_t<Fn&, const Tournament&>, bool>) {
            if (!fn(t)) return;
        } else {
            fn(t);
        }
    }
}

inline std::vector<Tournament> completions(const KnowledgeState& k, std::size_t threshold = default_enumeration_threshold) {
    std::vector<Tournament> out;
    for_each_completion(k, [&](const Tournament& t) { out.push_back(t); }, threshold);
    return out;
}

}  // namespace kingsearch
