#pragma once

// Exact worst-case inquiry complexity for tiny n by memoised minimax over
// partial orientations. The searcher picks an open pair (minimising), the
// answerer picks its orientation (maximising), and play ends when the
// task's terminal test fires.
//
// States are keyed by a base-3 number over the lexicographic pairs: digit
// 0 = unknown, 1 = u -> v, 2 = v -> u, pair k weighted by 3^k.

#include <kingsearch/algorithms.hpp>
#include <kingsearch/core.hpp>
#include <kingsearch/errors.hpp>
#include <kingsearch/oracle.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

namespace kingsearch {

enum class Task : std::uint8_t { mod_found, zero_indegree_decided };

constexpr std::string_view to_string(Task t) noexcept {
    return t == Task::mod_found ? "mod-found" : "zero-indegree-decided";
}

inline std::optional<Task> parse_task(std::string_view s) noexcept {
    if (s == "mod-found") return Task::mod_found;
    if (s == "zero-indegree-decided" || s == "zero-indegree") return Task::zero_indegree_decided;
    return std::nullopt;
}

/// Largest n the solver accepts; 6 additionally needs SolverOptions::allow_n6.
inline constexpr std::size_t max_solver_n = 6;

inline std::uint64_t pow3(std::size_t e) noexcept {
    std::uint64_t p = 1;
    while (e-- > 0) p *= 3;
    return p;
}

/// A partial orientation as a base-3 key.
struct GameState {
    std::size_t n = 1;
    std::uint64_t key = 0;

    static GameState from_knowledge(const KnowledgeState& k) {
        GameState g{k.size(), 0};
        std::uint64_t w = 1;
        for (std::size_t i = 0; i < pair_count(k.size()); ++i, w *= 3) g.key += w * static_cast<std::uint64_t>(k.state(i));
        return g;
    }

    KnowledgeState to_knowledge() const {
        KnowledgeState k(n);
        std::uint64_t rest = key;
        for (const auto& [u, v] : lexicographic_pairs(n)) {
            const auto digit = rest % 3;
            rest /= 3;
            if (digit == 1) k.record(Arc{VertexId{u}, VertexId{v}});
            if (digit == 2) k.record(Arc{VertexId{v}, VertexId{u}});
        }
        if (rest != 0) throw std::invalid_argument("game state key out of range");
        return k;
    }

    /// Number of decided pairs.
    std::size_t q() const noexcept {
        std::size_t decided = 0;
        for (std::uint64_t rest = key; rest != 0; rest /= 3) decided += rest % 3 != 0;
        return decided;
    }

    friend bool operator==(const GameState&, const GameState&) = default;
};

/**
 * Whether every completion agrees on the existence of an in-degree-0 vertex.
 *
 * Candidates are vertices with no known in-arc; any two of them have an
 * open pair between them. No candidate: never. A candidate with no open
 * pair is a source: always. Two candidates whose only open pair is the one
 * between them: the winner is a source, always. Anything else can go
 * either way.
 */
template <DegreeTally K>
std::optional<bool> zero_indegree_verdict(const K& k) {
    const std::size_t n = k.size();
    std::size_t candidates = 0;
    bool all_pinned = true;  // every candidate has at most one open pair
    for (std::size_t v = 0; v < n; ++v) {
        if (k.d_minus(VertexId{v}) != 0) continue;
        ++candidates;
        const std::size_t open = n - 1 - k.d_plus(VertexId{v});
        if (open == 0) return true;
        all_pinned = all_pinned && open == 1;
    }
    if (candidates == 0) return false;
    if (candidates == 2 && all_pinned) return true;
    return std::nullopt;
}

/// Lowest-index vertex that has maximum out-degree in every completion.
inline std::optional<VertexId> terminal_mod(const GameState& s) { return certified_mod_vertex(s.to_knowledge()); }

inline std::optional<bool> terminal_zero_indegree(const GameState& s) { return zero_indegree_verdict(s.to_knowledge()); }

/// Vertex for mod-found, existence for zero-indegree-decided.
using TaskAnswer = std::variant<VertexId, bool>;

/// Brute-force terminal tests over every completion; for cross-checking.
inline std::optional<TaskAnswer> terminal_by_enumeration(const KnowledgeState& k, Task task,
                                                         std::size_t threshold = default_enumeration_threshold) {
    if (task == Task::mod_found) {
        for (std::size_t x = 0; x < k.size(); ++x) {
            if (verify_claim_by_enumeration(k, VertexId{x}, threshold) == ClaimVerdict::sound) return VertexId{x};
        }
        return std::nullopt;
    }
    std::optional<bool> agreed;
    bool split = false;
    for_each_completion(k, [&](const Tournament& t) {
        const bool has = zero_indegree_vertex(t).has_value();
        if (agreed && *agreed != has) split = true;
        agreed = has;
        return !split;
    }, threshold);
    if (split) return std::nullopt;
    return TaskAnswer{*agreed};
}

/**
 * Optimal decision tree. nodes[0] is the root; an internal node asks
 * `query` and continues at child[0] on u -> v, child[1] on v -> u.
 */
struct StrategyNode {
    std::uint64_t key = 0;
    std::optional<EdgeQuery> query;
    std::optional<TaskAnswer> answer;
    std::array<std::int32_t, 2> child{-1, -1};
};

struct StrategyTree {
    std::size_t n = 1;
    Task task = Task::mod_found;
    unsigned value = 0;
    std::vector<StrategyNode> nodes;
};

struct GameValue {
    unsigned value = 0;
    std::optional<StrategyTree> strategy;
    std::uint64_t states_evaluated = 0;
};

struct SolverOptions {
    bool memoize = true;
    bool build_strategy = true;
    bool allow_n6 = false;
    /// Worker threads for the root's subtrees (memoised mode only). The
    /// memo table takes idempotent concurrent writes; values do not depend
    /// on the thread count.
    unsigned threads = 1;
};

namespace detail {

class MinimaxSolver {
public:
    /// Incrementally maintained position: degrees, digits and key.
    struct Cursor {
        std::size_t n = 0;
        std::array<std::uint8_t, max_solver_n> out{};
        std::array<std::uint8_t, max_solver_n> in{};
        std::array<std::uint8_t, 15> digit{};
        std::uint64_t key = 0;

        std::size_t size() const noexcept { return n; }
        std::size_t d_plus(VertexId v) const noexcept { return out[v.index]; }
        std::size_t d_minus(VertexId v) const noexcept { return in[v.index]; }
    };

    MinimaxSolver(std::size_t n, Task task, bool memoize) : n_(n), task_(task), pairs_(lexicographic_pairs(n)) {
        weights_.reserve(pairs_.size());
        for (std::size_t k = 0; k < pairs_.size(); ++k) weights_.push_back(pow3(k));
        if (memoize) memo_ = std::vector<std::atomic<std::uint8_t>>(pow3(pairs_.size()));
    }

    Cursor root() const {
        Cursor c;
        c.n = n_;
        return c;
    }

    std::optional<TaskAnswer> terminal(const Cursor& c) const {
        if (task_ == Task::mod_found) {
            if (auto x = certified_mod_vertex(c)) return TaskAnswer{*x};
            return std::nullopt;
        }
        if (auto b = zero_indegree_verdict(c)) return TaskAnswer{*b};
        return std::nullopt;
    }

    void apply(Cursor& c, std::size_t k, std::uint8_t d) const noexcept {
        const auto [u, v] = pairs_[k];
        const std::size_t from = d == 1 ? u : v;
        const std::size_t to = d == 1 ? v : u;
        ++c.out[from];
        ++c.in[to];
        c.digit[k] = d;
        c.key += d * weights_[k];
    }

    void undo(Cursor& c, std::size_t k) const noexcept {
        const std::uint8_t d = c.digit[k];
        const auto [u, v] = pairs_[k];
        --c.out[d == 1 ? u : v];
        --c.in[d == 1 ? v : u];
        c.digit[k] = 0;
        c.key -= d * weights_[k];
    }

    /// Worst case over both answers to pair k, plus one. Stops early once
    /// the result cannot beat `cutoff`.
    unsigned probe(Cursor& c, std::size_t k, unsigned cutoff) {
        unsigned worst = 0;
        for (std::uint8_t d = 1; d <= 2; ++d) {
            apply(c, k, d);
            worst = std::max(worst, value(c));
            undo(c, k);
            if (1 + worst >= cutoff) break;
        }
        return 1 + worst;
    }

    unsigned value(Cursor& c) {
        if (!memo_.empty()) {
            const std::uint8_t cached = memo_[c.key].load(std::memory_order_relaxed);
            if (cached != 0) return cached - 1U;
        }
        evaluated_.fetch_add(1, std::memory_order_relaxed);
        unsigned best = 0;
        if (!terminal(c)) {
            best = static_cast<unsigned>(pairs_.size()) + 1;
            for (std::size_t k = 0; k < pairs_.size() && best > 1; ++k) {
                if (c.digit[k] != 0) continue;
                best = std::min(best, probe(c, k, best));
            }
        }
        if (!memo_.empty()) memo_[c.key].store(static_cast<std::uint8_t>(best + 1), std::memory_order_relaxed);
        return best;
    }

    /// Root value with the root's pairs spread over `threads` workers.
    unsigned parallel_root_value(unsigned threads) {
        Cursor c = root();
        if (terminal(c) || threads <= 1 || memo_.empty()) return value(c);
        const std::size_t pairs = pairs_.size();
        std::vector<unsigned> per_pair(pairs, 0);
        std::atomic<std::size_t> next{0};
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&] {
                    Cursor local = root();
                    for (std::size_t k = next++; k < pairs; k = next++) {
                        per_pair[k] = probe(local, k, static_cast<unsigned>(pairs) + 2);
                    }
                });
            }
        }
        const unsigned best = *std::min_element(per_pair.begin(), per_pair.end());
        memo_[0].store(static_cast<std::uint8_t>(best + 1), std::memory_order_relaxed);
        return best;
    }

    /// Builds the decision tree choosing, at each state, the lowest-index
    /// pair that attains the state's value.
    std::int32_t build(Cursor& c, StrategyTree& tree) {
        const auto idx = static_cast<std::int32_t>(tree.nodes.size());
        tree.nodes.push_back(StrategyNode{c.key, std::nullopt, std::nullopt, {-1, -1}});
        if (auto ans = terminal(c)) {
            tree.nodes[idx].answer = ans;
            return idx;
        }
        const unsigned target = value(c);
        for (std::size_t k = 0; k < pairs_.size(); ++k) {
            if (c.digit[k] != 0 || probe(c, k, target + 1) != target) continue;
            tree.nodes[idx].query = EdgeQuery(pairs_[k].first, pairs_[k].second);
            for (std::uint8_t d = 1; d <= 2; ++d) {
                apply(c, k, d);
                const std::int32_t child = build(c, tree);
                undo(c, k);
                tree.nodes[idx].child[d - 1] = child;
            }
            return idx;
        }
        throw std::logic_error("minimax: no pair attains the state value");
    }

    std::uint64_t evaluated() const noexcept { return evaluated_.load(); }

private:
    std::size_t n_;
    Task task_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::uint64_t> weights_;
    std::vector<std::atomic<std::uint8_t>> memo_;
    std::atomic<std::uint64_t> evaluated_{0};
};

}  // namespace detail

/**
 * Exact worst-case number of inquiries needed to complete `task` on n
 * vertices, optionally with an optimal strategy tree.
 *
 * n <= 5 always; n = 6 needs `allow_n6` (a 3^15-entry memo table).
 */
inline GameValue exact_complexity(std::size_t n, Task task, const SolverOptions& opts = {}) {
    if (n < 1 || n > max_solver_n || (n == max_solver_n && !opts.allow_n6)) {
        throw std::domain_error("exact_complexity: n = " + std::to_string(n) +
                                " is beyond solver capability (1..5, or 6 with allow_n6)");
    }
    if (n == max_solver_n && !opts.memoize) throw std::domain_error("exact_complexity: n = 6 requires memoization");
    detail::MinimaxSolver solver(n, task, opts.memoize);
    GameValue out;
    out.value = solver.parallel_root_value(opts.threads);
    if (opts.build_strategy) {
        StrategyTree tree{n, task, out.value, {}};
        auto c = solver.root();
        solver.build(c, tree);
        out.strategy = std::move(tree);
    }
    out.states_evaluated = solver.evaluated();
    return out;
}

struct ReplayResult {
    TaskAnswer answer;
    std::size_t inquiries = 0;
};

/// Walks the tree against t.
inline ReplayResult replay(const StrategyTree& tree, const Tournament& t) {
    if (t.size() != tree.n) throw std::invalid_argument("replay: tournament size does not match the strategy");
    if (tree.nodes.empty()) throw std::invalid_argument("replay: empty strategy");
    std::size_t at = 0;
    std::size_t asked = 0;
    while (!tree.nodes[at].answer) {
        const StrategyNode& node = tree.nodes[at];
        if (!node.query) throw std::invalid_argument("replay: node has neither query nor answer");
        const bool forward = t.beats(node.query->u(), node.query->v());
        const std::int32_t next = node.child[forward ? 0 : 1];
        if (next < 0) throw std::invalid_argument("replay: missing branch");
        at = static_cast<std::size_t>(next);
        ++asked;
    }
    return {*tree.nodes[at].answer, asked};
}

inline bool answer_correct(Task task, const TaskAnswer& a, const Tournament& t) {
    if (task == Task::mod_found) {
        const auto* x = std::get_if<VertexId>(&a);
        return x != nullptr && x->index < t.size() && is_mod_vertex(t, *x);
    }
    const auto* b = std::get_if<bool>(&a);
    return b != nullptr && *b == zero_indegree_vertex(t).has_value();
}

struct ReplaySummary {
    std::uint64_t tournaments = 0;
    std::uint64_t failures = 0;  ///< wrong answer or more inquiries than the tree's value
    std::size_t max_inquiries = 0;
};

/// Replays the tree against every tournament on tree.n vertices.
inline ReplaySummary replay_all(const StrategyTree& tree) {
    ReplaySummary s;
    for_each_tournament(tree.n, [&](const Tournament& t) {
        const auto r = replay(tree, t);
        ++s.tournaments;
        s.max_inquiries = std::max(s.max_inquiries, r.inquiries);
        if (r.inquiries > tree.value || !answer_correct(tree.task, r.answer, t)) ++s.failures;
    });
    return s;
}

}  // namespace kingsearch
