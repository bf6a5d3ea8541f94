#pragma once

// Seeded algorithm-versus-oracle experiments and the bound table, with CSV
// and JSON rendering. Output is a pure function of the configuration.

#include <kingsearch/adversary.hpp>
#include <kingsearch/algorithms.hpp>
#include <kingsearch/core.hpp>
#include <kingsearch/oracle.hpp>
#include <kingsearch/random.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace kingsearch {

enum class AlgorithmKind : std::uint8_t { zero_indegree, mod_exhaustive, mod_certified };
enum class OracleKind : std::uint8_t { static_random, static_file, adversary };
enum class OutputFormat : std::uint8_t { csv, json };

constexpr std::string_view to_string(AlgorithmKind a) noexcept {
    switch (a) {
        case AlgorithmKind::zero_indegree: return "zero-indegree";
        case AlgorithmKind::mod_exhaustive: return "mod-exhaustive";
        case AlgorithmKind::mod_certified: return "mod-certified";
    }
    return "?";
}

constexpr std::string_view to_string(OracleKind o) noexcept {
    switch (o) {
        case OracleKind::static_random: return "static-random";
        case OracleKind::static_file: return "static-file";
        case OracleKind::adversary: return "adversary";
    }
    return "?";
}

constexpr std::string_view to_string(QueryOrder o) noexcept {
    switch (o) {
        case QueryOrder::lexicographic: return "lexicographic";
        case QueryOrder::round_robin: return "round-robin";
        case QueryOrder::random: return "random";
    }
    return "?";
}

inline std::optional<AlgorithmKind> parse_algorithm(std::string_view s) noexcept {
    for (auto a : {AlgorithmKind::zero_indegree, AlgorithmKind::mod_exhaustive, AlgorithmKind::mod_certified}) {
        if (s == to_string(a)) return a;
    }
    return std::nullopt;
}

inline std::optional<OracleKind> parse_oracle(std::string_view s) noexcept {
    for (auto o : {OracleKind::static_random, OracleKind::static_file, OracleKind::adversary}) {
        if (s == to_string(o)) return o;
    }
    return std::nullopt;
}

inline std::optional<QueryOrder> parse_query_order(std::string_view s) noexcept {
    for (auto o : {QueryOrder::lexicographic, QueryOrder::round_robin, QueryOrder::random}) {
        if (s == to_string(o)) return o;
    }
    return std::nullopt;
}

inline std::optional<OutputFormat> parse_format(std::string_view s) noexcept {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    return std::nullopt;
}

struct ExperimentConfig {
    std::size_t n = 1;
    AlgorithmKind algorithm = AlgorithmKind::mod_certified;
    OracleKind oracle = OracleKind::static_random;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    OutputFormat format = OutputFormat::csv;
    /// Pair order for mod-certified; `random` reshuffles per trial.
    QueryOrder order = QueryOrder::lexicographic;
    /// Required for static-file; its size must equal n.
    std::optional<Tournament> fixture;
};

struct ResultRow {
    std::size_t n = 0;
    AlgorithmKind algorithm{};
    OracleKind oracle{};
    std::uint64_t seed = 0;  ///< the trial's own seed, see trial_seed
    std::size_t q = 0;
    std::uint64_t bound = 0;
    std::optional<VertexId> claimed;
    bool correct = false;

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

namespace detail {

template <class Backend>
AlgorithmRun run_algorithm(OracleSession<Backend>& s, const ExperimentConfig& cfg, std::uint64_t seed) {
    switch (cfg.algorithm) {
        case AlgorithmKind::zero_indegree: return find_zero_indegree(s);
        case AlgorithmKind::mod_exhaustive: return find_mod_exhaustive(s);
        case AlgorithmKind::mod_certified: {
            const auto order = make_query_order(cfg.n, cfg.order, seed);
            return find_mod_certified(s, std::span<const EdgeQuery>(order));
        }
    }
    throw std::logic_error("unknown algorithm");
}

/// Correctness of a finished run. `truth` is the tournament that answered
/// (the hidden one for the adversary). Against the adversary a maximum
/// out-degree claim must also survive every completion of what was asked.
inline bool judge(const ExperimentConfig& cfg, const AlgorithmRun& run, const Tournament& truth, const KnowledgeState& k) {
    if (cfg.algorithm == AlgorithmKind::zero_indegree) {
        return run.claimed == zero_indegree_vertex(truth);
    }
    if (!run.claimed || !is_mod_vertex(truth, *run.claimed)) return false;
    if (cfg.oracle == OracleKind::adversary) return verify_claim(k, *run.claimed) == ClaimVerdict::sound;
    return true;
}

}  // namespace detail

inline void validate(const ExperimentConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be at least 1");
    if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (cfg.oracle == OracleKind::static_file) {
        if (!cfg.fixture) throw std::invalid_argument("static-file oracle needs a tournament fixture");
        if (cfg.fixture->size() != cfg.n) {
            throw std::invalid_argument("fixture has " + std::to_string(cfg.fixture->size()) + " vertices but n = " +
                                        std::to_string(cfg.n));
        }
    }
}

/// One row per trial, in trial order.
inline std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<ResultRow> rows;
    rows.reserve(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t s = trial_seed(cfg.seed, t);
        ResultRow row{cfg.n, cfg.algorithm, cfg.oracle, s, 0, theorem1_lower_bound(cfg.n), std::nullopt, false};
        if (cfg.oracle == OracleKind::adversary) {
            OracleSession<AdversaryState> session(make_adversary(cfg.n));
            const auto run = detail::run_algorithm(session, cfg, s);
            row.q = run.transcript.q();
            row.claimed = run.claimed;
            row.correct = detail::judge(cfg, run, session.backend().hidden(), session.knowledge());
        } else {
            Tournament truth = cfg.oracle == OracleKind::static_file ? *cfg.fixture : generate_random_tournament(cfg.n, s);
            auto session = open_static_session(truth);
            const auto run = detail::run_algorithm(session, cfg, s);
            row.q = run.transcript.q();
            row.claimed = run.claimed;
            row.correct = detail::judge(cfg, run, truth, session.knowledge());
        }
        rows.push_back(row);
    }
    return rows;
}

inline void write_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
    os << "n,algorithm,oracle,seed,q,bound,claimed,correct\n";
    for (const auto& r : rows) {
        os << r.n << ',' << to_string(r.algorithm) << ',' << to_string(r.oracle) << ',' << r.seed << ',' << r.q << ','
           << r.bound << ',';
        if (r.claimed) os << r.claimed->index;
        os << ',' << (r.correct ? "true" : "false") << '\n';
    }
}

inline void write_json(std::ostream& os, const std::vector<ResultRow>& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["n"] = r.n;
        j["algorithm"] = to_string(r.algorithm);
        j["oracle"] = to_string(r.oracle);
        j["seed"] = r.seed;
        j["q"] = r.q;
        j["bound"] = r.bound;
        j["claimed"] = r.claimed ? nlohmann::ordered_json(r.claimed->index) : nlohmann::ordered_json(nullptr);
        j["correct"] = r.correct;
        arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
}

inline std::string render_rows(const std::vector<ResultRow>& rows, OutputFormat f) {
    std::ostringstream os;
    if (f == OutputFormat::csv) {
        write_csv(os, rows);
    } else {
        write_json(os, rows);
    }
    return os.str();
}

struct BoundRow {
    std::uint64_t n;
    std::uint64_t pairs;
    std::uint64_t bound;
    std::uint64_t gap;  ///< pairs - bound: (n-1)/2 for odd n, n-1 for even n

    friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

inline std::vector<BoundRow> bound_table(std::uint64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("bound table needs n_max >= 1");
    std::vector<BoundRow> rows;
    rows.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const auto pairs = pair_count(n);
        const auto bound = theorem1_lower_bound(n);
        rows.push_back({n, pairs, bound, pairs - bound});
    }
    return rows;
}

inline std::string emit_bound_table(std::uint64_t n_max, OutputFormat f) {
    std::ostringstream os;
    const auto rows = bound_table(n_max);
    if (f == OutputFormat::csv) {
        os << "n,pairs,bound,gap\n";
        for (const auto& r : rows) os << r.n << ',' << r.pairs << ',' << r.bound << ',' << r.gap << '\n';
    } else {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back({{"n", r.n}, {"pairs", r.pairs}, {"bound", r.bound}, {"gap", r.gap}});
        os << arr.dump(2) << '\n';
    }
    return os.str();
}

}  // namespace kingsearch
