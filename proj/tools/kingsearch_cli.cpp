// kingsearch: command-line front end.
//
//   gen     seeded random tournament fixture
//   run     algorithm-versus-oracle trials as CSV or JSON
//   exact   exact worst-case inquiry count for tiny n, optional strategy tree
//   serve   line protocol oracle on stdin/stdout
//   table   lower-bound table
//   replay  check a strategy tree or a transcript

#include <kingsearch/kingsearch.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace ks = kingsearch;

namespace {

struct Options {
    std::size_t n = 5;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::string algorithm = "mod-certified";
    std::string oracle = "adversary";
    std::string format = "csv";
    std::string order = "lexicographic";
    std::string task = "mod-found";
    std::string out;
    std::string tournament;
    std::string tree;
    std::string transcript;
    bool allow_n6 = false;
    bool no_memo = false;
    unsigned threads = 1;
};

/// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

ks::Tournament load_tournament(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tournament fixture '" + path + "'");
    return ks::read_tournament(in);
}

template <class T, class Parse>
T parse_or_throw(const std::string& s, Parse parse, const char* what) {
    if (auto v = parse(s)) return *v;
    throw std::invalid_argument(std::string("unknown ") + what + " '" + s + "'");
}

ks::ExperimentConfig make_config(const Options& o) {
    ks::ExperimentConfig cfg;
    cfg.n = o.n;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.algorithm = parse_or_throw<ks::AlgorithmKind>(o.algorithm, ks::parse_algorithm, "algorithm");
    cfg.oracle = parse_or_throw<ks::OracleKind>(o.oracle, ks::parse_oracle, "oracle");
    cfg.format = parse_or_throw<ks::OutputFormat>(o.format, ks::parse_format, "format");
    cfg.order = parse_or_throw<ks::QueryOrder>(o.order, ks::parse_query_order, "query order");
    if (cfg.oracle == ks::OracleKind::static_file) {
        if (o.tournament.empty()) throw std::invalid_argument("--oracle static-file needs --tournament");
        cfg.fixture = load_tournament(o.tournament);
    }
    return cfg;
}

int cmd_gen(const Options& o) {
    Sink sink(o.out);
    ks::write_tournament(sink.stream(), ks::generate_random_tournament(o.n, o.seed));
    return 0;
}

int cmd_run(const Options& o) {
    const auto cfg = make_config(o);
    const auto rows = ks::run_experiment(cfg);
    Sink sink(o.out);
    sink.stream() << ks::render_rows(rows, cfg.format);
    return 0;
}

int cmd_exact(const Options& o) {
    const auto task = parse_or_throw<ks::Task>(o.task, ks::parse_task, "task");
    ks::SolverOptions opts;
    opts.allow_n6 = o.allow_n6;
    opts.memoize = !o.no_memo;
    opts.threads = o.threads;
    opts.build_strategy = !o.out.empty();
    const auto result = ks::exact_complexity(o.n, task, opts);
    std::cout << "n=" << o.n << " task=" << ks::to_string(task) << " value=" << result.value
              << " pairs=" << ks::pair_count(o.n);
    if (task == ks::Task::mod_found) std::cout << " lower_bound=" << ks::theorem1_lower_bound(o.n);
    std::cout << " states=" << result.states_evaluated << '\n';
    if (result.strategy) {
        Sink sink(o.out);
        ks::write_strategy(sink.stream(), *result.strategy);
    }
    return 0;
}

int cmd_serve(const Options& o) {
    const auto kind = parse_or_throw<ks::OracleKind>(o.oracle, ks::parse_oracle, "oracle");
    switch (kind) {
        case ks::OracleKind::adversary: ks::serve_adversary(o.n, std::cin, std::cout); break;
        case ks::OracleKind::static_random: ks::serve_static(ks::generate_random_tournament(o.n, o.seed), std::cin, std::cout); break;
        case ks::OracleKind::static_file:
            if (o.tournament.empty()) throw std::invalid_argument("--oracle static-file needs --tournament");
            ks::serve_static(load_tournament(o.tournament), std::cin, std::cout);
            break;
    }
    return 0;
}

int cmd_table(const Options& o) {
    const auto format = parse_or_throw<ks::OutputFormat>(o.format, ks::parse_format, "format");
    Sink sink(o.out);
    sink.stream() << ks::emit_bound_table(o.n, format);
    return 0;
}

int cmd_replay(const Options& o) {
    if (!o.tree.empty()) {
        std::ifstream in(o.tree);
        if (!in) throw std::runtime_error("cannot open strategy '" + o.tree + "'");
        const auto tree = ks::read_strategy(in);
        const auto summary = ks::replay_all(tree);
        std::cout << "tournaments=" << summary.tournaments << " failures=" << summary.failures
                  << " max_inquiries=" << summary.max_inquiries << " value=" << tree.value << '\n';
        return summary.failures == 0 ? 0 : 2;
    }
    if (!o.transcript.empty()) {
        std::ifstream in(o.transcript);
        if (!in) throw std::runtime_error("cannot open transcript '" + o.transcript + "'");
        const auto recorded = ks::read_transcript(in);
        const auto kind = parse_or_throw<ks::OracleKind>(o.oracle, ks::parse_oracle, "oracle");
        auto check = [&](auto& session) {
            std::size_t mismatches = 0;
            for (const auto& r : recorded.records()) {
                if (!(session.query(r.query) == r.answer)) ++mismatches;
            }
            std::cout << "records=" << recorded.q() << " mismatches=" << mismatches << '\n';
            return mismatches == 0 ? 0 : 2;
        };
        if (kind == ks::OracleKind::adversary) {
            ks::OracleSession<ks::AdversaryState> session(ks::make_adversary(o.n));
            return check(session);
        }
        auto session = ks::open_static_session(kind == ks::OracleKind::static_file ? load_tournament(o.tournament)
                                                                                     : ks::generate_random_tournament(o.n, o.seed));
        return check(session);
    }
    throw std::invalid_argument("replay needs --tree or --transcript");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inquiry-cost laboratory for kings and maximum out-degree vertices in tournaments"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Emit a seeded random tournament fixture");
    gen->add_option("--n", o.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", o.seed, "64-bit seed");
    gen->add_option("--out", o.out, "Output file (default stdout)");

    auto* run = app.add_subcommand("run", "Run an algorithm against an oracle");
    run->add_option("--n", o.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    run->add_option("--algorithm", o.algorithm, "zero-indegree | mod-exhaustive | mod-certified");
    run->add_option("--oracle", o.oracle, "static-random | static-file | adversary");
    run->add_option("--seed", o.seed, "64-bit seed");
    run->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
    run->add_option("--format", o.format, "csv | json");
    run->add_option("--order", o.order, "Pair order for mod-certified: lexicographic | round-robin | random");
    run->add_option("--tournament", o.tournament, "Fixture file for the static-file oracle");
    run->add_option("--out", o.out, "Output file (default stdout)");

    auto* exact = app.add_subcommand("exact", "Exact worst-case inquiry count by minimax");
    exact->add_option("--n", o.n, "Vertex count (1..5, 6 with --allow-n6)")->required();
    exact->add_option("--task", o.task, "mod-found | zero-indegree-decided");
    exact->add_option("--out", o.out, "Write the optimal strategy tree here");
    exact->add_option("--threads", o.threads, "Worker threads");
    exact->add_flag("--allow-n6", o.allow_n6, "Permit n = 6 (large memo table)");
    exact->add_flag("--no-memo", o.no_memo, "Disable memoization (small n only)");

    auto* serve = app.add_subcommand("serve", "Serve the inquiry protocol on stdin/stdout");
    serve->add_option("--n", o.n, "Vertex count")->check(CLI::PositiveNumber);
    serve->add_option("--oracle", o.oracle, "static-random | static-file | adversary");
    serve->add_option("--seed", o.seed, "64-bit seed for static-random");
    serve->add_option("--tournament", o.tournament, "Fixture file for the static-file oracle");

    auto* table = app.add_subcommand("table", "Print C(n,2), the lower bound and the gap for n = 1..N");
    table->add_option("--n", o.n, "Largest n")->required()->check(CLI::PositiveNumber);
    table->add_option("--format", o.format, "csv | json");
    table->add_option("--out", o.out, "Output file (default stdout)");

    auto* replay = app.add_subcommand("replay", "Replay a strategy tree or a transcript");
    replay->add_option("--tree", o.tree, "Strategy tree file (checked against every tournament)");
    replay->add_option("--transcript", o.transcript, "Transcript file (checked against an oracle)");
    replay->add_option("--n", o.n, "Vertex count for --transcript");
    replay->add_option("--oracle", o.oracle, "Oracle for --transcript");
    replay->add_option("--seed", o.seed, "Seed for --transcript with static-random");
    replay->add_option("--tournament", o.tournament, "Fixture for --transcript with static-file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(o);
        if (run->parsed()) return cmd_run(o);
        if (exact->parsed()) return cmd_exact(o);
        if (serve->parsed()) return cmd_serve(o);
        if (table->parsed()) return cmd_table(o);
        if (replay->parsed()) return cmd_replay(o);
    } catch (const std::exception& e) {
        std::cerr << "kingsearch: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
