// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Checks use small local oracles where the library would
// otherwise be grading itself.

#include <kingsearch/kingsearch.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace kingsearch;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

using Matrix = std::vector<std::vector<bool>>;

Matrix adjacency(const Tournament& t) {
    Matrix m(t.size(), std::vector<bool>(t.size(), false));
    for (const Arc& a : t.arcs()) m[a.from.index][a.to.index] = true;
    return m;
}

std::vector<std::size_t> out_degrees(const Matrix& m) {
    std::vector<std::size_t> d(m.size(), 0);
    for (std::size_t u = 0; u < m.size(); ++u) {
        for (bool b : m[u]) d[u] += b ? 1 : 0;
    }
    return d;
}

bool reference_king(const Matrix& m, std::size_t x) {
    for (std::size_t z = 0; z < m.size(); ++z) {
        if (z == x || m[x][z]) continue;
        bool two = false;
        for (std::size_t y = 0; y < m.size() && !two; ++y) two = m[x][y] && m[y][z];
        if (!two) return false;
    }
    return true;
}

std::optional<std::size_t> reference_source(const Matrix& m) {
    const auto d = out_degrees(m);
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (d[v] == m.size() - 1) return v;
    }
    return std::nullopt;
}

bool reference_mod(const Matrix& m, std::size_t x) {
    const auto d = out_degrees(m);
    for (std::size_t v : d) {
        if (v > d[x]) return false;
    }
    return true;
}

/// Independent check that r refutes `claimed` on top of k.
bool valid_refutation(const KnowledgeState& k, VertexId claimed, const Refutation& r) {
    const std::size_t n = k.size();
    if (r.completion.size() != n) return false;
    const Matrix m = adjacency(r.completion);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (m[u][v] == m[v][u]) return false;
            if (auto known = k.known_arc(EdgeQuery(u, v))) {
                if (!m[known->from.index][known->to.index]) return false;
            }
        }
    }
    const auto d = out_degrees(m);
    return r.witness.index < n && d[r.witness.index] > d[claimed.index];
}

template <class F>
void for_each_small(std::size_t n, F&& f) {
    for_each_tournament(n, [&](const Tournament& t) {
        f(t);
        return true;
    });
}

Verdict bound_formulas() {
    Verdict v;
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        std::uint64_t want = 0;
        if (n >= 2) want = n % 2 == 1 ? (n - 1) * (n - 1) / 2 : (n - 1) * (n - 2) / 2;
        if (theorem1_lower_bound(n) != want) v.fail("mismatch at n=" + std::to_string(n));
    }
    if (theorem1_lower_bound(3) != 2 || theorem1_lower_bound(4) != 3 || theorem1_lower_bound(5) != 8) v.fail("spot values");
    v.detail = v.pass ? "n<=1000, spot 3->2 4->3 5->8" : v.detail;
    return v;
}

Verdict zero_indegree_cost() {
    Verdict v;
    std::size_t checked = 0;
    auto check = [&](const Tournament& t) {
        const std::size_t n = t.size();
        auto s = open_static_session(t);
        const auto run = find_zero_indegree(s);
        const auto want = reference_source(adjacency(t));
        const bool claimed_ok = run.claimed ? want && run.claimed->index == *want : !want;
        if (run.transcript.q() >= 2 * n || !claimed_ok) v.fail("n=" + std::to_string(n) + " q=" + std::to_string(run.transcript.q()));
        ++checked;
    };
    for (std::size_t n = 1; n <= 6; ++n) for_each_small(n, check);
    for (std::size_t n : {50, 101}) {
        for (std::uint64_t i = 0; i < 1000; ++i) check(generate_random_tournament(n, trial_seed(n, i)));
    }
    if (v.pass) v.detail = std::to_string(checked) + " tournaments";
    return v;
}

Verdict adversary_soundness() {
    Verdict v;
    std::size_t prefixes = 0;
    auto check_prefix = [&](const AdversaryState& adv) {
        ++prefixes;
        for (std::size_t x = 0; x < adv.size(); ++x) {
            const auto r = adv.refute(VertexId{x});
            if (!r || !valid_refutation(adv.knowledge(), VertexId{x}, *r)) {
                v.fail("n=" + std::to_string(adv.size()) + " q=" + std::to_string(adv.knowledge().q()) + " x=" + std::to_string(x));
            }
        }
    };
    for (std::size_t n : {3, 4}) {
        const auto pairs = lexicographic_pairs(n);
        const std::size_t bound = theorem1_lower_bound(n);
        std::vector<std::size_t> seq;
        std::vector<bool> used(pairs.size(), false);
        std::function<void()> walk = [&] {
            auto adv = make_adversary(n);
            for (std::size_t i : seq) adv.answer(EdgeQuery(pairs[i].first, pairs[i].second));
            check_prefix(adv);
            if (seq.size() + 1 >= bound) return;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (used[i]) continue;
                used[i] = true;
                seq.push_back(i);
                walk();
                seq.pop_back();
                used[i] = false;
            }
        };
        walk();
    }
    std::size_t runs = 0;
    for (std::size_t n : {5, 6}) {
        const std::size_t bound = theorem1_lower_bound(n);
        for (std::uint64_t i = 0; i < 10000; ++i) {
            auto order = lexicographic_pairs(n);
            portable_shuffle(order, trial_seed(1000 + n, i));
            auto adv = make_adversary(n);
            check_prefix(adv);
            for (std::size_t q = 1; q < bound; ++q) {
                adv.answer(EdgeQuery(order[q - 1].first, order[q - 1].second));
                check_prefix(adv);
            }
            ++runs;
        }
    }
    if (v.pass) v.detail = std::to_string(prefixes) + " prefixes, " + std::to_string(runs) + " sampled runs";
    return v;
}

bool replay_against_all(const StrategyTree& tree, std::size_t& max_q) {
    bool ok = true;
    max_q = 0;
    for_each_small(tree.n, [&](const Tournament& t) {
        const auto r = replay(tree, t);
        max_q = std::max(max_q, r.inquiries);
        const Matrix m = adjacency(t);
        if (tree.task == Task::mod_found) {
            const auto* x = std::get_if<VertexId>(&r.answer);
            ok = ok && x && reference_mod(m, x->index);
        } else {
            const auto* b = std::get_if<bool>(&r.answer);
            ok = ok && b && *b == reference_source(m).has_value();
        }
    });
    return ok;
}

Verdict mod_sandwich() {
    Verdict v;
    std::ostringstream detail;
    for (std::size_t n : {3, 4, 5}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto g = exact_complexity(n, Task::mod_found);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::size_t max_q = 0;
        const bool replay_ok = g.strategy && replay_against_all(*g.strategy, max_q);
        detail << " n=" << n << ":" << g.value << " in [" << theorem1_lower_bound(n) << "," << pair_count(n) << "]";
        if (g.value < theorem1_lower_bound(n) || g.value > pair_count(n)) v.fail("n=" + std::to_string(n) + " outside sandwich");
        if (!replay_ok || max_q != g.value) v.fail("n=" + std::to_string(n) + " replay failed");
        if (n == 5 && secs >= 60) v.fail("n=5 took " + std::to_string(secs) + "s");
    }
    if (v.pass) v.detail = detail.str().substr(1);
    return v;
}

Verdict zero_indegree_exact() {
    Verdict v;
    std::ostringstream detail;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t n : {3, 4, 5}) {
        const auto g = exact_complexity(n, Task::zero_indegree_decided);
        std::size_t max_q = 0;
        const bool replay_ok = g.strategy && replay_against_all(*g.strategy, max_q);
        detail << " n=" << n << ":" << g.value << "<" << 2 * n;
        if (g.value >= 2 * n) v.fail("n=" + std::to_string(n) + " value " + std::to_string(g.value));
        if (!replay_ok) v.fail("n=" + std::to_string(n) + " replay failed");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 60) v.fail("took " + std::to_string(secs) + "s");
    if (v.pass) v.detail = detail.str().substr(1);
    return v;
}

Verdict structural_properties() {
    Verdict v;
    std::size_t checked = 0;
    auto check = [&](const Tournament& t) {
        const Matrix m = adjacency(t);
        const std::size_t n = t.size();
        std::size_t king_count = 0;
        for (std::size_t x = 0; x < n; ++x) {
            const bool king = reference_king(m, x);
            king_count += king ? 1 : 0;
            if (king != is_king(t, VertexId{x})) v.fail("is_king disagrees at n=" + std::to_string(n));
            if (reference_mod(m, x) && !king) v.fail("MOD vertex that is not a king");
        }
        if (king_count == 0) v.fail("no king");
        if (!reference_source(m) && king_count < 3) v.fail("no source but fewer than 3 kings");
        ++checked;
    };
    for (std::size_t n = 1; n <= 6; ++n) for_each_small(n, check);
    SplitMix64 rng(0x5eed);
    for (int i = 0; i < 10000; ++i) check(generate_random_tournament(1 + rng.below(200), rng()));
    if (v.pass) v.detail = std::to_string(checked) + " tournaments";
    return v;
}

Verdict algorithm_correctness() {
    Verdict v;
    std::size_t checked = 0;
    auto check = [&](const Tournament& t) {
        const Matrix m = adjacency(t);
        auto s1 = open_static_session(t);
        const auto ex = find_mod_exhaustive(s1);
        auto s2 = open_static_session(t);
        const auto ce = find_mod_certified(s2);
        if (!ex.claimed || !reference_mod(m, ex.claimed->index)) v.fail("exhaustive wrong at n=" + std::to_string(t.size()));
        if (!ce.claimed || !reference_mod(m, ce.claimed->index)) v.fail("certified wrong at n=" + std::to_string(t.size()));
        if (ce.transcript.q() > pair_count(t.size())) v.fail("certified over budget");
        ++checked;
    };
    for (std::size_t n = 1; n <= 6; ++n) for_each_small(n, check);
    SplitMix64 rng(0xa1c0);
    for (int i = 0; i < 1000; ++i) check(generate_random_tournament(1 + rng.below(100), rng()));
    std::size_t q4 = 0;
    for (std::size_t n = 2; n <= 100; ++n) {
        auto s = open_static_session(make_transitive(n));
        const auto run = find_mod_certified(s);
        if (run.transcript.q() != n - 1 || run.claimed != VertexId{0}) v.fail("transitive n=" + std::to_string(n));
        if (n == 4) q4 = run.transcript.q();
    }
    if (q4 > 5) v.fail("transitive n=4 used more than 5");
    if (v.pass) v.detail = std::to_string(checked) + " tournaments, transitive n=4 q=" + std::to_string(q4);
    return v;
}

Verdict determinism_and_interop() {
    Verdict v;
    for (auto alg : {AlgorithmKind::zero_indegree, AlgorithmKind::mod_exhaustive, AlgorithmKind::mod_certified}) {
        for (auto oracle : {OracleKind::static_random, OracleKind::adversary}) {
            ExperimentConfig cfg;
            cfg.n = 17;
            cfg.algorithm = alg;
            cfg.oracle = oracle;
            cfg.seed = 20240;
            cfg.trials = 25;
            cfg.order = QueryOrder::random;
            const auto a = render_rows(run_experiment(cfg), OutputFormat::csv);
            const auto b = render_rows(run_experiment(cfg), OutputFormat::csv);
            if (a != b) v.fail("CSV differs for " + std::string(to_string(alg)));
        }
    }
    std::istringstream in("? 0 1\n! 0\n");
    std::ostringstream out;
    serve_adversary(3, in, out);
    if (out.str() != "n 3\n0 1\nrefuted q=1\n0 1\n2 0\n2 1\nwitness 2\n") v.fail("stdio exchange: " + out.str());
    if (v.pass) v.detail = "6 configs reproduced, n=3 exchange matches";
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {"AC1 bound formulas", bound_formulas},
        {"AC2 zero in-degree search below 2n", zero_indegree_cost},
        {"AC3 adversary soundness", adversary_soundness},
        {"AC4 exact MOD complexity sandwich", mod_sandwich},
        {"AC5 exact zero in-degree complexity", zero_indegree_exact},
        {"AC6 king structure", structural_properties},
        {"AC7 MOD algorithm correctness", algorithm_correctness},
        {"AC8 determinism and stdio interop", determinism_and_interop},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %s (%.2fs) %s\n", v.pass ? "PASS" : "FAIL", c.name, secs, v.detail.c_str());
        std::fflush(stdout);
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
