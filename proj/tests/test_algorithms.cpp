#include <kingsearch/adversary.hpp>
#include <kingsearch/algorithms.hpp>
#include <kingsearch/random.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace kingsearch;

namespace {

bool contains(const std::vector<VertexId>& vs, VertexId v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

}  // namespace

TEST(ZeroIndegree, TransitiveFour) {
    auto s = open_static_session(make_transitive(4));
    const auto run = find_zero_indegree(s);
    EXPECT_EQ(run.outcome, Outcome::found);
    EXPECT_EQ(run.claimed, VertexId{0});
    // (0,1), (2,3), (0,2), then only (0,3) is new.
    EXPECT_EQ(run.transcript.q(), 4U);
    EXPECT_LT(run.transcript.q(), 8U);
    EXPECT_EQ(run.transcript.records()[2].query, EdgeQuery(0, 2));
}

TEST(ZeroIndegree, ThreeCycle) {
    auto s = open_static_session(make_rotational_regular(3));
    const auto run = find_zero_indegree(s);
    EXPECT_EQ(run.outcome, Outcome::not_found);
    EXPECT_FALSE(run.claimed.has_value());
    EXPECT_EQ(run.transcript.q(), 3U);
}

TEST(ZeroIndegree, SingleVertex) {
    auto s = open_static_session(make_transitive(1));
    const auto run = find_zero_indegree(s);
    EXPECT_EQ(run.outcome, Outcome::found);
    EXPECT_EQ(run.claimed, VertexId{0});
    EXPECT_EQ(run.transcript.q(), 0U);
}

TEST(ZeroIndegree, KnockoutCostsExactlyNMinusOne) {
    for (std::size_t n = 1; n <= 64; ++n) {
        auto s = open_static_session(generate_random_tournament(n, n * 31));
        knockout_survivor(s);
        ASSERT_EQ(s.q(), n - 1);
        ASSERT_EQ(s.repeated_queries(), 0U);
    }
}

TEST(ZeroIndegree, ExhaustiveUpToSix) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_tournament(n, [&](const Tournament& t) {
            auto s = open_static_session(t);
            const auto run = find_zero_indegree(s);
            ASSERT_LT(run.transcript.q(), 2 * n);
            ASSERT_EQ(run.claimed, zero_indegree_vertex(t));
            ASSERT_EQ(run.outcome == Outcome::found, run.claimed.has_value());
        });
    }
}

TEST(ZeroIndegree, RandomLarge) {
    for (std::size_t n : {50, 101}) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto t = generate_random_tournament(n, trial_seed(seed, n));
            auto s = open_static_session(t);
            const auto run = find_zero_indegree(s);
            ASSERT_LT(run.transcript.q(), 2 * n);
            ASSERT_EQ(run.claimed, zero_indegree_vertex(t));
        }
        // A planted source is always found.
        auto s = open_static_session(make_transitive(n));
        EXPECT_EQ(find_zero_indegree(s).claimed, VertexId{0});
    }
}

TEST(ModExhaustive, Examples) {
    auto s5 = open_static_session(generate_random_tournament(5, 3));
    EXPECT_EQ(find_mod_exhaustive(s5).transcript.q(), 10U);
    auto t4 = open_static_session(make_transitive(4));
    EXPECT_EQ(find_mod_exhaustive(t4).claimed, VertexId{0});
    OracleSession<AdversaryState> adv(make_adversary(5));
    const auto run = find_mod_exhaustive(adv);
    EXPECT_EQ(run.claimed, VertexId{0});
    EXPECT_EQ(run.transcript.q(), 10U);
}

TEST(ModExhaustive, BudgetExhausted) {
    auto s = open_static_session(make_transitive(4), 5);
    EXPECT_THROW(find_mod_exhaustive(s), BudgetExhausted);
}

TEST(Certificate, MatchesPerVertexDefinition) {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + rng.below(9);
        const auto t = generate_random_tournament(n, rng());
        KnowledgeState k(n);
        for (const auto& [u, v] : lexicographic_pairs(n)) {
            if (rng.below(3) != 0) k.record(t.arc_between(VertexId{u}, VertexId{v}));
        }
        std::optional<VertexId> first;
        for (std::size_t x = 0; x < n && !first; ++x) {
            bool ok = true;
            for (std::size_t y = 0; y < n; ++y) {
                if (y != x && k.d_plus(VertexId{y}) + k.unknown_at(VertexId{y}) > k.d_plus(VertexId{x})) ok = false;
            }
            if (ok) first = VertexId{x};
        }
        ASSERT_EQ(certified_mod_vertex(k), first);
        if (first) { ASSERT_TRUE(mod_certificate_holds(k, *first)); }
    }
}

TEST(ModCertified, TransitiveSourceFirstStopsAfterNMinusOne) {
    for (std::size_t n = 2; n <= 40; ++n) {
        auto s = open_static_session(make_transitive(n));
        const auto run = find_mod_certified(s);
        ASSERT_EQ(run.claimed, VertexId{0});
        ASSERT_EQ(run.outcome, Outcome::certified_mod);
        ASSERT_EQ(run.transcript.q(), n - 1) << "n=" << n;
    }
    auto s4 = open_static_session(make_transitive(4));
    EXPECT_LE(find_mod_certified(s4).transcript.q(), 5U);
}

TEST(ModCertified, TwoVertices) {
    auto s = open_static_session(Tournament::from_pair_mask(2, 0));  // 1 -> 0
    const auto run = find_mod_certified(s);
    EXPECT_EQ(run.transcript.q(), 1U);
    EXPECT_EQ(run.claimed, VertexId{1});
}

TEST(ModCertified, SingleVertexNeedsNothing) {
    auto s = open_static_session(make_transitive(1));
    const auto run = find_mod_certified(s);
    EXPECT_EQ(run.transcript.q(), 0U);
    EXPECT_EQ(run.claimed, VertexId{0});
}

TEST(ModCertified, ExhaustiveCorrectnessUpToSix) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_tournament(n, [&](const Tournament& t) {
            auto s = open_static_session(t);
            const auto run = find_mod_certified(s);
            ASSERT_TRUE(run.claimed.has_value());
            ASSERT_TRUE(contains(mod_vertices(t), *run.claimed));
            ASSERT_LE(run.transcript.q(), pair_count(n));
            ASSERT_EQ(verify_claim(s.knowledge(), *run.claimed), ClaimVerdict::sound);
            auto ex = open_static_session(t);
            ASSERT_TRUE(contains(mod_vertices(t), *find_mod_exhaustive(ex).claimed));
        });
    }
}

TEST(ModCertified, RandomLargerAllOrders) {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng.below(100);
        const auto t = generate_random_tournament(n, rng());
        for (auto order : {QueryOrder::lexicographic, QueryOrder::round_robin, QueryOrder::random}) {
            auto s = open_static_session(t);
            const auto pairs = make_query_order(n, order, rng());
            const auto run = find_mod_certified(s, std::span<const EdgeQuery>(pairs));
            ASSERT_TRUE(contains(mod_vertices(t), *run.claimed));
            ASSERT_LE(run.transcript.q(), pair_count(n));
        }
    }
}

TEST(ModCertified, AdversaryForcesTheBoundEveryOrderSmall) {
    for (std::size_t n = 2; n <= 4; ++n) {
        auto pairs = make_query_order(n, QueryOrder::lexicographic);
        std::vector<std::size_t> perm(pairs.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<EdgeQuery> order;
            for (std::size_t i : perm) order.push_back(pairs[i]);
            OracleSession<AdversaryState> s(make_adversary(n));
            const auto run = find_mod_certified(s, std::span<const EdgeQuery>(order));
            ASSERT_GE(run.transcript.q(), theorem1_lower_bound(n));
            ASSERT_FALSE(s.backend().refute(*run.claimed).has_value());
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST(ModCertified, AdversaryForcesTheBoundSampledOrders) {
    for (std::size_t n = 5; n <= 15; ++n) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            for (auto kind : {QueryOrder::lexicographic, QueryOrder::round_robin, QueryOrder::random}) {
                OracleSession<AdversaryState> s(make_adversary(n));
                const auto order = make_query_order(n, kind, seed);
                const auto run = find_mod_certified(s, std::span<const EdgeQuery>(order));
                ASSERT_GE(run.transcript.q(), theorem1_lower_bound(n)) << "n=" << n;
                ASSERT_LE(run.transcript.q(), pair_count(n));
            }
        }
    }
}

TEST(QueryOrders, EachCoversEveryPairOnce) {
    for (std::size_t n = 1; n <= 25; ++n) {
        for (auto kind : {QueryOrder::lexicographic, QueryOrder::round_robin, QueryOrder::random}) {
            const auto order = make_query_order(n, kind, n);
            ASSERT_EQ(order.size(), pair_count(n));
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (const auto& e : order) seen.emplace(e.u().index, e.v().index);
            ASSERT_EQ(seen.size(), pair_count(n));
        }
    }
}

TEST(QueryOrders, RoundRobinRoundsAreMatchings) {
    const std::size_t n = 8;
    const auto order = make_query_order(n, QueryOrder::round_robin);
    for (std::size_t r = 0; r < n - 1; ++r) {
        std::set<std::size_t> used;
        for (std::size_t i = 0; i < n / 2; ++i) {
            const auto& e = order[r * (n / 2) + i];
            ASSERT_TRUE(used.insert(e.u().index).second);
            ASSERT_TRUE(used.insert(e.v().index).second);
        }
    }
}

TEST(VerifyClaim, Examples) {
    KnowledgeState full(4);
    const auto t = make_almost_regular(4);
    for (const Arc& a : t.arcs()) full.record(a);
    EXPECT_EQ(verify_claim(full, VertexId{0}), ClaimVerdict::sound);
    EXPECT_EQ(verify_claim(full, VertexId{3}), ClaimVerdict::refutable);

    KnowledgeState one(3);
    one.record({VertexId{0}, VertexId{1}});
    EXPECT_EQ(verify_claim(one, VertexId{0}), ClaimVerdict::refutable);

    KnowledgeState chain(3);
    chain.record({VertexId{0}, VertexId{1}});
    chain.record({VertexId{1}, VertexId{2}});
    EXPECT_EQ(verify_claim(chain, VertexId{0}), ClaimVerdict::sound);
    EXPECT_EQ(verify_claim_by_enumeration(chain, VertexId{0}), ClaimVerdict::sound);
}

TEST(VerifyClaim, AgreesWithEnumeration) {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const auto t = generate_random_tournament(n, rng());
        KnowledgeState k(n);
        for (const auto& [u, v] : lexicographic_pairs(n)) {
            if (rng.below(4) != 0) k.record(t.arc_between(VertexId{u}, VertexId{v}));
        }
        const VertexId x{rng.below(n)};
        ASSERT_EQ(verify_claim(k, x), verify_claim_by_enumeration(k, x));
        ASSERT_EQ(verify_claim(k, x, 0), verify_claim_by_enumeration(k, x));  // certificate and extremal path only
    }
}

TEST(VerifyClaim, AboveThresholdUsesExtremalCompletion) {
    KnowledgeState k(8);  // 28 open pairs
    EXPECT_EQ(verify_claim(k, VertexId{0}), ClaimVerdict::refutable);
    EXPECT_THROW(verify_claim_by_enumeration(k, VertexId{0}), EnumerationLimitExceeded);
}
