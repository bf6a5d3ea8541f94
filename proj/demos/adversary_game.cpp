// Certified maximum out-degree search against the lower-bound adversary,
// for a range of n and three pair orders.

#include <kingsearch/kingsearch.hpp>

#include <iostream>

int main() {
    using namespace kingsearch;
    std::cout << "n,order,q,bound,pairs\n";
    for (std::size_t n = 2; n <= 15; ++n) {
        for (auto order : {QueryOrder::lexicographic, QueryOrder::round_robin, QueryOrder::random}) {
            OracleSession<AdversaryState> session(make_adversary(n));
            const auto pairs = make_query_order(n, order, 7);
            const auto run = find_mod_certified(session, std::span<const EdgeQuery>(pairs));
            std::cout << n << ',' << to_string(order) << ',' << run.transcript.q() << ',' << theorem1_lower_bound(n) << ','
                      << pair_count(n) << '\n';
        }
    }
}
