// Knockout search for a source on a transitive and a random tournament,
// printing each transcript.

#include <kingsearch/kingsearch.hpp>

#include <iostream>

int main() {
    using namespace kingsearch;
    for (const auto& t : {make_transitive(8), generate_random_tournament(8, 42)}) {
        auto session = open_static_session(t);
        const auto run = find_zero_indegree(session);
        std::cout << "outcome " << to_string(run.outcome);
        if (run.claimed) std::cout << " vertex " << run.claimed->index;
        std::cout << '\n';
        write_transcript(std::cout, run.transcript);
    }
}
