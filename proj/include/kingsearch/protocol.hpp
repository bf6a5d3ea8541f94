#pragma once

// Line protocol for driving an oracle over standard streams.
//
//   server: n <N>
//   client: ? u v          (u < v)      server: a b      (arc a -> b)
//   client: ! x                          server: ok q=<count>
//                                           or: refuted q=<count>
//                                               <one "a b" line per pair>
//                                               witness <y>
//
// A malformed line gets "err <message>" and changes nothing. The session
// ends after a claim or at end of input.

#include <kingsearch/adversary.hpp>
#include <kingsearch/io.hpp>
#include <kingsearch/oracle.hpp>

#include <istream>
#include <ostream>
#include <string>

namespace kingsearch {

struct ServeResult {
    std::size_t q = 0;
    std::optional<VertexId> claimed;
    bool refuted = false;
    std::size_t errors = 0;
};

/// Serves one session. Claims are judged with refute(), unknown pairs
/// falling back to `fill` (the hidden or static tournament).
template <class Backend>
ServeResult serve_session(OracleSession<Backend>& session, const Tournament& fill, std::istream& in, std::ostream& out) {
    const std::size_t n = session.size();
    ServeResult result;
    out << "n " << n << '\n' << std::flush;
    std::string line;
    auto reject = [&](const std::string& why) {
        ++result.errors;
        out << "err " << why << '\n' << std::flush;
    };
    while (std::getline(in, line)) {
        const auto tok = detail::split_ws(line);
        if (tok.empty()) {
            reject("empty line");
            continue;
        }
        if (tok[0] == "?") {
            if (tok.size() != 3) {
                reject("expected '? u v'");
                continue;
            }
            const auto u = detail::parse_uint(tok[1]);
            const auto v = detail::parse_uint(tok[2]);
            if (!u || !v) {
                reject("vertices must be non-negative integers");
                continue;
            }
            if (*u >= n || *v >= n) {
                reject("vertex out of range");
                continue;
            }
            if (!(*u < *v)) {
                reject("query must satisfy u < v");
                continue;
            }
            const Arc a = session.query(EdgeQuery(*u, *v));
            out << a.from.index << ' ' << a.to.index << '\n' << std::flush;
        } else if (tok[0] == "!") {
            if (tok.size() != 2) {
                reject("expected '! x'");
                continue;
            }
            const auto x = detail::parse_uint(tok[1]);
            if (!x || *x >= n) {
                reject("claimed vertex out of range");
                continue;
            }
            result.q = session.q();
            result.claimed = VertexId{*x};
            if (auto r = refute(session.knowledge(), fill, VertexId{*x})) {
                result.refuted = true;
                out << "refuted q=" << session.q() << '\n';
                for (const Arc& a : r->completion.arcs()) out << a.from.index << ' ' << a.to.index << '\n';
                out << "witness " << r->witness.index << '\n' << std::flush;
            } else {
                out << "ok q=" << session.q() << '\n' << std::flush;
            }
            return result;
        } else {
            reject("unknown command '" + std::string(tok[0]) + "'");
        }
    }
    result.q = session.q();
    return result;
}

inline ServeResult serve_adversary(std::size_t n, std::istream& in, std::ostream& out) {
    OracleSession<AdversaryState> session(make_adversary(n));
    const Tournament hidden = session.backend().hidden();
    return serve_session(session, hidden, in, out);
}

inline ServeResult serve_static(const Tournament& t, std::istream& in, std::ostream& out) {
    auto session = open_static_session(t);
    return serve_session(session, t, in, out);
}

}  // namespace kingsearch
