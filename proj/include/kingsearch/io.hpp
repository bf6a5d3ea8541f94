#pragma once

// Line-oriented text formats.
//
//   tournament:  "n <N>", then one "u v" line (u -> v) per pair, pairs in
//                lexicographic order.
//   transcript:  one "u v -> a b" line per inquiry in query order, then
//                "q=<count>".
//   strategy:    "strategy n <N> task <task> value <V>", then one line per
//                node in preorder, indented two spaces per depth:
//                "<key> : query <u> <v> | <branch>" or
//                "<key> : answer <x|yes|no> | <branch>", where <branch> is
//                "root" or the arc "a b" answered on the way in.

#include <kingsearch/core.hpp>
#include <kingsearch/errors.hpp>
#include <kingsearch/exact.hpp>
#include <kingsearch/oracle.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace kingsearch {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

/// Strict unsigned decimal; no sign, no trailing junk.
inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
    std::uint64_t v = 0;
    if (s.empty()) return std::nullopt;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

inline std::uint64_t expect_uint(std::string_view s, std::size_t line, const char* what) {
    auto v = parse_uint(s);
    if (!v) throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(s) + "'");
    return *v;
}

}  // namespace detail

inline void write_tournament(std::ostream& os, const Tournament& t) {
    os << "n " << t.size() << '\n';
    for (const Arc& a : t.arcs()) os << a.from.index << ' ' << a.to.index << '\n';
}

inline std::string format_tournament(const Tournament& t) {
    std::ostringstream os;
    write_tournament(os, t);
    return os.str();
}

/// Reads the fixture format. Arc lines may come in any order but must
/// cover each pair exactly once.
inline Tournament read_tournament(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t n = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto tok = detail::split_ws(line);
        if (tok.empty()) continue;
        if (tok.size() != 2 || tok[0] != "n") throw ParseError(lineno, "expected header 'n <N>'");
        n = detail::expect_uint(tok[1], lineno, "vertex count");
        if (n < 1) throw ParseError(lineno, "vertex count must be positive");
        break;
    }
    if (n == 0) throw ParseError(lineno, "missing header 'n <N>'");
    KnowledgeState k(n);
    while (std::getline(is, line)) {
        ++lineno;
        const auto tok = detail::split_ws(line);
        if (tok.empty()) continue;
        if (tok.size() != 2) throw ParseError(lineno, "expected arc 'u v'");
        const auto u = detail::expect_uint(tok[0], lineno, "vertex");
        const auto v = detail::expect_uint(tok[1], lineno, "vertex");
        if (u >= n || v >= n || u == v) throw ParseError(lineno, "arc endpoints out of range");
        const auto e = EdgeQuery::canonical(VertexId{u}, VertexId{v});
        if (k.state(e) != PairState::unknown) throw ParseError(lineno, "pair listed twice");
        k.record(Arc{VertexId{u}, VertexId{v}});
    }
    if (k.unknown_pairs() != 0) {
        throw ParseError(lineno, std::to_string(k.unknown_pairs()) + " pair(s) missing from the fixture");
    }
    std::size_t idx = 0;
    return Tournament::from_orientation(n, [&](std::size_t, std::size_t) { return k.state(idx++) == PairState::forward; });
}

inline Tournament parse_tournament(const std::string& text) {
    std::istringstream is(text);
    return read_tournament(is);
}

inline void write_transcript(std::ostream& os, const Transcript& t) {
    for (const auto& r : t.records()) {
        os << r.query.u().index << ' ' << r.query.v().index << " -> " << r.answer.from.index << ' ' << r.answer.to.index
           << '\n';
    }
    os << "q=" << t.q() << '\n';
}

inline std::string format_transcript(const Transcript& t) {
    std::ostringstream os;
    write_transcript(os, t);
    return os.str();
}

inline Transcript read_transcript(std::istream& is) {
    Transcript t;
    std::string line;
    std::size_t lineno = 0;
    std::vector<EdgeQuery> seen;
    while (std::getline(is, line)) {
        ++lineno;
        const auto tok = detail::split_ws(line);
        if (tok.empty()) continue;
        if (tok.size() == 1 && tok[0].starts_with("q=")) {
            const auto q = detail::expect_uint(tok[0].substr(2), lineno, "count");
            if (q != t.q()) throw ParseError(lineno, "q=" + std::to_string(q) + " but " + std::to_string(t.q()) + " records");
            return t;
        }
        if (tok.size() != 5 || tok[2] != "->") throw ParseError(lineno, "expected 'u v -> a b'");
        const auto u = detail::expect_uint(tok[0], lineno, "vertex");
        const auto v = detail::expect_uint(tok[1], lineno, "vertex");
        const auto a = detail::expect_uint(tok[3], lineno, "vertex");
        const auto b = detail::expect_uint(tok[4], lineno, "vertex");
        if (!(u < v)) throw ParseError(lineno, "query must satisfy u < v");
        const EdgeQuery e(u, v);
        for (const auto& s : seen) {
            if (s == e) throw ParseError(lineno, "pair queried twice");
        }
        seen.push_back(e);
        try {
            t.append(e, Arc{VertexId{a}, VertexId{b}});
        } catch (const std::invalid_argument& ex) {
            throw ParseError(lineno, ex.what());
        }
    }
    throw ParseError(lineno, "missing terminating 'q=<count>' line");
}

inline Transcript parse_transcript(const std::string& text) {
    std::istringstream is(text);
    return read_transcript(is);
}

namespace detail {

inline std::string answer_text(const TaskAnswer& a) {
    if (const auto* x = std::get_if<VertexId>(&a)) return std::to_string(x->index);
    return std::get<bool>(a) ? "yes" : "no";
}

inline void write_node(std::ostream& os, const StrategyTree& tree, std::int32_t at, std::size_t depth,
                       const std::string& branch) {
    const StrategyNode& node = tree.nodes[static_cast<std::size_t>(at)];
    os << std::string(2 * depth, ' ') << node.key << " : ";
    if (node.answer) {
        os << "answer " << answer_text(*node.answer) << " | " << branch << '\n';
        return;
    }
    const auto& q = *node.query;
    os << "query " << q.u().index << ' ' << q.v().index << " | " << branch << '\n';
    write_node(os, tree, node.child[0], depth + 1, std::to_string(q.u().index) + " " + std::to_string(q.v().index));
    write_node(os, tree, node.child[1], depth + 1, std::to_string(q.v().index) + " " + std::to_string(q.u().index));
}

}  // namespace detail

inline void write_strategy(std::ostream& os, const StrategyTree& tree) {
    os << "strategy n " << tree.n << " task " << to_string(tree.task) << " value " << tree.value << '\n';
    if (!tree.nodes.empty()) detail::write_node(os, tree, 0, 0, "root");
}

inline std::string format_strategy(const StrategyTree& tree) {
    std::ostringstream os;
    write_strategy(os, tree);
    return os.str();
}

/// Parses the strategy format, checking indentation, branch labels and that
/// each child's key extends its parent's by the answered pair.
inline StrategyTree read_strategy(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    StrategyTree tree;
    bool header = false;
    while (!header && std::getline(is, line)) {
        ++lineno;
        const auto tok = detail::split_ws(line);
        if (tok.empty()) continue;
        if (tok.size() != 7 || tok[0] != "strategy" || tok[1] != "n" || tok[3] != "task" || tok[5] != "value") {
            throw ParseError(lineno, "expected 'strategy n <N> task <task> value <V>'");
        }
        tree.n = detail::expect_uint(tok[2], lineno, "vertex count");
        if (tree.n < 1 || tree.n > max_solver_n) throw ParseError(lineno, "vertex count out of range");
        const auto task = parse_task(tok[4]);
        if (!task) throw ParseError(lineno, "unknown task '" + std::string(tok[4]) + "'");
        tree.task = *task;
        tree.value = static_cast<unsigned>(detail::expect_uint(tok[6], lineno, "value"));
        header = true;
    }
    if (!header) throw ParseError(lineno, "missing strategy header");

    struct Open {
        std::int32_t node;
        std::size_t filled;  // children attached so far
    };
    std::vector<Open> stack;
    bool done = false;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t indent = line.find_first_not_of(' ');
        if (indent == std::string::npos) continue;
        if (done) throw ParseError(lineno, "content after the tree is complete");
        if (indent % 2 != 0 || indent / 2 != stack.size()) throw ParseError(lineno, "unexpected indentation");
        const auto tok = detail::split_ws(std::string_view(line).substr(indent));
        const auto bar = std::find(tok.begin(), tok.end(), std::string_view("|"));
        if (tok.size() < 5 || tok[1] != ":" || bar == tok.end()) throw ParseError(lineno, "malformed node line");

        StrategyNode node;
        node.key = detail::expect_uint(tok[0], lineno, "state key");
        const std::vector<std::string_view> body(tok.begin() + 2, bar);
        const std::vector<std::string_view> branch(bar + 1, tok.end());
        if (body.size() == 3 && body[0] == "query") {
            const auto u = detail::expect_uint(body[1], lineno, "vertex");
            const auto v = detail::expect_uint(body[2], lineno, "vertex");
            if (!(u < v) || v >= tree.n) throw ParseError(lineno, "query pair out of range");
            node.query = EdgeQuery(u, v);
        } else if (body.size() == 2 && body[0] == "answer") {
            if (tree.task == Task::mod_found) {
                const auto x = detail::expect_uint(body[1], lineno, "vertex");
                if (x >= tree.n) throw ParseError(lineno, "answer vertex out of range");
                node.answer = TaskAnswer{VertexId{x}};
            } else if (body[1] == "yes" || body[1] == "no") {
                node.answer = TaskAnswer{body[1] == "yes"};
            } else {
                throw ParseError(lineno, "answer must be yes or no");
            }
        } else {
            throw ParseError(lineno, "expected 'query u v' or 'answer x'");
        }

        const auto idx = static_cast<std::int32_t>(tree.nodes.size());
        if (stack.empty()) {
            if (!tree.nodes.empty() || branch.size() != 1 || branch[0] != "root") throw ParseError(lineno, "root must be labelled 'root'");
            if (node.key != 0) throw ParseError(lineno, "root key must be 0");
        } else {
            Open& parent = stack.back();
            const StrategyNode& p = tree.nodes[static_cast<std::size_t>(parent.node)];
            const auto& q = *p.query;
            const bool first = parent.filled == 0;
            const std::size_t from = first ? q.u().index : q.v().index;
            const std::size_t to = first ? q.v().index : q.u().index;
            if (branch.size() != 2 || detail::parse_uint(branch[0]) != from || detail::parse_uint(branch[1]) != to) {
                throw ParseError(lineno, "branch label does not match the parent's query");
            }
            const std::size_t k = pair_index(tree.n, q.u().index, q.v().index);
            if (node.key != p.key + (first ? 1 : 2) * pow3(k)) throw ParseError(lineno, "state key does not extend the parent's");
            tree.nodes[static_cast<std::size_t>(parent.node)].child[parent.filled] = idx;
            ++parent.filled;
        }
        const bool internal = node.query.has_value();
        tree.nodes.push_back(node);
        if (internal) stack.push_back({idx, 0});
        while (!stack.empty() && stack.back().filled == 2) stack.pop_back();
        if (stack.empty()) done = true;
    }
    if (!done) throw ParseError(lineno, "strategy tree is incomplete");
    return tree;
}

inline StrategyTree parse_strategy(const std::string& text) {
    std::istringstream is(text);
    return read_strategy(is);
}

}  // namespace kingsearch
