#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhh/parser.hpp"

namespace qhh {

// The builtin algebra corpus, addressable from the CLI as builtin:<id>.
// Parameterized families take arguments in parentheses, e.g.
// builtin:truncated-cycle(3,2). Every builtin is expressed in the regular
// file format, so builtins round-trip through the parser like user files.

namespace detail {

inline std::string xu_text() {
    return "field QQ\n"
           "vertex 1\n"
           "vertex 2\n"
           "arrow a 1 1\n"
           "arrow b 1 1\n"
           "arrow c 1 2\n"
           "relation a*a\n"
           "relation b*b\n"
           "relation a*b - b*a\n"
           "relation a*c\n";
}

// Quadratic dual of xu, written as its right-module presentation over the
// base quiver: KQ/<ab+ba, bc>.
inline std::string xu_dual_text() {
    return "field QQ\n"
           "vertex 1\n"
           "vertex 2\n"
           "arrow a 1 1\n"
           "arrow b 1 1\n"
           "arrow c 1 2\n"
           "relation a*b + b*a\n"
           "relation b*c\n";
}

inline std::string bgms_text() {
    return "field QQ\n"
           "param q\n"
           "vertex 1\n"
           "arrow x 1 1\n"
           "arrow y 1 1\n"
           "relation x*x\n"
           "relation x*y + q*y*x\n"
           "relation y*y\n";
}

inline std::string loop_x2_text() {
    return "field QQ\n"
           "vertex 1\n"
           "arrow x 1 1\n"
           "relation x*x\n";
}

inline std::string quad_mono_a3_text() {
    return "field QQ\n"
           "vertex 1\n"
           "vertex 2\n"
           "vertex 3\n"
           "arrow a 1 2\n"
           "arrow b 2 3\n"
           "relation a*b\n";
}

inline std::string quad_mono_2loops_text() {
    return "field QQ\n"
           "vertex 1\n"
           "arrow x 1 1\n"
           "arrow y 1 1\n"
           "relation x*x\n"
           "relation x*y\n"
           "relation y*x\n"
           "relation y*y\n";
}

// Oriented cycle on m vertices with all paths of length d zero; m = 1 gives
// the truncated polynomial ring K[x]/(x^d).
inline std::string truncated_cycle_text(int m, int d) {
    std::string out = "field QQ\n";
    for (int v = 1; v <= m; ++v) out += "vertex " + std::to_string(v) + "\n";
    auto arrow_name = [&](int i) { // arrow from vertex i (1-based, cyclic)
        return m == 1 ? std::string("x") : "a" + std::to_string(i);
    };
    for (int i = 1; i <= m; ++i)
        out += "arrow " + arrow_name(i) + " " + std::to_string(i) + " " + std::to_string(i % m + 1) + "\n";
    for (int s = 1; s <= m; ++s) {
        out += "relation ";
        for (int k = 0; k < d; ++k) {
            if (k) out += "*";
            out += arrow_name((s - 1 + k) % m + 1);
        }
        out += "\n";
    }
    return out;
}

// Selfinjective special biserial family: cyclic quiver with arrows both
// ways, zero relations on consecutive same-direction arrows, and commuting
// N-th powers of the back-and-forth loops.
inline std::string lambda_text(int m, int N) {
    std::string out = "field QQ\n";
    for (int v = 0; v < m; ++v) out += "vertex " + std::to_string(v) + "\n";
    auto fwd = [&](int i) { return "a" + std::to_string(((i % m) + m) % m); };
    auto bwd = [&](int i) { return "b" + std::to_string(((i % m) + m) % m); };
    for (int i = 0; i < m; ++i)
        out += "arrow " + fwd(i) + " " + std::to_string(i) + " " + std::to_string((i + 1) % m) + "\n";
    for (int i = 0; i < m; ++i)
        out += "arrow " + bwd(i) + " " + std::to_string((i + 1) % m) + " " + std::to_string(i) + "\n";
    for (int i = 0; i < m; ++i) out += "relation " + fwd(i) + "*" + fwd(i + 1) + "\n";
    for (int i = 0; i < m; ++i) out += "relation " + bwd(i) + "*" + bwd(i - 1) + "\n";
    for (int i = 0; i < m; ++i) {
        std::string loop_a, loop_b;
        for (int k = 0; k < N; ++k) {
            if (k) { loop_a += "*"; loop_b += "*"; }
            loop_a += fwd(i) + "*" + bwd(i);
            loop_b += bwd(i - 1) + "*" + fwd(i - 1);
        }
        out += "relation " + loop_a + " - " + loop_b + "\n";
    }
    return out;
}

inline std::optional<std::pair<std::string, std::vector<int>>> split_builtin_args(const std::string& id) {
    auto open = id.find('(');
    if (open == std::string::npos) return std::make_pair(id, std::vector<int>{});
    if (id.back() != ')') return std::nullopt;
    std::string base = id.substr(0, open);
    std::string args = id.substr(open + 1, id.size() - open - 2);
    std::vector<int> vals;
    std::string cur;
    for (char c : args + ",") {
        if (c == ',') {
            if (cur.empty()) return std::nullopt;
            try {
                vals.push_back(std::stoi(cur));
            } catch (...) {
                return std::nullopt;
            }
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else {
            return std::nullopt;
        }
    }
    return std::make_pair(base, vals);
}

} // namespace detail

// Source text for builtin:<id>, or nullopt if unknown.
inline std::optional<std::string> builtin_source(const std::string& id) {
    auto parsed = detail::split_builtin_args(id);
    if (!parsed) return std::nullopt;
    const auto& [base, args] = *parsed;
    if (base == "xu" && args.empty()) return detail::xu_text();
    if (base == "xu-dual" && args.empty()) return detail::xu_dual_text();
    if (base == "bgms" && args.empty()) return detail::bgms_text();
    if (base == "loop-x2" && args.empty()) return detail::loop_x2_text();
    if (base == "quad-mono-a3" && args.empty()) return detail::quad_mono_a3_text();
    if (base == "quad-mono-2loops" && args.empty()) return detail::quad_mono_2loops_text();
    if (base == "truncated-cycle" && args.size() == 2 && args[0] >= 1 && args[1] >= 2)
        return detail::truncated_cycle_text(args[0], args[1]);
    if (base == "lambda" && args.size() == 2 && args[0] >= 1 && args[1] >= 1)
        return detail::lambda_text(args[0], args[1]);
    return std::nullopt;
}

// Canonical instantiations, used by docs and test sweeps.
inline std::vector<std::string> builtin_list() {
    return {"xu",          "xu-dual",          "bgms",
            "loop-x2",     "quad-mono-a3",     "quad-mono-2loops",
            "truncated-cycle(1,3)", "truncated-cycle(1,4)", "truncated-cycle(3,2)",
            "lambda(1,1)"};
}

// The finite-dimensional builtins (with default parameters) that the
// cohomology consistency sweeps run over. bgms needs q bound; xu-dual is
// infinite-dimensional and excluded.
inline std::vector<std::string> builtin_finite_list() {
    return {"xu", "bgms", "loop-x2", "quad-mono-a3", "quad-mono-2loops", "truncated-cycle(1,3)",
            "truncated-cycle(3,2)", "lambda(1,1)"};
}

} // namespace qhh
