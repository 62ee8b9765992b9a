#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhh/element.hpp"
#include "qhh/fields.hpp"
#include "qhh/quiver.hpp"

namespace qhh {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct FieldSpec {
    bool rational = true;
    std::uint32_t p = 0;

    std::string str() const { return rational ? "QQ" : "GF(" + std::to_string(p) + ")"; }

    static FieldSpec parse(const std::string& s, int line = 0) {
        if (s == "QQ" || s == "Q") return FieldSpec{true, 0};
        if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
            std::string inner = s.substr(3, s.size() - 4);
            try {
                unsigned long v = std::stoul(inner);
                if (v < 2 || v >= (1ul << 16)) throw std::out_of_range("p");
                return FieldSpec{false, static_cast<std::uint32_t>(v)};
            } catch (...) {
                throw ParseError(line, "invalid field spec: " + s);
            }
        }
        throw ParseError(line, "invalid field spec: " + s + " (expected QQ or GF(p))");
    }
};

// One syntactic term of a relation: optional sign, optional coefficient
// (integer, fraction, or a declared parameter), and an arrow-name product.
struct RelTerm {
    bool negative = false;
    std::optional<std::pair<long long, long long>> coeff; // num/den
    std::optional<std::string> param;
    std::vector<std::string> arrows;
};

struct RelationSyntax {
    std::vector<RelTerm> terms;
};

// A parsed algebra-definition file: field, quiver, symbolic relations and
// declared parameters. Instantiation over a concrete field happens later.
struct AlgebraFile {
    std::optional<FieldSpec> field;
    std::vector<std::string> params;
    Quiver quiver;
    std::vector<RelationSyntax> relations;
};

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct RelLexer {
    const std::string& s;
    std::size_t i = 0;
    int line;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    std::string ident() {
        skip_ws();
        if (i >= s.size() || !is_ident_start(s[i])) throw ParseError(line, "expected a name in relation");
        std::size_t j = i;
        while (j < s.size() && is_ident_char(s[j])) ++j;
        std::string out = s.substr(i, j - i);
        i = j;
        return out;
    }
    long long integer() {
        skip_ws();
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw ParseError(line, "expected an integer in relation");
        long long v = std::stoll(s.substr(i, j - i));
        i = j;
        return v;
    }
};

inline std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

} // namespace detail

// Parses the line-oriented algebra format:
//
//   # comment
//   field QQ | GF(p)
//   param <name>
//   vertex <name>
//   arrow <name> <from-vertex> <to-vertex>
//   relation <lincomb>
//
// where <lincomb> is a signed sum of terms "coeff * a1*a2*...*ak" (the
// coefficient, an integer, fraction, or declared parameter, is optional).
// Relation monomials must be composable paths of length >= 2.
inline AlgebraFile parse_algebra(const std::string& text) {
    AlgebraFile file;
    std::istringstream input(text);
    std::string raw;
    int lineno = 0;
    std::vector<std::pair<int, std::string>> relation_lines;

    while (std::getline(input, raw)) {
        ++lineno;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto words = detail::split_words(line);
        if (words.empty()) continue;
        const std::string& kw = words[0];
        if (kw == "field") {
            if (words.size() != 2) throw ParseError(lineno, "usage: field QQ|GF(p)");
            if (file.field) throw ParseError(lineno, "duplicate field line");
            file.field = FieldSpec::parse(words[1], lineno);
        } else if (kw == "param") {
            if (words.size() != 2) throw ParseError(lineno, "usage: param <name>");
            if (!detail::is_ident_start(words[1][0])) throw ParseError(lineno, "invalid parameter name: " + words[1]);
            file.params.push_back(words[1]);
        } else if (kw == "vertex") {
            if (words.size() != 2) throw ParseError(lineno, "usage: vertex <name>");
            try {
                file.quiver.add_vertex(words[1]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (kw == "arrow") {
            if (words.size() != 4) throw ParseError(lineno, "usage: arrow <name> <from> <to>");
            if (!detail::is_ident_start(words[1][0]))
                throw ParseError(lineno, "invalid arrow name: " + words[1] + " (must start with a letter)");
            auto from = file.quiver.find_vertex(words[2]);
            auto to = file.quiver.find_vertex(words[3]);
            if (!from) throw ParseError(lineno, "unknown vertex: " + words[2]);
            if (!to) throw ParseError(lineno, "unknown vertex: " + words[3]);
            try {
                file.quiver.add_arrow(words[1], *from, *to);
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (kw == "relation") {
            relation_lines.push_back({lineno, line.substr(line.find("relation") + 8)});
        } else {
            throw ParseError(lineno, "unknown keyword: " + kw);
        }
    }

    for (const std::string& p : file.params) {
        if (file.quiver.find_arrow(p)) throw ParseError(0, "parameter name collides with an arrow: " + p);
    }

    for (auto& [ln, body] : relation_lines) {
        detail::RelLexer lex{body, 0, ln};
        RelationSyntax rel;
        bool first = true;
        while (!lex.done()) {
            RelTerm term;
            char c = lex.peek();
            if (c == '+' || c == '-') {
                term.negative = (c == '-');
                ++lex.i;
            } else if (!first) {
                throw ParseError(ln, "expected + or - between relation terms");
            }
            c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                long long num = lex.integer();
                long long den = 1;
                if (lex.peek() == '/') {
                    ++lex.i;
                    den = lex.integer();
                    if (den == 0) throw ParseError(ln, "zero denominator");
                }
                term.coeff = {num, den};
                if (lex.peek() != '*') throw ParseError(ln, "expected * after coefficient");
                ++lex.i;
            }
            // identifiers: the first may be a parameter, the rest arrows
            std::string id = lex.ident();
            bool is_param = std::find(file.params.begin(), file.params.end(), id) != file.params.end();
            if (is_param) {
                if (term.coeff) throw ParseError(ln, "coefficient followed by a parameter is not supported");
                term.param = id;
                if (lex.peek() != '*') throw ParseError(ln, "parameter must multiply a path");
                ++lex.i;
                id = lex.ident();
            }
            term.arrows.push_back(id);
            while (lex.peek() == '*') {
                ++lex.i;
                term.arrows.push_back(lex.ident());
            }
            for (const std::string& a : term.arrows)
                if (!file.quiver.find_arrow(a)) throw ParseError(ln, "unknown arrow: " + a);
            // composability and admissibility
            if (term.arrows.size() < 2) throw ParseError(ln, "relation not admissible: monomial of length < 2");
            for (std::size_t k = 0; k + 1 < term.arrows.size(); ++k) {
                const Arrow& x = file.quiver.arrow(*file.quiver.find_arrow(term.arrows[k]));
                const Arrow& y = file.quiver.arrow(*file.quiver.find_arrow(term.arrows[k + 1]));
                if (x.to != y.from)
                    throw ParseError(ln, "non-composable path in relation: " + term.arrows[k] + "*" + term.arrows[k + 1]);
            }
            rel.terms.push_back(std::move(term));
            first = false;
        }
        if (rel.terms.empty()) throw ParseError(ln, "empty relation");
        file.relations.push_back(std::move(rel));
    }

    if (file.quiver.vertex_count() == 0) throw ParseError(0, "no vertices declared");
    return file;
}

// Bind parameters and build concrete relation elements over a field.
template <class F>
std::vector<Element<F>> instantiate_relations(const AlgebraFile& file, const F& K,
                                              const std::map<std::string, typename F::Elem>& params) {
    for (const std::string& p : file.params)
        if (!params.count(p)) throw std::invalid_argument("unbound parameter: " + p + " (pass --" + p + ")");
    std::vector<Element<F>> out;
    for (const auto& rel : file.relations) {
        Element<F> e;
        for (const auto& term : rel.terms) {
            typename F::Elem c = K.one();
            if (term.coeff) c = K.from_fraction(term.coeff->first, term.coeff->second);
            if (term.param) c = K.mul(c, params.at(*term.param));
            if (term.negative) c = K.neg(c);
            std::vector<int> ids;
            for (const std::string& a : term.arrows) ids.push_back(*file.quiver.find_arrow(a));
            e = Element<F>::add_term(K, e, make_path(file.quiver, ids), c);
        }
        out.push_back(std::move(e));
    }
    return out;
}

// Canonical text of a parsed file; parse(pretty(parse(t))) == parse(t).
inline std::string pretty_print(const AlgebraFile& file) {
    std::string out;
    if (file.field) out += "field " + file.field->str() + "\n";
    for (const auto& p : file.params) out += "param " + p + "\n";
    for (int v = 0; v < file.quiver.vertex_count(); ++v) out += "vertex " + file.quiver.vertex_name(v) + "\n";
    for (int a = 0; a < file.quiver.arrow_count(); ++a) {
        const Arrow& ar = file.quiver.arrow(a);
        out += "arrow " + ar.name + " " + file.quiver.vertex_name(ar.from) + " " + file.quiver.vertex_name(ar.to) + "\n";
    }
    for (const auto& rel : file.relations) {
        out += "relation ";
        for (std::size_t t = 0; t < rel.terms.size(); ++t) {
            const RelTerm& term = rel.terms[t];
            if (t == 0) {
                if (term.negative) out += "-";
            } else {
                out += term.negative ? " - " : " + ";
            }
            if (term.coeff) {
                out += std::to_string(term.coeff->first);
                if (term.coeff->second != 1) out += "/" + std::to_string(term.coeff->second);
                out += "*";
            }
            if (term.param) out += *term.param + "*";
            for (std::size_t k = 0; k < term.arrows.size(); ++k) {
                if (k) out += "*";
                out += term.arrows[k];
            }
        }
        out += "\n";
    }
    return out;
}

// FNV-1a over the canonical presentation text plus the effective field and
// parameter bindings; stable across runs.
inline std::string fingerprint(const AlgebraFile& file, const std::string& field_desc,
                               const std::map<std::string, std::string>& params) {
    std::string data = pretty_print(file) + "|" + field_desc;
    for (const auto& [k, v] : params) data += "|" + k + "=" + v;
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace qhh
