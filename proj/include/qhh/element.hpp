#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "qhh/quiver.hpp"

namespace qhh {

// A finite K-linear combination of paths, kept canonical: terms sorted
// ascending in the term order, no zero coefficients.
template <class F>
class Element {
public:
    using Elem = typename F::Elem;
    using Term = std::pair<Path, Elem>;

    Element() = default;

    static Element zero() { return Element(); }

    static Element single(const F& K, Path p, Elem c) {
        Element e;
        if (!K.is_zero(c)) e.terms_.push_back({std::move(p), std::move(c)});
        return e;
    }
    static Element path(const F& K, Path p) { return single(K, std::move(p), K.one()); }

    // Sum of all trivial paths: the unit of KQ.
    static Element unit(const F& K, const Quiver& q) {
        Element e;
        for (int v = 0; v < q.vertex_count(); ++v) e.terms_.push_back({Path::trivial(v), K.one()});
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Largest monomial in the term order (canonical storage is ascending).
    const Term& leading() const { return terms_.back(); }

    Elem coeff_of(const F& K, const Path& p) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                                   [](const Term& t, const Path& x) { return term_cmp(t.first, x) < 0; });
        if (it != terms_.end() && it->first == p) return it->second;
        return K.zero();
    }

    // Degree if all monomials share one path length.
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.front().first.length();
        for (const Term& t : terms_)
            if (t.first.length() != d) return std::nullopt;
        return d;
    }

    bool operator==(const Element& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].first == o.terms_[i].first) || terms_[i].second != o.terms_[i].second)
                return false;
        return true;
    }

    static Element add(const F& K, const Element& a, const Element& b) {
        Element r;
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && term_cmp(a.terms_[i].first, b.terms_[j].first) < 0)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || term_cmp(b.terms_[j].first, a.terms_[i].first) < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Elem c = K.add(a.terms_[i].second, b.terms_[j].second);
                if (!K.is_zero(c)) r.terms_.push_back({a.terms_[i].first, std::move(c)});
                ++i; ++j;
            }
        }
        return r;
    }

    static Element scale(const F& K, const Element& a, const Elem& c) {
        Element r;
        if (K.is_zero(c)) return r;
        r.terms_.reserve(a.terms_.size());
        for (const Term& t : a.terms_) r.terms_.push_back({t.first, K.mul(t.second, c)});
        return r;
    }

    static Element negate(const F& K, const Element& a) {
        Element r;
        r.terms_.reserve(a.terms_.size());
        for (const Term& t : a.terms_) r.terms_.push_back({t.first, K.neg(t.second)});
        return r;
    }

    static Element sub(const F& K, const Element& a, const Element& b) { return add(K, a, negate(K, b)); }

    // Free path-algebra product: bilinear extension of composition;
    // non-composable path pairs contribute zero.
    static Element mul(const F& K, const Element& a, const Element& b) {
        Element r;
        for (const Term& s : a.terms_)
            for (const Term& t : b.terms_) {
                auto pq = compose(s.first, t.first);
                if (!pq) continue;
                r = add(K, r, single(K, std::move(*pq), K.mul(s.second, t.second)));
            }
        return r;
    }

    // a + c*p with a single path term.
    static Element add_term(const F& K, const Element& a, const Path& p, const Elem& c) {
        return add(K, a, single(K, p, c));
    }

    std::string str(const F& K, const Quiver& q) const {
        if (terms_.empty()) return "0";
        std::string s;
        // print descending (leading monomial first)
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string c = K.str(it->second);
            bool neg = !c.empty() && c[0] == '-';
            std::string mag = neg ? c.substr(1) : c;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (mag != "1")
                s += mag + "*" + path_str(q, it->first);
            else
                s += path_str(q, it->first);
        }
        return s;
    }

private:
    std::vector<Term> terms_;
};

} // namespace qhh
