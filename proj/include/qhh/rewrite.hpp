#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qhh/element.hpp"
#include "qhh/fields.hpp"
#include "qhh/quiver.hpp"

namespace qhh {

struct DegreeOverflow : std::runtime_error {
    explicit DegreeOverflow(const std::string& m) : std::runtime_error(m) {}
};
struct CoefficientBlowup : std::runtime_error {
    explicit CoefficientBlowup(const std::string& m) : std::runtime_error(m) {}
};

// An oriented relation lead -> tail, i.e. the relation lead - tail with the
// term-order-largest monomial on the left. Reduction replaces occurrences of
// lead (as a subword) by tail, which is strictly order-decreasing.
template <class F>
struct RewriteRule {
    Path lead;
    Element<F> tail;
};

namespace detail {
template <class F>
inline void guard_coefficients(const F&, const Element<F>&) {}

inline void guard_coefficients(const RationalField& K, const Element<RationalField>& e) {
    constexpr std::size_t kMaxBits = 65536;
    for (const auto& t : e.terms())
        if (RationalField::bit_size(t.second) > kMaxBits)
            throw CoefficientBlowup("completion: rational coefficient exceeded " + std::to_string(kMaxBits) + " bits");
}
} // namespace detail

// Degree-truncated rewriting for an admissible ideal of a path algebra.
// Completion certifies confluence up to a declared degree; all consumers
// state their degree budget up front.
template <class F>
class RewriteSystem {
public:
    RewriteSystem(F field, Quiver quiver) : field_(std::move(field)), quiver_(std::move(quiver)) {}

    static RewriteSystem from_relations(const F& field, const Quiver& quiver,
                                        const std::vector<Element<F>>& relations) {
        RewriteSystem sys(field, quiver);
        for (const auto& rel : relations) {
            if (rel.is_zero()) continue;
            sys.add_oriented(rel);
        }
        sys.inter_reduce();
        return sys;
    }

    const Quiver& quiver() const { return quiver_; }
    const F& field() const { return field_; }
    const std::vector<RewriteRule<F>>& rules() const { return rules_; }
    int degree_bound() const { return degree_bound_; }
    int confluent_up_to() const { return confluent_up_to_; }

    bool is_monomial() const {
        for (const auto& r : rules_)
            if (!r.tail.is_zero()) return false;
        return true;
    }

    // All rules homogeneous in path length (zero relations count).
    bool is_graded() const {
        for (const auto& r : rules_) {
            if (r.tail.is_zero()) continue;
            auto d = r.tail.homogeneous_degree();
            if (!d || *d != r.lead.length()) return false;
        }
        return true;
    }

    // Unique reduced representative; requires every monomial within the
    // certified degree.
    Element<F> normal_form(const Element<F>& x) const {
        for (const auto& t : x.terms())
            if (t.first.length() > confluent_up_to_)
                throw DegreeOverflow("normal_form: monomial of length " + std::to_string(t.first.length()) +
                                     " exceeds certified degree " + std::to_string(confluent_up_to_));
        return reduce(x);
    }

    // Overlap completion: resolve all ambiguities among rule leads whose
    // overlap word has length <= bound. Afterwards normal forms below the
    // bound are reduction-order independent.
    void complete(int bound) {
        degree_bound_ = bound;
        inter_reduce();
        bool added = true;
        while (added) {
            added = false;
            // snapshot: new rules trigger another full pass
            std::size_t n = rules_.size();
            for (std::size_t i = 0; i < n && !added; ++i)
                for (std::size_t j = 0; j < n && !added; ++j) {
                    const Path& p = rules_[i].lead;
                    const Path& q = rules_[j].lead;
                    int lp = p.length(), lq = q.length();
                    for (int k = 1; k < std::min(lp, lq); ++k) {
                        // suffix of p of length k == prefix of q of length k?
                        bool match = true;
                        for (int t = 0; t < k; ++t)
                            if (p.arrows[lp - k + t] != q.arrows[t]) { match = false; break; }
                        if (!match) continue;
                        int lw = lp + lq - k;
                        if (lw > bound) continue;
                        Path u = subpath(quiver_, q, k, lq - k);          // w = p.u
                        Path v = subpath_or_vertex(quiver_, p, 0, lp - k); // w = v.q
                        Element<F> via_i = Element<F>::mul(field_, rules_[i].tail, Element<F>::path(field_, u));
                        Element<F> via_j = Element<F>::mul(field_, Element<F>::path(field_, v), rules_[j].tail);
                        Element<F> s = reduce(Element<F>::sub(field_, via_i, via_j));
                        if (!s.is_zero()) {
                            detail::guard_coefficients(field_, s);
                            add_oriented(s);
                            inter_reduce();
                            added = true;
                            break;
                        }
                    }
                }
        }
        confluent_up_to_ = bound;
    }

    // Per-degree lists of irreducible paths (the monomial basis of the
    // quotient), degree 0..N. Requires a graded system confluent to N.
    std::vector<std::vector<Path>> basis_up_to(int N) const {
        if (!is_graded())
            throw std::invalid_argument("basis_up_to: system has inhomogeneous relations; per-degree bases undefined");
        if (N > confluent_up_to_)
            throw DegreeOverflow("basis_up_to: requested degree exceeds certified confluence");
        std::vector<std::vector<Path>> out;
        std::vector<Path> cur;
        for (int v = 0; v < quiver_.vertex_count(); ++v) cur.push_back(Path::trivial(v));
        out.push_back(cur);
        for (int d = 1; d <= N; ++d) {
            std::vector<Path> next;
            for (const Path& w : out[d - 1])
                for (int a = 0; a < quiver_.arrow_count(); ++a) {
                    if (quiver_.arrow(a).from != w.to) continue;
                    Path e = w;
                    e.arrows.push_back(a);
                    e.to = quiver_.arrow(a).to;
                    if (!suffix_reducible(e)) next.push_back(std::move(e));
                }
            out.push_back(std::move(next));
        }
        return out;
    }

    struct FiniteVerdict {
        bool finite = false;
        long long dim = 0;          // total dimension when finite
        int empty_from = -1;        // first empty degree when finite
        long long nonzero_at_N = 0; // basis count at degree N when inconclusive
    };

    FiniteVerdict finite_dimensionality(int N) const {
        auto basis = basis_up_to(N);
        FiniteVerdict v;
        long long total = 0;
        for (int d = 0; d <= N; ++d) {
            if (basis[d].empty()) {
                v.finite = true;
                v.empty_from = d;
                v.dim = total;
                return v;
            }
            total += static_cast<long long>(basis[d].size());
        }
        v.finite = false;
        v.dim = total;
        v.nonzero_at_N = static_cast<long long>(basis[N].size());
        return v;
    }

private:
    // Orient a nonzero relation: largest monomial becomes the lead.
    void add_oriented(const Element<F>& rel) {
        const auto& [lead, c] = rel.leading();
        if (lead.length() < 2)
            throw std::invalid_argument("relation not admissible: monomial of length < 2");
        for (const auto& t : rel.terms())
            if (t.first.from != lead.from || t.first.to != lead.to)
                throw std::invalid_argument("relation mixes parallel classes: all monomials must share endpoints");
        Element<F> tail = Element<F>::sub(field_, Element<F>::path(field_, lead),
                                          Element<F>::scale(field_, rel, field_.inv(c)));
        rules_.push_back(RewriteRule<F>{lead, std::move(tail)});
    }

    bool suffix_reducible(const Path& w) const {
        for (const auto& r : rules_) {
            int m = r.lead.length(), n = w.length();
            if (m > n) continue;
            bool match = true;
            for (int t = 0; t < m; ++t)
                if (w.arrows[n - m + t] != r.lead.arrows[t]) { match = false; break; }
            if (match) return true;
        }
        return false;
    }

    // One rewriting step on the largest reducible monomial, at its leftmost
    // reducible position. Returns false when x is already reduced.
    bool reduce_step(Element<F>& x) const {
        const auto& terms = x.terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            int best_pos = -1;
            const RewriteRule<F>* best_rule = nullptr;
            for (const auto& r : rules_) {
                int pos = find_subpath(it->first, r.lead);
                if (pos >= 0 && (best_pos < 0 || pos < best_pos)) {
                    best_pos = pos;
                    best_rule = &r;
                }
            }
            if (!best_rule) continue;
            const Path& p = it->first;
            Path pre = subpath_or_vertex(quiver_, p, 0, best_pos);
            Path post = subpath_or_vertex(quiver_, p, best_pos + best_rule->lead.length(),
                                          p.length() - best_pos - best_rule->lead.length());
            Element<F> repl = Element<F>::mul(field_, Element<F>::path(field_, pre), best_rule->tail);
            repl = Element<F>::mul(field_, repl, Element<F>::path(field_, post));
            typename F::Elem c = it->second;
            x = Element<F>::add_term(field_, x, p, field_.neg(c));
            x = Element<F>::add(field_, x, Element<F>::scale(field_, repl, c));
            return true;
        }
        return false;
    }

    Element<F> reduce(Element<F> x) const {
        while (reduce_step(x)) {}
        return x;
    }

    Element<F> reduce_excluding(Element<F> x, std::size_t excluded) const {
        // normal form with respect to all rules except one (used by
        // inter-reduction); plain loop, smallness is fine here
        bool changed = true;
        while (changed) {
            changed = false;
            const auto& terms = x.terms();
            for (auto it = terms.rbegin(); it != terms.rend() && !changed; ++it) {
                for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
                    if (ri == excluded) continue;
                    int pos = find_subpath(it->first, rules_[ri].lead);
                    if (pos < 0) continue;
                    const Path& p = it->first;
                    Path pre = subpath_or_vertex(quiver_, p, 0, pos);
                    Path post = subpath_or_vertex(quiver_, p, pos + rules_[ri].lead.length(),
                                                  p.length() - pos - rules_[ri].lead.length());
                    Element<F> repl = Element<F>::mul(field_, Element<F>::path(field_, pre), rules_[ri].tail);
                    repl = Element<F>::mul(field_, repl, Element<F>::path(field_, post));
                    typename F::Elem c = it->second;
                    x = Element<F>::add_term(field_, x, p, field_.neg(c));
                    x = Element<F>::add(field_, x, Element<F>::scale(field_, repl, c));
                    changed = true;
                    break;
                }
            }
        }
        return x;
    }

    // Keep the system inter-reduced: no rule's lead or tail reducible by the
    // other rules.
    void inter_reduce() {
        bool changed = true;
        int guard = 0;
        while (changed) {
            if (++guard > 10000) throw std::runtime_error("inter_reduce: no fixpoint (internal error)");
            changed = false;
            for (std::size_t i = 0; i < rules_.size(); ++i) {
                Element<F> rel = Element<F>::sub(field_, Element<F>::path(field_, rules_[i].lead), rules_[i].tail);
                Element<F> red = reduce_excluding(rel, i);
                if (red == rel) continue;
                rules_.erase(rules_.begin() + i);
                if (!red.is_zero()) {
                    detail::guard_coefficients(field_, red);
                    add_oriented(red);
                }
                changed = true;
                break;
            }
        }
    }

    F field_;
    Quiver quiver_;
    std::vector<RewriteRule<F>> rules_;
    int degree_bound_ = 0;
    int confluent_up_to_ = 0;
};

} // namespace qhh
