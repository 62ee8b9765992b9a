#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhh/rewrite.hpp"

namespace qhh {

// A graded quotient of a path algebra with a completed rewrite system and a
// per-degree monomial basis. For finite-dimensional algebras the completion
// degree is raised automatically so that any product of two basis elements
// stays below the certified degree; for infinite-dimensional ones arithmetic
// is valid up to the declared bound.
template <class F>
class Algebra {
public:
    Algebra(const F& field, const Quiver& quiver, const std::vector<Element<F>>& relations, int degree_bound,
            std::string name = "")
        : name_(std::move(name)), field_(field), sys_(RewriteSystem<F>::from_relations(field, quiver, relations)) {
        sys_.complete(degree_bound);
        basis_ = sys_.basis_up_to(degree_bound);
        auto verdict = sys_.finite_dimensionality(degree_bound);
        finite_ = verdict.finite;
        if (finite_) {
            basis_.resize(verdict.empty_from);
            int max_len = static_cast<int>(basis_.size()) - 1;
            if (2 * max_len > degree_bound) {
                sys_.complete(2 * max_len);
            }
            total_dim_ = verdict.dim;
        }
        index_basis();
    }

    const std::string& name() const { return name_; }
    const F& field() const { return field_; }
    const Quiver& quiver() const { return sys_.quiver(); }
    const RewriteSystem<F>& system() const { return sys_; }

    bool certified_finite() const { return finite_; }
    long long total_dim() const {
        if (!finite_) throw std::logic_error("total_dim: algebra not certified finite-dimensional");
        return total_dim_;
    }

    // basis()[d] = irreducible paths of length d (term order)
    const std::vector<std::vector<Path>>& basis() const { return basis_; }
    int max_basis_degree() const { return static_cast<int>(basis_.size()) - 1; }

    const std::vector<Path>& flat_basis() const { return flat_; }
    int basis_index(const Path& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }

    Element<F> nf(const Element<F>& x) const { return sys_.normal_form(x); }
    Element<F> mul(const Element<F>& a, const Element<F>& b) const {
        return sys_.normal_form(Element<F>::mul(field_, a, b));
    }
    Element<F> idempotent(int v) const { return Element<F>::path(field_, Path::trivial(v)); }
    Element<F> arrow_element(int a) const { return Element<F>::path(field_, make_path(quiver(), {a})); }
    Element<F> unit() const { return Element<F>::unit(field_, quiver()); }

    // Basis paths from vertex i to vertex j across all stored degrees.
    std::vector<Path> basis_between(int i, int j) const {
        std::vector<Path> out;
        for (const auto& level : basis_)
            for (const Path& p : level)
                if (p.from == i && p.to == j) out.push_back(p);
        return out;
    }

    // Basis paths of length >= 1: a basis of the Jacobson radical.
    std::vector<Path> radical_basis() const {
        std::vector<Path> out;
        for (std::size_t d = 1; d < basis_.size(); ++d)
            out.insert(out.end(), basis_[d].begin(), basis_[d].end());
        return out;
    }

    // Coordinates of an algebra element (already in normal form or not) in
    // the flat basis.
    std::vector<std::pair<int, typename F::Elem>> coords(const Element<F>& x) const {
        Element<F> n = nf(x);
        std::vector<std::pair<int, typename F::Elem>> out;
        for (const auto& t : n.terms()) {
            int idx = basis_index(t.first);
            if (idx < 0) throw std::logic_error("coords: normal form outside stored basis");
            out.push_back({idx, t.second});
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

private:
    void index_basis() {
        flat_.clear();
        index_.clear();
        for (const auto& level : basis_)
            for (const Path& p : level) {
                index_[p] = static_cast<int>(flat_.size());
                flat_.push_back(p);
            }
    }

    std::string name_;
    F field_;
    RewriteSystem<F> sys_;
    std::vector<std::vector<Path>> basis_;
    bool finite_ = false;
    long long total_dim_ = 0;
    std::vector<Path> flat_;
    std::map<Path, int, PathLess> index_;
};

} // namespace qhh
