#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qhh {

// Exact sparse linear algebra over a field object F. A sparse vector is a
// list of (index, coefficient) pairs sorted by index with no zero entries.

template <class F>
using SVec = std::vector<std::pair<int, typename F::Elem>>;

template <class F>
SVec<F> svec_canonical(const F& K, std::vector<std::pair<int, typename F::Elem>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SVec<F> out;
    for (auto& e : entries) {
        if (!out.empty() && out.back().first == e.first) {
            out.back().second = K.add(out.back().second, e.second);
            if (K.is_zero(out.back().second)) out.pop_back();
        } else if (!K.is_zero(e.second)) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

// a + c*b
template <class F>
SVec<F> svec_add_scaled(const F& K, const SVec<F>& a, const SVec<F>& b, const typename F::Elem& c) {
    SVec<F> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back({b[j].first, K.mul(b[j].second, c)});
            ++j;
        } else {
            typename F::Elem v = K.add(a[i].second, K.mul(b[j].second, c));
            if (!K.is_zero(v)) r.push_back({a[i].first, std::move(v)});
            ++i; ++j;
        }
    }
    return r;
}

template <class F>
SVec<F> svec_scale(const F& K, const SVec<F>& a, const typename F::Elem& c) {
    SVec<F> r;
    if (K.is_zero(c)) return r;
    r.reserve(a.size());
    for (const auto& e : a) r.push_back({e.first, K.mul(e.second, c)});
    return r;
}

// Row echelon structure built by insertion. Pivot rows carry a unit leading
// coefficient. With full_reduce the rows are kept inter-reduced (RREF), so
// reduce() is a canonical form on cosets of the row space; without it the
// structure is cheaper and still good for rank, membership and tracking.
template <class F>
class Echelon {
public:
    explicit Echelon(const F& K, bool full_reduce = true) : K_(&K), full_reduce_(full_reduce) {}

    // Eliminate every entry whose column holds a pivot. Pivot rows only have
    // entries at their pivot column or later, so entries already moved to
    // the output are never revisited.
    SVec<F> reduce(SVec<F> v) const {
        SVec<F> acc = std::move(v);
        SVec<F> out;
        std::size_t i = 0;
        while (i < acc.size()) {
            int col = acc[i].first;
            auto it = pivot_of_col_.find(col);
            if (it == pivot_of_col_.end()) {
                out.push_back(std::move(acc[i]));
                ++i;
                continue;
            }
            SVec<F> tail(acc.begin() + i, acc.end());
            acc = svec_add_scaled(*K_, tail, rows_[it->second], K_->neg(tail.front().second));
            i = 0;
        }
        return out;
    }

    // Insert v; returns true if the rank grew.
    bool insert(SVec<F> v) {
        SVec<F> r = reduce(std::move(v));
        if (r.empty()) return false;
        typename F::Elem lead_inv = K_->inv(r.front().second);
        r = svec_scale(*K_, r, lead_inv);
        int col = r.front().first;
        if (full_reduce_) {
            for (auto& row : rows_) {
                typename F::Elem c = coeff_at(row, col);
                if (!K_->is_zero(c)) row = svec_add_scaled(*K_, row, r, K_->neg(c));
            }
        }
        pivot_of_col_[col] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    bool contains(const SVec<F>& v) const { return reduce(v).empty(); }
    const std::vector<SVec<F>>& rows() const { return rows_; }

    std::vector<int> pivot_cols() const {
        std::vector<int> out;
        out.reserve(pivot_of_col_.size());
        for (const auto& [c, r] : pivot_of_col_) out.push_back(c);
        return out;
    }
    bool has_pivot(int col) const { return pivot_of_col_.count(col) != 0; }

private:
    typename F::Elem coeff_at(const SVec<F>& v, int col) const {
        auto it = std::lower_bound(v.begin(), v.end(), col,
                                   [](const auto& e, int c) { return e.first < c; });
        if (it != v.end() && it->first == col) return it->second;
        return K_->zero();
    }

    const F* K_;
    bool full_reduce_;
    std::vector<SVec<F>> rows_;
    std::map<int, int> pivot_of_col_;
};

template <class F>
int rank_of(const F& K, const std::vector<SVec<F>>& vectors) {
    Echelon<F> e(K, /*full_reduce=*/false);
    for (const auto& v : vectors) e.insert(v);
    return e.rank();
}

// Kernel of the linear map sending basis vector i to columns[i]. Tracking
// indices live above codomain_dim; a column whose main part reduces to zero
// yields a kernel combination. Output is deterministic in column order.
template <class F>
std::vector<SVec<F>> kernel_basis(const F& K, const std::vector<SVec<F>>& columns, int codomain_dim) {
    const int OFF = codomain_dim;
    Echelon<F> ech(K, /*full_reduce=*/false);
    std::vector<SVec<F>> kernel;
    for (int i = 0; i < static_cast<int>(columns.size()); ++i) {
        SVec<F> aug = columns[i];
        aug.push_back({OFF + i, K.one()});
        SVec<F> r = ech.reduce(std::move(aug));
        bool main_zero = r.empty() || r.front().first >= OFF;
        if (main_zero) {
            SVec<F> k;
            for (auto& e : r) k.push_back({e.first - OFF, e.second});
            kernel.push_back(std::move(k));
        } else {
            ech.insert(std::move(r));
        }
    }
    return kernel;
}

// Expresses vectors in the span of a fixed generating list via an echelon
// with tracking columns.
template <class F>
class SpanSolver {
public:
    SpanSolver(const F& K, const std::vector<SVec<F>>& gens, int main_dim)
        : K_(&K), off_(main_dim), n_(static_cast<int>(gens.size())), ech_(K, /*full_reduce=*/false) {
        for (int i = 0; i < n_; ++i) {
            SVec<F> aug = gens[i];
            aug.push_back({off_ + i, K.one()});
            SVec<F> r = ech_.reduce(std::move(aug));
            if (!r.empty() && r.front().first < off_) ech_.insert(std::move(r));
        }
    }

    // Coordinates of v in the generating list (canonical for the insertion
    // order), or nullopt if v is outside the span.
    std::optional<std::vector<typename F::Elem>> coords(const SVec<F>& v) const {
        SVec<F> r = ech_.reduce(v);
        std::vector<typename F::Elem> c(n_, K_->zero());
        for (const auto& e : r) {
            if (e.first < off_) return std::nullopt;
            c[e.first - off_] = K_->neg(e.second);
        }
        return c;
    }

    bool in_span(const SVec<F>& v) const { return coords(v).has_value(); }

private:
    const F* K_;
    int off_;
    int n_;
    Echelon<F> ech_;
};

} // namespace qhh
