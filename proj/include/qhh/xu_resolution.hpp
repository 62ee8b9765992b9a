#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/linalg.hpp"

namespace qhh {

// Machinery specific to the builtin `xu` algebra: two loops a, b and an
// arrow c out of their vertex, modulo a^2, b^2, ab - ba, ac. Ships with
// signed generator families g^n_r, the explicit minimal projective bimodule
// resolution built on them, mechanical verification of the resolution, and
// cohomology dimensions read off it.

inline Quiver xu_quiver() {
    Quiver q;
    int v1 = q.add_vertex("1");
    int v2 = q.add_vertex("2");
    q.add_arrow("a", v1, v1);
    q.add_arrow("b", v1, v1);
    q.add_arrow("c", v1, v2);
    return q;
}

template <class F>
std::vector<Element<F>> xu_relations(const F& K, const Quiver& q) {
    auto P = [&](std::vector<int> ids) { return Element<F>::path(K, make_path(q, ids)); };
    const int a = 0, b = 1, c = 2;
    return {P({a, a}), P({b, b}), Element<F>::sub(K, P({a, b}), P({b, a})), P({a, c})};
}

template <class F>
Algebra<F> xu_algebra(const F& K, int degree_bound = 6) {
    Quiver q = xu_quiver();
    return Algebra<F>(K, q, xu_relations(K, q), degree_bound, "xu");
}

// Guard: accept only algebras presented exactly as the builtin.
template <class F>
bool is_xu_presentation(const Algebra<F>& A) {
    Quiver q = xu_quiver();
    if (!(A.quiver() == q)) return false;
    auto want = xu_relations(A.field(), q);
    auto sys = RewriteSystem<F>::from_relations(A.field(), q, want);
    if (A.system().rules().size() < 4) return false;
    for (const auto& r : want) {
        Element<F> nf = A.nf(r);
        if (!nf.is_zero()) return false;
    }
    return A.certified_finite() && A.total_dim() == 7;
}

template <class F>
struct GeneratorElement {
    int n = 0;
    int r = 0;
    Element<F> value; // element of the free path algebra
    int origin = 0;
    int tail = 0;
};

namespace xu_detail {
template <class F>
typename F::Elem sign_pow(const F& K, long long s) {
    return (s % 2 == 0) ? K.one() : K.neg(K.one());
}
} // namespace xu_detail

// The generator family of homological degree n: indices 0..n carry signed
// sums of length-n words in a, b, index n+1 carries a^{n-1}c. Degrees <= 2
// are the explicitly listed sets; degrees >= 3 follow the closed formula
// g^n_r = sum over words with r letters b of (-1)^s, s the sum of the
// (1-based) positions of the b's.
template <class F>
std::vector<GeneratorElement<F>> g_set(const F& K, const Quiver& q, int n) {
    const int a = 0, b = 1, c = 2;
    auto P = [&](std::vector<int> ids) { return Element<F>::path(K, make_path(q, ids)); };
    auto trivial = [&](int v) { return Element<F>::path(K, Path::trivial(v)); };
    std::vector<GeneratorElement<F>> out;

    if (n == 0) {
        out.push_back({0, 0, trivial(0), 0, 0});
        out.push_back({0, 1, trivial(1), 1, 1});
        return out;
    }
    if (n == 1) {
        out.push_back({1, 0, P({a}), 0, 0});
        out.push_back({1, 1, Element<F>::negate(K, P({b})), 0, 0});
        out.push_back({1, 2, P({c}), 0, 1});
        return out;
    }
    if (n == 2) {
        out.push_back({2, 0, P({a, a}), 0, 0});
        out.push_back({2, 1, Element<F>::sub(K, P({a, b}), P({b, a})), 0, 0});
        out.push_back({2, 2, Element<F>::negate(K, P({b, b})), 0, 0});
        out.push_back({2, 3, P({a, c}), 0, 1});
        return out;
    }

    for (int r = 0; r <= n; ++r) {
        // choose the r positions (1-based) of the b's
        Element<F> val;
        std::vector<int> pos(r);
        for (int i = 0; i < r; ++i) pos[i] = i;
        bool more = (r <= n);
        if (r == 0) {
            val = Element<F>::path(K, make_path(q, std::vector<int>(n, a)));
        } else {
            while (more) {
                long long s = 0;
                std::vector<int> word(n, a);
                for (int i = 0; i < r; ++i) {
                    word[pos[i]] = b;
                    s += pos[i] + 1;
                }
                val = Element<F>::add(K, val,
                                      Element<F>::single(K, make_path(q, word), xu_detail::sign_pow(K, s)));
                // next combination
                int i = r - 1;
                while (i >= 0 && pos[i] == n - r + i) --i;
                if (i < 0) break;
                ++pos[i];
                for (int j = i + 1; j < r; ++j) pos[j] = pos[j - 1] + 1;
            }
        }
        out.push_back({n, r, std::move(val), 0, 0});
    }
    std::vector<int> last(n, a);
    last[n - 1] = c;
    out.push_back({n, n + 1, Element<F>::path(K, make_path(q, last)), 0, 1});
    return out;
}

struct RecursionReport {
    struct Failure {
        int n;
        int r;
        std::string identity;
    };
    int max_degree = 0;
    long long identities_checked = 0;
    std::vector<Failure> failures;
    bool all_pass() const { return failures.empty(); }
};

// Verifies, as identities in the free path algebra, the recursions tying
// degree n to degree n-1 for 2 <= n <= N (both stated forms of each).
template <class F>
RecursionReport check_g_recursions(const F& K, int N) {
    Quiver q = xu_quiver();
    const int a = 0, b = 1, c = 2;
    auto P = [&](int id) { return Element<F>::path(K, make_path(q, {id})); };
    using E = Element<F>;

    RecursionReport report;
    report.max_degree = N;
    auto prev = g_set(K, q, 1);
    for (int n = 2; n <= N; ++n) {
        auto cur = g_set(K, q, n);
        auto sgn_n = xu_detail::sign_pow(K, n);
        auto check = [&](int r, const E& lhs, const E& rhs, const char* name) {
            ++report.identities_checked;
            if (!(lhs == rhs)) report.failures.push_back({n, r, name});
        };
        check(0, cur[0].value, E::mul(K, prev[0].value, P(a)), "g(n,0) = g(n-1,0)*a");
        check(0, cur[0].value, E::mul(K, P(a), prev[0].value), "g(n,0) = a*g(n-1,0)");
        for (int r = 1; r <= n - 1; ++r) {
            E rhs1 = E::add(K, E::mul(K, prev[r].value, P(a)),
                            E::scale(K, E::mul(K, prev[r - 1].value, P(b)), sgn_n));
            check(r, cur[r].value, rhs1, "g(n,r) = g(n-1,r)*a + (-1)^n g(n-1,r-1)*b");
            E rhs2 = E::scale(K,
                              E::add(K, E::mul(K, P(a), prev[r].value), E::mul(K, P(b), prev[r - 1].value)),
                              xu_detail::sign_pow(K, r));
            check(r, cur[r].value, rhs2, "g(n,r) = (-1)^r (a*g(n-1,r) + b*g(n-1,r-1))");
        }
        check(n, cur[n].value, E::scale(K, E::mul(K, prev[n - 1].value, P(b)), sgn_n),
              "g(n,n) = (-1)^n g(n-1,n-1)*b");
        check(n, cur[n].value, E::scale(K, E::mul(K, P(b), prev[n - 1].value), sgn_n),
              "g(n,n) = (-1)^n b*g(n-1,n-1)");
        check(n + 1, cur[n + 1].value, E::mul(K, prev[0].value, P(c)), "g(n,n+1) = g(n-1,0)*c");
        check(n + 1, cur[n + 1].value, E::mul(K, P(a), prev[n].value), "g(n,n+1) = a*g(n-1,n)");
        prev = std::move(cur);
    }
    return report;
}

// One term coeff * (left (x)_target right) of a differential image; left and
// right are single paths (a vertex or an arrow) in normal form.
template <class F>
struct DiffTerm {
    typename F::Elem coeff;
    Path left;
    int target;
    Path right;
};

template <class F>
struct ResolutionSlice {
    int degree = 0;
    std::vector<std::pair<int, int>> summands;            // (origin, tail) per r
    std::vector<std::vector<DiffTerm<F>>> differential;   // per r; degree 0 has none
};

// The resolution slices 0..N with the case-by-case differential formulas.
template <class F>
std::vector<ResolutionSlice<F>> build_resolution(const Algebra<F>& A, int N) {
    const F& K = A.field();
    const Quiver& q = A.quiver();
    const Path e1 = Path::trivial(0), e2 = Path::trivial(1);
    const Path pa = make_path(q, {0}), pb = make_path(q, {1}), pc = make_path(q, {2});
    auto one = K.one();
    auto minus = K.neg(K.one());

    std::vector<ResolutionSlice<F>> slices;
    for (int n = 0; n <= N; ++n) {
        ResolutionSlice<F> s;
        s.degree = n;
        auto gens = g_set(K, q, n);
        for (const auto& g : gens) s.summands.push_back({g.origin, g.tail});
        s.differential.resize(gens.size());
        if (n == 1) {
            s.differential[0] = {{one, e1, 0, pa}, {minus, pa, 0, e1}};
            s.differential[1] = {{minus, e1, 0, pb}, {one, pb, 0, e1}};
            s.differential[2] = {{one, e1, 0, pc}, {minus, pc, 1, e2}};
        } else if (n >= 2) {
            auto sgn_n = xu_detail::sign_pow(K, n);
            s.differential[0] = {{one, e1, 0, pa}, {sgn_n, pa, 0, e1}};
            for (int r = 1; r <= n - 1; ++r) {
                auto sgn_rn = xu_detail::sign_pow(K, r + n);
                s.differential[r] = {{one, e1, r, pa},
                                     {sgn_n, e1, r - 1, pb},
                                     {sgn_rn, pa, r, e1},
                                     {sgn_rn, pb, r - 1, e1}};
            }
            s.differential[n] = {{sgn_n, e1, n - 1, pb}, {one, pb, n - 1, e1}};
            s.differential[n + 1] = {{one, e1, 0, pc}, {sgn_n, pa, n, e2}};
        }
        slices.push_back(std::move(s));
    }
    return slices;
}

struct ComplexReport {
    struct Failure {
        int degree;
        int summand;
        std::string check;
    };
    int max_degree = 0;
    std::vector<Failure> failures;
    bool dd_zero = true;
    bool minimal = true;
    bool linear = true;
    bool all_pass() const { return failures.empty(); }
};

// Mechanical verification of the resolution: composites vanish after normal
// forms on both tensor factors, every differential entry lies in the radical
// (minimality), and every entry has total path length one (linearity).
template <class F>
ComplexReport verify_complex(const Algebra<F>& A, const std::vector<ResolutionSlice<F>>& slices) {
    const F& K = A.field();
    ComplexReport report;
    report.max_degree = static_cast<int>(slices.size()) - 1;

    for (const auto& s : slices) {
        for (std::size_t r = 0; r < s.differential.size(); ++r)
            for (const auto& t : s.differential[r]) {
                if (t.left.length() + t.right.length() != 1) {
                    report.linear = false;
                    report.failures.push_back({s.degree, static_cast<int>(r), "linearity"});
                }
                if (t.left.length() == 0 && t.right.length() == 0) {
                    report.minimal = false;
                    report.failures.push_back({s.degree, static_cast<int>(r), "minimality"});
                }
            }
    }

    // d0 after d1: multiplication map applied to the image of d1
    if (slices.size() >= 2) {
        const auto& s1 = slices[1];
        for (std::size_t r = 0; r < s1.differential.size(); ++r) {
            Element<F> acc;
            for (const auto& t : s1.differential[r]) {
                Element<F> prod = A.mul(Element<F>::path(K, t.left), Element<F>::path(K, t.right));
                acc = Element<F>::add(K, acc, Element<F>::scale(K, prod, t.coeff));
            }
            if (!acc.is_zero()) {
                report.dd_zero = false;
                report.failures.push_back({1, static_cast<int>(r), "d0 compose d1 = 0"});
            }
        }
    }

    struct PairLess {
        bool operator()(const std::pair<Path, Path>& x, const std::pair<Path, Path>& y) const {
            int c = term_cmp(x.first, y.first);
            if (c != 0) return c < 0;
            return term_cmp(x.second, y.second) < 0;
        }
    };
    for (std::size_t n = 2; n < slices.size(); ++n) {
        const auto& sn = slices[n];
        const auto& sm = slices[n - 1];
        for (std::size_t r = 0; r < sn.differential.size(); ++r) {
            // accumulate sums of left (x) right per target summand of P^{n-2}
            std::map<int, std::map<std::pair<Path, Path>, typename F::Elem, PairLess>> acc;
            for (const auto& t : sn.differential[r])
                for (const auto& t2 : sm.differential[t.target]) {
                    Element<F> left = A.mul(Element<F>::path(K, t.left), Element<F>::path(K, t2.left));
                    Element<F> right = A.mul(Element<F>::path(K, t2.right), Element<F>::path(K, t.right));
                    typename F::Elem c = K.mul(t.coeff, t2.coeff);
                    for (const auto& lt : left.terms())
                        for (const auto& rt : right.terms()) {
                            auto key = std::make_pair(lt.first, rt.first);
                            auto& slot = acc[t2.target][key];
                            slot = K.add(slot, K.mul(c, K.mul(lt.second, rt.second)));
                        }
                }
            bool zero = true;
            for (const auto& [tgt, m] : acc)
                for (const auto& [key, v] : m)
                    if (!K.is_zero(v)) zero = false;
            if (!zero) {
                report.dd_zero = false;
                report.failures.push_back({static_cast<int>(n), static_cast<int>(r), "d compose d = 0"});
            }
        }
    }
    return report;
}

// Hochschild dimensions from the resolution: Hom over the enveloping algebra
// of P^n is the direct sum of the spaces o(g^n_r) A t(g^n_r); the induced
// map precomposes with d^{n+1}.
template <class F>
std::vector<long long> hh_dims_from_resolution(const Algebra<F>& A, const std::vector<ResolutionSlice<F>>& slices,
                                               int N) {
    if (static_cast<int>(slices.size()) < N + 2)
        throw std::invalid_argument("hh_dims_from_resolution: need slices to degree N+1");
    const F& K = A.field();

    struct HomSpace {
        std::vector<std::vector<Path>> bases; // per summand
        std::vector<int> offsets;
        int dim = 0;
    };
    auto hom_space = [&](const ResolutionSlice<F>& s) {
        HomSpace h;
        for (const auto& [o, t] : s.summands) {
            h.offsets.push_back(h.dim);
            h.bases.push_back(A.basis_between(o, t));
            h.dim += static_cast<int>(h.bases.back().size());
        }
        return h;
    };

    std::vector<HomSpace> spaces;
    for (int n = 0; n <= N + 1; ++n) spaces.push_back(hom_space(slices[n]));

    // columns of delta^n : Hom(P^n) -> Hom(P^{n+1})
    auto delta_cols = [&](int n) {
        const auto& src = spaces[n];
        const auto& dst = spaces[n + 1];
        const auto& d = slices[n + 1].differential;
        std::vector<SVec<F>> cols;
        for (std::size_t rp = 0; rp < src.bases.size(); ++rp)
            for (const Path& w : src.bases[rp]) {
                std::vector<std::pair<int, typename F::Elem>> entries;
                for (std::size_t r = 0; r < d.size(); ++r)
                    for (const auto& t : d[r]) {
                        if (t.target != static_cast<int>(rp)) continue;
                        Element<F> val = A.mul(Element<F>::path(K, t.left),
                                               A.mul(Element<F>::path(K, w), Element<F>::path(K, t.right)));
                        for (const auto& term : val.terms()) {
                            // locate term in dst summand r's basis
                            const auto& basis = dst.bases[r];
                            for (int bi = 0; bi < static_cast<int>(basis.size()); ++bi)
                                if (basis[bi] == term.first) {
                                    entries.push_back({dst.offsets[r] + bi, K.mul(t.coeff, term.second)});
                                    break;
                                }
                        }
                    }
                cols.push_back(svec_canonical(K, std::move(entries)));
            }
        return cols;
    };

    std::vector<long long> dims;
    long long prev_rank = 0;
    for (int n = 0; n <= N; ++n) {
        auto cols = delta_cols(n);
        long long r = rank_of(K, cols);
        dims.push_back(spaces[n].dim - r - prev_rank);
        prev_rank = r;
    }
    return dims;
}

} // namespace qhh
