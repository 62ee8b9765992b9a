#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhh/quiver.hpp"

namespace qhh {

// Overlap machinery for monomial ideals: a path q overlaps a path p with
// overlap pu when pu = vq with 1 <= l(u) < l(q); the overlap is proper when
// l(v) >= 1.
struct Overlap {
    Path p, q, u, v;
    bool proper = false;
};

inline std::vector<Overlap> overlaps(const Quiver& quiver, const Path& q, const Path& p) {
    if (p.is_trivial() || q.is_trivial()) throw std::invalid_argument("overlaps: paths must be nontrivial");
    std::vector<Overlap> out;
    int lp = p.length(), lq = q.length();
    // u takes the last k arrows of q; the other lq - k arrows of q must match
    // the tail of p, so l(v) = lp + k - lq >= 0.
    for (int k = 1; k < lq; ++k) {
        int overlap_len = lq - k;
        if (overlap_len > lp) continue;
        bool match = true;
        for (int t = 0; t < overlap_len; ++t)
            if (p.arrows[lp - overlap_len + t] != q.arrows[t]) { match = false; break; }
        if (!match) continue;
        Overlap o;
        o.p = p;
        o.q = q;
        o.u = subpath(quiver, q, overlap_len, k);
        o.v = subpath_or_vertex(quiver, p, 0, lp - overlap_len);
        o.proper = o.v.length() >= 1;
        out.push_back(std::move(o));
    }
    return out;
}

// One element of a degree-n overlap set, with provenance: the index of the
// degree-(n-1) element it extends and the relation that maximally overlaps.
struct APElement {
    Path path;
    int parent = -1;       // index into the previous level
    int relation = -1;     // index into rho (n >= 3)
    int prefix_len = 0;    // length of the level-(n-2) ancestor prefix
};

struct APSets {
    Quiver quiver;
    std::vector<Path> rho;
    std::vector<std::vector<APElement>> levels; // 0..N
};

// The recursive sets R^n: R^0 = vertices, R^1 = arrows, R^2 = rho, and for
// n >= 3 the maximal overlaps R^n = R^{n-1} u where some relation overlaps
// the part p of R^{n-1} beyond R^{n-2} and no relation overlap is a proper
// prefix of pu.
inline APSets build_ap_sets(const Quiver& quiver, const std::vector<Path>& rho, int N) {
    for (const Path& r : rho) {
        if (r.length() < 2) throw std::invalid_argument("build_ap_sets: relation of length < 2");
        for (const Path& s : rho) {
            if (&r == &s) continue;
            if (find_subpath(r, s) >= 0)
                throw std::invalid_argument("build_ap_sets: rho not minimal (one relation is a subpath of another)");
        }
    }
    for (std::size_t i = 0; i < rho.size(); ++i)
        for (std::size_t j = i + 1; j < rho.size(); ++j)
            if (rho[i] == rho[j]) throw std::invalid_argument("build_ap_sets: duplicate relation");

    APSets sets;
    sets.quiver = quiver;
    sets.rho = rho;
    sets.levels.resize(std::max(N + 1, 0));
    if (N >= 0)
        for (int v = 0; v < quiver.vertex_count(); ++v)
            sets.levels[0].push_back(APElement{Path::trivial(v), -1, -1, 0});
    if (N >= 1)
        for (int a = 0; a < quiver.arrow_count(); ++a)
            sets.levels[1].push_back(APElement{make_path(quiver, {a}), -1, -1, 0});
    if (N >= 2) {
        std::vector<Path> sorted = rho;
        std::sort(sorted.begin(), sorted.end(), PathLess{});
        for (const Path& r : sorted)
            sets.levels[2].push_back(APElement{r, -1, -1, 1}); // R^2 = R^1 p with R^1 the first arrow
    }
    for (int n = 3; n <= N; ++n) {
        std::vector<APElement> level;
        const auto& prev = sets.levels[n - 1];
        for (int pi = 0; pi < static_cast<int>(prev.size()); ++pi) {
            const APElement& e = prev[pi];
            Path p = subpath(quiver, e.path, e.prefix_len, e.path.length() - e.prefix_len);
            // candidate maximal overlaps of p by elements of rho
            struct Cand { int rel; Path u; };
            std::vector<Cand> cands;
            for (int ri = 0; ri < static_cast<int>(rho.size()); ++ri)
                for (const Overlap& o : overlaps(quiver, rho[ri], p)) cands.push_back({ri, o.u});
            for (const Cand& c : cands) {
                bool dominated = false;
                for (const Cand& d : cands) {
                    if (d.u.length() < c.u.length() &&
                        std::equal(d.u.arrows.begin(), d.u.arrows.end(), c.u.arrows.begin()))
                        { dominated = true; break; }
                }
                if (dominated) continue;
                Path ext = *compose(e.path, c.u);
                level.push_back(APElement{std::move(ext), pi, c.rel, e.path.length()});
            }
        }
        // distinct paths within a degree, term order
        std::sort(level.begin(), level.end(),
                  [](const APElement& a, const APElement& b) { return term_cmp(a.path, b.path) < 0; });
        level.erase(std::unique(level.begin(), level.end(),
                                [](const APElement& a, const APElement& b) { return a.path == b.path; }),
                    level.end());
        if (level.empty()) break; // all higher sets are empty
        sets.levels[n] = std::move(level);
    }
    return sets;
}

// P^n = sum of projective bimodules, one summand per R^n, labeled by the
// endpoint vertices of R^n.
struct BardzellSlice {
    int degree = 0;
    std::vector<std::pair<int, int>> summands; // (origin, tail) vertex ids
};

inline std::vector<BardzellSlice> bardzell_projectives(const APSets& sets) {
    std::vector<BardzellSlice> out;
    for (int n = 0; n < static_cast<int>(sets.levels.size()); ++n) {
        BardzellSlice s;
        s.degree = n;
        for (const APElement& e : sets.levels[n]) s.summands.push_back({e.path.from, e.path.to});
        out.push_back(std::move(s));
    }
    return out;
}

// entry (i,j) = number of R^n with origin i and tail j = dim Ext^n(S_i, S_j)
inline std::vector<std::vector<long long>> ext_table(const APSets& sets, int n) {
    int V = sets.quiver.vertex_count();
    std::vector<std::vector<long long>> table(V, std::vector<long long>(V, 0));
    if (n >= 0 && n < static_cast<int>(sets.levels.size()))
        for (const APElement& e : sets.levels[n]) ++table[e.path.from][e.path.to];
    return table;
}

struct StackedVerdict {
    bool stacked = false;
    int D = 0;
    int A = 0;
    int violation_degree = -1;
    int observed_length = -1;
};

// (D,A)-stacked test: l(R^n) = (n/2) D for even n and ((n-1)/2) D + A for odd
// n, for all 2 <= n <= N. When no odd level >= 3 is nonempty, A is reported
// as 1 (any value satisfies the definition vacuously).
inline StackedVerdict is_da_stacked(const APSets& sets, int N) {
    StackedVerdict v;
    if (sets.levels.size() < 3 || sets.levels[2].empty())
        throw std::invalid_argument("is_da_stacked: sets must be built to degree >= 2 with nonempty rho");
    int D = sets.levels[2][0].path.length();
    for (const APElement& e : sets.levels[2])
        if (e.path.length() != D) {
            v.violation_degree = 2;
            v.observed_length = e.path.length();
            return v;
        }
    int A = -1;
    for (int n = 3; n <= N && n < static_cast<int>(sets.levels.size()); n += 2) {
        if (!sets.levels[n].empty()) {
            A = sets.levels[n][0].path.length() - ((n - 1) / 2) * D;
            break;
        }
    }
    if (A < 0) A = 1;
    for (int n = 2; n <= N && n < static_cast<int>(sets.levels.size()); ++n) {
        long long want = (n % 2 == 0) ? static_cast<long long>(n / 2) * D
                                      : static_cast<long long>((n - 1) / 2) * D + A;
        for (const APElement& e : sets.levels[n])
            if (e.path.length() != want) {
                v.violation_degree = n;
                v.observed_length = e.path.length();
                return v;
            }
    }
    if (D < 2 || A < 1) {
        v.violation_degree = 2;
        v.observed_length = D;
        return v;
    }
    v.stacked = true;
    v.D = D;
    v.A = A;
    return v;
}

} // namespace qhh
