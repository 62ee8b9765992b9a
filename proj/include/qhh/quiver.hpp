#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhh {

// A quiver is a finite directed multigraph. Vertices and arrows are
// identified by their declaration index; declaration order seeds the term
// order on paths, so it is part of the data.

struct Arrow {
    std::string name;
    int from = -1;
    int to = -1;
};

class Quiver {
public:
    int add_vertex(const std::string& name) {
        if (find_vertex(name)) throw std::invalid_argument("duplicate vertex name: " + name);
        vertices_.push_back(name);
        return static_cast<int>(vertices_.size()) - 1;
    }
    int add_arrow(const std::string& name, int from, int to) {
        if (find_arrow(name)) throw std::invalid_argument("duplicate arrow name: " + name);
        if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count())
            throw std::invalid_argument("arrow endpoint out of range for arrow " + name);
        arrows_.push_back(Arrow{name, from, to});
        return static_cast<int>(arrows_.size()) - 1;
    }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    const std::string& vertex_name(int v) const { return vertices_.at(v); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }

    std::optional<int> find_vertex(const std::string& name) const {
        for (int i = 0; i < vertex_count(); ++i)
            if (vertices_[i] == name) return i;
        return std::nullopt;
    }
    std::optional<int> find_arrow(const std::string& name) const {
        for (int i = 0; i < arrow_count(); ++i)
            if (arrows_[i].name == name) return i;
        return std::nullopt;
    }

    bool operator==(const Quiver& o) const {
        if (vertices_ != o.vertices_) return false;
        if (arrows_.size() != o.arrows_.size()) return false;
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].name != o.arrows_[i].name || arrows_[i].from != o.arrows_[i].from ||
                arrows_[i].to != o.arrows_[i].to)
                return false;
        return true;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

// A path: either the trivial path at a vertex (no arrows) or a composable
// arrow sequence, written left to right. Endpoints are cached so composition
// needs no quiver lookup.
struct Path {
    int from = -1;
    int to = -1;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool is_trivial() const { return arrows.empty(); }

    static Path trivial(int v) { return Path{v, v, {}}; }

    bool operator==(const Path& o) const { return from == o.from && to == o.to && arrows == o.arrows; }
};

inline Path make_path(const Quiver& q, const std::vector<int>& arrow_ids) {
    if (arrow_ids.empty()) throw std::invalid_argument("make_path: empty arrow list (use Path::trivial)");
    for (std::size_t i = 0; i + 1 < arrow_ids.size(); ++i)
        if (q.arrow(arrow_ids[i]).to != q.arrow(arrow_ids[i + 1]).from)
            throw std::invalid_argument("make_path: non-composable arrow sequence");
    return Path{q.arrow(arrow_ids.front()).from, q.arrow(arrow_ids.back()).to, arrow_ids};
}

// Term order: by length, then lexicographically by arrow declaration order;
// trivial paths are ordered by vertex. Total on paths of a fixed quiver.
inline int term_cmp(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
    if (a.is_trivial()) return a.from == b.from ? 0 : (a.from < b.from ? -1 : 1);
    if (a.arrows != b.arrows) return a.arrows < b.arrows ? -1 : 1;
    return 0;
}

struct PathLess {
    bool operator()(const Path& a, const Path& b) const { return term_cmp(a, b) < 0; }
};

inline bool composable(const Path& p, const Path& q) { return p.to == q.from; }

inline std::optional<Path> compose(const Path& p, const Path& q) {
    if (!composable(p, q)) return std::nullopt;
    Path r;
    r.from = p.from;
    r.to = q.to;
    r.arrows.reserve(p.arrows.size() + q.arrows.size());
    r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

// Nonempty subpath [pos, pos+len) of p; len >= 1.
inline Path subpath(const Quiver& q, const Path& p, int pos, int len) {
    std::vector<int> ids(p.arrows.begin() + pos, p.arrows.begin() + pos + len);
    return make_path(q, ids);
}

// Subpath allowing len = 0 (trivial path at the appropriate vertex).
inline Path subpath_or_vertex(const Quiver& q, const Path& p, int pos, int len) {
    if (len == 0) {
        int v = (pos == 0) ? p.from : q.arrow(p.arrows[pos - 1]).to;
        return Path::trivial(v);
    }
    return subpath(q, p, pos, len);
}

// First position >= start where `needle` occurs as a contiguous subword of
// `hay`, or -1.
inline int find_subpath(const Path& hay, const Path& needle, int start = 0) {
    int n = hay.length(), m = needle.length();
    if (m == 0 || m > n) return -1;
    for (int i = start; i + m <= n; ++i) {
        bool ok = true;
        for (int j = 0; j < m; ++j)
            if (hay.arrows[i + j] != needle.arrows[j]) { ok = false; break; }
        if (ok) return i;
    }
    return -1;
}

// All paths of length exactly n, in term order.
inline std::vector<Path> paths_of_length(const Quiver& q, int n) {
    if (n < 0) throw std::invalid_argument("paths_of_length: negative length");
    std::vector<Path> cur;
    for (int v = 0; v < q.vertex_count(); ++v) cur.push_back(Path::trivial(v));
    for (int step = 0; step < n; ++step) {
        std::vector<Path> next;
        for (const Path& p : cur)
            for (int a = 0; a < q.arrow_count(); ++a)
                if (q.arrow(a).from == p.to) {
                    Path e = p;
                    e.arrows.push_back(a);
                    e.to = q.arrow(a).to;
                    next.push_back(std::move(e));
                }
        cur = std::move(next);
    }
    return cur;
}

inline std::string path_str(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return "e_" + q.vertex_name(p.from);
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrow(p.arrows[i]).name;
    }
    return s;
}

} // namespace qhh
