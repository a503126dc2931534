#pragma once

#include "exminor/graph/labelled_graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

namespace exminor {

struct SizeCapExceeded : std::length_error {
    using std::length_error::length_error;
};

inline LabelledGraph complete_graph(int n) {
    LabelledGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline LabelledGraph complete_bipartite(int a, int b) {
    LabelledGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

class MinorPattern {
public:
    enum class Kind { K4, K23, Custom };

    static MinorPattern k4() { return MinorPattern(Kind::K4, complete_graph(4)); }
    static MinorPattern k23() { return MinorPattern(Kind::K23, complete_bipartite(2, 3)); }
    static MinorPattern custom(LabelledGraph h) {
        if (h.n() > 6) throw SizeCapExceeded("MinorPattern: at most 6 vertices");
        if (h.n() == 0 || !bits::connected(h.rows().data(), h.all()))
            throw std::invalid_argument("MinorPattern: pattern must be connected");
        return MinorPattern(Kind::Custom, std::move(h));
    }

    Kind kind() const { return kind_; }
    const LabelledGraph& graph() const { return h_; }
    std::string name() const {
        switch (kind_) {
            case Kind::K4: return "K4";
            case Kind::K23: return "K23";
            default: return "custom";
        }
    }
    friend bool operator==(const MinorPattern& a, const MinorPattern& b) {
        return a.kind_ == b.kind_ && a.h_ == b.h_;
    }

private:
    MinorPattern(Kind k, LabelledGraph h) : kind_(k), h_(std::move(h)) {}
    Kind kind_;
    LabelledGraph h_;
};

using MinorSet = std::vector<MinorPattern>;

inline MinorSet k4_set() { return {MinorPattern::k4()}; }
inline MinorSet outerplanar_set() { return {MinorPattern::k23(), MinorPattern::k4()}; }

namespace detail {

// Is h (compact, connected) a subgraph of g restricted to mask?  Plain
// backtracking; h has at most 6 vertices.
inline bool subgraph_embeds(const VertexSet* g, VertexSet mask, const LabelledGraph& h) {
    int k = h.n();
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    // BFS-ish order so each new pattern vertex has a mapped neighbour when possible
    std::sort(order.begin(), order.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
    std::vector<int> img(k, -1);
    VertexSet used = 0;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        int a = order[i];
        VertexSet cand = mask & ~used;
        for (int j = 0; j < i; ++j)
            if (h.has_edge(a, order[j])) cand &= g[img[order[j]]];
        bool found = false;
        for_each_vertex(cand, [&](int v) {
            if (found || popcount(g[v] & mask) < h.degree(a)) return;
            img[a] = v;
            used |= bit(v);
            if (self(self, i + 1)) found = true;
            used &= ~bit(v);
        });
        return found;
    };
    return rec(rec, 0);
}

struct MinorSearch {
    const LabelledGraph& h;
    int h_edges;
    bool h_mindeg2;
    std::unordered_set<std::string> seen;

    explicit MinorSearch(const LabelledGraph& pattern) : h(pattern), h_edges(pattern.edge_count()) {
        h_mindeg2 = true;
        for (int v = 0; v < h.n(); ++v) h_mindeg2 = h_mindeg2 && h.degree(v) >= 2;
    }

    static int edges(const VertexSet* g, VertexSet mask) {
        int m = 0;
        for_each_vertex(mask, [&](int v) { m += popcount(g[v] & mask); });
        return m / 2;
    }

    // g holds 64 rows; contraction merges the larger label into the smaller so
    // the state key is just the masked rows.
    bool run(std::vector<VertexSet> g, VertexSet mask) {
        if (h_mindeg2) {
            bool changed = true;
            while (changed) {
                changed = false;
                for_each_vertex(mask, [&](int v) {
                    if (popcount(g[v] & mask) <= 1) mask &= ~bit(v), changed = true;
                });
            }
        }
        if (popcount(mask) < h.n() || edges(g.data(), mask) < h_edges) return false;
        std::string key(reinterpret_cast<const char*>(&mask), sizeof mask);
        for_each_vertex(mask, [&](int v) {
            VertexSet r = g[v] & mask;
            key.append(reinterpret_cast<const char*>(&r), sizeof r);
        });
        if (!seen.insert(key).second) return false;
        if (subgraph_embeds(g.data(), mask, h)) return true;
        bool found = false;
        for_each_vertex(mask, [&](int u) {
            for_each_vertex(g[u] & mask & ~prefix_set(u + 1), [&](int v) {
                if (found) return;
                std::vector<VertexSet> c = g;
                VertexSet nv = c[v] & mask & ~bit(u);
                c[u] = (c[u] | nv) & ~bit(v);
                for_each_vertex(nv, [&](int w) { c[w] = (c[w] & ~bit(v)) | bit(u); });
                c[u] &= ~bit(u);
                if (run(std::move(c), mask & ~bit(v))) found = true;
            });
        });
        return found;
    }
};

}  // namespace detail

// Generic minor test by exhaustive contraction: h is a minor of g iff h is a
// subgraph of some contraction of g.  Components are searched separately
// (patterns are connected).
inline bool has_minor_generic(const LabelledGraph& g, const LabelledGraph& h) {
    if (h.n() > 6) throw SizeCapExceeded("has_minor: pattern has more than 6 vertices");
    if (g.n() > 16) throw SizeCapExceeded("has_minor: generic path limited to 16 vertices");
    for (VertexSet comp : bits::components(g.rows().data(), g.all())) {
        std::vector<VertexSet> rows(64, 0);
        for (int v = 0; v < g.n(); ++v) rows[v] = g.neighbours(v);
        detail::MinorSearch s(h);
        if (s.run(rows, comp)) return true;
    }
    return false;
}

inline bool is_series_parallel(const LabelledGraph& g) { return bits::k4_free(g.rows().data(), g.all()); }

inline bool has_minor(const LabelledGraph& g, const MinorPattern& p) {
    if (p.kind() == MinorPattern::Kind::K4) return !is_series_parallel(g);
    return has_minor_generic(g, p.graph());
}

namespace bits {

// A biconnected block with >= 3 vertices is outerplanar iff it has a
// Hamiltonian cycle whose chords pairwise do not cross.
inline bool block_outerplanar(const VertexSet* adj, VertexSet b) {
    int k = popcount(b);
    if (k <= 3) return true;
    int m = 0;
    for_each_vertex(b, [&](int v) { m += popcount(adj[v] & b); });
    if (m / 2 > 2 * k - 3 || !k4_free(adj, b)) return false;
    int start = lowest(b);
    std::vector<int> path{start};
    std::vector<int> pos(64, -1);
    pos[start] = 0;
    auto chords_ok = [&]() {
        // chord (i,j) with i<j crosses (p,q) iff i<p<j<q
        std::vector<std::pair<int, int>> ch;
        for (int i = 0; i < k; ++i) {
            int v = path[i];
            for_each_vertex(adj[v] & b, [&](int u) {
                int j = pos[u];
                if (j > i + 1 && !(i == 0 && j == k - 1)) ch.emplace_back(i, j);
            });
        }
        for (auto [i, j] : ch)
            for (auto [p, q] : ch)
                if (i < p && p < j && j < q) return false;
        return true;
    };
    auto rec = [&](auto&& self, VertexSet used) -> bool {
        int v = path.back();
        if (static_cast<int>(path.size()) == k) return (adj[v] >> start) & 1 ? chords_ok() : false;
        bool ok = false;
        for_each_vertex(adj[v] & b & ~used, [&](int u) {
            if (ok) return;
            pos[u] = static_cast<int>(path.size());
            path.push_back(u);
            if (self(self, used | bit(u))) ok = true;
            path.pop_back();
            pos[u] = -1;
        });
        return ok;
    };
    return rec(rec, bit(start));
}

inline bool outerplanar(const VertexSet* adj, VertexSet mask) {
    for (VertexSet b : blocks(adj, mask))
        if (!block_outerplanar(adj, b)) return false;
    return true;
}

}  // namespace bits

// No K4 and no K_{2,3} minor, via blocks and Hamiltonian cycles; agrees with
// the generic test (property-tested).
inline bool is_outerplanar(const LabelledGraph& g) {
    if (g.n() > 16) throw SizeCapExceeded("is_outerplanar: limited to 16 vertices");
    return bits::outerplanar(g.rows().data(), g.all());
}

inline bool is_k23_set(const MinorSet& b) {
    return b.size() == 2 && std::count(b.begin(), b.end(), MinorPattern::k4()) == 1 &&
           std::count(b.begin(), b.end(), MinorPattern::k23()) == 1;
}

// g in Ex b
inline bool excludes(const LabelledGraph& g, const MinorSet& b) {
    if (b.size() == 1 && b[0].kind() == MinorPattern::Kind::K4) return is_series_parallel(g);
    if (is_k23_set(b)) return is_outerplanar(g);
    for (const auto& p : b)
        if (has_minor(g, p)) return false;
    return true;
}

}  // namespace exminor
