#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exminor {

using VertexSet = std::uint64_t;

inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline VertexSet prefix_set(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

template <class F>
inline void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        int v = lowest(s);
        s &= s - 1;
        f(v);
    }
}

// Simple undirected graph on 0..n-1, n <= 64, one adjacency bitset per vertex.
class LabelledGraph {
public:
    LabelledGraph() = default;
    explicit LabelledGraph(int n) : adj_(check_n(n)) {}
    LabelledGraph(int n, const std::vector<std::pair<int, int>>& edges) : LabelledGraph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int n() const { return static_cast<int>(adj_.size()); }
    VertexSet all() const { return prefix_set(n()); }
    VertexSet neighbours(int v) const { return adj_.at(v); }
    const std::vector<VertexSet>& rows() const { return adj_; }
    int degree(int v) const { return popcount(adj_.at(v)); }
    bool has_edge(int u, int v) const { return (adj_.at(u) >> v) & 1; }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }
    void remove_edge(int u, int v) {
        check_pair(u, v);
        adj_[u] &= ~bit(v);
        adj_[v] &= ~bit(u);
    }
    // Append a vertex adjacent to the given set; returns its id.
    int add_vertex(VertexSet nbrs = 0) {
        if (n() >= 64) throw std::length_error("LabelledGraph: more than 64 vertices");
        if (nbrs & ~all()) throw std::out_of_range("add_vertex: neighbour out of range");
        int v = n();
        adj_.push_back(nbrs);
        for_each_vertex(nbrs, [&](int u) { adj_[u] |= bit(v); });
        return v;
    }

    int edge_count() const {
        int m = 0;
        for (auto r : adj_) m += popcount(r);
        return m / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n(); ++u)
            for_each_vertex(adj_[u] & ~prefix_set(u + 1), [&](int v) { e.emplace_back(u, v); });
        return e;
    }

    // Subgraph induced on s, relabelled to 0..|s|-1 in increasing order.
    LabelledGraph induced(VertexSet s) const {
        std::vector<int> idx(n(), -1);
        int k = 0;
        for_each_vertex(s & all(), [&](int v) { idx[v] = k++; });
        LabelledGraph h(k);
        for_each_vertex(s & all(), [&](int v) {
            for_each_vertex(adj_[v] & s, [&](int u) { h.adj_[idx[v]] |= bit(idx[u]); });
        });
        return h;
    }
    LabelledGraph without(VertexSet q) const { return induced(all() & ~q); }

    friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;

private:
    static int check_n(int n) {
        if (n < 0 || n > 64) throw std::length_error("LabelledGraph: n must be in 0..64");
        return n;
    }
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n() || v >= n()) throw std::out_of_range("vertex out of range");
        if (u == v) throw std::invalid_argument("self-loop");
    }
    std::vector<VertexSet> adj_;
};

// Bitset routines on raw rows restricted to a vertex mask; used directly by
// the enumeration loops, which never materialise LabelledGraph objects.
namespace bits {

inline VertexSet reach(const VertexSet* adj, VertexSet mask, int start) {
    VertexSet seen = bit(start) & mask, frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= adj[v]; });
        frontier = next & mask & ~seen;
        seen |= frontier;
    }
    return seen;
}

inline bool connected(const VertexSet* adj, VertexSet mask) {
    return mask == 0 || reach(adj, mask, lowest(mask)) == mask;
}

inline std::vector<VertexSet> components(const VertexSet* adj, VertexSet mask) {
    std::vector<VertexSet> out;
    while (mask) {
        VertexSet c = reach(adj, mask, lowest(mask));
        out.push_back(c);
        mask &= ~c;
    }
    return out;
}

inline VertexSet cut_vertices(const VertexSet* adj, VertexSet mask) {
    VertexSet cuts = 0;
    for_each_vertex(mask, [&](int v) {
        VertexSet rest = mask & ~bit(v);
        VertexSet comp = reach(adj, mask, v);
        VertexSet others = comp & ~bit(v);
        if (others && reach(adj, rest, lowest(others)) != others) cuts |= bit(v);
    });
    return cuts;
}

// 2-connected: at least 3 vertices, connected, no cut vertex.
inline bool two_connected(const VertexSet* adj, VertexSet mask) {
    if (popcount(mask) < 3 || !connected(adj, mask)) return false;
    bool ok = true;
    for_each_vertex(mask, [&](int v) {
        if (ok && !connected(adj, mask & ~bit(v))) ok = false;
    });
    return ok;
}

// 2-connected or a single edge.
inline bool biconnected(const VertexSet* adj, VertexSet mask) {
    if (popcount(mask) == 2) return (adj[lowest(mask)] & mask) != 0;
    return two_connected(adj, mask);
}

// Series-parallel reduction: drop vertices of degree <= 1, replace degree-2
// vertices by an edge between their neighbours (parallel edges merge in the
// bitset).  A K4 minor exists iff something survives; the survivor has
// minimum degree >= 3.
inline bool k4_free(const VertexSet* adj, VertexSet mask) {
    VertexSet rows[64];
    for_each_vertex(mask, [&](int v) { rows[v] = adj[v] & mask; });
    VertexSet alive = mask;
    bool changed = true;
    while (changed && alive) {
        changed = false;
        for_each_vertex(alive, [&](int v) {
            VertexSet nb = rows[v];
            int d = popcount(nb);
            if (d > 2) return;
            alive &= ~bit(v);
            for_each_vertex(nb, [&](int u) { rows[u] &= ~bit(v); });
            if (d == 2) {
                int a = lowest(nb), b = lowest(nb & (nb - 1));
                rows[a] |= bit(b);
                rows[b] |= bit(a);
            }
            changed = true;
        });
    }
    return alive == 0;
}

// Vertex sets of the blocks (maximal biconnected subgraphs, bridges included);
// isolated vertices form no block.
inline std::vector<VertexSet> blocks(const VertexSet* adj, VertexSet mask) {
    std::vector<VertexSet> out;
    int disc[64], low[64], timer = 0;
    for (int& d : disc) d = -1;
    std::vector<std::pair<int, int>> stack;
    auto dfs = [&](auto&& self, int v, int parent) -> void {
        disc[v] = low[v] = timer++;
        for_each_vertex(adj[v] & mask, [&](int u) {
            if (u == parent) return;
            if (disc[u] < 0) {
                stack.emplace_back(v, u);
                self(self, u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) {
                    VertexSet b = 0;
                    while (true) {
                        auto [a, c] = stack.back();
                        stack.pop_back();
                        b |= bit(a) | bit(c);
                        if (a == v && c == u) break;
                    }
                    out.push_back(b);
                }
            } else if (disc[u] < disc[v]) {
                stack.emplace_back(v, u);
                low[v] = std::min(low[v], disc[u]);
            }
        });
    };
    for_each_vertex(mask, [&](int v) {
        if (disc[v] < 0) dfs(dfs, v, -1);
    });
    return out;
}

}  // namespace bits

}  // namespace exminor
