#pragma once

#include "exminor/graph/coloured_graph.hpp"
#include "exminor/graph/minor.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

namespace exminor {

// G^L: one new vertex per colour, adjacent to the vertices of that colour.
// The fresh labels must be n, n+1, ..., n+t-1 so that vertex ids stay 0..N-1.
inline LabelledGraph extension(const ColouredGraph& g, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != g.t()) throw std::invalid_argument("extension: need one label per colour");
    for (int i = 0; i < g.t(); ++i) {
        if (labels[i] < g.n()) throw std::invalid_argument("extension: label collides with a vertex");
        if (labels[i] != g.n() + i) throw std::invalid_argument("extension: labels must be n, n+1, ... in order");
    }
    LabelledGraph h = g.graph();
    for (int c = 1; c <= g.t(); ++c) h.add_vertex(g.coloured_with(c));
    return h;
}

inline LabelledGraph extension(const ColouredGraph& g) {
    std::vector<int> labels(g.t());
    for (int i = 0; i < g.t(); ++i) labels[i] = g.n() + i;
    return extension(g, labels);
}

// Adding one vertex joined to the c-coloured vertices keeps g in Ex b.
inline bool colour_is_good(const ColouredGraph& g, int c, const MinorSet& b) {
    if (!excludes(g.graph(), b)) throw std::invalid_argument("colour_is_good: graph already contains an excluded minor");
    LabelledGraph h = g.graph();
    h.add_vertex(g.coloured_with(c));
    return excludes(h, b);
}

inline bool is_crd_member(const ColouredGraph& g, int l, const MinorSet& b) {
    if (g.t() != l) throw std::invalid_argument("is_crd_member: colour count must equal l");
    if (!excludes(g.graph(), b)) return false;
    for (int c = 1; c <= l; ++c)
        if (!colour_is_good(g, c, b)) return false;
    return true;
}

inline bool is_blocker(const LabelledGraph& g, VertexSet q, const MinorSet& b) {
    if (q & ~g.all()) throw std::out_of_range("is_blocker: q is not a vertex subset");
    return excludes(g.without(q), b);
}

inline bool is_redundant_blocker(const LabelledGraph& g, VertexSet q, const MinorSet& b) {
    if (q == 0) return is_blocker(g, 0, b);
    bool ok = true;
    for_each_vertex(q, [&](int x) { ok = ok && is_blocker(g, q & ~bit(x), b); });
    return ok;
}

namespace detail {

inline int max_packing(const std::vector<VertexSet>& sets, VertexSet used, std::size_t from, int best_possible) {
    int best = 0;
    for (std::size_t i = from; i < sets.size(); ++i) {
        if (sets[i] & used) continue;
        int r = 1 + max_packing(sets, used | sets[i], i + 1, best_possible - 1);
        best = std::max(best, r);
        if (best >= best_possible) break;
    }
    return best;
}

}  // namespace detail

// Inclusion-minimal vertex sets whose induced subgraph has a minor in b.
inline std::vector<VertexSet> critical_sets(const LabelledGraph& g, const MinorSet& b) {
    if (g.n() > 12) throw SizeCapExceeded("critical_sets: limited to 12 vertices");
    int n = g.n();
    std::vector<char> bad(std::size_t{1} << n, 0);
    std::vector<VertexSet> out;
    std::vector<VertexSet> order;
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) order.push_back(s);
    std::stable_sort(order.begin(), order.end(), [](VertexSet a, VertexSet c) { return popcount(a) < popcount(c); });
    for (VertexSet s : order) {
        bool sub_bad = false;
        for_each_vertex(s, [&](int v) { sub_bad = sub_bad || bad[s & ~bit(v)]; });
        if (sub_bad) { bad[s] = 1; continue; }
        if (!excludes(g.induced(s), b)) {
            bad[s] = 1;
            out.push_back(s);
        }
    }
    return out;
}

// Maximum number of vertex-disjoint subgraphs with a minor in b.
inline int max_disjoint_minor_packing(const LabelledGraph& g, const MinorSet& b) {
    if (g.n() > 12) throw SizeCapExceeded("max_disjoint_minor_packing: limited to 12 vertices");
    auto sets = critical_sets(g, b);
    if (sets.empty()) return 0;
    int smallest = 64;
    for (auto s : sets) smallest = std::min(smallest, popcount(s));
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet c) { return popcount(a) < popcount(c); });
    return detail::max_packing(sets, 0, 0, g.n() / smallest);
}

// Vertex-capacitated max flow from the colour-1 vertices to the colour-2
// vertices (a vertex with both colours is a path by itself).  If at most l
// disjoint paths exist the minimum vertex cut is returned.
inline std::optional<VertexSet> colour_separator(const ColouredGraph& g, int l) {
    if (g.t() != 2) throw std::invalid_argument("colour_separator: needs exactly 2 colours");
    int n = g.n();
    int S = 2 * n, T = 2 * n + 1, N = 2 * n + 2;
    const int inf = 1 << 20;
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    for (int v = 0; v < n; ++v) {
        cap[2 * v][2 * v + 1] = 1;
        if (g.colour(v).has(1)) cap[S][2 * v] = inf;
        if (g.colour(v).has(2)) cap[2 * v + 1][T] = inf;
        for_each_vertex(g.graph().neighbours(v), [&](int u) { cap[2 * v + 1][2 * u] = inf; });
    }
    int flow = 0;
    std::vector<int> prev(N);
    auto bfs = [&]() {
        std::fill(prev.begin(), prev.end(), -1);
        prev[S] = S;
        std::queue<int> q;
        q.push(S);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int c = 0; c < N; ++c)
                if (prev[c] < 0 && cap[a][c] > 0) prev[c] = a, q.push(c);
        }
        return prev[T] >= 0;
    };
    while (bfs()) {
        for (int c = T; c != S; c = prev[c]) cap[prev[c]][c] -= 1, cap[c][prev[c]] += 1;
        if (++flow > l) return std::nullopt;
    }
    VertexSet cut = 0;
    for (int v = 0; v < n; ++v)
        if (prev[2 * v] >= 0 && prev[2 * v + 1] < 0) cut |= bit(v);
    return cut;
}

// Every component of g - s carries at most one of the two colours.
inline bool separates_colours(const ColouredGraph& g, VertexSet s) {
    for (VertexSet c : bits::components(g.graph().rows().data(), g.graph().all() & ~s)) {
        ColourMask m = g.colours_in(c);
        if (m.has(1) && m.has(2)) return false;
    }
    return true;
}

// Pendant induced paths v_1..v_{l+1}, joined to the rest only by u v_1 with u
// smaller than every path vertex, all coloured {1..l, x} for one x in l+1..r.
inline int spike_count(const ColouredGraph& g, int l, int r) {
    if (g.t() != r) throw std::invalid_argument("spike_count: colour count must equal r");
    const auto& G = g.graph();
    const VertexSet* adj = G.rows().data();
    int count = 0;
    for (int v1 = 0; v1 < g.n(); ++v1) {
        for_each_vertex(G.neighbours(v1), [&](int u) {
            std::vector<VertexSet> rows = G.rows();
            rows[u] &= ~bit(v1);
            rows[v1] &= ~bit(u);
            VertexSet h = bits::reach(rows.data(), G.all(), v1);
            if (h & bit(u) || popcount(h) != l + 1) return;
            if (u > lowest(h)) return;
            // edges leaving h other than u v1
            bool single = true;
            for_each_vertex(h, [&](int v) {
                VertexSet out = adj[v] & ~h;
                if (v == v1 ? out != bit(u) : out != 0) single = false;
            });
            if (!single) return;
            // induced path with v1 as an end
            int ends = 0;
            bool path = true;
            for_each_vertex(h, [&](int v) {
                int d = popcount(adj[v] & h);
                if (l == 0) return;
                if (d == 1) ++ends;
                else if (d != 2) path = false;
            });
            if (l > 0 && (!path || ends != 2 || popcount(adj[v1] & h) != 1)) return;
            ColourMask m = g.colour(v1);
            bool same = true;
            for_each_vertex(h, [&](int v) { same = same && g.colour(v) == m; });
            if (!same) return;
            if (!ColourMask::full(l).subset_of(m)) return;
            ColourMask extra(m.bits & ~ColourMask::full(l).bits);
            if (extra.size() != 1) return;
            int x = lowest(extra.bits) + 1;
            if (x <= l || x > r) return;
            ++count;
        });
    }
    return count;
}

// x such that g - x has at least two components containing all colours 1..l
inline VertexSet nice_vertices(const ColouredGraph& g, int l) {
    const auto& G = g.graph();
    if (!bits::connected(G.rows().data(), G.all())) throw std::invalid_argument("nice_vertices: graph must be connected");
    if (g.t() != l) throw std::invalid_argument("nice_vertices: colour count must equal l");
    VertexSet nice = 0;
    ColourMask all = ColourMask::full(l);
    for (int x = 0; x < g.n(); ++x) {
        int full = 0;
        for (VertexSet c : bits::components(G.rows().data(), G.all() & ~bit(x)))
            if (all.subset_of(g.colours_in(c))) ++full;
        if (full >= 2) nice |= bit(x);
    }
    return nice;
}

namespace detail {

// Each colour c in C is good for the rooted graph: a new vertex joined to the
// root and to every c-coloured vertex leaves the graph series-parallel.
inline bool rooted_colours_good(const ColouredGraph& g, int root, ColourMask C) {
    for (int c = 1; c <= 16; ++c) {
        if (!C.has(c)) continue;
        LabelledGraph h = g.graph();
        h.add_vertex(g.coloured_with(c) | bit(root));
        if (!is_series_parallel(h)) return false;
    }
    return true;
}

// Connected, and for every vertex x each component of g - x contains a colour
// or the root.
inline bool no_uncoloured_branch(const ColouredGraph& g, int root) {
    const auto& G = g.graph();
    const VertexSet* adj = G.rows().data();
    if (!bits::connected(adj, G.all())) return false;
    VertexSet marked = g.coloured_vertices() | bit(root);
    for (int x = 0; x < g.n(); ++x)
        for (VertexSet c : bits::components(adj, G.all() & ~bit(x)))
            if (!(c & marked)) return false;
    return true;
}

}  // namespace detail

// C-tree: all colours good with respect to the root, no uncoloured rootless
// branch, root uncoloured, not a cut vertex and not alone; C = Col(g).
inline bool is_c_tree(const ColouredGraph& g, int root, ColourMask C) {
    if (root < 0 || root >= g.n()) throw std::out_of_range("is_c_tree: root out of range");
    if (!g.colour(root).empty()) throw std::invalid_argument("is_c_tree: root must be uncoloured");
    if (C.empty() || g.used_colours() != C || g.n() < 2) return false;
    if (bits::cut_vertices(g.graph().rows().data(), g.graph().all()) & bit(root)) return false;
    return detail::no_uncoloured_branch(g, root) && detail::rooted_colours_good(g, root, C);
}

// Member of Ahat_C: conditions (a) and (b) only; the root may be coloured or
// a cut vertex and may be alone.
inline bool is_ahat_member(const ColouredGraph& g, int root, ColourMask C) {
    if (root < 0 || root >= g.n()) throw std::out_of_range("is_ahat_member: root out of range");
    if (g.used_colours() != C) return false;
    return detail::no_uncoloured_branch(g, root) && detail::rooted_colours_good(g, root, C);
}

}  // namespace exminor
