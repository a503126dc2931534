#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace exminor {

// Unlabelled tree with k distinctly coloured vertices (colour 1..k, 0 = none)
// in which every uncoloured vertex has degree >= 3.  Such trees have no
// nontrivial automorphism, so shapes and isomorphism classes coincide.
struct TreeShape {
    std::vector<int> colour;
    std::vector<std::pair<int, int>> edges;

    int vertices() const { return static_cast<int>(colour.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<int> degrees() const {
        std::vector<int> d(colour.size());
        for (auto [u, v] : edges) ++d[u], ++d[v];
        return d;
    }
    int leaves() const {
        int f = 0;
        for (int d : degrees()) f += d <= 1;
        return f;
    }
    // Vertices that may optionally be joined to the root of a fan: coloured
    // non-leaves and uncoloured branch vertices.
    int optional_root_edges() const { return vertices() - leaves(); }
};

namespace detail {

inline std::vector<TreeShape> grow_shapes(const TreeShape& t, int c) {
    std::vector<TreeShape> out;
    int n = t.vertices();
    for (int v = 0; v < n; ++v) {
        if (t.colour[v] == 0) {
            TreeShape s = t;
            s.colour[v] = c;
            out.push_back(std::move(s));
        }
    }
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        auto [a, b] = t.edges[i];
        TreeShape s = t;
        s.colour.push_back(c);
        s.edges[i] = {a, n};
        s.edges.emplace_back(n, b);
        out.push_back(std::move(s));
    }
    for (int v = 0; v < n; ++v) {
        TreeShape s = t;
        s.colour.push_back(c);
        s.edges.emplace_back(v, n);
        out.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        auto [a, b] = t.edges[i];
        TreeShape s = t;
        s.colour.push_back(0);
        s.colour.push_back(c);
        s.edges[i] = {a, n};
        s.edges.emplace_back(n, b);
        s.edges.emplace_back(n, n + 1);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace detail

// All shapes of UT'_k.  Each shape for k+1 arises from exactly one shape for
// k by placing colour k+1: on an uncoloured vertex, on a new vertex
// subdividing an edge, on a new leaf, or on a new leaf hung from a new
// vertex subdividing an edge.  Removing colour k+1 inverts the choice.
inline std::vector<TreeShape> enumerate_ut_trees(int k) {
    if (k < 1 || k > 6) throw std::out_of_range("enumerate_ut_trees: k must be in 1..6");
    std::vector<TreeShape> cur{TreeShape{{1}, {}}};
    for (int c = 2; c <= k; ++c) {
        std::vector<TreeShape> next;
        for (const auto& t : cur)
            for (auto& s : detail::grow_shapes(t, c)) next.push_back(std::move(s));
        cur = std::move(next);
    }
    return cur;
}

}  // namespace exminor
