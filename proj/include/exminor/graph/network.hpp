#pragma once

#include "exminor/graph/minor.hpp"

#include <stdexcept>
#include <string>

namespace exminor {

// Two-pole network stored as one graph whose last two vertices are the
// poles; the poles carry no label and size() counts only internal vertices.
// The degenerate network (a single pole, no edge) has its own flag.
class TwoPoleNetwork {
public:
    TwoPoleNetwork() : degenerate_(true) {}
    // g has internal vertices 0..n-3 and poles n-2 (source), n-1 (sink)
    explicit TwoPoleNetwork(LabelledGraph g) : g_(std::move(g)) {
        if (g_.n() < 2) throw std::invalid_argument("TwoPoleNetwork: needs two poles");
    }
    static TwoPoleNetwork degenerate() { return TwoPoleNetwork(); }
    // internal graph plus the neighbourhoods of the poles
    static TwoPoleNetwork from_parts(const LabelledGraph& internal, VertexSet source_nbrs, VertexSet sink_nbrs,
                                     bool pole_edge) {
        LabelledGraph g = internal;
        int s = g.add_vertex(source_nbrs);
        int t = g.add_vertex(sink_nbrs);
        if (pole_edge) g.add_edge(s, t);
        return TwoPoleNetwork(std::move(g));
    }

    bool is_degenerate() const { return degenerate_; }
    int size() const { return degenerate_ ? 0 : g_.n() - 2; }
    int source() const { return g_.n() - 2; }
    int sink() const { return g_.n() - 1; }
    const LabelledGraph& graph() const { return g_; }
    LabelledGraph internal() const { return g_.induced(prefix_set(size())); }
    VertexSet pole_neighbours(int pole) const { return g_.neighbours(pole) & prefix_set(size()); }
    bool has_pole_edge() const { return !degenerate_ && g_.has_edge(source(), sink()); }

    // the graph with the pole edge added
    LabelledGraph closed() const {
        LabelledGraph h = g_;
        if (!h.has_edge(source(), sink())) h.add_edge(source(), sink());
        return h;
    }

private:
    LabelledGraph g_;
    bool degenerate_ = false;
};

enum class NetworkKind { E2, Series, Parallel, NotSP };

inline std::string to_string(NetworkKind k) {
    switch (k) {
        case NetworkKind::E2: return "E2";
        case NetworkKind::Series: return "S";
        case NetworkKind::Parallel: return "P";
        default: return "NotSP";
    }
}

namespace bits {

// Raw-row version for the enumeration loops; poles are s and t inside mask.
// Assumes mask is connected; returns NotSP also when the closure is not
// 2-connected.
inline NetworkKind classify_network(const VertexSet* adj, VertexSet mask, int s, int t) {
    VertexSet rows[64];
    for_each_vertex(mask, [&](int v) { rows[v] = adj[v] & mask; });
    bool st = (rows[s] >> t) & 1;
    if (popcount(mask) == 2) return st ? NetworkKind::E2 : NetworkKind::NotSP;
    rows[s] |= bit(t);
    rows[t] |= bit(s);
    if (!two_connected(rows, mask) || !k4_free(rows, mask)) return NetworkKind::NotSP;
    if (st) return NetworkKind::Parallel;
    // without the pole edge: series iff some internal vertex separates s from t
    rows[s] &= ~bit(t);
    rows[t] &= ~bit(s);
    VertexSet internal = mask & ~bit(s) & ~bit(t);
    bool series = false;
    for_each_vertex(internal, [&](int v) {
        if (!series && !(reach(rows, mask & ~bit(v), s) & bit(t))) series = true;
    });
    return series ? NetworkKind::Series : NetworkKind::Parallel;
}

}  // namespace bits

inline NetworkKind classify_network(const TwoPoleNetwork& d) {
    if (d.is_degenerate()) throw std::invalid_argument("classify_network: degenerate network");
    const auto& g = d.graph();
    if (!bits::connected(g.rows().data(), g.all())) throw std::invalid_argument("classify_network: disconnected network");
    return bits::classify_network(g.rows().data(), g.all(), d.source(), d.sink());
}

}  // namespace exminor
