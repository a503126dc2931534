#pragma once

#include "exminor/graph/labelled_graph.hpp"

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace exminor {

// Subset of colours {1..16}; colour c is bit c-1.
struct ColourMask {
    std::uint16_t bits = 0;

    ColourMask() = default;
    constexpr explicit ColourMask(std::uint16_t b) : bits(b) {}
    ColourMask(std::initializer_list<int> colours) {
        for (int c : colours) add(c);
    }
    static ColourMask full(int t) { return ColourMask(static_cast<std::uint16_t>((1u << t) - 1)); }

    bool has(int c) const { return c >= 1 && c <= 16 && ((bits >> (c - 1)) & 1); }
    void add(int c) {
        if (c < 1 || c > 16) throw std::out_of_range("colour must be in 1..16");
        bits |= static_cast<std::uint16_t>(1u << (c - 1));
    }
    bool empty() const { return bits == 0; }
    int size() const { return std::popcount(static_cast<unsigned>(bits)); }
    bool subset_of(ColourMask o) const { return (bits & ~o.bits) == 0; }
    friend ColourMask operator|(ColourMask a, ColourMask b) { return ColourMask(a.bits | b.bits); }
    friend ColourMask operator&(ColourMask a, ColourMask b) { return ColourMask(a.bits & b.bits); }
    friend bool operator==(ColourMask, ColourMask) = default;
};

class ColouredGraph {
public:
    ColouredGraph() = default;
    ColouredGraph(LabelledGraph g, int t) : ColouredGraph(std::move(g), t, {}) {}
    ColouredGraph(LabelledGraph g, int t, std::vector<ColourMask> colours)
        : g_(std::move(g)), t_(t), col_(std::move(colours)) {
        if (t < 0 || t > 16) throw std::out_of_range("ColouredGraph: t must be in 0..16");
        if (col_.empty()) col_.resize(g_.n());
        if (static_cast<int>(col_.size()) != g_.n()) throw std::invalid_argument("ColouredGraph: one mask per vertex");
        for (auto m : col_)
            if (!m.subset_of(ColourMask::full(t_))) throw std::invalid_argument("ColouredGraph: colour outside 1..t");
    }

    const LabelledGraph& graph() const { return g_; }
    int n() const { return g_.n(); }
    int t() const { return t_; }
    ColourMask colour(int v) const { return col_.at(v); }
    const std::vector<ColourMask>& colours() const { return col_; }
    void set_colour(int v, ColourMask m) {
        if (!m.subset_of(ColourMask::full(t_))) throw std::invalid_argument("colour outside 1..t");
        col_.at(v) = m;
    }

    // vertices carrying colour c
    VertexSet coloured_with(int c) const {
        VertexSet s = 0;
        for (int v = 0; v < n(); ++v)
            if (col_[v].has(c)) s |= bit(v);
        return s;
    }
    VertexSet coloured_vertices() const {
        VertexSet s = 0;
        for (int v = 0; v < n(); ++v)
            if (!col_[v].empty()) s |= bit(v);
        return s;
    }
    ColourMask used_colours() const {
        ColourMask m;
        for (auto c : col_) m = m | c;
        return m;
    }
    ColourMask colours_in(VertexSet s) const {
        ColourMask m;
        for_each_vertex(s, [&](int v) { m = m | col_[v]; });
        return m;
    }

private:
    LabelledGraph g_;
    int t_ = 0;
    std::vector<ColourMask> col_;
};

}  // namespace exminor
