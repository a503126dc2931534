#pragma once

// Plain text graphs:
//   n m
//   u v            (m lines, 0 <= u < v < n)
//   vertex mask    (optional, n lines, colour c is bit c-1)
//   poles s t      (optional)

#include "exminor/graph/coloured_graph.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace exminor {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphFile {
    LabelledGraph graph;
    std::optional<std::vector<ColourMask>> colours;
    std::optional<std::pair<int, int>> poles;

    // colour count: the highest colour that occurs, unless given
    ColouredGraph coloured(int t = -1) const {
        std::vector<ColourMask> c = colours.value_or(std::vector<ColourMask>(graph.n()));
        if (t < 0) {
            t = 0;
            for (auto m : c)
                if (m.bits) t = std::max(t, 16 - std::countl_zero(m.bits));
        }
        return ColouredGraph(graph, t, c);
    }
};

inline GraphFile parse_graph(std::istream& in) {
    auto fail = [](const std::string& what) -> void { throw FormatError("graph text: " + what); };
    GraphFile f;
    long n = -1, m = -1;
    if (!(in >> n >> m)) fail("expected 'n m'");
    if (n < 0 || n > 64 || m < 0) fail("bad header");
    f.graph = LabelledGraph(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v)) fail("expected an edge line");
        if (!(0 <= u && u < v && v < n)) fail("edge out of order or out of range");
        if (f.graph.has_edge(static_cast<int>(u), static_cast<int>(v))) fail("repeated edge");
        f.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string tok;
    while (in >> tok) {
        if (tok == "poles") {
            long s, t;
            if (!(in >> s >> t) || s < 0 || t < 0 || s >= n || t >= n || s == t) fail("bad poles line");
            f.poles = {static_cast<int>(s), static_cast<int>(t)};
            continue;
        }
        if (f.colours) fail("unexpected token '" + tok + "'");
        std::vector<ColourMask> c(n);
        std::vector<char> seen(n, 0);
        for (long i = 0; i < n; ++i) {
            if (i > 0 && !(in >> tok)) fail("expected n colour lines");
            long v = -1, mask = -1;
            try {
                v = std::stol(tok);
            } catch (const std::exception&) {
                fail("bad vertex '" + tok + "'");
            }
            if (!(in >> mask) || v < 0 || v >= n || mask < 0 || mask > 0xffff || seen[v]) fail("bad colour line");
            seen[v] = 1;
            c[v] = ColourMask(static_cast<std::uint16_t>(mask));
        }
        f.colours = std::move(c);
    }
    return f;
}

inline GraphFile parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const LabelledGraph& g) {
    auto e = g.edges();
    out << g.n() << ' ' << e.size() << '\n';
    for (auto [u, v] : e) out << u << ' ' << v << '\n';
}

inline void write_graph(std::ostream& out, const ColouredGraph& g) {
    write_graph(out, g.graph());
    for (int v = 0; v < g.n(); ++v) out << v << ' ' << g.colour(v).bits << '\n';
}

inline std::string to_text(const LabelledGraph& g) {
    std::ostringstream s;
    write_graph(s, g);
    return s.str();
}

inline std::string to_text(const ColouredGraph& g) {
    std::ostringstream s;
    write_graph(s, g);
    return s.str();
}

}  // namespace exminor
