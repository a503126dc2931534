#pragma once

#include "exminor/graph/labelled_graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

namespace exminor::oracle {

// Per-edge-count tallies; index = number of edges.
struct Tally {
    std::vector<std::uint64_t> by_edges;

    void add(int edges, std::uint64_t count = 1) {
        if (static_cast<int>(by_edges.size()) <= edges) by_edges.resize(edges + 1, 0);
        by_edges[edges] += count;
    }
    Tally& operator+=(const Tally& o) {
        if (by_edges.size() < o.by_edges.size()) by_edges.resize(o.by_edges.size(), 0);
        for (std::size_t i = 0; i < o.by_edges.size(); ++i) by_edges[i] += o.by_edges[i];
        return *this;
    }
    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto c : by_edges) s += c;
        return s;
    }
};

// All vertex pairs of K_n in lexicographic order; bit i of a graph code is
// the i-th pair.
struct PairTable {
    int n;
    std::vector<std::pair<int, int>> pairs;
    explicit PairTable(int n_) : n(n_) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    int size() const { return static_cast<int>(pairs.size()); }
    std::uint64_t codes() const { return std::uint64_t{1} << pairs.size(); }
    // rows must hold 64 entries
    void decode(std::uint64_t code, VertexSet* rows) const {
        for (int v = 0; v < n; ++v) rows[v] = 0;
        while (code) {
            int i = std::countr_zero(code);
            code &= code - 1;
            auto [u, v] = pairs[i];
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
    }
};

// Runs body(begin, end, tally) over [0, total) split into fixed chunks that
// do not depend on the thread count, then sums the chunk tallies in order.
template <class Body>
Tally parallel_tally(std::uint64_t total, int threads, Body body) {
    const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(4096, total / 64 + 1));
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    std::vector<Tally> parts(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;)
            body(c * chunk, std::min(total, (c + 1) * chunk), parts[c]);
    };
    threads = std::max(1, threads);
    if (threads == 1 || chunks == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    Tally sum;
    for (auto& p : parts) sum += p;
    return sum;
}

inline int default_threads() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

}  // namespace exminor::oracle
