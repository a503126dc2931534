#pragma once

#include "exminor/graph/minor.hpp"
#include "exminor/graph/network.hpp"
#include "exminor/graph/predicates.hpp"
#include "exminor/oracle/enumerate.hpp"
#include "exminor/series/rational.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace exminor::oracle {

enum class ClassTag {
    ExDisjoint,    // param k: no k+1 disjoint subgraphs with a minor in b
    Rd,            // param r: has a redundant blocker of size r
    Crd,           // param l
    ConnectedCrd,  // param l
    CTree,         // param |C|
    AHat,          // param |C|
    Bk,            // param k
    SPNetworkD,
    SPNetworkS,
    SPNetworkP,
    FanPrime,  // param k
    OuterNetwork,
    RootedSP,  // connected series-parallel graphs with one labelled root
};

struct ClassSpec {
    ClassTag tag;
    int param = 0;
    MinorSet b = k4_set();

    std::string name() const {
        std::string p = std::to_string(param);
        std::string bs = is_k23_set(b) ? "outer" : (b == k4_set() ? "K4" : "custom");
        switch (tag) {
            case ClassTag::ExDisjoint: return "ex-disjoint(k=" + p + "," + bs + ")";
            case ClassTag::Rd: return "rd(r=" + p + "," + bs + ")";
            case ClassTag::Crd: return "crd(l=" + p + "," + bs + ")";
            case ClassTag::ConnectedCrd: return "connected-crd(l=" + p + "," + bs + ")";
            case ClassTag::CTree: return "A" + p;
            case ClassTag::AHat: return "Ahat" + p;
            case ClassTag::Bk: return "B" + p;
            case ClassTag::SPNetworkD: return "D";
            case ClassTag::SPNetworkS: return "S";
            case ClassTag::SPNetworkP: return "P";
            case ClassTag::FanPrime: return "F" + p;
            case ClassTag::OuterNetwork: return "Dtilde";
            case ClassTag::RootedSP: return "F";
        }
        return "?";
    }
    bool coloured() const {
        return tag == ClassTag::Crd || tag == ClassTag::ConnectedCrd || tag == ClassTag::CTree ||
               tag == ClassTag::AHat || tag == ClassTag::Bk;
    }
    bool network() const {
        return tag == ClassTag::SPNetworkD || tag == ClassTag::SPNetworkS || tag == ClassTag::SPNetworkP ||
               tag == ClassTag::OuterNetwork;
    }
    // largest n accepted by count_class
    int cap() const {
        if (coloured()) return 5;
        if (network() || tag == ClassTag::FanPrime) return 6;
        return 7;
    }
};

struct CountRecord {
    int n = 0;
    Integer count;
    std::map<int, Integer> by_edges;
};

struct OracleOptions {
    int threads = 1;
    // optional relabelling of the labelled vertices applied before every
    // predicate (poles and roots stay fixed)
    std::vector<int> relabel;
};

namespace detail {

inline bool excludes_rows(const VertexSet* adj, VertexSet mask, const MinorSet& b) {
    if (b.size() == 1 && b[0].kind() == MinorPattern::Kind::K4) return bits::k4_free(adj, mask);
    if (is_k23_set(b)) return bits::k4_free(adj, mask) && bits::outerplanar(adj, mask);
    LabelledGraph g(64 - std::countl_zero(mask));
    for_each_vertex(mask, [&](int v) {
        for_each_vertex(adj[v] & mask & ~prefix_set(v + 1), [&](int u) { g.add_edge(v, u); });
    });
    return excludes(g.induced(mask), b);
}

inline int edges_of(const VertexSet* adj, int n) {
    int m = 0;
    for (int v = 0; v < n; ++v) m += popcount(adj[v]);
    return m / 2;
}

// rows of the graph with labelled vertices 0..k-1 moved by perm
inline void permute(VertexSet* rows, int total, const std::vector<int>& perm) {
    if (perm.empty()) return;
    int k = static_cast<int>(perm.size());
    VertexSet out[64];
    auto map = [&](VertexSet s) {
        VertexSet r = s & ~prefix_set(k);
        for_each_vertex(s & prefix_set(k), [&](int v) { r |= bit(perm[v]); });
        return r;
    };
    for (int v = 0; v < total; ++v) out[v < k ? perm[v] : v] = map(rows[v]);
    for (int v = 0; v < total; ++v) rows[v] = out[v];
}

inline void check_perm(const std::vector<int>& perm, int n) {
    if (perm.empty()) return;
    std::vector<int> s = perm;
    std::sort(s.begin(), s.end());
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    if (s != id) throw std::invalid_argument("relabel must be a permutation of 0..n-1");
}

// Graphs on `total` vertices; body(rows, tally) decides membership.
template <class Pred>
Tally over_graphs(int total, int labelled, const OracleOptions& opt, Pred pred) {
    check_perm(opt.relabel, labelled);
    PairTable pt(total);
    return parallel_tally(pt.codes(), opt.threads, [&](std::uint64_t lo, std::uint64_t hi, Tally& t) {
        VertexSet rows[64];
        for (std::uint64_t code = lo; code < hi; ++code) {
            pt.decode(code, rows);
            permute(rows, total, opt.relabel);
            pred(rows, t);
        }
    });
}

// Rootless components of g - x over all x: (b) holds for a marked set M iff
// M meets each of them.
inline std::vector<VertexSet> rootless_components(const VertexSet* adj, VertexSet all, int root) {
    std::vector<VertexSet> out;
    for_each_vertex(all, [&](int x) {
        for (VertexSet c : bits::components(adj, all & ~bit(x)))
            if (!(c & bit(root)) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    });
    return out;
}

// apex joined to extra and to S keeps the graph series-parallel, for all S
// inside `within`
inline std::vector<char> good_table(VertexSet* adj, int total, VertexSet within, VertexSet extra,
                                    const MinorSet& b) {
    std::vector<char> good(std::size_t{1} << total, 0);
    int w = total;
    VertexSet all = prefix_set(total + 1);
    for (VertexSet s = 0; s < (VertexSet{1} << total); ++s) {
        if (s & ~within) continue;
        VertexSet nb = s | extra;
        adj[w] = nb;
        for_each_vertex(nb, [&](int v) { adj[v] |= bit(w); });
        good[s] = excludes_rows(adj, all, b);
        for_each_vertex(nb, [&](int v) { adj[v] &= ~bit(w); });
        adj[w] = 0;
    }
    return good;
}

inline int min_pattern_size(const MinorSet& b) {
    int m = 64;
    for (auto& p : b) m = std::min(m, p.graph().n());
    return m;
}

}  // namespace detail

// ---- uncoloured ----

inline Tally count_ex_disjoint(int k, const MinorSet& b, int n, const OracleOptions& opt) {
    bool all_fit = n < (k + 1) * detail::min_pattern_size(b);
    return detail::over_graphs(n, n, opt, [&](VertexSet* rows, Tally& t) {
        if (!all_fit && !detail::excludes_rows(rows, prefix_set(n), b)) {
            LabelledGraph g(n);
            for (int v = 0; v < n; ++v)
                for_each_vertex(rows[v] & ~prefix_set(v + 1), [&](int u) { g.add_edge(v, u); });
            if (k == 0 || max_disjoint_minor_packing(g, b) > k) return;
        }
        t.add(detail::edges_of(rows, n));
    });
}

inline bool has_redundant_blocker(const VertexSet* rows, int n, int r, const MinorSet& b) {
    if (r > n) return false;
    VertexSet all = prefix_set(n);
    if (detail::excludes_rows(rows, all, b)) return true;
    // subsets of size r in increasing order (Gosper)
    if (r == 0) return false;
    for (VertexSet q = prefix_set(r); q <= all; ) {
        bool ok = true;
        for_each_vertex(q, [&](int x) { ok = ok && detail::excludes_rows(rows, all & ~(q & ~bit(x)), b); });
        if (ok) return true;
        VertexSet c = q & -q, rr = q + c;
        q = (((rr ^ q) >> 2) / c) | rr;
    }
    return false;
}

inline Tally count_rd(int r, const MinorSet& b, int n, const OracleOptions& opt) {
    return detail::over_graphs(n, n, opt, [&](VertexSet* rows, Tally& t) {
        if (has_redundant_blocker(rows, n, r, b)) t.add(detail::edges_of(rows, n));
    });
}

inline Tally count_rooted_sp(int n, const OracleOptions& opt) {
    if (n == 0) return {};
    return detail::over_graphs(n, n, opt, [&](VertexSet* rows, Tally& t) {
        VertexSet all = prefix_set(n);
        if (bits::connected(rows, all) && bits::k4_free(rows, all)) t.add(detail::edges_of(rows, n), n);
    });
}

// ---- coloured, unrooted ----

// Direct count over graphs and per-vertex colour masks.
inline Tally count_crd(int l, const MinorSet& b, int n, bool connected, const OracleOptions& opt) {
    if (l < 0 || l > 4) throw std::out_of_range("crd: l must be in 0..4");
    return detail::over_graphs(n, n, opt, [&](VertexSet* rows, Tally& t) {
        VertexSet all = prefix_set(n);
        if (connected && (n == 0 || !bits::connected(rows, all))) return;
        if (!detail::excludes_rows(rows, all, b)) return;
        auto good = detail::good_table(rows, n, all, 0, b);
        std::uint64_t count = 0;
        std::uint64_t colourings = std::uint64_t{1} << (l * n);
        for (std::uint64_t code = 0; code < colourings; ++code) {
            bool ok = true;
            for (int c = 0; c < l && ok; ++c) {
                VertexSet s = 0;
                for (int v = 0; v < n; ++v)
                    if ((code >> (v * l + c)) & 1) s |= bit(v);
                ok = good[s];
            }
            count += ok;
        }
        if (count) t.add(detail::edges_of(rows, n), count);
    });
}

// sum over G in Ex b of X_G^l, X_G = number of good vertex sets
inline Integer crd_colour_sum(int l, const MinorSet& b, int n) {
    Integer sum = 0;
    PairTable pt(n);
    VertexSet rows[64];
    for (std::uint64_t code = 0; code < pt.codes(); ++code) {
        pt.decode(code, rows);
        if (!detail::excludes_rows(rows, prefix_set(n), b)) continue;
        auto good = detail::good_table(rows, n, prefix_set(n), 0, b);
        Integer x = std::count(good.begin(), good.end(), 1);
        sum += boost::multiprecision::pow(x, l);
    }
    return sum;
}

// ---- rooted coloured classes: root is vertex n ----

namespace detail {

// Tuples (S_1..S_j) of nonempty vertex sets with good[S_c] for all c and
// cond(union) true.
template <class Cond>
std::uint64_t count_tuples(const std::vector<char>& good, int j, Cond cond) {
    std::vector<VertexSet> sets;
    for (VertexSet s = 1; s < good.size(); ++s)
        if (good[s]) sets.push_back(s);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int c, VertexSet uni) -> void {
        if (c == j) {
            count += cond(uni);
            return;
        }
        for (VertexSet s : sets) self(self, c + 1, uni | s);
    };
    rec(rec, 0, 0);
    return count;
}

}  // namespace detail

inline Tally count_c_tree(int j, int n, const OracleOptions& opt) {
    if (j < 1 || j > 4) throw std::out_of_range("C-tree: |C| must be in 1..4");
    int N = n + 1, r = n;
    if (n == 0) return {};
    auto b = k4_set();
    return detail::over_graphs(N, n, opt, [&](VertexSet* rows, Tally& t) {
        VertexSet all = prefix_set(N);
        if (!bits::connected(rows, all) || (bits::cut_vertices(rows, all) & bit(r))) return;
        if (!bits::k4_free(rows, all)) return;
        auto rootless = detail::rootless_components(rows, all, r);
        auto good = detail::good_table(rows, N, prefix_set(n), bit(r), b);
        auto cond = [&](VertexSet m) {
            for (VertexSet c : rootless)
                if (!(c & m)) return false;
            return true;
        };
        std::uint64_t count = detail::count_tuples(good, j, cond);
        if (count) t.add(detail::edges_of(rows, N), count);
    });
}

inline Tally count_ahat(int j, int n, const OracleOptions& opt) {
    if (j < 0 || j > 4) throw std::out_of_range("Ahat: |C| must be in 0..4");
    int N = n + 1, r = n;
    auto b = k4_set();
    return detail::over_graphs(N, n, opt, [&](VertexSet* rows, Tally& t) {
        VertexSet all = prefix_set(N);
        if (!bits::connected(rows, all) || !bits::k4_free(rows, all)) return;
        auto rootless = detail::rootless_components(rows, all, r);
        auto cond = [&](VertexSet m) {
            for (VertexSet c : rootless)
                if (!(c & m)) return false;
            return true;
        };
        std::uint64_t count;
        if (j == 0) {
            count = cond(0);
        } else {
            auto good = detail::good_table(rows, N, all, bit(r), b);
            count = detail::count_tuples(good, j, cond);
        }
        if (count) t.add(detail::edges_of(rows, N), count);
    });
}

// biconnected C-trees with C = [k], at most one colour per vertex
inline Tally count_bk(int k, int n, const OracleOptions& opt) {
    if (k < 1 || k > 6) throw std::out_of_range("B_k: k must be in 1..6");
    int N = n + 1, r = n;
    if (n < k) return {};
    auto b = k4_set();
    return detail::over_graphs(N, n, opt, [&](VertexSet* rows, Tally& t) {
        VertexSet all = prefix_set(N);
        if (!bits::biconnected(rows, all) || !bits::k4_free(rows, all)) return;
        auto rootless = detail::rootless_components(rows, all, r);
        auto good = detail::good_table(rows, N, prefix_set(n), bit(r), b);
        std::uint64_t count = 0;
        std::uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= k + 1;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            VertexSet S[7] = {};
            for (int v = 0; v < n; ++v, c /= k + 1) S[c % (k + 1)] |= bit(v);
            bool ok = true;
            for (int col = 1; col <= k && ok; ++col) ok = S[col] && good[S[col]];
            if (!ok) continue;
            VertexSet m = prefix_set(n) & ~S[0];
            for (VertexSet comp : rootless) ok = ok && (comp & m);
            count += ok;
        }
        if (count) t.add(detail::edges_of(rows, N), count);
    });
}

// ---- networks: internal vertices 0..n-1, source n, sink n+1 ----

struct NetworkCensus {
    Tally E2, S, P, D;
};

namespace detail {

inline NetworkCensus network_census_uncached(int n, const OracleOptions& opt) {
    int N = n + 2, s = n, t = n + 1;
    NetworkCensus out;
    if (n == 0) {
        out.E2.add(1);
        out.D = out.E2;
        return out;
    }
    check_perm(opt.relabel, n);
    // Internal graph first, then the two pole neighbourhoods; the pole edge
    // is left out and accounted for afterwards: adding it to any network
    // with an internal vertex gives a parallel network with the same closure.
    // One pass fills three tallies, packed as kind * 64 + edges.
    PairTable pt(n);
    const int max_edges = 2 * N - 4;
    const VertexSet inner = prefix_set(n);
    Tally packed = parallel_tally(pt.codes(), opt.threads, [&](std::uint64_t lo, std::uint64_t hi, Tally& tl) {
        VertexSet rows[64], base[64];
        for (std::uint64_t code = lo; code < hi; ++code) {
            int ei = popcount(code);
            if (ei + 2 > max_edges) continue;
            pt.decode(code, base);
            VertexSet deg0 = 0, deg1 = 0;
            for (int v = 0; v < n; ++v) {
                int d = popcount(base[v]);
                if (d == 0) deg0 |= bit(v);
                if (d == 1) deg1 |= bit(v);
            }
            for (VertexSet ns = 1; ns <= inner; ++ns) {
                for (VertexSet nt = 1; nt <= inner; ++nt) {
                    // internal vertices need degree >= 2 in the closure
                    if (deg0 & ~(ns & nt)) continue;
                    if (deg1 & ~(ns | nt)) continue;
                    int e = ei + popcount(ns) + popcount(nt);
                    if (e > max_edges) continue;
                    for (int v = 0; v < n; ++v) rows[v] = base[v] | (((ns >> v) & 1) ? bit(s) : 0) | (((nt >> v) & 1) ? bit(t) : 0);
                    rows[s] = ns;
                    rows[t] = nt;
                    permute(rows, N, opt.relabel);
                    VertexSet all = prefix_set(N);
                    if (!bits::connected(rows, all)) continue;
                    auto kind = bits::classify_network(rows, all, s, t);
                    if (kind == NetworkKind::Series) tl.add(e);
                    if (kind == NetworkKind::Parallel) tl.add(64 + e);
                    if (kind != NetworkKind::NotSP) tl.add(64 + e + 1);
                    // D straight from its definition
                    rows[s] |= bit(t), rows[t] |= bit(s);
                    if (bits::two_connected(rows, all) && bits::k4_free(rows, all)) tl.add(128 + e), tl.add(128 + e + 1);
                }
            }
        }
    });
    packed.by_edges.resize(192, 0);
    for (int e = 0; e < 64; ++e) {
        if (packed.by_edges[e]) out.S.add(e, packed.by_edges[e]);
        if (packed.by_edges[64 + e]) out.P.add(e, packed.by_edges[64 + e]);
        if (packed.by_edges[128 + e]) out.D.add(e, packed.by_edges[128 + e]);
    }
    return out;
}

}  // namespace detail

// S, P and D on n internal vertices; the unrelabelled census is cached.
inline NetworkCensus network_census(int n, const OracleOptions& opt) {
    if (!opt.relabel.empty()) return detail::network_census_uncached(n, opt);
    static std::mutex mu;
    static std::map<int, NetworkCensus> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto c = detail::network_census_uncached(n, opt);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, c).first->second;
}

inline Tally count_outer_network(int n, const OracleOptions& opt) {
    int N = n + 2, s = n, t = n + 1;
    return detail::over_graphs(N, n, opt, [&](VertexSet* rows, Tally& tl) {
        VertexSet all = prefix_set(N);
        int e = detail::edges_of(rows, N);
        if (e > 2 * N - 3 || !bits::biconnected(rows, all)) return;
        rows[N] = bit(s) | bit(t);
        rows[s] |= bit(N), rows[t] |= bit(N);
        bool ok = bits::outerplanar(rows, prefix_set(N + 1));
        rows[s] &= ~bit(N), rows[t] &= ~bit(N);
        rows[N] = 0;
        if (ok) tl.add(e);
    });
}

// ---- fans ----

inline Tally count_fan_prime(int k, int n) {
    if (k < 2 || k > 6) throw std::out_of_range("F'_k: k must be in 2..6");
    Tally t;
    if (n < k) return t;
    // trees on [n] from Pruefer codes
    std::uint64_t codes = 1;
    for (int i = 0; i + 2 < n; ++i) codes *= n;
    std::vector<int> seq(std::max(0, n - 2));
    for (std::uint64_t code = 0; code < codes; ++code) {
        std::uint64_t c = code;
        for (auto& a : seq) a = static_cast<int>(c % n), c /= n;
        std::vector<int> deg(n, 1);
        for (int a : seq) ++deg[a];
        const std::vector<int>& d = deg;
        // only degrees matter below; colours go to k distinct vertices
        auto rec = [&](auto&& self, int c, VertexSet used) -> void {
            if (c == k) {
                int mandatory = 0, optional = 0;
                bool ok = true;
                for (int v = 0; v < n; ++v) {
                    bool col = (used >> v) & 1;
                    if (d[v] == 1) {
                        if (!col) ok = false;
                        ++mandatory;
                    } else if (!col && d[v] == 2) {
                        ++mandatory;
                    } else {
                        ++optional;
                    }
                }
                if (!ok) return;
                for (int i = 0; i <= optional; ++i)
                    t.add(n - 1 + mandatory + i, binomial(optional, i).convert_to<std::uint64_t>());
                return;
            }
            for (int v = 0; v < n; ++v)
                if (!((used >> v) & 1)) self(self, c + 1, used | bit(v));
        };
        rec(rec, 0, 0);
    }
    return t;
}

// ---- dispatch ----

inline CountRecord to_record(int n, const Tally& t) {
    CountRecord r;
    r.n = n;
    r.count = 0;
    for (std::size_t e = 0; e < t.by_edges.size(); ++e) {
        if (!t.by_edges[e]) continue;
        r.by_edges[static_cast<int>(e)] = Integer(t.by_edges[e]);
        r.count += t.by_edges[e];
    }
    return r;
}

inline CountRecord count_class(const ClassSpec& spec, int n, const OracleOptions& opt = {}) {
    if (n < 0 || n > spec.cap())
        throw SizeCapExceeded(spec.name() + ": n must be in 0.." + std::to_string(spec.cap()));
    if (!opt.relabel.empty() && static_cast<int>(opt.relabel.size()) != n)
        throw std::invalid_argument("relabel must have n entries");
    switch (spec.tag) {
        case ClassTag::ExDisjoint: return to_record(n, count_ex_disjoint(spec.param, spec.b, n, opt));
        case ClassTag::Rd: return to_record(n, count_rd(spec.param, spec.b, n, opt));
        case ClassTag::Crd: return to_record(n, count_crd(spec.param, spec.b, n, false, opt));
        case ClassTag::ConnectedCrd: return to_record(n, count_crd(spec.param, spec.b, n, true, opt));
        case ClassTag::CTree: return to_record(n, count_c_tree(spec.param, n, opt));
        case ClassTag::AHat: return to_record(n, count_ahat(spec.param, n, opt));
        case ClassTag::Bk: return to_record(n, count_bk(spec.param, n, opt));
        case ClassTag::SPNetworkD: return to_record(n, network_census(n, opt).D);
        case ClassTag::SPNetworkS: return to_record(n, network_census(n, opt).S);
        case ClassTag::SPNetworkP: return to_record(n, network_census(n, opt).P);
        case ClassTag::FanPrime: return to_record(n, count_fan_prime(spec.param, n));
        case ClassTag::OuterNetwork: return to_record(n, count_outer_network(n, opt));
        case ClassTag::RootedSP: return to_record(n, count_rooted_sp(n, opt));
    }
    throw std::invalid_argument("count_class: unknown class");
}

// ---- reports ----

struct RdBoundReport {
    int l, n;
    Integer rd_count;  // |(rd_l K4)_{n+l}|
    Integer crd_count;
    Integer bound;  // 2^{C(l,2)} C(n+l,l) |crd_{l,n}|
    bool holds;
    Integer slack;
};

inline RdBoundReport verify_rdcount_bound(int l, int n, const OracleOptions& opt = {}) {
    if (l < 0 || l > 3 || n < 0 || n > 4) throw SizeCapExceeded("verify_rdcount_bound: needs l <= 3, n <= 4");
    RdBoundReport r{l, n, 0, 0, 0, false, 0};
    OracleOptions o = opt;
    o.relabel.clear();
    r.rd_count = to_record(n + l, count_rd(l, k4_set(), n + l, o)).count;
    r.crd_count = to_record(n, count_crd(l, k4_set(), n, false, o)).count;
    r.bound = Integer(1) << (l * (l - 1) / 2);
    r.bound *= binomial(n + l, l) * r.crd_count;
    r.holds = r.rd_count <= r.bound;
    r.slack = r.bound - r.rd_count;
    return r;
}

struct PartitionReport {
    int n;
    Integer e2, s, p, d;
    bool ok;
};

inline PartitionReport verify_network_partition(int n, const OracleOptions& opt = {}) {
    if (n < 0 || n > 6) throw SizeCapExceeded("verify_network_partition: n <= 6");
    auto c = network_census(n, opt);
    PartitionReport r{n, c.E2.total(), c.S.total(), c.P.total(), c.D.total(), false};
    r.ok = r.d == r.e2 + r.s + r.p;
    return r;
}

}  // namespace exminor::oracle
