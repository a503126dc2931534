// Acceptance suite: one PASS/FAIL line per criterion, details indented.

#include "exminor/graph/predicates.hpp"
#include "exminor/numerics/growth.hpp"
#include "exminor/oracle/classes.hpp"
#include "exminor/series/outer.hpp"
#include "exminor/series/rooted.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

using namespace exminor;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> lines;

    void item(const std::string& name, bool ok, const std::string& detail = "") {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + name + (detail.empty() ? "" : "  " + detail));
    }
};

std::string str(const Real& x, int digits = 12) { return to_string(x, digits); }

void printed(Criterion& c, const std::string& name, const Real& value, const char* ref, double tol) {
    Real err = printed_error(value, ref);
    c.item(name, err <= tol, str(value) + " vs " + ref + " rel err " + str(err, 3) + " tol " + str(Real(tol), 1));
}

template <class F>
Criterion run(int id, const std::string& title, F body) {
    Criterion c{id, title};
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.item("exception", false, e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& l : c.lines) std::cout << "    " << l << "\n";
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << t.str() << " s)\n"
              << std::flush;
    return c;
}

// ---------------------------------------------------------------- 1..3

void growth_constants(Criterion& c) {
    PrecisionScope ps(60);
    const char* ref[] = {"", "9.073311", "12.677273", "23.524122", "45.5488", "89.5511"};
    const double tol[] = {0, 1e-4, 1e-4, 1e-4, 1e-3, 1e-3};
    for (int l = 1; l <= 5; ++l) {
        auto g = gamma_rd_k4(l);
        printed(c, "gamma rd_" + std::to_string(l) + " K4 [" + to_string(g.method) + "]", g.gamma, ref[l], tol[l]);
    }
}

void intermediate_constants(Criterion& c) {
    PrecisionScope ps(60);
    auto s = solve_t0();
    printed(c, "t0", s.t0, "0.8070", 1e-4);
    printed(c, "rho(D)", s.rho_D, "0.1280", 1e-4);
    printed(c, "D(rho)", s.D_at_rho, "1.8678", 1e-4);
    printed(c, "x0 = rho(A_2)", rho_a(2, s), "0.086468", 1e-4);
    Real x1 = rho_a(3, s);
    printed(c, "x1 = rho(A_3)", x1, "0.044495", 1e-4);
    auto bp = branch_point_sp(s);
    printed(c, "u0", bp.u0, "0.127969", 1e-4);
    printed(c, "rho(F)", bp.rho_F, "0.11021", 1e-4);
    printed(c, "psi_F(x1)", psi_f_sp(x1, s), "0.042509", 1e-4);
    printed(c, "B_1(rho(D))", b_values(s.rho_D, 1, s)[1], "0.1929", 1e-4);
    printed(c, "E_2(0.12)", e_value(2, Real("0.12"), s), "0.6436", 1e-4);
    printed(c, "E_3(0.08)", e_value(3, Real("0.08"), s), "0.855", 1e-2);
}

void outer_constants(Criterion& c) {
    PrecisionScope ps(60);
    Real rho = rho_outer_network();
    Real closed = 3 - 2 * sqrt(Real(2));
    Real diff = abs(rho - closed);
    c.item("rho(D~) = 3 - 2 sqrt 2", diff < Real("1e-30"), "|diff| " + str(diff, 3));
    c.item("r_2 = 1/6", r_l(2) == Rational(1, 6), to_fraction(r_l(2)));
    printed(c, "1/sigma_3", outer_rd(3).gamma, "10.482", 1e-3);
    printed(c, "gamma'_1", outer_ex(1).gamma, "14.642", 1e-3);
    printed(c, "gamma'_2", outer_ex(2).gamma, "34.099", 1e-3);
    printed(c, "gamma'_3", outer_ex(3).gamma, "130.023", 1e-3);
}

// ---------------------------------------------------------------- 4

void identities(Criterion& c) {
    const int N = 25;
    auto net = sp_networks(N);
    c.item("network equation for D", network_identity_residual(net.D).is_zero());
    c.item("parallel equation for P", parallel_identity_residual(net.D, net.P).is_zero());
    c.item("B_2 = x^2 D^3 / (1 - x D^2)", b_series(2, net) == b2_closed_form(net.D));
    auto cs = a_c_cascade(1, N);
    c.item("A_R = R(2 B_1 e^{-B_1}) - B_1", cs.values.A[1] == a1_closed_form(cs.B[1]));
    c.item("F'_2 closed form = shape sum", fan_bivariate(2, N) == fan2_closed_form(N));
    c.item("F'_3 closed form = shape sum", fan_bivariate(3, N) == fan3_closed_form(N));
    auto rs = rooted_sp(N);
    auto x = TruncatedEGF::x(N);
    auto psi = x * exp(-derive(rs.B).truncated(N));
    c.item("psi_F(F(x)) = x", compose(psi, rs.F) == x);
    auto cl = cayley_leaf(N);
    c.item("leaf-marked trees at z = 1 = Cayley R", eval_y(cl.R, 1) == cayley(N) && eval_y(cl.R_tilde, 1) == cayley(N));
    auto ts = tree_substitution(net.D, exp(x), x + Rational(1), N);
    c.item("A_2 = f e^{A_2} (tree substitution)", (ts.A2 - ts.f * exp(ts.A2)).is_zero());
}

// ---------------------------------------------------------------- 5

void oracle_equivalence(Criterion& c) {
    using oracle::ClassTag;
    oracle::OracleOptions opt;
    opt.threads = oracle::default_threads();
    auto compare = [&](const std::string& name, const oracle::ClassSpec& spec, const TruncatedEGF& f, int max_n) {
        auto cnt = counts(f);
        bool ok = true;
        std::string mism;
        for (int n = 0; n <= max_n; ++n) {
            auto rec = oracle::count_class(spec, n, opt);
            if (rec.count != cnt[n]) ok = false, mism += " n=" + std::to_string(n) + ":" + rec.count.str() + "!=" + cnt[n].str();
        }
        c.item(name + " n<=" + std::to_string(max_n), ok, ok ? "" : mism);
    };
    auto net = sp_networks(6);
    compare("D", {ClassTag::SPNetworkD}, net.D, 6);
    compare("S", {ClassTag::SPNetworkS}, net.S, 6);
    compare("P", {ClassTag::SPNetworkP}, net.P, 6);
    compare("B_1", {ClassTag::Bk, 1}, b_series(1, 5), 5);
    compare("B_2", {ClassTag::Bk, 2}, b_series(2, 5), 5);
    auto cs = a_c_cascade(3, 5);
    for (int j = 1; j <= 3; ++j) {
        int m = j <= 2 ? 5 : 4;
        compare("A_C |C|=" + std::to_string(j), {ClassTag::CTree, j}, cs.values.A[j], m);
        compare("Ahat_C |C|=" + std::to_string(j), {ClassTag::AHat, j}, cs.values.Ahat[j], m);
    }
    compare("F rooted SP", {ClassTag::RootedSP}, rooted_sp(5).F, 5);
    compare("D~ outerplanar networks", {ClassTag::OuterNetwork}, outer_network(5), 5);
}

// ---------------------------------------------------------------- 6

void small_counts(Criterion& c) {
    auto show = [](const std::vector<Integer>& v) {
        std::string s;
        for (auto& x : v) s += (s.empty() ? "" : ",") + x.str();
        return "(" + s + ")";
    };
    auto prefix = [](const TruncatedEGF& f, int len) {
        auto cnt = counts(f);
        return std::vector<Integer>(cnt.begin(), cnt.begin() + len);
    };
    auto b1 = prefix(b_series(1, 4), 3);
    std::vector<Integer> want_b1{0, 1, 2};
    c.item("|B_1,n| = (0,1,2)", b1 == want_b1, "got " + show(b1));
    auto cs = a_c_cascade(3, 4);
    for (int j = 1; j <= 3; ++j) {
        auto a = prefix(cs.values.A[j], 3);
        std::vector<Integer> want{0, 1, Integer(1) << j};
        c.item("|A_C,n| = (0,1,2^|C|) for |C|=" + std::to_string(j), a == want,
               "got " + show(a) + " want " + show(want));
        auto h = prefix(cs.values.Ahat[j], 2);
        std::vector<Integer> want_h{1, (Integer(1) << (2 * j)) - (Integer(1) << j)};
        c.item("|Ahat_C,n| = (1,4^|C|-2^|C|) for |C|=" + std::to_string(j), h == want_h,
               "got " + show(h) + " want " + show(want_h));
    }
    std::vector<Integer> ut, want_ut{1, 1, 4, 31, 367};
    for (int k = 1; k <= 5; ++k) ut.push_back(enumerate_ut_trees(k).size());
    c.item("|UT'_k| = (1,1,4,31,367)", ut == want_ut, "got " + show(ut));
}

// ---------------------------------------------------------------- 7

void rd_bound(Criterion& c) {
    oracle::OracleOptions opt;
    opt.threads = oracle::default_threads();
    for (int l : {2, 3})
        for (int n = 0; n <= 4; ++n) {
            auto r = oracle::verify_rdcount_bound(l, n, opt);
            c.item("l=" + std::to_string(l) + " n=" + std::to_string(n), r.holds,
                   r.rd_count.str() + " <= " + r.bound.str());
        }
}

// ---------------------------------------------------------------- 8

LabelledGraph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    LabelledGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

ColouredGraph random_colouring(std::mt19937_64& rng, const LabelledGraph& g, int t, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<ColourMask> m(g.n());
    for (auto& x : m)
        for (int c = 1; c <= t; ++c)
            if (coin(rng)) x.add(c);
    return ColouredGraph(g, t, m);
}

ColouredGraph permute_colours(const ColouredGraph& g, const std::vector<int>& perm) {
    std::vector<ColourMask> m(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (int c = 1; c <= g.t(); ++c)
            if (g.colour(v).has(c)) m[v].add(perm[c - 1]);
    return ColouredGraph(g.graph(), g.t(), m);
}

bool brute_separator_exists(const ColouredGraph& g, int l) {
    VertexSet all = g.graph().all();
    for (VertexSet s = 0;; s = (s - all) & all) {
        if (popcount(s) <= l && separates_colours(g, s)) return true;
        if (s == all) return false;
    }
}

void predicate_properties(Criterion& c) {
    std::mt19937_64 rng(20261019);
    const int trials = 10000;
    auto k4 = k4_set();
    auto outer = outerplanar_set();
    auto k4p = complete_graph(4), k23 = complete_bipartite(2, 3);
    int minor_bad = 0, outer_bad = 0, blocker_bad = 0, contain_bad = 0, contain_hits = 0, contain_k4 = 0, sep_bad = 0, perm_bad = 0;
    for (int i = 0; i < trials; ++i) {
        int n = 4 + static_cast<int>(rng() % 6);  // 4..9
        double p = 0.2 + 0.6 * std::uniform_real_distribution<double>()(rng);
        auto g = random_graph(rng, n, p);

        bool generic_k4 = has_minor_generic(g, k4p);
        if (is_series_parallel(g) == generic_k4) ++minor_bad;
        if (is_outerplanar(g) == (generic_k4 || has_minor_generic(g, k23))) ++outer_bad;

        VertexSet q = rng() & g.all(), q2 = q | (rng() & g.all());
        if (is_blocker(g, q, k4) && !is_blocker(g, q2, k4)) ++blocker_bad;
        auto h = g;
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u != v) h.add_edge(u, v);
        if (excludes(h, k4) && !excludes(g, k4)) ++blocker_bad;

        // rd_{2k+1} inside Ex (k+1) for k = 1 (and k = 0: rd_1 K4 is Ex K4 plus one vertex)
        if (oracle::has_redundant_blocker(g.rows().data(), n, 3, k4)) {
            ++contain_hits;
            contain_k4 += !excludes(g, k4);
            if (max_disjoint_minor_packing(g, k4) > 1) ++contain_bad;
        }

        int l = 1 + static_cast<int>(rng() % 3);
        auto cg = random_colouring(rng, g, 2, 0.25);
        auto sep = colour_separator(cg, l);
        if (sep) {
            if (popcount(*sep) > l || !separates_colours(cg, *sep)) ++sep_bad;
        } else if (brute_separator_exists(cg, l)) {
            ++sep_bad;
        }

        int t = 1 + static_cast<int>(rng() % 3);
        auto cc = random_colouring(rng, g, t, 0.3);
        std::vector<int> perm(t);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        if (excludes(g, k4) && is_crd_member(cc, t, k4) != is_crd_member(permute_colours(cc, perm), t, k4)) ++perm_bad;
    }
    std::string of = " of " + std::to_string(trials);
    c.item("SP reduction agrees with generic K4 search", minor_bad == 0, std::to_string(minor_bad) + " mismatches" + of);
    c.item("outerplanarity agrees with generic K23/K4 search", outer_bad == 0, std::to_string(outer_bad) + " mismatches" + of);
    c.item("blocker and exclusion monotonicity", blocker_bad == 0, std::to_string(blocker_bad) + " violations" + of);
    c.item("rd_3 K4 inside Ex 2K4", contain_bad == 0 && contain_k4 > 0,
           std::to_string(contain_bad) + " violations in " + std::to_string(contain_hits) + " rd_3 graphs (" +
               std::to_string(contain_k4) + " with a K4 minor)");
    c.item("colour_separator valid and complete", sep_bad == 0, std::to_string(sep_bad) + " failures" + of);
    c.item("crd invariant under colour permutation", perm_bad == 0, std::to_string(perm_bad) + " failures" + of);
}

}  // namespace

int main() {
    std::vector<Criterion> all;
    all.push_back(run(1, "growth-constant regression", growth_constants));
    all.push_back(run(2, "intermediate constants", intermediate_constants));
    all.push_back(run(3, "outerplanar constants", outer_constants));
    all.push_back(run(4, "exact identity suite at N = 25", identities));
    all.push_back(run(5, "oracle equivalence", oracle_equivalence));
    all.push_back(run(6, "small-count fixed points", small_counts));
    all.push_back(run(7, "rd_l K4 counting bound", rd_bound));
    all.push_back(run(8, "predicate properties on random graphs", predicate_properties));
    int failed = 0;
    for (const auto& c : all) failed += !c.pass;
    std::cout << (all.size() - failed) << "/" << all.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
