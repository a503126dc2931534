#pragma once

#include "exminor/graph/network.hpp"
#include "exminor/graph/predicates.hpp"
#include "exminor/graph/text_format.hpp"
#include "exminor/numerics/growth.hpp"
#include "exminor/oracle/classes.hpp"
#include "exminor/series/outer.hpp"
#include "exminor/series/rooted.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <variant>

namespace exminor::cli {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Format { Json, Csv, Text };

struct Options {
    std::string cls;
    int order = 10;
    bool bivariate = false;
    int n = -1, max_n = -1;
    int k = -1, l = -1, j = -1;
    std::string minors = "K4";
    std::string target;
    unsigned precision = default_precision_digits;
    bool check = false;
    int threads = 1;
    std::string graph_file;
    std::string test;
    int colour = -1, root = -1, colours = -1;
    Format format = Format::Text;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::array();
    json assertions = json::array();
    double seconds = 0;

    void assert_that(const std::string& name, bool pass, const std::string& detail = "") {
        assertions.push_back(json{{"name", name}, {"pass", pass}, {"detail", detail}});
    }
    bool ok() const {
        for (const auto& a : assertions)
            if (!a["pass"].get<bool>()) return false;
        return true;
    }
    int exit_code() const { return ok() ? 0 : 1; }
};

// ------------------------------------------------------------- reference

struct Reference {
    std::string key;      // target and parameter, as accepted by `gamma`
    std::string printed;  // published digits, truncated
    double tolerance;     // relative, against the truncated print
};

// Reference table, version 1: published digits (truncated) of the growth
// constants, the outerplanar constants and the intermediate singularities.
inline const std::vector<Reference>& reference_table() {
    static const std::vector<Reference> t = {
        {"rd-k4 l=1", "9.073311", 1e-4},   {"rd-k4 l=2", "12.677273", 1e-4},
        {"rd-k4 l=3", "23.524122", 1e-4},  {"rd-k4 l=4", "45.5488", 1e-3},
        {"rd-k4 l=5", "89.5511", 1e-3},    {"ex-k4 k=0", "9.073311", 1e-4},
        {"ex-k4 k=1", "23.524122", 1e-4},  {"ex-k4 k=2", "89.5511", 1e-3},
        {"outer-rd l=3", "10.482", 1e-3},  {"outer-ex k=1", "14.642", 1e-3},
        {"outer-ex k=2", "34.099", 1e-3},  {"outer-ex k=3", "130.023", 1e-3},
        {"rho-sp", "0.1280", 1e-4},        {"rho-outer", "0.1715", 1e-3},
        {"t0", "0.8070", 1e-4},            {"D-at-rho", "1.8678", 1e-4},
        {"rho-a l=2", "0.086468", 1e-4},   {"rho-a l=3", "0.044495", 1e-4},
        {"u0", "0.127969", 1e-4},          {"rho-F", "0.11021", 1e-4},
        {"psi-F(rho-a l=3)", "0.042509", 1e-4}, {"B1(rho-sp)", "0.1929", 1e-4},
        {"E2(0.12)", "0.6436", 1e-4},      {"E3(0.08)", "0.855", 1e-2},
    };
    return t;
}

inline const Reference* find_reference(const std::string& key) {
    for (const auto& r : reference_table())
        if (r.key == key) return &r;
    return nullptr;
}

// Printed census sizes of the tree shapes, k = 1..5.
inline const std::vector<long long>& printed_shape_census() {
    static const std::vector<long long> c = {1, 1, 4, 31, 367};
    return c;
}

// ------------------------------------------------------------- rendering

namespace detail {

inline std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline std::vector<std::string> columns(const json& rows) {
    std::vector<std::string> cols;
    for (const auto& r : rows)
        for (const auto& [key, value] : r.items())
            if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    return cols;
}

}  // namespace detail

// Output is a function of the report contents only; timing goes to stderr.
inline std::string render(const Report& r, Format f) {
    std::ostringstream os;
    auto cols = detail::columns(r.results);
    if (f == Format::Json) {
        json j{{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}};
        if (!r.assertions.empty()) j["assertions"] = r.assertions;
        j["passed"] = r.ok();
        os << j.dump(2) << "\n";
    } else if (f == Format::Csv) {
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << detail::csv_cell(cols[i]);
        os << "\n";
        for (const auto& row : r.results) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                os << (i ? "," : "") << (row.contains(cols[i]) ? detail::csv_cell(detail::cell(row[cols[i]])) : "");
            os << "\n";
        }
        if (!r.assertions.empty()) {
            os << "\nassertion,pass,detail\n";
            for (const auto& a : r.assertions)
                os << detail::csv_cell(a["name"]) << "," << (a["pass"].get<bool>() ? "true" : "false") << ","
                   << detail::csv_cell(a["detail"]) << "\n";
        }
    } else {
        os << r.command;
        for (const auto& [key, value] : r.inputs.items()) os << " " << key << "=" << detail::cell(value);
        os << "\n";
        std::vector<std::size_t> width(cols.size());
        for (std::size_t i = 0; i < cols.size(); ++i) {
            width[i] = cols[i].size();
            for (const auto& row : r.results)
                if (row.contains(cols[i])) width[i] = std::max(width[i], detail::cell(row[cols[i]]).size());
        }
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "  " : "") << std::left << std::setw(width[i]) << cols[i];
        if (!cols.empty()) os << "\n";
        for (const auto& row : r.results) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                os << (i ? "  " : "") << std::left << std::setw(width[i])
                   << (row.contains(cols[i]) ? detail::cell(row[cols[i]]) : "");
            os << "\n";
        }
        for (const auto& a : r.assertions)
            os << (a["pass"].get<bool>() ? "PASS " : "FAIL ") << a["name"].get<std::string>()
               << (a["detail"].get<std::string>().empty() ? "" : "  " + a["detail"].get<std::string>()) << "\n";
    }
    return os.str();
}

// ------------------------------------------------------------- helpers

namespace detail {

inline int need(int v, const char* flag, const std::string& what) {
    if (v < 0) throw UsageError(what + " needs " + flag);
    return v;
}

inline MinorSet minor_set(const std::string& s) {
    if (s == "K4") return k4_set();
    if (s == "outer") return outerplanar_set();
    throw UsageError("unknown minor set '" + s + "' (K4 or outer)");
}

// Trailing integer of a class name such as "B3" or "Ahat2".
inline int suffix(const std::string& name, const std::string& prefix, int lo, int hi) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return -1;
    std::string rest = name.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), ::isdigit) || rest.size() > 2) return -1;
    int v = std::stoi(rest);
    return v >= lo && v <= hi ? v : -1;
}

using SeriesValue = std::variant<TruncatedEGF, BivariatePoly>;

inline constexpr int max_order = 60;

inline SeriesValue series_for(const std::string& cls, int order, bool bivariate) {
    if (order < 0 || order > max_order) throw UsageError("order must be in 0.." + std::to_string(max_order));
    int v;
    if ((v = suffix(cls, "F", 2, 5)) > 0) {
        auto f = fan_bivariate(v, order);
        if (bivariate) return f;
        return eval_y(f, 1);
    }
    if (bivariate) throw UsageError("--bivariate is only available for the fan classes F2..F5");
    if (cls == "D" || cls == "S" || cls == "P") {
        auto net = sp_networks(order);
        return cls == "D" ? net.D : cls == "S" ? net.S : net.P;
    }
    if (cls == "R") return cayley(order);
    if (cls == "F") return rooted_sp(order).F;
    if (cls == "Bsp") return biconnected_sp(sp_networks(order).D);
    if (cls == "Dt") return outer_network(order);
    if ((v = suffix(cls, "B", 1, 5)) > 0) return b_series(v, order);
    if ((v = suffix(cls, "Ahat", 1, 5)) > 0) return a_c_cascade(v, order).values.Ahat[v];
    if ((v = suffix(cls, "A", 1, 5)) > 0) return a_c_cascade(v, order).values.A[v];
    if ((v = suffix(cls, "RC", 1, 3)) > 0) return rooted_crd(v, order);
    throw UsageError("unknown series class '" + cls +
                     "' (D S P R F Bsp Dt B1..B5 A1..A5 Ahat1..Ahat5 RC1..RC3 F2..F5)");
}

inline std::string poly_text(const Polynomial& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

inline oracle::ClassSpec oracle_spec(const Options& o) {
    using oracle::ClassTag;
    const std::string& c = o.cls;
    MinorSet b = minor_set(o.minors);
    if (c == "ex-disjoint") return {ClassTag::ExDisjoint, need(o.k, "--k", c), b};
    if (c == "rd") return {ClassTag::Rd, need(o.l, "--l", c), b};
    if (c == "crd") return {ClassTag::Crd, need(o.l, "--l", c), b};
    if (c == "connected-crd") return {ClassTag::ConnectedCrd, need(o.l, "--l", c), b};
    if (c == "ctree") return {ClassTag::CTree, need(o.j, "--j", c)};
    if (c == "ahat") return {ClassTag::AHat, need(o.j, "--j", c)};
    if (c == "bk") return {ClassTag::Bk, need(o.k, "--k", c)};
    if (c == "D") return {ClassTag::SPNetworkD};
    if (c == "S") return {ClassTag::SPNetworkS};
    if (c == "P") return {ClassTag::SPNetworkP};
    if (c == "fan") return {ClassTag::FanPrime, need(o.k, "--k", c)};
    if (c == "outer-network") return {ClassTag::OuterNetwork};
    if (c == "rooted-sp") return {ClassTag::RootedSP};
    throw UsageError("unknown oracle class '" + c +
                     "' (ex-disjoint rd crd connected-crd ctree ahat bk D S P fan outer-network rooted-sp)");
}

inline std::pair<int, int> n_range(const Options& o) {
    if (o.n >= 0 && o.max_n >= 0) throw UsageError("give --n or --max-n, not both");
    if (o.n >= 0) return {o.n, o.n};
    if (o.max_n >= 0) return {0, o.max_n};
    throw UsageError("needs --n or --max-n");
}

inline std::string edges_text(const std::map<int, Integer>& by_edges) {
    std::string s;
    for (const auto& [e, c] : by_edges) s += (s.empty() ? "" : " ") + std::to_string(e) + ":" + c.str();
    return s;
}

}  // namespace detail

// ------------------------------------------------------------- commands

inline Report run_series(const Options& o) {
    Report r{"series"};
    r.inputs = json{{"class", o.cls}, {"order", o.order}};
    if (o.bivariate) r.inputs["bivariate"] = true;
    auto value = detail::series_for(o.cls, o.order, o.bivariate);
    if (auto* uni = std::get_if<TruncatedEGF>(&value)) {
        auto c = counts(*uni);
        for (int n = 0; n <= uni->order(); ++n)
            r.results.push_back(json{{"n", n}, {"coeff", to_fraction((*uni)[n])}, {"count", c[n].str()}});
    } else {
        const auto& f = std::get<BivariatePoly>(value);
        for (int n = 0; n <= f.order(); ++n) {
            Polynomial p = f[n];
            p *= Rational(factorial(n));
            r.results.push_back(json{{"n", n}, {"coeff", detail::poly_text(f[n])}, {"count", detail::poly_text(p)}});
        }
    }
    return r;
}

inline Report run_oracle(const Options& o) {
    Report r{"oracle"};
    auto spec = detail::oracle_spec(o);
    auto [lo, hi] = detail::n_range(o);
    r.inputs = json{{"class", spec.name()}, {"n_min", lo}, {"n_max", hi}};
    oracle::OracleOptions opt;
    opt.threads = o.threads;
    for (int n = lo; n <= hi; ++n) {
        auto rec = oracle::count_class(spec, n, opt);
        r.results.push_back(json{{"n", n}, {"count", rec.count.str()}, {"by_edges", detail::edges_text(rec.by_edges)}});
    }
    return r;
}

namespace detail {

struct GammaRow {
    std::string key;
    Real value;
    std::string method;
    Real residual;
};

inline GammaRow growth_row(const std::string& key, const GrowthResult& g) {
    return {key, g.gamma, to_string(g.method), g.residual};
}

inline std::vector<GammaRow> gamma_rows(const Options& o) {
    const std::string& t = o.target;
    auto s = solve_t0();
    if (t == "rd-k4") {
        int l = need(o.l, "--l", t);
        return {growth_row("rd-k4 l=" + std::to_string(l), gamma_rd_k4(l))};
    }
    if (t == "ex-k4") {
        int k = need(o.k, "--k", t);
        if (k > 2) throw std::out_of_range("ex-k4: k must be in 0..2");
        return {growth_row("ex-k4 k=" + std::to_string(k), gamma_rd_k4(2 * k + 1))};
    }
    if (t == "outer-rd") {
        int l = need(o.l, "--l", t);
        return {growth_row("outer-rd l=" + std::to_string(l), outer_rd(l))};
    }
    if (t == "outer-ex") {
        int k = need(o.k, "--k", t);
        return {growth_row("outer-ex k=" + std::to_string(k), outer_ex(k))};
    }
    if (t == "rho-sp") return {{"rho-sp", s.rho_D, "BranchPoint", Real(0)}};
    if (t == "rho-outer") {
        Real rho = rho_outer_network();
        return {{"rho-outer", rho, "BranchPoint", rho * rho - 6 * rho + 1}};
    }
    if (t == "intermediate") {
        auto bp = branch_point_sp(s);
        auto x0 = rho_a_detail(2, s), x1 = rho_a_detail(3, s);
        return {{"t0", s.t0, "Root", Real(0)},
                {"rho-sp", s.rho_D, "BranchPoint", Real(0)},
                {"D-at-rho", s.D_at_rho, "ClosedForm", network_residual(s.rho_D, s.D_at_rho)},
                {"B1(rho-sp)", b_values(s.rho_D, 1, s)[1], "ClosedForm", Real(0)},
                {"E2(0.12)", e_value(2, Real("0.12"), s), "ClosedForm", Real(0)},
                {"E3(0.08)", e_value(3, Real("0.08"), s), "ClosedForm", Real(0)},
                {"rho-a l=2", x0.x, "TreeFunctionSingularity", x0.residual},
                {"rho-a l=3", x1.x, "TreeFunctionSingularity", x1.residual},
                {"u0", bp.u0, "BranchPoint", bp.residual},
                {"rho-F", bp.rho_F, "BranchPoint", bp.residual},
                {"psi-F(rho-a l=3)", psi_f_sp(x1.x, s), "ClosedForm", Real(0)}};
    }
    if (t == "all") {
        std::vector<GammaRow> rows;
        for (int l = 1; l <= 5; ++l) rows.push_back(growth_row("rd-k4 l=" + std::to_string(l), gamma_rd_k4(l)));
        rows.push_back(growth_row("outer-rd l=3", outer_rd(3)));
        for (int k = 1; k <= 3; ++k) rows.push_back(growth_row("outer-ex k=" + std::to_string(k), outer_ex(k)));
        return rows;
    }
    throw UsageError("unknown gamma target '" + t + "' (rd-k4 ex-k4 outer-rd outer-ex rho-sp rho-outer intermediate all)");
}

}  // namespace detail

inline Report run_gamma(const Options& o) {
    Report r{"gamma"};
    r.inputs = json{{"target", o.target}};
    if (o.l >= 0) r.inputs["l"] = o.l;
    if (o.k >= 0) r.inputs["k"] = o.k;
    r.inputs["precision"] = o.precision;
    PrecisionScope ps(o.precision);
    int digits = std::min<int>(o.precision, 40);
    for (const auto& row : detail::gamma_rows(o)) {
        json j{{"constant", row.key}, {"value", to_string(row.value, digits)}, {"method", row.method},
               {"residual", to_string(abs(row.residual), 3)}};
        if (const Reference* ref = find_reference(row.key)) {
            Real err = printed_error(row.value, ref->printed);
            j["reference"] = ref->printed;
            j["rel_error"] = to_string(err, 3);
            if (o.check)
                r.assert_that(row.key, err <= ref->tolerance,
                              "tolerance " + to_string(Real(ref->tolerance), 2));
        }
        r.results.push_back(j);
    }
    return r;
}

namespace detail {

struct CrosscheckTarget {
    oracle::ClassSpec spec;
    std::function<TruncatedEGF(int)> series;
    int fan_k = 0;  // compare by edge count against the bivariate fan series
};

inline CrosscheckTarget crosscheck_target(const std::string& cls) {
    using oracle::ClassTag;
    auto uni = [cls](int order) { return std::get<TruncatedEGF>(series_for(cls, order, false)); };
    int v;
    if (cls == "D") return {{ClassTag::SPNetworkD}, uni};
    if (cls == "S") return {{ClassTag::SPNetworkS}, uni};
    if (cls == "P") return {{ClassTag::SPNetworkP}, uni};
    if (cls == "F") return {{ClassTag::RootedSP}, uni};
    if (cls == "Dt") return {{ClassTag::OuterNetwork}, uni};
    if ((v = suffix(cls, "F", 2, 5)) > 0) return {{ClassTag::FanPrime, v}, uni, v};
    if ((v = suffix(cls, "B", 1, 5)) > 0) return {{ClassTag::Bk, v}, uni};
    if ((v = suffix(cls, "Ahat", 1, 5)) > 0) return {{ClassTag::AHat, v}, uni};
    if ((v = suffix(cls, "A", 1, 5)) > 0) return {{ClassTag::CTree, v}, uni};
    throw UsageError("no crosscheck for class '" + cls + "' (D S P F Dt F2..F5 B1..B5 A1..A5 Ahat1..Ahat5)");
}

}  // namespace detail

inline Report run_crosscheck(const Options& o) {
    Report r{"crosscheck"};
    auto target = detail::crosscheck_target(o.cls);
    int max_n = detail::need(o.max_n, "--max-n", "crosscheck");
    if (max_n > target.spec.cap())
        throw SizeCapExceeded(o.cls + ": --max-n must be at most " + std::to_string(target.spec.cap()));
    r.inputs = json{{"class", o.cls}, {"max_n", max_n}};
    oracle::OracleOptions opt;
    opt.threads = o.threads;
    auto f = target.series(max_n);
    auto c = counts(f);
    std::optional<BivariatePoly> fan;
    if (target.fan_k) fan = fan_bivariate(target.fan_k, max_n);
    for (int n = 0; n <= max_n; ++n) {
        auto rec = oracle::count_class(target.spec, n, opt);
        bool same = rec.count == c[n];
        if (fan) {
            const Polynomial& p = (*fan)[n];
            for (int e = 0; e <= std::max(p.degree(), rec.by_edges.empty() ? 0 : rec.by_edges.rbegin()->first); ++e) {
                Rational want = p[e] * Rational(factorial(n));
                Integer got = rec.by_edges.count(e) ? rec.by_edges.at(e) : Integer(0);
                same = same && want == Rational(got);
            }
        }
        r.results.push_back(json{{"n", n}, {"oracle", rec.count.str()}, {"series", c[n].str()}});
        r.assert_that("n=" + std::to_string(n), same, rec.count.str() + (same ? " == " : " != ") + c[n].str());
    }
    return r;
}

inline Report run_shapes(const Options& o) {
    Report r{"shapes"};
    int k = detail::need(o.k, "--k", "shapes");
    if (k < 1 || k > 6) throw UsageError("shapes: k must be in 1..6");
    r.inputs = json{{"k", k}};
    auto shapes = enumerate_ut_trees(k);
    int i = 0;
    for (const auto& t : shapes) {
        std::string colours, edges;
        for (int c : t.colour) colours += (colours.empty() ? "" : " ") + std::to_string(c);
        for (auto [u, v] : t.edges) edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
        auto g = ShapeGF::of(t);
        r.results.push_back(json{{"shape", i++}, {"vertices", g.a}, {"edges", g.e}, {"leaves", g.f},
                                 {"optional", g.g}, {"colours", colours}, {"tree", edges}});
    }
    r.inputs["census"] = shapes.size();
    if (k <= 5) r.inputs["printed_census"] = printed_shape_census()[k - 1];
    return r;
}

inline Report run_predicate(const Options& o) {
    Report r{"predicate"};
    std::ifstream in(o.graph_file);
    if (!in) throw UsageError("cannot open graph file '" + o.graph_file + "'");
    GraphFile gf = parse_graph(in);
    const LabelledGraph& g = gf.graph;
    ColouredGraph cg = gf.coloured(o.colours);
    MinorSet b = detail::minor_set(o.minors);
    r.inputs = json{{"graph", o.graph_file}, {"test", o.test}, {"n", g.n()}, {"m", g.edge_count()}};
    auto rows = g.rows();
    auto add = [&](const std::string& name, const json& v) { r.results.push_back(json{{"property", name}, {"value", v}}); };
    auto set_text = [](VertexSet s) {
        std::string t;
        for_each_vertex(s, [&](int v) { t += (t.empty() ? "" : " ") + std::to_string(v); });
        return t;
    };
    const std::string& t = o.test;
    if (t == "sp") add("series-parallel", is_series_parallel(g));
    else if (t == "outerplanar") add("outerplanar", is_outerplanar(g));
    else if (t == "excludes") add("excludes " + o.minors, excludes(g, b));
    else if (t == "connected") add("connected", bits::connected(rows.data(), g.all()));
    else if (t == "biconnected") add("biconnected", bits::biconnected(rows.data(), g.all()));
    else if (t == "packing") add("disjoint minor packing", max_disjoint_minor_packing(g, b));
    else if (t == "crd") add("crd l=" + std::to_string(o.l), is_crd_member(gf.coloured(detail::need(o.l, "--l", t)), o.l, b));
    else if (t == "colour-good") add("colour " + std::to_string(o.colour) + " good", colour_is_good(cg, detail::need(o.colour, "--colour", t), b));
    else if (t == "c-tree") add("C-tree", is_c_tree(cg, detail::need(o.root, "--root", t), ColourMask::full(cg.t())));
    else if (t == "ahat") add("Ahat member", is_ahat_member(cg, detail::need(o.root, "--root", t), ColourMask::full(cg.t())));
    else if (t == "nice") add("nice vertices", set_text(nice_vertices(gf.coloured(detail::need(o.l, "--l", t)), o.l)));
    else if (t == "spikes") add("spikes", spike_count(gf.coloured(detail::need(o.l, "--l", t)), o.l, detail::need(o.root, "--root", t)));
    else if (t == "separator") {
        auto s = colour_separator(gf.coloured(detail::need(o.l, "--l", t)), o.l);
        add("separator", s ? json(set_text(*s)) : json(nullptr));
    } else if (t == "network-kind") {
        if (!gf.poles) throw UsageError("network-kind needs a 'poles s t' line in the graph file");
        add("network kind", to_string(bits::classify_network(rows.data(), g.all(), gf.poles->first, gf.poles->second)));
    } else {
        throw UsageError("unknown test '" + t +
                         "' (sp outerplanar excludes connected biconnected packing crd colour-good c-tree ahat nice "
                         "spikes separator network-kind)");
    }
    return r;
}

// ------------------------------------------------------------- driver

inline unsigned precision_from_env() {
    const char* e = std::getenv("EXMINOR_PRECISION");
    if (!e || !*e) return default_precision_digits;
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (*end || v < 30 || v > 100000) throw UsageError("EXMINOR_PRECISION must be an integer >= 30");
    return static_cast<unsigned>(v);
}

// Exit codes: 0 success, 1 failed assertion or numerical failure, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    std::string format = "text";
    CLI::App app{"Counting, oracle and growth-constant tools for graphs excluding disjoint minors"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    auto common = [&](CLI::App* s) {
        s->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto* series = app.add_subcommand("series", "Coefficients and counts of a generating function");
    series->add_option("--class", o.cls, "Class name")->required();
    series->add_option("--order", o.order, "Truncation order N");
    series->add_flag("--bivariate", o.bivariate, "Keep the edge variable (fan classes)");
    common(series);

    auto* orc = app.add_subcommand("oracle", "Brute-force counts");
    orc->add_option("--class", o.cls, "Class name")->required();
    orc->add_option("--n", o.n, "Number of labelled vertices");
    orc->add_option("--max-n", o.max_n, "Count n = 0..max-n");
    orc->add_option("--k", o.k);
    orc->add_option("--l", o.l);
    orc->add_option("--j", o.j, "Colour-set size");
    orc->add_option("--minors", o.minors, "Excluded minors: K4 or outer");
    orc->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));
    common(orc);

    auto* gam = app.add_subcommand("gamma", "Growth constants and singularities");
    gam->add_option("--target", o.target, "rd-k4 ex-k4 outer-rd outer-ex rho-sp rho-outer intermediate all")->required();
    gam->add_option("--l", o.l);
    gam->add_option("--k", o.k);
    auto* prec = gam->add_option("--precision", o.precision, "Working precision in decimal digits (>= 30)");
    gam->add_flag("--check", o.check, "Fail unless every value matches the reference table");
    common(gam);

    auto* cc = app.add_subcommand("crosscheck", "Series counts against brute force");
    cc->add_option("--class", o.cls, "Class name")->required();
    cc->add_option("--max-n", o.max_n, "Largest n")->required();
    cc->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));
    common(cc);

    auto* sh = app.add_subcommand("shapes", "Tree shapes behind the fan classes");
    sh->add_option("--k", o.k, "Number of colours")->required();
    common(sh);

    auto* pr = app.add_subcommand("predicate", "Evaluate a predicate on a graph file");
    pr->add_option("--graph", o.graph_file, "Graph file")->required();
    pr->add_option("--test", o.test, "Predicate name")->required();
    pr->add_option("--l", o.l);
    pr->add_option("--colour", o.colour);
    pr->add_option("--root", o.root);
    pr->add_option("--colours", o.colours, "Number of colours t (default: highest used)");
    pr->add_option("--minors", o.minors, "Excluded minors: K4 or outer");
    common(pr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    o.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

    auto start = std::chrono::steady_clock::now();
    try {
        if (prec->count() == 0) o.precision = precision_from_env();
        if (o.precision < 30) throw UsageError("--precision must be at least 30");
        Report r;
        if (series->parsed()) r = run_series(o);
        else if (orc->parsed()) r = run_oracle(o);
        else if (gam->parsed()) r = run_gamma(o);
        else if (cc->parsed()) r = run_crosscheck(o);
        else if (sh->parsed()) r = run_shapes(o);
        else r = run_predicate(o);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << render(r, o.format);
        err << "elapsed " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
        return r.exit_code();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const SizeCapExceeded& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace exminor::cli
