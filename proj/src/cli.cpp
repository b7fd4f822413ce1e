#include "rolap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rolap/codecheck.hpp"
#include "rolap/construct.hpp"
#include "rolap/counting.hpp"
#include "rolap/error.hpp"
#include "rolap/overlapgraph.hpp"
#include "rolap/tables.hpp"

namespace rolap::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { tsv, json };

struct Globals {
    Format format = Format::tsv;
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
};

std::vector<std::string> word_strings(const std::vector<BitWord>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(w.to_string());
    return out;
}

Json fraction(const Rational& r, int places) {
    return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}, {"decimal", to_decimal(r, places)}};
}

std::string fraction_text(const Rational& r, int places) {
    return numerator(r).str() + "/" + denominator(r).str() + "\t" + to_decimal(r, places);
}

Json construction_json(int k, const std::string& name, Json params, std::size_t p, std::size_t s,
                       const SymbolicSize& size) {
    Json j;
    j["k"] = k;
    j["construction"] = name;
    j["params"] = std::move(params);
    j["p_size"] = p;
    j["s_size"] = s;
    j["coefficient"] = size.coefficient.str();
    j["offset"] = size.offset;
    return j;
}

/// Writes P ∥ x ∥ S for the given length to a codebook file.
void emit_system(const PrefixSuffixSystem& sys, int n, const std::string& path) {
    write_code_file(path, expand_system(sys, n));
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
    std::string file;
    int t1 = 1;
    int t2 = 0;
};

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
    const Code code = read_code_file(a.file);
    const int t2 = a.t2 ? a.t2 : code.length() - 1;
    const OverlapCheck check = is_overlap_free(code, a.t1, t2);
    if (g.format == Format::json) {
        Json j{{"n", code.length()}, {"size", code.size()}, {"t1", a.t1}, {"t2", t2}, {"overlap_free", check.ok}};
        if (check.witness) {
            j["witness"] = {{"u", check.witness->u.to_string()},
                            {"v", check.witness->v.to_string()},
                            {"t", check.witness->t}};
        }
        out << j.dump() << '\n';
    } else if (check.ok) {
        out << "overlap-free\tn=" << code.length() << "\tsize=" << code.size() << "\tt1=" << a.t1 << "\tt2=" << t2
            << '\n';
    } else {
        out << "overlap\tu=" << check.witness->u << "\tv=" << check.witness->v << "\tt=" << check.witness->t << '\n';
    }
    return check.ok ? ok : falsified;
}

// oracle -------------------------------------------------------------------

struct OracleArgs {
    int n = 0;
    int t1 = 1;
    int t2 = 0;
    bool canonical = false;
    std::string emit;
};

int cmd_oracle(const OracleArgs& a, const Globals& g, std::ostream& out) {
    const int t2 = a.t2 ? a.t2 : a.n - 1;
    const MaxCodeResult r = brute_force_max_code(a.n, a.t1, t2, a.canonical);
    if (!a.emit.empty()) write_code_file(a.emit, r.code);
    if (g.format == Format::json) {
        out << Json{{"n", a.n},
                    {"t1", a.t1},
                    {"t2", t2},
                    {"size", r.size},
                    {"candidates", r.candidates},
                    {"code", word_strings(r.code.words())}}
                   .dump()
            << '\n';
    } else {
        out << "n\tt1\tt2\tsize\tcandidates\n"
            << a.n << '\t' << a.t1 << '\t' << t2 << '\t' << r.size << '\t' << r.candidates << '\n';
        for (const auto& w : r.code) out << w << '\n';
    }
    return ok;
}

// doubling -----------------------------------------------------------------

int cmd_doubling(int k_max, const Globals& g, std::ostream& out) {
    const DoublingTrace trace = doubling(k_max);
    if (g.format == Format::json) {
        Json rows = Json::array();
        for (const auto& step : trace.steps) {
            rows.push_back(construction_json(step.k, "doubling", Json{{"duplicates", step.duplicates.size()}},
                                             step.prefixes.size(), step.suffixes.size(), step.size()));
        }
        out << rows.dump() << '\n';
    } else {
        out << "k\tp_size\ts_size\tduplicates\tcoefficient\toffset\n";
        for (const auto& step : trace.steps) {
            out << step.k << '\t' << step.prefixes.size() << '\t' << step.suffixes.size() << '\t'
                << step.duplicates.size() << '\t' << step.product() << '\t' << 2 * step.k << '\n';
        }
    }
    return ok;
}

// mmin / zeroblock ---------------------------------------------------------

struct SystemArgs {
    int k = 0;
    int n = 0;
    std::string emit;
};

int cmd_mmin(const SystemArgs& a, const Globals& g, std::ostream& out) {
    const MMinimumResult r = m_minimum(a.k);
    if (!a.emit.empty()) emit_system(r.system, a.n ? a.n : 2 * a.k, a.emit);
    if (g.format == Format::json) {
        out << construction_json(a.k, "m-minimum", Json{{"m", r.m}}, r.system.prefixes.size(),
                                 r.system.suffixes.size(), r.size)
                   .dump()
            << '\n';
    } else {
        out << "k\tm\tp_size\ts_size\tcoefficient\toffset\n"
            << a.k << '\t' << r.m << '\t' << r.system.prefixes.size() << '\t' << r.system.suffixes.size() << '\t'
            << r.size.coefficient << '\t' << r.size.offset << '\n';
    }
    return ok;
}

int cmd_zeroblock(const SystemArgs& a, const Globals& g, std::ostream& out) {
    const ZeroBlockResult r = zero_block(a.k, !a.emit.empty());
    if (r.system) emit_system(*r.system, a.n ? a.n : 2 * a.k, a.emit);
    // |P| = 2^(k-z) and |S| = F_{k+1}^(z); the sizes are reported exactly as strings.
    const BigInt p_size = pow2(static_cast<unsigned>(a.k - r.z));
    const BigInt s_size = r.size.coefficient / p_size;
    if (g.format == Format::json) {
        Json j;
        j["k"] = a.k;
        j["construction"] = "zero-block";
        j["params"] = {{"z", r.z}};
        j["p_size"] = p_size.str();
        j["s_size"] = s_size.str();
        j["coefficient"] = r.size.coefficient.str();
        j["offset"] = r.size.offset;
        out << j.dump() << '\n';
    } else {
        out << "k\tz\tp_size\ts_size\tcoefficient\toffset\n"
            << a.k << '\t' << r.z << '\t' << p_size << '\t' << s_size << '\t' << r.size.coefficient << '\t'
            << r.size.offset << '\n';
    }
    return ok;
}

// gl -----------------------------------------------------------------------

int cmd_gl(int n, const std::string& emit, const Globals& g, std::ostream& out) {
    const GilbertLevenshteinResult r = gilbert_levenshtein(n, !emit.empty());
    if (r.code) write_code_file(emit, *r.code);
    if (g.format == Format::json) {
        std::vector<std::string> per_z;
        for (const auto& v : r.per_z) per_z.push_back(v.str());
        out << Json{{"n", n}, {"construction", "gilbert-levenshtein"}, {"z", r.z}, {"size", r.size.str()},
                    {"per_z", per_z}}
                   .dump()
            << '\n';
    } else {
        out << "n\tz\tsize\n" << n << '\t' << r.z << '\t' << r.size << '\n';
    }
    return ok;
}

// graph-opt ----------------------------------------------------------------

struct GraphArgs {
    int k = 0;
    std::string objective = "product";
    bool canonical = false;
    std::optional<double> budget;
};

int cmd_graph(const GraphArgs& a, const Globals& g, std::ostream& out) {
    const OverlapGraph graph = build_overlap_graph(a.k);
    SearchOptions opts;
    opts.canonical = a.canonical;
    opts.threads = g.threads;
    opts.time_budget_seconds = a.budget;
    const SearchResult r =
        a.objective == "product" ? max_product_search(graph, opts) : max_cardinality_search(graph, opts);
    if (g.format == Format::json) {
        Json j;
        j["k"] = r.k;
        j["objective"] = to_string(r.objective);
        j["x_size"] = r.x_set.size();
        j["y_size"] = r.y_set.size();
        j["product"] = r.product();
        j["cardinality"] = r.cardinality();
        j["optimal"] = r.optimal;
        j["x_set"] = word_strings(r.x_set);
        j["y_set"] = word_strings(r.y_set);
        out << j.dump() << '\n';
    } else {
        out << "k\tobjective\tx_size\ty_size\tproduct\tcardinality\toptimal\n"
            << r.k << '\t' << to_string(r.objective) << '\t' << r.x_set.size() << '\t' << r.y_set.size() << '\t'
            << r.product() << '\t' << r.cardinality() << '\t' << (r.optimal ? "yes" : "no") << '\n';
        out << "x_set";
        for (const auto& w : r.x_set) out << '\t' << w;
        out << "\ny_set";
        for (const auto& w : r.y_set) out << '\t' << w;
        out << '\n';
    }
    return ok;
}

// bounds -------------------------------------------------------------------

struct BoundsArgs {
    int n = 0;
    int k = 0;
    int q = 2;
    int places = 1;
};

int cmd_bounds(const BoundsArgs& a, const Globals& g, std::ostream& out) {
    if (a.n < 2 || a.k < 1 || a.k > a.n - 1 || a.q < 2) {
        throw DomainError("bounds need n >= 2, 1 <= k <= n-1 and q >= 2");
    }
    std::vector<std::pair<std::string, Rational>> rows;
    rows.emplace_back("upper_bound_weak", upper_bound_weak(a.n, a.k, a.q));
    if (2 * a.k <= a.n) rows.emplace_back("upper_bound_1k", upper_bound_1k(a.n, a.k, a.q));
    if (a.q == 2 && a.k >= 2 && a.n >= a.k + 2) rows.emplace_back("upper_bound_graph", Rational(upper_bound_graph(a.n, a.k)));
    if (a.q == 2 && a.k >= 2) {
        // The explicit bounds are coefficients of 2^n.
        const BigInt scale = pow2(static_cast<unsigned>(a.n));
        rows.emplace_back("lower_bound_gen1", lower_bound_explicit(a.k, ExplicitBound::gen1) * scale);
        rows.emplace_back("lower_bound_gen2", lower_bound_explicit(a.k, ExplicitBound::gen2) * scale);
        if (is_power_of_two(a.k)) {
            rows.emplace_back("lower_bound_gen3", lower_bound_explicit(a.k, ExplicitBound::gen3) * scale);
        }
    }
    std::optional<ClassicBounds> classic;
    if (a.q == 2 && a.n >= 3) {
        classic = classic_bounds(a.n);
        rows.emplace_back("classic_nine_n", classic->nine_n);
        if (classic->eight_n) rows.emplace_back("classic_eight_n", *classic->eight_n);
    }

    if (g.format == Format::json) {
        Json j{{"n", a.n}, {"k", a.k}, {"q", a.q}};
        for (const auto& [name, value] : rows) j[name] = fraction(value, a.places);
        if (classic) {
            j["lev_asymptotic"] = {{"symbolic", classic->lev_asymptotic_symbolic},
                                   {"num", "1"},
                                   {"den", "2e"},
                                   {"constant", classic->lev_asymptotic_constant},
                                   {"value", classic->lev_asymptotic_value}};
        }
        out << j.dump() << '\n';
    } else {
        out << "bound\tfraction\tdecimal\n";
        for (const auto& [name, value] : rows) out << name << '\t' << fraction_text(value, a.places) << '\n';
        if (classic) {
            out << "lev_asymptotic\t" << classic->lev_asymptotic_symbolic << '\t' << classic->lev_asymptotic_value
                << '\n';
        }
    }
    return ok;
}

// fib ----------------------------------------------------------------------

int cmd_fib(int z, long i, const Globals& g, std::ostream& out) {
    const BigInt v = fib_nstep(z, i);
    if (g.format == Format::json) {
        out << Json{{"z", z}, {"i", i}, {"value", v.str()}}.dump() << '\n';
    } else {
        out << v << '\n';
    }
    return ok;
}

// tables -------------------------------------------------------------------

int cmd_tables(const std::string& id, int k_min, int k_max, bool canonical, const Globals& g, std::ostream& out) {
    TableSpec spec;
    spec.id = parse_table_id(id);
    spec.k_min = k_min;
    spec.k_max = k_max;
    spec.search.canonical = canonical;
    spec.search.threads = g.threads;
    const TableReport report = reproduce_table(spec);
    out << (g.format == Format::json ? report.to_json() + "\n" : report.to_tsv());
    return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Codes with restricted overlaps: constructions, verification and bounds"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Globals g;
    std::string format = "tsv";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--threads", g.threads, "Worker threads for searches")->check(CLI::PositiveNumber);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a codebook for (t1,t2)-overlap-freeness");
    verify_cmd->add_option("--file", verify.file, "Codebook file")->required();
    verify_cmd->add_option("--t1", verify.t1, "Smallest overlap size");
    verify_cmd->add_option("--t2", verify.t2, "Largest overlap size (default n-1)");

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact maximum (t1,t2)-overlap-free code, n <= 10");
    oracle_cmd->add_option("--n", oracle.n, "Word length")->required();
    oracle_cmd->add_option("--t1", oracle.t1, "Smallest overlap size");
    oracle_cmd->add_option("--t2", oracle.t2, "Largest overlap size (default n-1)");
    oracle_cmd->add_flag("--canonical", oracle.canonical, "Lexicographically smallest optimum");
    oracle_cmd->add_option("--emit", oracle.emit, "Write the code to this file");

    int k_max = 0;
    auto* doubling_cmd = app.add_subcommand("doubling", "Doubling construction, k = 1..kmax");
    doubling_cmd->add_option("--kmax", k_max, "Largest k")->required();

    SystemArgs mmin;
    auto* mmin_cmd = app.add_subcommand("mmin", "m-minimum construction");
    mmin_cmd->add_option("--k", mmin.k, "Prefix/suffix length")->required();
    mmin_cmd->add_option("--emit", mmin.emit, "Write the expanded code to this file");
    mmin_cmd->add_option("--n", mmin.n, "Code length for --emit (default 2k)");

    SystemArgs zb;
    auto* zb_cmd = app.add_subcommand("zeroblock", "Zero block construction");
    zb_cmd->add_option("--k", zb.k, "Prefix/suffix length")->required();
    zb_cmd->add_option("--emit", zb.emit, "Write the expanded code to this file");
    zb_cmd->add_option("--n", zb.n, "Code length for --emit (default 2k)");

    int gl_n = 0;
    std::string gl_emit;
    auto* gl_cmd = app.add_subcommand("gl", "Gilbert-Levenshtein non-overlapping code");
    gl_cmd->add_option("--n", gl_n, "Code length")->required();
    gl_cmd->add_option("--emit", gl_emit, "Write the code to this file");

    GraphArgs graph;
    auto* graph_cmd = app.add_subcommand("graph-opt", "Exact independent-set search in the overlap graph");
    graph_cmd->add_option("--k", graph.k, "Prefix/suffix length")->required();
    graph_cmd->add_option("--objective", graph.objective, "product or cardinality")
        ->check(CLI::IsMember({"product", "cardinality"}));
    graph_cmd->add_flag("--canonical", graph.canonical, "Lexicographically smallest X_C among optima");
    graph_cmd->add_option("--time-budget", graph.budget, "Seconds before returning the best set found");

    BoundsArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Upper and lower bounds on code sizes");
    bounds_cmd->add_option("--n", bounds.n, "Code length")->required();
    bounds_cmd->add_option("--k", bounds.k, "Overlap parameter")->required();
    bounds_cmd->add_option("--q", bounds.q, "Alphabet size");
    bounds_cmd->add_option("--places", bounds.places, "Decimal places")->check(CLI::NonNegativeNumber);

    int fib_z = 0;
    long fib_i = 0;
    auto* fib_cmd = app.add_subcommand("fib", "n-step Fibonacci number F_i^(z)");
    fib_cmd->add_option("--z", fib_z, "Step count")->required();
    fib_cmd->add_option("--i", fib_i, "Index")->required();

    std::string table_id;
    int table_kmin = 0;
    int table_kmax = 0;
    bool table_canonical = false;
    auto* tables_cmd = app.add_subcommand("tables", "Recompute a results table and compare with published values");
    tables_cmd->add_option("--id", table_id, "I, II, III, IV or V")->required();
    tables_cmd->add_option("--kmin", table_kmin, "First k");
    tables_cmd->add_option("--kmax", table_kmax, "Last k");
    tables_cmd->add_flag("--canonical", table_canonical, "Canonical graph-search optima");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }
    g.format = format == "json" ? Format::json : Format::tsv;

    try {
        if (*verify_cmd) return cmd_verify(verify, g, out);
        if (*oracle_cmd) return cmd_oracle(oracle, g, out);
        if (*doubling_cmd) return cmd_doubling(k_max, g, out);
        if (*mmin_cmd) return cmd_mmin(mmin, g, out);
        if (*zb_cmd) return cmd_zeroblock(zb, g, out);
        if (*gl_cmd) return cmd_gl(gl_n, gl_emit, g, out);
        if (*graph_cmd) return cmd_graph(graph, g, out);
        if (*bounds_cmd) return cmd_bounds(bounds, g, out);
        if (*fib_cmd) return cmd_fib(fib_z, fib_i, g, out);
        if (*tables_cmd) return cmd_tables(table_id, table_kmin, table_kmax, table_canonical, g, out);
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return capacity;
    } catch (const ParseError& e) {
        err << "parse: " << e.what() << '\n';
        return usage;
    } catch (const DomainError& e) {
        err << "domain: " << e.what() << '\n';
        return usage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace rolap::cli
