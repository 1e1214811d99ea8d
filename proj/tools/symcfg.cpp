// symcfg — command-line surface for the configuration library.
//
// Subcommands: analyze, construct, enumerate, canon, isomorphic, corpus,
// tables, components.  JSON output uses alphabetically sorted keys and a
// fixed schema, so byte-identical runs are reproducible regardless of the
// worker count selected with --jobs.
//
// Exit codes: 0 ok, 1 validation error, 2 mismatch, 3 bound exceeded,
// 4 usage error.

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symcfg/blocking.hpp"
#include "symcfg/canonical.hpp"
#include "symcfg/colouring.hpp"
#include "symcfg/constructions.hpp"
#include "symcfg/core.hpp"
#include "symcfg/corpus.hpp"
#include "symcfg/enumeration.hpp"
#include "symcfg/graph.hpp"

using nlohmann::json;
using namespace symcfg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBound = 3;
constexpr int kExitUsage = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One configuration per non-blank, non-comment line.
std::vector<Configuration> read_configs(const std::string& text) {
    std::vector<Configuration> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_config(line));
    }
    if (out.empty()) throw ParseError("no configurations found");
    return out;
}

Configuration read_single_config(const std::string& path) {
    auto cs = read_configs(read_input(path));
    if (cs.size() != 1)
        throw ParseError("'" + path + "' holds " + std::to_string(cs.size()) +
                         " configurations, expected exactly one");
    return cs.front();
}

// Named constituents for the stitching constructions.
Configuration constituent(const std::string& spec) {
    if (spec == "fano") return cyclic_config(7);
    if (spec.rfind("cyclic:", 0) == 0) return cyclic_config(std::stoi(spec.substr(7)));
    return read_single_config(spec);
}

template <class F>
void parallel_for(std::size_t n, int jobs, F f) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) f(i);
    };
    std::vector<std::thread> pool;
    int nw = std::min<std::size_t>(jobs, n);
    pool.reserve(nw);
    for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

json analyze_one(const Configuration& c, bool allow_long) {
    json r;
    r["v"] = c.v;
    r["b"] = (int)c.blocks.size();
    r["blocks"] = format_config(c);
    r["valid"] = true;
    bool conn = is_connected(c);
    r["connected"] = conn;
    if (conn)
        r["connectivity"] = config_connectivity(c).connectivity;
    else
        r["connectivity"] = nullptr;

    BlockingProfile bp = blocking_profile(c);
    json blocking;
    blocking["exists"] = bp.has;
    blocking["min_size"] = bp.min_size ? json(*bp.min_size) : json(nullptr);
    blocking["sizes"] = bp.sizes;
    blocking["witness"] = bp.witness_min ? json(*bp.witness_min) : json(nullptr);
    r["blocking"] = blocking;
    r["chi_w"] = bp.chi_w;
    r["chi_s"] = strong_chromatic_number(c).first;

    if (c.v <= 26) {
        DetExtremalResult dr = is_det_extremal(c);
        r["det_abs"] = dr.det_abs;
        r["det_extremal"] = dr.det_extremal;
        r["permanent"] = dr.permanent;
    } else {
        r["det_abs"] = nullptr;
        r["det_extremal"] = nullptr;
        r["permanent"] = nullptr;
    }

    SymmetryProfile sp = symmetry_profile(c);
    json sym;
    sym["aut_order"] = sp.aut_order;
    sym["full_order"] = sp.full_order;
    sym["self_dual"] = sp.self_dual;
    sym["self_polar"] = sp.self_polar;
    sym["point_transitive"] = sp.point_transitive;
    sym["flag_transitive"] = sp.flag_transitive;
    sym["weakly_flag_transitive"] = sp.weakly_flag_transitive;
    sym["cyclic"] = sp.cyclic;
    r["symmetry"] = sym;

    if (c.v <= 24 || allow_long)
        r["levi_hamiltonian"] = is_hamiltonian(levi_graph(c), 2 * c.v).hamiltonian;
    else
        r["levi_hamiltonian"] = nullptr;  // long computation; rerun with --long

    r["canonical_digest"] = canonical_form(c).digest();
    return r;
}

json table_row_json(const TableRow& row) {
    json t1;
    t1["connected"] = row.total - row.disconnected;
    json mb;
    for (const auto& [size, count] : row.min_blocking) mb[std::to_string(size)] = count;
    if (row.no_blocking_set) mb["none"] = row.no_blocking_set;
    t1["min_blocking"] = mb;

    json t2;
    t2["total"] = row.total;
    t2["self_dual"] = row.self_dual;
    t2["self_polar"] = row.self_polar;
    t2["point_transitive"] = row.point_transitive;
    t2["cyclic"] = row.cyclic;
    t2["flag_transitive"] = row.flag_transitive;
    t2["weakly_flag_transitive"] = row.weakly_flag_transitive;
    t2["bsfree_connected"] = row.bsfree_connected;
    t2["disconnected"] = row.disconnected;

    json t3;
    for (const auto& [chi, count] : row.chi_s) t3[std::to_string(chi)] = count;

    json r;
    r["v"] = row.v;
    r["table1"] = t1;
    r["table2"] = t2;
    r["table3"] = json{{"chi_s", t3}};
    return r;
}

int cmd_analyze(const std::string& input, bool allow_long, int jobs) {
    auto configs = read_configs(read_input(input));
    std::vector<std::string> out(configs.size());
    parallel_for(configs.size(), jobs,
                 [&](std::size_t i) { out[i] = analyze_one(configs[i], allow_long).dump(); });
    for (const auto& line : out) std::cout << line << '\n';
    return kExitOk;
}

int cmd_canon(const std::string& input) {
    auto configs = read_configs(read_input(input));
    for (const auto& c : configs) {
        CanonicalForm cf = canonical_form(c);
        std::cout << cf.digest() << ' ' << cf.bytes << '\n';
    }
    return kExitOk;
}

int cmd_isomorphic(const std::string& f1, const std::string& f2) {
    Configuration a = read_single_config(f1);
    Configuration b = read_single_config(f2);
    bool iso = are_isomorphic(a, b);
    std::cout << (iso ? "true" : "false") << '\n';
    return iso ? kExitOk : kExitMismatch;
}

int cmd_enumerate(int v, bool connected, bool allow_long, bool counts, int jobs) {
    EnumerateOptions opts;
    opts.connected_only = connected;
    opts.allow_long = allow_long;
    opts.jobs = jobs;
    if (counts) {
        std::cout << table_row_json(tabulate_properties(v, opts)).dump() << '\n';
        return kExitOk;
    }
    for (const auto& c : enumerate_configs(v, opts)) std::cout << format_config(c) << '\n';
    return kExitOk;
}

int cmd_tables(int max_v, bool allow_long, int jobs) {
    for (int v = 7; v <= max_v; ++v) {
        EnumerateOptions opts;
        opts.allow_long = allow_long;
        opts.jobs = jobs;
        std::cout << table_row_json(tabulate_properties(v, opts)).dump() << '\n';
    }
    for (int v = 7; v <= max_v && v <= (allow_long ? max_v : 25); v += 6) {
        if (v % 6 != 1) continue;
        StitchClosureRow row = enumerate_3conn_bsfree(v, allow_long);
        json r;
        r["v"] = v;
        json t4;
        t4["count"] = (long long)row.classes.size();
        t4["self_dual"] = row.self_dual;
        t4["self_polar"] = row.self_polar;
        r["table4"] = t4;
        std::cout << r.dump() << '\n';
    }
    return kExitOk;
}

int cmd_corpus_verify(const std::string& dir) {
    auto groups = corpus_load(dir);
    MismatchReport rep = corpus_verify(groups);
    for (const auto& m : rep.mismatches) std::cout << "MISMATCH " << m << '\n';
    std::cout << "entries: " << rep.entries_checked << "  checks: " << rep.checks_performed
              << "  mismatches: " << rep.mismatches.size() << '\n';
    return rep.ok() ? kExitOk : kExitMismatch;
}

int cmd_components(int n, bool allow_long) {
    auto comps = generate_components(n, 18, allow_long);
    for (const auto& comp : comps) {
        json r;
        r["n"] = comp.graph.n;
        json edges = json::array();
        for (auto [u, w] : comp.graph.edges()) edges.push_back(json::array({u, w}));
        r["edges"] = edges;
        r["point2"] = comp.point2;
        r["block2"] = comp.block2;
        std::cout << r.dump() << '\n';
    }
    std::cerr << comps.size() << " component(s)\n";
    return kExitOk;
}

Graph read_graph(const std::string& path) {
    std::istringstream in(detail::strip_comments(read_input(path)));
    int n;
    if (!(in >> n) || n <= 0) throw ParseError("graph file must start with the order");
    std::vector<std::pair<int, int>> edges;
    int u, w;
    while (in >> u >> w) edges.emplace_back(u, w);
    if (!in.eof()) throw ParseError("trailing tokens in graph file");
    return Graph::from_edges(n, edges);
}

void emit_config(const Configuration& c, bool decimal) {
    std::cout << format_config(c, decimal ? Style::Decimal : Style::Compact) << '\n';
}

int cmd_construct(const std::string& family, const std::vector<std::string>& params,
                  bool decimal) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("construct " + family + " expects " +
                                        std::to_string(k) + " parameter(s)");
    };
    auto as_int = [](const std::string& s) {
        size_t used = 0;
        int x = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
        return x;
    };

    if (family == "cyclic") {
        need(1);
        emit_config(cyclic_config(as_int(params[0])), decimal);
    } else if (family == "martinetti") {
        // blocking-set-equipped odd companion of the cyclic system one smaller
        need(1);
        int v = as_int(params[0]);
        if (v < 11 || v % 2 == 0)
            throw OutOfRange("construct martinetti needs odd v >= 11");
        Configuration base = cyclic_config(v - 1);
        emit_config(martinetti_extend(base, make_block(0, 1, 3), make_block(4, 5, 7), 0, 5),
                    decimal);
    } else if (family == "triangle") {
        need(1);
        emit_config(triangle_family(as_int(params[0])), decimal);
    } else if (family == "minblocking") {
        need(1);
        emit_config(minblocking_family(as_int(params[0])), decimal);
    } else if (family == "nearmin") {
        need(2);
        emit_config(nearmin_family(as_int(params[0]), as_int(params[1])), decimal);
    } else if (family == "stitch2") {
        need(2);
        emit_config(stitch2(constituent(params[0]), constituent(params[1])), decimal);
    } else if (family == "stitch3") {
        if (params.size() < 3 || params.size() % 2 == 0)
            throw std::invalid_argument("construct stitch3 expects an odd number (>= 3) of constituents");
        std::vector<Configuration> xs;
        xs.reserve(params.size());
        for (const auto& p : params) xs.push_back(constituent(p));
        std::vector<StitchChoice> choices;
        for (const auto& x : xs) {
            StitchChoice ch;
            ch.block = 0;
            ch.point = x.blocks[0][0];
            choices.push_back(ch);
        }
        emit_config(stitch3(xs, choices), decimal);
    } else if (family == "chis4") {
        need(1);
        emit_config(chis4_family(as_int(params[0])), decimal);
    } else if (family == "chis5") {
        need(1);
        emit_config(chis5_family(as_int(params[0])), decimal);
    } else if (family == "chis6") {
        need(1);
        emit_config(chis6_family(as_int(params[0])), decimal);
    } else if (family == "col3iso") {
        need(1);
        emit_config(col3iso_family(as_int(params[0])).config, decimal);
    } else if (family == "delgraph") {
        need(1);
        emit_config(delgraph_config(read_graph(params[0])).config, decimal);
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric configurations v_3: analysis, construction, enumeration"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads (never changes output bytes)")
        ->capture_default_str();

    // analyze
    std::string an_input;
    bool an_long = false;
    auto* an = app.add_subcommand("analyze", "full property report per configuration (JSON lines)");
    an->add_option("input", an_input, "file with one configuration per line, or -")->required();
    an->add_flag("--long", an_long, "run computations flagged as long (Hamiltonicity for v > 24)");

    // construct
    std::string ct_family;
    std::vector<std::string> ct_params;
    bool ct_decimal = false;
    auto* ct = app.add_subcommand(
        "construct",
        "emit a family member: cyclic, martinetti, triangle, minblocking, nearmin, "
        "stitch2, stitch3, chis4, chis5, chis6, col3iso, delgraph");
    ct->add_option("family", ct_family)->required();
    ct->add_option("params", ct_params, "family parameters (stitch constituents: fano, cyclic:<v>, or a file)");
    ct->add_flag("--decimal", ct_decimal, "decimal output instead of compact symbols");

    // enumerate
    int en_v = 0;
    bool en_connected = false, en_long = false, en_counts = false;
    auto* en = app.add_subcommand("enumerate", "stream the isomorphism classes for an order");
    en->add_option("v", en_v)->required();
    en->add_flag("--connected", en_connected, "restrict to connected classes");
    en->add_flag("--long", en_long, "allow long runs (v > 13)");
    en->add_flag("--counts", en_counts, "emit the tabulated row instead of the classes");

    // canon
    std::string cn_input;
    auto* cn = app.add_subcommand("canon", "canonical form digest and bytes per configuration");
    cn->add_option("input", cn_input)->required();

    // isomorphic
    std::string is_f1, is_f2;
    auto* is = app.add_subcommand("isomorphic", "decide isomorphism of two configurations");
    is->add_option("first", is_f1)->required();
    is->add_option("second", is_f2)->required();

    // corpus verify
    auto* co = app.add_subcommand("corpus", "fixture corpus operations");
    co->require_subcommand(1);
    std::string co_dir;
    auto* cv = co->add_subcommand("verify", "recompute and compare every recorded fact");
    cv->add_option("--dir", co_dir, "corpus directory (default: built-in location)");

    // tables
    int tb_max_v = 11;
    bool tb_long = false;
    auto* tb = app.add_subcommand("tables", "reproduce the survey tables up to a bound");
    tb->add_option("--max-v", tb_max_v, "largest order to tabulate")->capture_default_str();
    tb->add_flag("--long", tb_long, "allow long runs (v > 13)");

    // components
    int cp_n = 0;
    bool cp_long = false;
    auto* cp = app.add_subcommand("components",
                                  "connected subcubic bipartite pieces used by the joins");
    cp->add_option("n", cp_n)->required();
    cp->add_flag("--long", cp_long, "allow long runs (n > 18)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*an) return cmd_analyze(an_input, an_long, jobs);
        if (*ct) return cmd_construct(ct_family, ct_params, ct_decimal);
        if (*en) return cmd_enumerate(en_v, en_connected, en_long, en_counts, jobs);
        if (*cn) return cmd_canon(cn_input);
        if (*is) return cmd_isomorphic(is_f1, is_f2);
        if (*cv) return cmd_corpus_verify(co_dir);
        if (*tb) return cmd_tables(tb_max_v, tb_long, jobs);
        if (*cp) return cmd_components(cp_n, cp_long);
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << '\n';
        return kExitBound;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitUsage;
}
