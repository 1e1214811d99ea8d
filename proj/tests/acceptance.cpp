// Acceptance suite: prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails.  All tolerances are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symcfg/blocking.hpp"
#include "symcfg/canonical.hpp"
#include "symcfg/colouring.hpp"
#include "symcfg/constructions.hpp"
#include "symcfg/core.hpp"
#include "symcfg/corpus.hpp"
#include "symcfg/enumeration.hpp"
#include "symcfg/graph.hpp"

using namespace symcfg;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail,
            Clock::time_point t0) {
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("[%s] %2d. %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
                dt, ok || detail.empty() ? "" : " — ", ok ? "" : detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt_hist(const std::map<int, long long>& h) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& kv : h) {
        if (!first) os << ", ";
        first = false;
        os << kv.first << ":" << kv.second;
    }
    os << "}";
    return os.str();
}

// Every fully coloured block must be rainbow.
bool partial_strong_ok(const Configuration& x, const Colouring& c) {
    for (const Block& b : x.blocks) {
        int c0 = c.assignment[b[0]], c1 = c.assignment[b[1]], c2 = c.assignment[b[2]];
        if (c0 < 0 || c1 < 0 || c2 < 0) continue;
        if (c0 == c1 || c0 == c2 || c1 == c2) return false;
    }
    return true;
}

Graph heawood_minus_edge() {
    Graph h = levi_graph(cyclic_config(7));
    auto edges = h.edges();
    edges.erase(edges.begin());  // edge-transitive, so the choice is immaterial
    Graph g = Graph::from_edges(h.n, edges);
    g.side = h.side;
    return g;
}

} // namespace

int main() {
    const int kVmin = 7, kVmax = 13;
    std::map<int, TableRow> rows;
    std::map<int, std::vector<Configuration>> classes;  // all classes, v <= 12
    for (int v = kVmin; v <= kVmax; ++v) {
        rows[v] = tabulate_properties(v);
        if (v <= 12) classes[v] = enumerate_configs(v, /*connected_only=*/false);
    }

    // 1. Isomorphism classes of connected systems.
    {
        auto t0 = Clock::now();
        const std::map<int, long long> want = {{7, 1},    {8, 1},    {9, 3},  {10, 10},
                                               {11, 31},  {12, 229}, {13, 2036}};
        std::ostringstream bad;
        for (auto& [v, n] : want) {
            long long got = rows[v].total - rows[v].disconnected;
            if (got != n) bad << " v=" << v << " expected " << n << ", got " << got << ";";
        }
        report(1, "enumeration counts (v = 7..13)", bad.str().empty(), bad.str(), t0);
    }

    // 2. Histogram of minimal blocking set sizes over connected classes.
    {
        auto t0 = Clock::now();
        struct Want {
            std::map<int, long long> hist;
            long long none;
        };
        const std::map<int, Want> want = {
            {7, {{}, 1}},
            {8, {{{4, 1}}, 0}},
            {9, {{{3, 2}, {4, 1}}, 0}},
            {10, {{{4, 8}, {5, 2}}, 0}},
            {11, {{{4, 25}, {5, 6}}, 0}},
            {12, {{{4, 45}, {5, 182}, {6, 2}}, 0}},
            {13, {{{5, 2020}, {6, 15}}, 1}},
        };
        std::ostringstream bad;
        for (auto& [v, w] : want) {
            if (rows[v].min_blocking != w.hist)
                bad << " v=" << v << " sizes: expected " << fmt_hist(w.hist) << ", got "
                    << fmt_hist(rows[v].min_blocking) << ";";
            if (rows[v].no_blocking_set != w.none)
                bad << " v=" << v << " without blocking set: expected " << w.none
                    << ", got " << rows[v].no_blocking_set << ";";
        }
        report(2, "minimal-blocking histograms (v = 7..13)", bad.str().empty(), bad.str(),
               t0);
    }

    // 3. Histogram of strong chromatic numbers over connected classes.
    {
        auto t0 = Clock::now();
        const std::map<int, std::map<int, long long>> want = {
            {7, {{7, 1}}},
            {8, {{4, 1}}},
            {9, {{3, 1}, {4, 1}, {5, 1}}},
            {10, {{4, 3}, {5, 7}}},
            {11, {{4, 21}, {5, 9}, {6, 1}}},
            {12, {{3, 4}, {4, 161}, {5, 64}}},
        };
        std::ostringstream bad;
        for (auto& [v, h] : want)
            if (rows[v].chi_s != h)
                bad << " v=" << v << ": expected " << fmt_hist(h) << ", got "
                    << fmt_hist(rows[v].chi_s) << ";";
        report(3, "strong-chromatic histograms (v = 7..12)", bad.str().empty(), bad.str(),
               t0);
    }

    // 4. Symmetry and connectivity columns.
    {
        auto t0 = Clock::now();
        // self-dual, self-polar, point-transitive, cyclic, flag-transitive,
        // weakly flag-transitive, blocking-set-free connected, disconnected
        const std::map<int, std::array<long long, 8>> want = {
            {7, {1, 1, 1, 1, 1, 1, 1, 0}},      {8, {1, 1, 1, 1, 1, 1, 0, 0}},
            {9, {3, 3, 2, 1, 1, 1, 0, 0}},      {10, {10, 10, 2, 1, 1, 1, 0, 0}},
            {11, {25, 25, 1, 1, 0, 0, 0, 0}},   {12, {95, 95, 4, 3, 1, 1, 0, 0}},
            {13, {366, 365, 2, 2, 1, 1, 1, 0}},
        };
        std::ostringstream bad;
        for (auto& [v, w] : want) {
            const TableRow& r = rows[v];
            std::array<long long, 8> got = {r.self_dual,
                                            r.self_polar,
                                            r.point_transitive,
                                            r.cyclic,
                                            r.flag_transitive,
                                            r.weakly_flag_transitive,
                                            r.bsfree_connected,
                                            r.disconnected};
            if (got != w) {
                bad << " v=" << v << ": expected";
                for (long long x : w) bad << " " << x;
                bad << ", got";
                for (long long x : got) bad << " " << x;
                bad << ";";
            }
        }
        report(4, "symmetry column counts (v = 7..13)", bad.str().empty(), bad.str(), t0);
    }

    auto corpus_groups = corpus_load();
    auto entries = corpus_entries(corpus_groups);

    // 5. |det| = permanent exactly on the blocking-set-free systems.
    {
        auto t0 = Clock::now();
        std::ostringstream bad;
        long long checked = 0;
        for (auto& [v, cls] : classes) {
            for (const Configuration& c : cls) {
                bool extremal = is_det_extremal(c).det_extremal;
                bool blocked = find_blocking_set(c).has_value();
                ++checked;
                if (extremal == blocked)
                    bad << " class at v=" << v << " (" << format_config(c) << ");";
            }
        }
        for (const CorpusEntry& e : entries) {
            if (e.config.v > 24) continue;
            bool extremal = is_det_extremal(e.config).det_extremal;
            bool blocked = find_blocking_set(e.config).has_value();
            ++checked;
            if (extremal == blocked) bad << " " << e.id << ";";
        }
        std::ostringstream name;
        name << "det-extremal == blocking-set-free (" << checked << " systems)";
        report(5, name.str(), bad.str().empty(), bad.str(), t0);
    }

    // 6. Minimal blocking sets of the cyclic systems: 2*floor(v/5) + eps.
    {
        auto t0 = Clock::now();
        std::ostringstream bad;
        for (int v = 8; v <= 24; ++v) {
            int r = v % 5;
            int want = 2 * (v / 5) + (r == 0 ? 0 : r == 1 ? 1 : 2);
            Configuration c = cyclic_config(v);
            BlockingProfile bp = blocking_profile(c);
            if (!bp.min_size || *bp.min_size != want) {
                bad << " v=" << v << ": expected " << want << ", got "
                    << (bp.min_size ? std::to_string(*bp.min_size) : "none") << ";";
                continue;
            }
            CyclicMinBlocking cmb = cyclic_min_blocking(v);
            std::vector<Point> pts;
            for (int i = 0; i < (int)cmb.witness.bits.size(); ++i)
                if (cmb.witness.bits[i]) pts.push_back(i);
            if (cmb.size != want || (int)cmb.witness.bits.size() != v ||
                (int)pts.size() != want || !word_is_blocking(cmb.witness) ||
                !is_blocking_set(c, pts))
                bad << " v=" << v << ": witness invalid;";
        }
        report(6, "cyclic minimum-blocking formula (v = 8..24)", bad.str().empty(),
               bad.str(), t0);
    }

    // 7. Strong chromatic numbers of the cyclic systems.
    {
        auto t0 = Clock::now();
        std::ostringstream bad;
        for (int v = 7; v <= 24; ++v) {
            int want = v == 7 ? 7 : v == 11 ? 6 : v % 4 == 0 ? 4 : 5;
            int got = strong_chromatic_number(cyclic_config(v)).first;
            if (got != want)
                bad << " v=" << v << ": expected " << want << ", got " << got << ";";
        }
        report(7, "cyclic strong chromatic numbers (v = 7..24)", bad.str().empty(),
               bad.str(), t0);
    }

    // 8. Closure of the Fano plane under the v+v'-1 stitch.
    {
        auto t0 = Clock::now();
        std::ostringstream bad;
        const std::map<int, std::pair<long long, long long>> want = {
            {7, {1, 1}}, {13, {1, 1}}, {19, {4, 2}}, {25, {23, 5}}};
        std::map<int, StitchClosureRow> closure;
        for (auto& [v, w] : want) {
            closure[v] = enumerate_3conn_bsfree(v);
            const StitchClosureRow& row = closure[v];
            if ((long long)row.classes.size() != w.first ||
                row.self_dual != w.second)
                bad << " v=" << v << ": expected " << w.first << " classes ("
                    << w.second << " self-dual), got " << row.classes.size() << " ("
                    << row.self_dual << ");";
        }
        // The four 19-point classes must match the reference corpus group.
        std::set<CanonicalForm> got19, want19;
        for (const Configuration& c : closure[19].classes) got19.insert(canonical_form(c));
        for (const CorpusGroup& g : corpus_groups)
            if (g.id == "bsfree-19")
                for (const CorpusEntry& e : g.entries)
                    want19.insert(canonical_form(e.config));
        if (want19.size() != 4)
            bad << " reference group bsfree-19 has " << want19.size()
                << " classes, expected 4;";
        else if (got19 != want19)
            bad << " the four 19-point classes do not match the reference lists;";
        report(8, "stitch closure: 1/1/4/23 classes at v = 7/13/19/25",
               bad.str().empty(), bad.str(), t0);
    }

    // 9. Components for the 2-connected search.
    {
        auto t0 = Clock::now();
        std::ostringstream bad;
        auto c14 = generate_components(14);
        if (c14.size() != 1)
            bad << " n=14: expected 1 component, got " << c14.size() << ";";
        else if (graph_certificate(c14[0].graph) != graph_certificate(heawood_minus_edge()))
            bad << " n=14: component is not the edge-deleted Heawood graph;";
        auto c16 = generate_components(16);
        if (c16.size() != 3)
            bad << " n=16: expected 3 components, got " << c16.size() << ";";
        report(9, "component generation (1 at n=14, 3 at n=16)", bad.str().empty(),
               bad.str(), t0);
    }

    // 10. Corpus verification: every listed system matches every stated property.
    {
        auto t0 = Clock::now();
        MismatchReport r = corpus_verify(corpus_groups);
        std::ostringstream bad;
        if (r.entries_checked != 93)
            bad << " expected 93 entries, checked " << r.entries_checked << ";";
        for (const std::string& m : r.mismatches) bad << " " << m << ";";
        std::ostringstream name;
        name << "corpus verification (" << r.entries_checked << " systems, "
             << r.checks_performed << " checks)";
        report(10, name.str(), bad.str().empty() && r.ok(), bad.str(), t0);
    }

    // 11. Non-Hamiltonian Levi graphs of the even blocking-set-free systems.
    {
        auto t0 = Clock::now();
        std::ostringstream bad;
        std::vector<std::string> ids;
        for (const CorpusEntry& e : entries) {
            if (e.config.v % 2 != 0 || find_blocking_set(e.config)) continue;
            ids.push_back(e.id);
            HamiltonicityResult r = is_hamiltonian(levi_graph(e.config), 2 * e.config.v);
            if (r.hamiltonian) bad << " " << e.id << " has a Hamiltonian Levi graph;";
        }
        if (ids.size() != 3) {
            bad << " expected the three even systems (22, 30, 32 points), found";
            for (auto& id : ids) bad << " " << id;
            bad << ";";
        }
        report(11, "Levi graphs of even blocking-set-free systems are non-Hamiltonian",
               bad.str().empty(), bad.str(), t0);
    }

    // 12. Property suites on all classes with v <= 12.
    {
        auto t0 = Clock::now();
        std::ostringstream bad;
        long long spectra = 0, weak2 = 0, near4 = 0;
        for (auto& [v, cls] : classes) {
            for (const Configuration& c : cls) {
                if (!is_connected(c)) continue;
                // (a) The realized sizes form exactly the interval [min, v-min].
                BlockingProfile bp = blocking_profile(c);
                std::vector<int> direct = blocking_set_sizes_direct(c);
                ++spectra;
                if (direct != bp.sizes) {
                    bad << " spectrum gap at v=" << v << " (" << format_config(c) << ");";
                    continue;
                }
                int chi_s = strong_chromatic_number(c).first;
                // (b) Strongly 3- or 4-chromatic forces a weak 2-colouring.
                if (chi_s <= 4) {
                    ++weak2;
                    if (!weak_colouring(c, 2))
                        bad << " chi_s=" << chi_s << " but chi_w=3 at v=" << v << " ("
                            << format_config(c) << ");";
                }
                // (c) A near-4-colouring forces a weak 2-colouring.
                if (chi_s == 5) {
                    auto nc = near_4_colouring(c, 2);
                    if (nc) {
                        ++near4;
                        if (!partial_strong_ok(c, nc->partial))
                            bad << " invalid near-4-colouring at v=" << v << ";";
                        if (!weak_colouring(c, 2))
                            bad << " near-4-colourable but chi_w=3 at v=" << v << " ("
                                << format_config(c) << ");";
                    }
                }
            }
        }
        // (d) Colour-class-deleted graphs: the s-point family has all three
        // deletions isomorphic to the prescribed circulant, and an arbitrary
        // cubic bipartite graph is realized by some deletion of its extension.
        for (int s = 3; s <= 7; ++s) {
            Col3IsoFamily fam = col3iso_family(s);
            if (!verify_strong_colouring(fam.config, fam.colouring) ||
                fam.colouring.colours != 3) {
                bad << " col3iso(" << s << "): colouring invalid;";
                continue;
            }
            auto del = deleted_class_graphs(fam.config, fam.colouring);
            auto cert = graph_certificate(fam.gamma);
            for (int k = 0; k < 3; ++k)
                if (graph_certificate(del[k]) != cert)
                    bad << " col3iso(" << s << "): deleted class " << k
                        << " not isomorphic to the target;";
        }
        for (int m = 3; m <= 7; ++m) {
            Graph gamma = col3iso_family(m).gamma;
            if (m == 7) gamma = levi_graph(cyclic_config(7));  // Heawood
            DelGraphResult dg = delgraph_config(gamma);
            if (!verify_strong_colouring(dg.config, dg.colouring) ||
                dg.colouring.colours != 3) {
                bad << " delgraph(m=" << m << "): colouring invalid;";
                continue;
            }
            auto del = deleted_class_graphs(dg.config, dg.colouring);
            auto cert = graph_certificate(gamma);
            bool hit = false;
            for (int k = 0; k < 3; ++k)
                if (graph_certificate(del[k]) == cert) hit = true;
            if (!hit)
                bad << " delgraph(m=" << m << "): no deleted class recovers the input;";
        }
        std::ostringstream name;
        name << "property suites (" << spectra << " spectra, " << weak2
             << " weak-2, " << near4 << " near-4, deleted-class checks)";
        report(12, name.str(), bad.str().empty(), bad.str(), t0);
    }

    if (g_failures == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
