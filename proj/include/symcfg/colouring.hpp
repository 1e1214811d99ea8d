#pragma once

// Strong and weak colourings.  The strong chromatic number of a configuration
// equals the chromatic number of its associated graph; that graph is
// 6-regular, so chi_s <= 7 with equality exactly when the associated graph is
// complete.  The exact solver is saturation-ordered backtracking with a
// clique lower bound and colour-symmetry breaking; a deliberately naive
// brute-force colourer doubles as an oracle for small instances.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symcfg/blocking.hpp"
#include "symcfg/core.hpp"
#include "symcfg/graph.hpp"

namespace symcfg {

struct Colouring {
    std::vector<int> assignment;  // point -> colour, -1 when uncoloured
    int colours = 0;              // number of colours used

    static Colouring of(std::vector<int> a) {
        Colouring c;
        c.assignment = std::move(a);
        c.colours = 0;
        for (int x : c.assignment)
            if (x >= c.colours) c.colours = x + 1;
        return c;
    }
};

inline bool verify_strong_colouring(const Configuration& x, const Colouring& c) {
    if ((int)c.assignment.size() != x.v) return false;
    for (int a : c.assignment)
        if (a < 0) return false;
    for (const Block& b : x.blocks) {
        int c0 = c.assignment[b[0]], c1 = c.assignment[b[1]], c2 = c.assignment[b[2]];
        if (c0 == c1 || c0 == c2 || c1 == c2) return false;
    }
    return true;
}

inline bool verify_weak_colouring(const Configuration& x, const Colouring& c) {
    if ((int)c.assignment.size() != x.v) return false;
    for (int a : c.assignment)
        if (a < 0) return false;
    for (const Block& b : x.blocks)
        if (c.assignment[b[0]] == c.assignment[b[1]] &&
            c.assignment[b[1]] == c.assignment[b[2]])
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exact graph colouring

namespace detail {

// Largest clique by per-vertex neighbourhood subset enumeration; exact and
// cheap when maximum degree is small (here <= 6).
inline int max_clique(const Graph& g) {
    int best = g.n > 0 ? 1 : 0;
    for (int u = 0; u < g.n; ++u) {
        const auto& nb = g.adj[u];
        int d = (int)nb.size();
        for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
            if (__builtin_popcount(mask) + 1 <= best) continue;
            bool clique = true;
            for (int i = 0; i < d && clique; ++i) {
                if (!(mask >> i & 1)) continue;
                for (int j = i + 1; j < d && clique; ++j)
                    if ((mask >> j & 1) && !g.has_edge(nb[i], nb[j])) clique = false;
            }
            if (clique) best = std::max(best, __builtin_popcount(mask) + 1);
        }
    }
    return best;
}

// Decision: proper k-colouring of g, honouring any preassigned colours in
// `fixed` (entries -1 are free).  Saturation-degree vertex choice; a vertex
// may open at most one new colour index (symmetry breaking, applied only
// when nothing is preassigned).
inline bool k_colouring(const Graph& g, int k, std::vector<int>& out,
                        const std::vector<int>& fixed = {}) {
    std::vector<int> colour(g.n, -1);
    bool symmetry_free = true;
    int precoloured = 0;
    if (!fixed.empty()) {
        for (int u = 0; u < g.n; ++u)
            if (fixed[u] != -1) {
                if (fixed[u] >= k) return false;
                colour[u] = fixed[u];
                ++precoloured;
                symmetry_free = false;
            }
        for (int u = 0; u < g.n; ++u)
            if (colour[u] != -1)
                for (int w : g.adj[u])
                    if (colour[w] == colour[u]) return false;
    }
    std::vector<std::uint32_t> sat(g.n, 0);  // bitmask of neighbour colours
    for (int u = 0; u < g.n; ++u)
        if (colour[u] != -1)
            for (int w : g.adj[u]) sat[w] |= 1u << colour[u];

    int max_used = 0;
    for (int u = 0; u < g.n; ++u) max_used = std::max(max_used, colour[u] + 1);

    std::function<bool(int, int)> go = [&](int done, int used) {
        if (done == g.n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int u = 0; u < g.n; ++u) {
            if (colour[u] != -1) continue;
            int s = __builtin_popcount(sat[u]);
            int d = (int)g.adj[u].size();
            if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
                pick = u;
                pick_sat = s;
                pick_deg = d;
            }
        }
        int limit = symmetry_free ? std::min(k, used + 1) : k;
        for (int col = 0; col < limit; ++col) {
            if (sat[pick] >> col & 1) continue;
            colour[pick] = col;
            std::vector<int> touched;
            for (int w : g.adj[pick])
                if (!(sat[w] >> col & 1)) {
                    sat[w] |= 1u << col;
                    touched.push_back(w);
                }
            if (go(done + 1, std::max(used, col + 1))) return true;
            for (int w : touched) sat[w] &= ~(1u << col);
            colour[pick] = -1;
        }
        return false;
    };
    if (!go(precoloured, max_used)) return false;
    out = colour;
    return true;
}

// Deliberately different implementation used as an oracle: fixed vertex
// order, all k colours tried at every vertex, conflict check against earlier
// vertices only.
inline bool k_colouring_bruteforce(const Graph& g, int k) {
    std::vector<int> colour(g.n, -1);
    std::function<bool(int)> go = [&](int u) {
        if (u == g.n) return true;
        for (int col = 0; col < k; ++col) {
            bool ok = true;
            for (int w : g.adj[u])
                if (w < u && colour[w] == col) {
                    ok = false;
                    break;
                }
            if (ok) {
                colour[u] = col;
                if (go(u + 1)) return true;
                colour[u] = -1;
            }
        }
        return false;
    };
    return go(0);
}

}  // namespace detail

inline int chromatic_number(const Graph& g, std::vector<int>* witness = nullptr) {
    if (g.n == 0) return 0;
    int lo = detail::max_clique(g);
    for (int k = lo;; ++k) {
        std::vector<int> out;
        if (detail::k_colouring(g, k, out)) {
            if (witness) *witness = out;
            return k;
        }
    }
}

inline int chromatic_number_bruteforce(const Graph& g) {
    if (g.n == 0) return 0;
    for (int k = 1;; ++k)
        if (detail::k_colouring_bruteforce(g, k)) return k;
}

// ---------------------------------------------------------------------------
// Configuration-level operations

inline std::pair<int, Colouring> strong_chromatic_number(const Configuration& x) {
    Graph g = associated_graph(x);
    std::vector<int> w;
    int chi = chromatic_number(g, &w);
    Colouring col = Colouring::of(std::move(w));
    assert(verify_strong_colouring(x, col));
    return {chi, col};
}

// Weak colouring with k colours (no monochromatic block), as a search over
// assignments with block propagation; k = 2 reduces to a blocking set.
inline std::optional<Colouring> weak_colouring(const Configuration& x, int k) {
    if (k >= 3) {
        // colour points greedily: a block forces nothing until two of its
        // points share a colour, so plain backtracking terminates instantly
        std::vector<int> colour(x.v, -1);
        auto thru = blocks_through(x);
        std::function<bool(int)> go = [&](int p) {
            if (p == x.v) return true;
            for (int col = 0; col < k; ++col) {
                bool ok = true;
                for (int bi : thru[p]) {
                    const Block& b = x.blocks[bi];
                    int same = 0, assigned = 0;
                    for (Point t : b)
                        if (t != p && colour[t] != -1) {
                            ++assigned;
                            if (colour[t] == col) ++same;
                        }
                    if (assigned == 2 && same == 2) ok = false;
                }
                if (!ok) continue;
                colour[p] = col;
                if (go(p + 1)) return true;
                colour[p] = -1;
            }
            return false;
        };
        if (go(0)) return Colouring::of(colour);
        return std::nullopt;
    }
    auto q = find_blocking_set(x);
    if (!q) return std::nullopt;
    std::vector<int> colour(x.v, 0);
    for (Point p : *q) colour[p] = 1;
    return Colouring::of(colour);
}

struct NotAStrong3Colouring : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Induced subgraphs of the associated graph after deleting each colour class
// of a strong 3-colouring.  Each result is cubic and bipartite (sides = the
// two surviving classes).
inline std::array<Graph, 3> deleted_class_graphs(const Configuration& x,
                                                 const Colouring& c) {
    std::vector<int> values(c.assignment);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() != 3 || !verify_strong_colouring(x, c))
        throw NotAStrong3Colouring("deleted_class_graphs needs a strong 3-colouring");
    auto cls = [&](Point p) {
        return (int)(std::find(values.begin(), values.end(), c.assignment[p]) -
                     values.begin());
    };
    Graph g = associated_graph(x);
    std::array<Graph, 3> out;
    for (int t = 0; t < 3; ++t) {
        std::vector<int> keep;
        for (int u = 0; u < x.v; ++u)
            if (cls(u) != t) keep.push_back(u);
        Graph h = induced_subgraph(g, keep);
        h.side.resize(h.n);
        int lo = t == 0 ? 1 : 0;
        for (int i = 0; i < h.n; ++i) h.side[i] = cls(keep[i]) == lo ? 0 : 1;
        for (int i = 0; i < h.n; ++i) assert(h.adj[i].size() == 3);
        out[t] = std::move(h);
    }
    return out;
}

struct NearColouring {
    Colouring partial;            // -1 on the uncoloured points
    std::vector<Point> uncoloured;
};

// Partial strong 4-colouring leaving at most `max_uncoloured` (<= 2) points
// uncoloured.  Uncoloured-set choices are searched lazily by size.
inline std::optional<NearColouring> near_4_colouring(const Configuration& x,
                                                     int max_uncoloured,
                                                     int max_v = 20) {
    if (x.v > max_v)
        throw BoundExceeded("near_4_colouring limited to " + std::to_string(max_v) +
                            " points");
    if (max_uncoloured < 0 || max_uncoloured > 2)
        throw std::invalid_argument("near_4_colouring: max_uncoloured must be 0..2");
    Graph g = associated_graph(x);
    auto try_without = [&](const std::vector<Point>& skip)
        -> std::optional<NearColouring> {
        std::vector<int> keep;
        std::vector<char> skipped(x.v, 0);
        for (Point p : skip) skipped[p] = 1;
        for (int u = 0; u < x.v; ++u)
            if (!skipped[u]) keep.push_back(u);
        Graph h = induced_subgraph(g, keep);
        std::vector<int> out;
        if (!detail::k_colouring(h, 4, out)) return std::nullopt;
        std::vector<int> full(x.v, -1);
        for (int i = 0; i < (int)keep.size(); ++i) full[keep[i]] = out[i];
        NearColouring nc;
        nc.partial = Colouring::of(full);
        nc.uncoloured = skip;
        return nc;
    };
    if (auto r = try_without({})) return r;
    if (max_uncoloured >= 1)
        for (Point p = 0; p < x.v; ++p)
            if (auto r = try_without({p})) return r;
    if (max_uncoloured >= 2)
        for (Point p = 0; p < x.v; ++p)
            for (Point q = p + 1; q < x.v; ++q)
                if (auto r = try_without({p, q})) return r;
    return std::nullopt;
}

struct ColouringReport {
    int chi_w = 3;
    int chi_s = 0;
    Colouring strong_witness;
    Colouring weak_witness;
};

inline ColouringReport colouring_report(const Configuration& x) {
    ColouringReport r;
    auto [chi, wit] = strong_chromatic_number(x);
    r.chi_s = chi;
    r.strong_witness = std::move(wit);
    if (auto w2 = weak_colouring(x, 2)) {
        r.chi_w = 2;
        r.weak_witness = std::move(*w2);
    } else {
        r.chi_w = 3;
        auto w3 = weak_colouring(x, 3);
        assert(w3);
        r.weak_witness = std::move(*w3);
    }
    return r;
}

}  // namespace symcfg
