#pragma once

// Graph utilities for configurations: the Levi (incidence) graph, the
// associated graph (points adjacent when co-blocked), girth, vertex
// connectivity of cubic graphs, Hamiltonicity by pruned backtracking, and
// 3K2 decompositions of cubic bipartite graphs.

#include <algorithm>
#include <array>
#include <cassert>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcfg/core.hpp"

namespace symcfg {

constexpr int kInfinity = std::numeric_limits<int>::max();

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    // side[u] in {0,1} for bipartite graphs with a fixed bipartition,
    // empty otherwise.
    std::vector<int> side;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g;
        g.n = n;
        g.adj.resize(n);
        for (auto [u, w] : edges) {
            assert(u != w && u >= 0 && w >= 0 && u < n && w < n);
            g.adj[u].push_back(w);
            g.adj[w].push_back(u);
        }
        for (auto& a : g.adj) std::sort(a.begin(), a.end());
        return g;
    }

    bool has_edge(int u, int w) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), w);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int w : adj[u])
                if (u < w) e.emplace_back(u, w);
        return e;
    }

    std::string to_edge_list() const {
        std::string s;
        for (auto [u, w] : edges()) {
            s += std::to_string(u);
            s += ' ';
            s += std::to_string(w);
            s += '\n';
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// Levi graph: vertices 0..v-1 are points, v..2v-1 are blocks.

inline Graph levi_graph_raw(int v, const std::vector<Block>& blocks) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(blocks.size() * 3);
    for (int i = 0; i < (int)blocks.size(); ++i)
        for (Point p : blocks[i]) edges.emplace_back(p, v + i);
    Graph g = Graph::from_edges(v + (int)blocks.size(), edges);
    g.side.assign(g.n, 0);
    for (int i = v; i < g.n; ++i) g.side[i] = 1;
    return g;
}

inline Graph levi_graph(const Configuration& c) { return levi_graph_raw(c.v, c.blocks); }

// Associated graph: one vertex per point, edges between co-blocked points.
// 6-regular for valid configurations.
inline Graph associated_graph(const Configuration& c) {
    std::vector<std::pair<int, int>> edges;
    for (const Block& b : c.blocks) {
        edges.emplace_back(b[0], b[1]);
        edges.emplace_back(b[0], b[2]);
        edges.emplace_back(b[1], b[2]);
    }
    return Graph::from_edges(c.v, edges);
}

// Reads a configuration back off a Levi graph with labelled sides.
inline Configuration config_from_levi(const Graph& g) {
    if ((int)g.side.size() != g.n)
        throw std::invalid_argument("config_from_levi: graph lacks side labels");
    std::vector<int> pt_label(g.n, -1);
    int v = 0;
    for (int u = 0; u < g.n; ++u)
        if (g.side[u] == 0) pt_label[u] = v++;
    std::vector<Block> blocks;
    for (int u = 0; u < g.n; ++u) {
        if (g.side[u] != 1) continue;
        if (g.adj[u].size() != 3)
            throw std::invalid_argument("config_from_levi: block vertex of degree != 3");
        blocks.push_back(make_block(pt_label[g.adj[u][0]], pt_label[g.adj[u][1]],
                                    pt_label[g.adj[u][2]]));
    }
    return Configuration::from_blocks(v, std::move(blocks));
}

// Induced subgraph on the listed vertices, relabelled densely in the given
// order.  Side labels carry over when present.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> newid(g.n, -1);
    for (int i = 0; i < (int)vertices.size(); ++i) {
        assert(vertices[i] >= 0 && vertices[i] < g.n && newid[vertices[i]] == -1);
        newid[vertices[i]] = i;
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : vertices)
        for (int w : g.adj[u])
            if (newid[w] != -1 && newid[u] < newid[w])
                edges.emplace_back(newid[u], newid[w]);
    Graph h = Graph::from_edges((int)vertices.size(), edges);
    if (!g.side.empty()) {
        h.side.resize(vertices.size());
        for (int u : vertices) h.side[newid[u]] = g.side[u];
    }
    return h;
}

// ---------------------------------------------------------------------------
// Girth via breadth-first search from every vertex.

inline int girth(const Graph& g) {
    int best = kInfinity;
    std::vector<int> dist(g.n), parent(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (best != kInfinity && 2 * dist[u] >= best) break;
            for (int w : g.adj[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

inline bool graph_connected(const Graph& g, const std::vector<char>& removed = {}) {
    int start = -1, want = 0;
    for (int u = 0; u < g.n; ++u)
        if (removed.empty() || !removed[u]) {
            if (start == -1) start = u;
            ++want;
        }
    if (start == -1) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int got = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.adj[u])
            if (!seen[w] && (removed.empty() || !removed[w])) {
                seen[w] = 1;
                ++got;
                stack.push_back(w);
            }
    }
    return got == want;
}

// ---------------------------------------------------------------------------
// Vertex connectivity of the Levi graph of a connected configuration.  Cubic
// graphs have connectivity at most 3, so an exhaustive scan over single
// vertices and pairs is exact and cheap at these orders.

struct ConnectivityResult {
    int connectivity = 0;
    std::optional<std::pair<int, int>> cut;  // a separating pair when = 2
};

struct NotConnected : std::runtime_error {
    NotConnected() : std::runtime_error("configuration is not connected") {}
};

inline ConnectivityResult config_connectivity(const Configuration& c) {
    Graph g = levi_graph(c);
    if (!graph_connected(g)) throw NotConnected();
    std::vector<char> removed(g.n, 0);
    for (int u = 0; u < g.n; ++u) {
        removed[u] = 1;
        bool conn = graph_connected(g, removed);
        removed[u] = 0;
        if (!conn) return {1, std::make_pair(u, u)};  // impossible for valid configurations
    }
    for (int u = 0; u < g.n; ++u) {
        removed[u] = 1;
        for (int w = u + 1; w < g.n; ++w) {
            removed[w] = 1;
            bool conn = graph_connected(g, removed);
            removed[w] = 0;
            if (!conn) {
                removed[u] = 0;
                return {2, std::make_pair(u, w)};
            }
        }
        removed[u] = 0;
    }
    return {3, std::nullopt};
}

// ---------------------------------------------------------------------------
// Hamiltonicity.  Edge-state backtracking: every edge is undecided, in, or
// out of the cycle.  Unit propagation keeps each vertex at two cycle edges;
// chosen edges form disjoint paths until the final closure.  A branch dies
// when the graph of usable (in + undecided) edges disconnects, gains a cut
// vertex, or gains a bridge: a Hamiltonian cycle is a spanning 2-connected
// subgraph, so none of these can be repaired.

namespace detail {

class HamiltonSearch {
  public:
    explicit HamiltonSearch(const Graph& g) : g_(g), n_(g.n), inc_(g.n) {
        for (int u = 0; u < n_; ++u)
            for (int w : g.adj[u])
                if (u < w) {
                    inc_[u].push_back((int)eu_.size());
                    inc_[w].push_back((int)eu_.size());
                    eu_.push_back(u);
                    ew_.push_back(w);
                }
        m_ = (int)eu_.size();
        state_.assign(m_, UNDEC);
        cnt_in_.assign(n_, 0);
        cnt_out_.assign(n_, 0);
        other_end_.resize(n_);
        std::iota(other_end_.begin(), other_end_.end(), 0);
        low_.resize(n_);
        disc_.resize(n_);
    }

    std::optional<std::vector<int>> run() {
        if (n_ < 3) return std::nullopt;
        for (int u = 0; u < n_; ++u)
            if ((int)g_.adj[u].size() < 2) return std::nullopt;
        if (!g_.side.empty()) {
            long a = std::count(g_.side.begin(), g_.side.end(), 0);
            if (2 * a != n_) return std::nullopt;  // bipartite with unequal parts
        }
        if (search()) return extract_cycle();
        return std::nullopt;
    }

  private:
    enum EdgeState : signed char { UNDEC = 0, IN = 1, OUT = 2 };

    const Graph& g_;
    int n_, m_ = 0;
    std::vector<std::vector<int>> inc_;
    std::vector<int> eu_, ew_;
    std::vector<signed char> state_;
    std::vector<int> cnt_in_, cnt_out_;
    std::vector<int> other_end_;  // valid for current path endpoints
    int in_edges_ = 0;

    struct TrailEntry {
        int edge;
        signed char state;
        int ou, ow;  // saved endpoints for IN assignments
    };
    std::vector<TrailEntry> trail_;

    std::vector<int> low_, disc_;  // scratch for the cut search

    bool assign(int e, EdgeState s) {
        if (state_[e] == s) return true;
        if (state_[e] != UNDEC) return false;
        int u = eu_[e], w = ew_[e];
        if (s == IN) {
            if (cnt_in_[u] == 2 || cnt_in_[w] == 2) return false;
            int ou = other_end_[u], ow = other_end_[w];
            if (ou == w && in_edges_ != n_ - 1) return false;  // premature cycle
            state_[e] = IN;
            ++in_edges_;
            ++cnt_in_[u];
            ++cnt_in_[w];
            other_end_[ou] = ow;
            other_end_[ow] = ou;
            trail_.push_back({e, IN, ou, ow});
        } else {
            if (degree_avail(u) <= 2 || degree_avail(w) <= 2) {
                // Removing the edge would leave fewer than two usable edges.
                if (cnt_in_[u] < 2 && degree_avail(u) <= 2) return false;
                if (cnt_in_[w] < 2 && degree_avail(w) <= 2) return false;
            }
            state_[e] = OUT;
            ++cnt_out_[u];
            ++cnt_out_[w];
            trail_.push_back({e, OUT, -1, -1});
        }
        return true;
    }

    int degree_avail(int u) const { return (int)g_.adj[u].size() - cnt_out_[u]; }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            TrailEntry t = trail_.back();
            trail_.pop_back();
            int u = eu_[t.edge], w = ew_[t.edge];
            if (t.state == IN) {
                --in_edges_;
                --cnt_in_[u];
                --cnt_in_[w];
                other_end_[t.ou] = u;
                other_end_[t.ow] = w;
            } else {
                --cnt_out_[u];
                --cnt_out_[w];
            }
            state_[t.edge] = UNDEC;
        }
    }

    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int u = 0; u < n_; ++u) {
                int avail = degree_avail(u);
                if (cnt_in_[u] > 2 || avail < 2 || cnt_in_[u] > avail) return false;
                if (cnt_in_[u] == 2) {
                    for (int e : inc_[u])
                        if (state_[e] == UNDEC) {
                            if (!assign(e, OUT)) return false;
                            changed = true;
                        }
                } else if (avail == 2) {
                    for (int e : inc_[u])
                        if (state_[e] != OUT && state_[e] == UNDEC) {
                            if (!assign(e, IN)) return false;
                            changed = true;
                        }
                }
            }
        }
        return true;
    }

    // One DFS over the usable graph detecting disconnection, cut vertices and
    // bridges.  Any of them kills the branch.
    bool usable_two_connected() {
        std::fill(disc_.begin(), disc_.end(), -1);
        int timer = 0;
        bool ok = true;
        // iterative Tarjan
        struct Frame {
            int u, parent_edge;
            size_t idx;
        };
        std::vector<Frame> stack;
        stack.push_back({0, -1, 0});
        disc_[0] = low_[0] = timer++;
        int seen = 1, root_children = 0;
        while (!stack.empty() && ok) {
            Frame& f = stack.back();
            if (f.idx < inc_[f.u].size()) {
                int e = inc_[f.u][f.idx++];
                if (state_[e] == OUT || e == f.parent_edge) continue;
                int w = eu_[e] == f.u ? ew_[e] : eu_[e];
                if (disc_[w] == -1) {
                    disc_[w] = low_[w] = timer++;
                    ++seen;
                    if (f.u == 0) ++root_children;
                    stack.push_back({w, e, 0});
                } else {
                    low_[f.u] = std::min(low_[f.u], disc_[w]);
                }
            } else {
                int u = f.u, pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().u;
                    low_[p] = std::min(low_[p], low_[u]);
                    if (low_[u] > disc_[p]) ok = false;  // bridge pe
                    if (p != 0 && low_[u] >= disc_[p]) ok = false;  // cut vertex p
                    (void)pe;
                }
            }
        }
        if (seen != n_) return false;
        if (root_children > 1) return false;  // root cut vertex
        return ok;
    }

    int pick_branch_edge() const {
        int best = -1, best_key = kInfinity;
        for (int u = 0; u < n_; ++u) {
            if (cnt_in_[u] != 1) continue;  // extend an existing path first
            for (int e : inc_[u])
                if (state_[e] == UNDEC) {
                    int w = eu_[e] == u ? ew_[e] : eu_[e];
                    int key = degree_avail(w) * 1024 + e;
                    if (key < best_key) {
                        best_key = key;
                        best = e;
                    }
                }
        }
        if (best != -1) return best;
        for (int e = 0; e < m_; ++e)
            if (state_[e] == UNDEC) return e;
        return -1;
    }

    bool search() {
        size_t mark = trail_.size();
        if (!propagate() || !usable_two_connected()) {
            undo_to(mark);
            return false;
        }
        if (in_edges_ == n_) return true;  // closed Hamiltonian cycle
        int e = pick_branch_edge();
        if (e == -1) {
            // all edges decided but the cycle did not close
            undo_to(mark);
            return false;
        }
        size_t mark2 = trail_.size();
        if (assign(e, IN) && search()) return true;
        undo_to(mark2);
        if (assign(e, OUT) && search()) return true;
        undo_to(mark2);
        undo_to(mark);
        return false;
    }

    std::vector<int> extract_cycle() const {
        std::vector<int> cycle;
        cycle.reserve(n_);
        int u = 0, prev = -1;
        do {
            cycle.push_back(u);
            for (int e : inc_[u])
                if (state_[e] == IN) {
                    int w = eu_[e] == u ? ew_[e] : eu_[e];
                    if (w != prev) {
                        prev = u;
                        u = w;
                        break;
                    }
                }
        } while (u != 0 && (int)cycle.size() <= n_);
        return cycle;
    }
};

}  // namespace detail

struct HamiltonicityResult {
    bool hamiltonian = false;
    std::vector<int> cycle;  // vertex order when hamiltonian
};

inline HamiltonicityResult is_hamiltonian(const Graph& g, int max_order = 64) {
    if (g.n > max_order)
        throw BoundExceeded("Hamiltonicity search limited to order " +
                            std::to_string(max_order));
    detail::HamiltonSearch s(g);
    auto cyc = s.run();
    if (cyc) return {true, *cyc};
    return {false, {}};
}

// Hamiltonian path with fixed endpoints via the augmented-vertex trick: add a
// new vertex adjacent to exactly u and w; the augmented graph is Hamiltonian
// iff a spanning path from u to w exists.
inline bool hamiltonian_path_between(const Graph& g, int u, int w, int max_order = 64) {
    if (u == w || u < 0 || w < 0 || u >= g.n || w >= g.n)
        throw std::invalid_argument("hamiltonian_path_between: bad endpoints");
    auto edges = g.edges();
    edges.emplace_back(g.n, u);
    edges.emplace_back(g.n, w);
    Graph aug = Graph::from_edges(g.n + 1, edges);
    if (!g.side.empty()) {
        // The auxiliary vertex breaks bipartiteness bookkeeping; drop labels.
        aug.side.clear();
    }
    return is_hamiltonian(aug, max_order + 1).hamiltonian;
}

// Straightforward spanning-path backtracking, kept as an independent
// cross-check for hamiltonian_path_between.
namespace detail {
inline bool ham_path_direct_rec(const Graph& g, int u, int target,
                                std::vector<char>& used, int left) {
    if (left == 0) return u == target;
    if (u == target) return false;
    // every unused vertex other than the target still needs two usable edges
    for (int w : g.adj[u])
        if (!used[w]) {
            used[w] = 1;
            if (ham_path_direct_rec(g, w, target, used, left - 1)) return true;
            used[w] = 0;
        }
    return false;
}
}  // namespace detail

inline bool hamiltonian_path_direct(const Graph& g, int u, int w) {
    std::vector<char> used(g.n, 0);
    used[u] = 1;
    return detail::ham_path_direct_rec(g, u, w, used, g.n - 1);
}

// ---------------------------------------------------------------------------
// Bipartite maximum matching (Kuhn), used to 3-edge-colour cubic bipartite
// graphs by repeatedly extracting perfect matchings.

namespace detail {

inline bool kuhn_try(const std::vector<std::vector<int>>& adj, int u,
                     std::vector<int>& match, std::vector<char>& seen) {
    for (int w : adj[u]) {
        if (seen[w]) continue;
        seen[w] = 1;
        if (match[w] == -1 || kuhn_try(adj, match[w], match, seen)) {
            match[w] = u;
            return true;
        }
    }
    return false;
}

}  // namespace detail

struct DecompositionNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Partitions the edges of a cubic bipartite graph into three perfect
// matchings (Koenig's edge-colouring theorem).
inline std::array<std::vector<std::pair<int, int>>, 3> edge_three_colouring(const Graph& g) {
    if (g.side.empty()) throw std::invalid_argument("edge colouring needs side labels");
    for (int u = 0; u < g.n; ++u)
        if ((int)g.adj[u].size() != 3)
            throw std::invalid_argument("edge_three_colouring: graph is not cubic");
    std::vector<std::vector<int>> adj(g.n);
    for (int u = 0; u < g.n; ++u) adj[u] = g.adj[u];
    std::array<std::vector<std::pair<int, int>>, 3> classes;
    for (int round = 0; round < 3; ++round) {
        std::vector<int> match(g.n, -1);
        for (int u = 0; u < g.n; ++u) {
            if (g.side[u] != 0) continue;
            std::vector<char> seen(g.n, 0);
            if (!detail::kuhn_try(adj, u, match, seen))
                throw DecompositionNotFound("edge_three_colouring: no perfect matching");
        }
        for (int w = 0; w < g.n; ++w) {
            if (g.side[w] != 1 || match[w] == -1) continue;
            int u = match[w];
            classes[round].emplace_back(u, w);
            adj[u].erase(std::find(adj[u].begin(), adj[u].end(), w));
            adj[w].erase(std::find(adj[w].begin(), adj[w].end(), u));
        }
    }
    return classes;
}

// ---------------------------------------------------------------------------
// 3K2 decomposition: a partition of the edges of a cubic bipartite graph on
// 2m vertices into m triples of pairwise disjoint edges.  A proper
// 3-edge-colouring supplies candidate triples (one edge per colour class);
// backtracking completes the partition, falling back to unrestricted triples
// if the colour-respecting search is exhausted.

using EdgeTriple = std::array<std::pair<int, int>, 3>;

namespace detail {

inline bool three_k2_rec(const std::vector<std::pair<int, int>>& edges,
                         const std::vector<std::array<std::vector<int>, 3>>& by_class,
                         const std::vector<int>& cls, std::vector<char>& used,
                         std::vector<EdgeTriple>& out, int m, bool respect_colours) {
    int first = -1;
    for (int e = 0; e < (int)edges.size(); ++e)
        if (!used[e]) {
            first = e;
            break;
        }
    if (first == -1) return (int)out.size() == m;
    auto disjoint = [&](int a, int b) {
        auto [u1, w1] = edges[a];
        auto [u2, w2] = edges[b];
        return u1 != u2 && u1 != w2 && w1 != u2 && w1 != w2;
    };
    used[first] = 1;
    for (int e2 = first + 1; e2 < (int)edges.size(); ++e2) {
        if (used[e2] || !disjoint(first, e2)) continue;
        if (respect_colours && cls[e2] == cls[first]) continue;
        used[e2] = 1;
        for (int e3 = e2 + 1; e3 < (int)edges.size(); ++e3) {
            if (used[e3] || !disjoint(first, e3) || !disjoint(e2, e3)) continue;
            if (respect_colours && (cls[e3] == cls[first] || cls[e3] == cls[e2])) continue;
            used[e3] = 1;
            out.push_back({edges[first], edges[e2], edges[e3]});
            if (three_k2_rec(edges, by_class, cls, used, out, m, respect_colours))
                return true;
            out.pop_back();
            used[e3] = 0;
        }
        used[e2] = 0;
    }
    used[first] = 0;
    return false;
}

}  // namespace detail

inline std::vector<EdgeTriple> three_k2_decomposition(const Graph& g) {
    auto classes = edge_three_colouring(g);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> cls;
    for (int c = 0; c < 3; ++c)
        for (auto& e : classes[c]) {
            edges.push_back(e);
            cls.push_back(c);
        }
    int m = g.n / 2;
    std::vector<char> used(edges.size(), 0);
    std::vector<EdgeTriple> out;
    std::vector<std::array<std::vector<int>, 3>> unused_index;
    if (detail::three_k2_rec(edges, unused_index, cls, used, out, m, true)) return out;
    out.clear();
    std::fill(used.begin(), used.end(), 0);
    if (detail::three_k2_rec(edges, unused_index, cls, used, out, m, false)) return out;
    throw DecompositionNotFound("three_k2_decomposition: no decomposition found");
}

}  // namespace symcfg
