#pragma once

// Canonical labelling and symmetry analysis.
//
// Canonical forms come from an individualization-refinement search on the
// Levi graph with the point and block parts as initial colour cells.  Every
// leaf of the search tree is a discrete ordered partition, i.e. a labelling;
// the canonical labelling is the one whose relabelled adjacency certificate
// is lexicographically largest.  Leaves with equal certificates yield
// automorphisms, which prune sibling branches (orbit pruning restricted to
// automorphisms fixing the individualized prefix pointwise).
//
// Symmetry profiles use an independent exhaustive search that lists every
// point automorphism and every anti-automorphism (isomorphism onto the dual),
// which keeps the two mechanisms cross-checkable.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symcfg/core.hpp"
#include "symcfg/graph.hpp"

namespace symcfg {

namespace detail {

using Cert = std::vector<std::uint64_t>;

class DisjointSets {
  public:
    explicit DisjointSets(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

  private:
    std::vector<int> parent_;
};

class CanonLabeller {
  public:
    CanonLabeller(const Graph& g, const std::vector<std::vector<int>>& cells)
        : g_(g), n_(g.n) {
        state_.order.resize(n_);
        state_.pos.resize(n_);
        state_.start_of.resize(n_);
        int at = 0;
        for (const auto& cell : cells) {
            int s = at;
            for (int v : cell) {
                state_.order[at] = v;
                state_.pos[v] = at;
                ++at;
            }
            for (int i = s; i < at; ++i) state_.start_of[i] = s;
        }
        assert(at == n_);
    }

    void run() {
        State root = state_;
        std::vector<int> queue;
        for (int i = 0; i < n_; ++i)
            if (state_.start_of[i] == i) queue.push_back(i);
        dfs(root, queue, {});
    }

    Cert best_cert;
    std::vector<int> best_lab;  // position -> vertex
    std::vector<std::vector<int>> autos;

  private:
    struct State {
        std::vector<int> order;     // position -> vertex
        std::vector<int> pos;       // vertex -> position
        std::vector<int> start_of;  // position -> start of its cell
        int cell_end(int s) const {
            int e = s + 1;
            while (e < (int)order.size() && start_of[e] == s) ++e;
            return e;
        }
        bool discrete() const {
            for (int i = 0; i < (int)order.size(); ++i)
                if (start_of[i] != i) return false;
            return true;
        }
    };

    const Graph& g_;
    int n_;
    State state_;

    // Equitable refinement; `queue` holds cell start positions to use as
    // splitters.  All fragments of a split cell are re-enqueued.
    void refine(State& st, std::vector<int> queue) const {
        std::vector<char> queued(n_, 0);
        for (int s : queue) queued[s] = 1;
        std::vector<int> cnt(n_);
        size_t qi = 0;
        while (qi < queue.size()) {
            int s = queue[qi++];
            assert(st.start_of[s] == s);  // start positions never disappear
            queued[s] = 0;
            int e = st.cell_end(s);
            std::fill(cnt.begin(), cnt.end(), 0);
            for (int i = s; i < e; ++i)
                for (int w : g_.adj[st.order[i]]) ++cnt[w];

            // snapshot of current cells
            std::vector<std::pair<int, int>> spans;
            for (int i = 0; i < n_;) {
                int ce = st.cell_end(i);
                spans.emplace_back(i, ce);
                i = ce;
            }
            for (auto [ds, de] : spans) {
                if (de - ds <= 1) continue;
                bool uniform = true;
                for (int i = ds + 1; i < de && uniform; ++i)
                    uniform = cnt[st.order[i]] == cnt[st.order[ds]];
                if (uniform) continue;
                std::vector<int> verts(st.order.begin() + ds, st.order.begin() + de);
                std::stable_sort(verts.begin(), verts.end(),
                                 [&](int a, int b) { return cnt[a] < cnt[b]; });
                int run_start = ds;
                for (int i = 0; i < de - ds; ++i) {
                    st.order[ds + i] = verts[i];
                    st.pos[verts[i]] = ds + i;
                    if (i > 0 && cnt[verts[i]] != cnt[verts[i - 1]]) run_start = ds + i;
                    st.start_of[ds + i] = run_start;
                }
                for (int i = ds; i < de;) {
                    int ce = st.cell_end(i);
                    if (!queued[i]) {
                        queued[i] = 1;
                        queue.push_back(i);
                    }
                    i = ce;
                }
            }
        }
    }

    Cert certificate(const State& st) const {
        Cert cert((size_t)(n_ * n_ + 63) / 64, 0);
        size_t bit = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++bit)
                if (g_.has_edge(st.order[i], st.order[j]))
                    cert[bit >> 6] |= (std::uint64_t)1 << (bit & 63);
        return cert;
    }

    void dfs(State st, std::vector<int> refine_queue, std::vector<int> prefix) {
        refine(st, std::move(refine_queue));
        if (st.discrete()) {
            Cert cert = certificate(st);
            if (best_lab.empty() || cert > best_cert) {
                best_cert = std::move(cert);
                best_lab = st.order;
            } else if (cert == best_cert) {
                std::vector<int> g(n_);
                for (int i = 0; i < n_; ++i) g[best_lab[i]] = st.order[i];
                bool identity = true;
                for (int i = 0; i < n_ && identity; ++i) identity = g[i] == i;
                if (!identity) autos.push_back(std::move(g));
            }
            return;
        }

        // first smallest non-singleton cell
        int target = -1, tsize = n_ + 1;
        for (int i = 0; i < n_;) {
            int e = st.cell_end(i);
            if (e - i > 1 && e - i < tsize) {
                tsize = e - i;
                target = i;
            }
            i = e;
        }
        int te = st.cell_end(target);
        std::vector<int> candidates(st.order.begin() + target, st.order.begin() + te);

        std::vector<int> tried;
        for (int u : candidates) {
            // orbit pruning under automorphisms fixing the prefix pointwise
            if (!tried.empty()) {
                DisjointSets ds(n_);
                for (const auto& g : autos) {
                    bool fixes = true;
                    for (int x : prefix)
                        if (g[x] != x) {
                            fixes = false;
                            break;
                        }
                    if (fixes)
                        for (int x = 0; x < n_; ++x) ds.unite(x, g[x]);
                }
                bool skip = false;
                for (int t : tried)
                    if (ds.find(t) == ds.find(u)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            State child = st;
            // individualize u at the front of its cell
            int s = target;
            int up = child.pos[u];
            std::swap(child.order[s], child.order[up]);
            child.pos[child.order[up]] = up;
            child.pos[child.order[s]] = s;
            for (int i = s + 1; i < te; ++i) child.start_of[i] = s + 1;
            child.start_of[s] = s;
            std::vector<int> prefix2 = prefix;
            prefix2.push_back(u);
            dfs(std::move(child), {s, s + 1 < te ? s + 1 : s}, std::move(prefix2));
            tried.push_back(u);
        }
    }
};

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[x & 15];
        x >>= 4;
    }
    return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Canonical form of a configuration

// Relabels a configuration onto its canonical labelling (points first cell,
// blocks second cell of the Levi graph).
inline Configuration canonicalize(const Configuration& c) {
    Graph levi = levi_graph(c);
    std::vector<int> points(c.v), blocks(c.v);
    std::iota(points.begin(), points.end(), 0);
    std::iota(blocks.begin(), blocks.end(), c.v);
    detail::CanonLabeller lab(levi, {points, blocks});
    lab.run();
    // Point p lands at canonical position pos[p] in [0, v).
    std::vector<int> newlabel(c.v, -1);
    for (int i = 0; i < c.v; ++i) newlabel[lab.best_lab[i]] = i;
    std::vector<Block> out;
    out.reserve(c.blocks.size());
    for (const Block& b : c.blocks)
        out.push_back(make_block(newlabel[b[0]], newlabel[b[1]], newlabel[b[2]]));
    return Configuration::from_blocks(c.v, std::move(out));
}

struct CanonicalForm {
    std::string bytes;  // normal-form serialization of the canonical relabelling

    std::string digest() const { return detail::hex64(detail::fnv1a64(bytes)); }
    bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
    bool operator!=(const CanonicalForm& o) const { return bytes != o.bytes; }
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

inline CanonicalForm canonical_form(const Configuration& c) {
    return {format_config(canonicalize(c))};
}

inline bool are_isomorphic(const Configuration& a, const Configuration& b) {
    if (a.v != b.v) return false;
    return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Plain graph isomorphism (side labels ignored), for the colour-class-deleted
// graph comparisons.  Same individualization-refinement machinery, seeded
// with a single cell; the first refinement splits by degree.

inline std::vector<std::uint64_t> graph_certificate(const Graph& g) {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    detail::CanonLabeller lab(g, {all});
    lab.run();
    return lab.best_cert;
}

inline bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n) return false;
    std::vector<size_t> da, db;
    for (const auto& x : a.adj) da.push_back(x.size());
    for (const auto& x : b.adj) db.push_back(x.size());
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return graph_certificate(a) == graph_certificate(b);
}

// ---------------------------------------------------------------------------
// Exhaustive isomorphism search between two block lists on v points.  Returns
// every bijection of points mapping the first block set onto the second.
// Block lists need not be in normal form (dual structures keep index order).

namespace detail {

inline std::vector<std::vector<int>> all_isomorphisms_raw(
    int v, const std::vector<Block>& xb, const std::vector<Block>& yb,
    int limit = -1) {
    std::vector<std::vector<int>> found;
    if (xb.size() != yb.size()) return found;

    // associated adjacency masks
    std::vector<std::uint64_t> xadj(v, 0), yadj(v, 0);
    auto add_adj = [](std::vector<std::uint64_t>& adj, const Block& b) {
        adj[b[0]] |= (1ull << b[1]) | (1ull << b[2]);
        adj[b[1]] |= (1ull << b[0]) | (1ull << b[2]);
        adj[b[2]] |= (1ull << b[0]) | (1ull << b[1]);
    };
    for (const Block& b : xb) add_adj(xadj, b);
    for (const Block& b : yb) add_adj(yadj, b);

    std::vector<Block> ysorted(yb);
    for (auto& b : ysorted) std::sort(b.begin(), b.end());
    std::sort(ysorted.begin(), ysorted.end());

    // assignment order: greedy chain, each next point co-blocked with a
    // previous one when possible
    std::vector<int> order;
    {
        std::vector<char> chosen(v, 0);
        std::uint64_t reach = 0;
        for (int step = 0; step < v; ++step) {
            int best = -1;
            for (int p = 0; p < v; ++p) {
                if (chosen[p]) continue;
                bool linked = reach & (1ull << p);
                if (best == -1 || (linked && !(reach & (1ull << best)))) best = p;
                if (linked) break;
            }
            chosen[best] = 1;
            order.push_back(best);
            reach |= xadj[best];
        }
    }

    // x blocks indexed for completion checks
    std::vector<std::array<int, 3>> xthru(v, {-1, -1, -1});
    {
        std::vector<int> cnt(v, 0);
        for (int i = 0; i < (int)xb.size(); ++i)
            for (Point p : xb[i]) xthru[p][cnt[p]++] = i;
    }
    std::vector<int> mapped_in_block(xb.size(), 0);
    std::vector<int> sigma(v, -1);
    std::vector<char> used(v, 0);

    auto block_ok = [&](int bi) {
        Block img = make_block(sigma[xb[bi][0]], sigma[xb[bi][1]], sigma[xb[bi][2]]);
        return std::binary_search(ysorted.begin(), ysorted.end(), img);
    };

    std::function<void(int)> rec = [&](int step) {
        if (limit >= 0 && (int)found.size() >= limit) return;
        if (step == v) {
            found.push_back(sigma);
            return;
        }
        int p = order[step];
        for (int q = 0; q < v; ++q) {
            if (used[q]) continue;
            // adjacency consistency against mapped points
            bool ok = true;
            for (int s = 0; s < step && ok; ++s) {
                int p2 = order[s];
                bool ax = xadj[p] >> p2 & 1;
                bool ay = yadj[q] >> sigma[p2] & 1;
                ok = ax == ay;
            }
            if (!ok) continue;
            sigma[p] = q;
            used[q] = 1;
            bool blocks_ok = true;
            int bumped = 0;
            for (int bi : xthru[p]) {
                ++mapped_in_block[bi];
                ++bumped;
                if (mapped_in_block[bi] == 3 && !block_ok(bi)) {
                    blocks_ok = false;
                    break;
                }
            }
            if (blocks_ok) rec(step + 1);
            for (int i = 0; i < bumped; ++i) --mapped_in_block[xthru[p][i]];
            sigma[p] = -1;
            used[q] = 0;
        }
    };
    rec(0);
    return found;
}

// Dual block list aligned with point/block indices: entry p is the sorted
// triple of indices of the blocks through p.
inline std::vector<Block> dual_raw(const Configuration& c) {
    auto thru = blocks_through(c);
    std::vector<Block> out(c.v);
    for (Point p = 0; p < c.v; ++p)
        out[p] = make_block(thru[p][0], thru[p][1], thru[p][2]);
    return out;
}

}  // namespace detail

inline std::vector<std::vector<int>> all_point_automorphisms(const Configuration& c) {
    return detail::all_isomorphisms_raw(c.v, c.blocks, c.blocks);
}

// ---------------------------------------------------------------------------
// Automorphism group: a small generating set plus the order.  The order is
// the count of exhaustively listed elements; generators are accumulated
// greedily via orbit-stabilizer growth of the generated subgroup.

struct AutomorphismGroup {
    long long order = 1;
    std::vector<std::vector<int>> generators;
};

namespace detail {

// order of <gens> by explicit closure (groups here are tiny)
inline long long subgroup_order(int v, const std::vector<std::vector<int>>& gens) {
    std::vector<int> id(v);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> elems{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                std::vector<int> prod(v);
                for (int i = 0; i < v; ++i) prod[i] = g[e[i]];
                if (elems.insert(prod).second) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return (long long)elems.size();
}

}  // namespace detail

inline AutomorphismGroup automorphism_group(const Configuration& c) {
    auto all = all_point_automorphisms(c);
    AutomorphismGroup g;
    g.order = (long long)all.size();
    long long have = 1;
    for (const auto& sigma : all) {
        bool identity = true;
        for (int i = 0; i < c.v && identity; ++i) identity = sigma[i] == i;
        if (identity) continue;
        std::vector<std::vector<int>> trial = g.generators;
        trial.push_back(sigma);
        long long order = detail::subgroup_order(c.v, trial);
        if (order > have) {
            g.generators = std::move(trial);
            have = order;
            if (have == g.order) break;
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Symmetry profile

struct SymmetryProfile {
    long long aut_order = 1;   // point automorphisms
    long long full_order = 1;  // automorphisms plus anti-automorphisms
    bool self_dual = false;
    bool self_polar = false;
    bool point_transitive = false;
    bool flag_transitive = false;
    bool weakly_flag_transitive = false;
    bool cyclic = false;
};

inline SymmetryProfile symmetry_profile(const Configuration& c) {
    SymmetryProfile sp;
    auto autos = detail::all_isomorphisms_raw(c.v, c.blocks, c.blocks);
    auto dualb = detail::dual_raw(c);
    auto antis = detail::all_isomorphisms_raw(c.v, c.blocks, dualb);
    sp.aut_order = (long long)autos.size();
    sp.full_order = sp.aut_order + (long long)antis.size();
    sp.self_dual = !antis.empty();

    // block index lookup for images
    std::map<Block, int> block_index;
    for (int i = 0; i < (int)c.blocks.size(); ++i) block_index[c.blocks[i]] = i;
    std::map<Block, int> dual_index;
    for (int i = 0; i < (int)dualb.size(); ++i) dual_index[dualb[i]] = i;

    // tau(j) for an anti-automorphism phi: the point whose dual block is the
    // image of block j
    auto anti_tau = [&](const std::vector<int>& phi, int j) {
        Block img = make_block(phi[c.blocks[j][0]], phi[c.blocks[j][1]],
                               phi[c.blocks[j][2]]);
        auto it = dual_index.find(img);
        assert(it != dual_index.end());
        return it->second;
    };

    for (const auto& phi : antis) {
        bool polar = true;
        for (Point p = 0; p < c.v && polar; ++p)
            polar = anti_tau(phi, phi[p]) == p;
        if (polar) {
            sp.self_polar = true;
            break;
        }
    }

    // point transitivity
    {
        detail::DisjointSets ds(c.v);
        for (const auto& s : autos)
            for (int p = 0; p < c.v; ++p) ds.unite(p, s[p]);
        sp.point_transitive = true;
        for (int p = 1; p < c.v && sp.point_transitive; ++p)
            sp.point_transitive = ds.find(p) == ds.find(0);
    }

    // flag transitivity: orbit of one incident (point, block) pair
    {
        int b0 = 0;
        Point p0 = c.blocks[0][0];
        std::set<std::pair<int, int>> orbit;
        for (const auto& s : autos) {
            Block img = make_block(s[c.blocks[b0][0]], s[c.blocks[b0][1]],
                                   s[c.blocks[b0][2]]);
            orbit.insert({s[p0], block_index[img]});
        }
        sp.flag_transitive = (int)orbit.size() == 3 * c.v;

        // weak version: unordered flags under the full group
        std::set<std::pair<int, int>> worbit = orbit;
        for (const auto& phi : antis)
            worbit.insert({anti_tau(phi, b0), phi[p0]});
        sp.weakly_flag_transitive = (int)worbit.size() == 3 * c.v;
    }

    // cyclic: some automorphism is a single v-cycle
    for (const auto& s : autos) {
        int len = 1, at = s[0];
        while (at != 0 && len <= c.v) {
            at = s[at];
            ++len;
        }
        if (len == c.v) {
            sp.cyclic = true;
            break;
        }
    }
    return sp;
}

}  // namespace symcfg
