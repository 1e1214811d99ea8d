#pragma once

// Exhaustive generation of symmetric v_3 configurations at small v, property
// tabulation, closure enumeration of 3-connected blocking-set-free systems,
// and generation/joining of the subcubic components used in the 2-connected
// search.
//
// Generation uses the orderly algorithm: partial block lists are extended one
// block at a time in strictly increasing lexicographic order, and a partial
// list survives only if no relabelling of its points produces a smaller list.
// Every isomorphism class is then produced exactly once, as its
// lexicographically minimal block list.

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "blocking.hpp"
#include "canonical.hpp"
#include "colouring.hpp"
#include "constructions.hpp"
#include "core.hpp"
#include "graph.hpp"

namespace symcfg {

struct EnumerateOptions {
    bool connected_only = true;
    int max_v = 13;          // default desk-scale bound
    bool allow_long = false; // override the bound for long jobs
    int jobs = 1;            // worker threads; output is identical for any value
};

namespace detail {

// Decides whether some relabelling of the points maps a sorted list of sorted
// triples to a lexicographically smaller list.  Positions of the image list
// are matched one at a time: at each position, if any unused source triple
// can be completed (assigning the smallest free labels to unmapped points) to
// a value below the target, a strictly smaller image exists; ties are
// explored recursively.  With `autos_out` set, every full-equality path is
// recorded as a point automorphism of the list.
class MinImageTest {
public:
    MinImageTest(const std::vector<Block>& blocks, int n_points)
        : x_(blocks),
          n_(n_points),
          m_(static_cast<int>(blocks.size())),
          sigma_(n_points, -1),
          sigma_inv_(n_points, -1),
          used_(blocks.size(), 0) {}

    bool smaller_exists() { return rec(0); }

    std::vector<std::vector<int>> automorphisms() {
        autos_out_ = true;
        autos_.clear();
        bool smaller = rec(0);
        assert(!smaller && "automorphisms() requires a canonical list");
        (void)smaller;
        return autos_;
    }

private:
    const std::vector<Block>& x_;
    int n_, m_;
    std::vector<int> sigma_, sigma_inv_;
    std::vector<char> used_;
    bool autos_out_ = false;
    std::vector<std::vector<int>> autos_;

    bool rec(int pos) {
        if (pos == m_) {
            if (autos_out_) autos_.push_back(sigma_);
            return false; // full equality: an automorphism, not smaller
        }
        const Block& tgt = x_[pos];
        int fl[3];
        {
            int c = 0;
            for (int l = 0; l < n_ && c < 3; ++l)
                if (sigma_inv_[l] < 0) fl[c++] = l;
            while (c < 3) fl[c++] = n_;
        }
        // Pass 1: minimal achievable image per unused source triple.
        std::vector<int> ties;
        for (int b = 0; b < m_; ++b) {
            if (used_[b]) continue;
            const Block& src = x_[b];
            int cand[3];
            int ci = 0, undef = 0;
            for (int k = 0; k < 3; ++k) {
                int s = sigma_[src[k]];
                if (s >= 0)
                    cand[ci++] = s;
                else
                    ++undef;
            }
            for (int k = 0; k < undef; ++k) cand[ci++] = fl[k];
            std::sort(cand, cand + 3);
            if (cand[0] != tgt[0] || cand[1] != tgt[1] || cand[2] != tgt[2]) {
                if (std::lexicographical_compare(cand, cand + 3, tgt.begin(), tgt.end()))
                    return true; // realizable image strictly below the target
                continue;        // this triple cannot reach the target
            }
            ties.push_back(b);
        }
        // Pass 2: recurse through every exact matching onto the target.
        static const int P[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (int b : ties) {
            const Block& src = x_[b];
            for (const auto& p : P) {
                int assigned[3];
                int na = 0;
                bool ok = true;
                for (int k = 0; k < 3 && ok; ++k) {
                    int from = src[k], to = tgt[p[k]];
                    if (sigma_[from] >= 0) {
                        if (sigma_[from] != to) ok = false;
                    } else if (sigma_inv_[to] >= 0) {
                        ok = false;
                    } else {
                        sigma_[from] = to;
                        sigma_inv_[to] = from;
                        assigned[na++] = from;
                    }
                }
                bool res = false;
                if (ok) {
                    used_[b] = 1;
                    res = rec(pos + 1);
                    used_[b] = 0;
                }
                for (int k = 0; k < na; ++k) {
                    sigma_inv_[sigma_[assigned[k]]] = -1;
                    sigma_[assigned[k]] = -1;
                }
                if (res) return true;
            }
        }
        return false;
    }
};

// Orderly depth-first generator for complete configurations.
class OrderlyGen {
public:
    using Sink = std::function<void(const std::vector<Block>&)>;

    OrderlyGen(int v, Sink sink) : v_(v), sink_(std::move(sink)), rep_(v, 0), pm_(v, 0) {}

    // Seeds the three forced blocks through point 0 and runs the search.
    // With frontier_depth >= 0, recursion stops at that many blocks and the
    // surviving prefixes are collected instead of being extended.
    void run(int frontier_depth = -1, std::vector<std::vector<Block>>* frontier = nullptr) {
        frontier_depth_ = frontier_depth;
        frontier_ = frontier;
        blocks_.clear();
        std::fill(rep_.begin(), rep_.end(), 0);
        std::fill(pm_.begin(), pm_.end(), 0u);
        max_used_ = -1;
        deficient_ = (v_ >= 31) ? 0x7fffffffu : ((1u << v_) - 1u);
        push(make_block(0, 1, 2));
        push(make_block(0, 3, 4));
        push(make_block(0, 5, 6));
        extend();
    }

    // Resumes the search from a previously collected prefix.
    void resume(const std::vector<Block>& prefix) {
        frontier_depth_ = -1;
        frontier_ = nullptr;
        blocks_.clear();
        std::fill(rep_.begin(), rep_.end(), 0);
        std::fill(pm_.begin(), pm_.end(), 0u);
        max_used_ = -1;
        deficient_ = (v_ >= 31) ? 0x7fffffffu : ((1u << v_) - 1u);
        for (const Block& b : prefix) push(b);
        extend();
    }

private:
    int v_;
    Sink sink_;
    std::vector<Block> blocks_;
    std::vector<int> rep_;
    std::vector<std::uint32_t> pm_; // pm_[p]: points already co-blocked with p
    std::uint32_t deficient_ = 0;   // points with replication < 3
    int max_used_ = -1;
    int frontier_depth_ = -1;
    std::vector<std::vector<Block>>* frontier_ = nullptr;

    void push(const Block& b) {
        blocks_.push_back(b);
        for (int k = 0; k < 3; ++k) {
            int p = b[k];
            if (++rep_[p] == 3) deficient_ &= ~(1u << p);
            max_used_ = std::max(max_used_, p);
        }
        pm_[b[0]] |= (1u << b[1]) | (1u << b[2]);
        pm_[b[1]] |= (1u << b[0]) | (1u << b[2]);
        pm_[b[2]] |= (1u << b[0]) | (1u << b[1]);
    }

    void pop(int old_max) {
        Block b = blocks_.back();
        blocks_.pop_back();
        for (int k = 0; k < 3; ++k) {
            int p = b[k];
            if (rep_[p]-- == 3) deficient_ |= (1u << p);
        }
        pm_[b[0]] &= ~((1u << b[1]) | (1u << b[2]));
        pm_[b[1]] &= ~((1u << b[0]) | (1u << b[2]));
        pm_[b[2]] &= ~((1u << b[0]) | (1u << b[1]));
        max_used_ = old_max;
    }

    // Every deficient point needs two fresh partners per missing block.
    bool partners_feasible() const {
        std::uint32_t d = deficient_;
        while (d) {
            int p = __builtin_ctz(d);
            d &= d - 1;
            std::uint32_t avail = deficient_ & ~pm_[p] & ~(1u << p);
            if (__builtin_popcount(avail) < 2 * (3 - rep_[p])) return false;
        }
        return true;
    }

    void try_candidate(int sp, int y, int z) {
        Block cand = make_block(sp, y, z);
        const Block& last = blocks_.back();
        if (!(last < cand)) return;
        int old_max = max_used_;
        push(cand);
        if (partners_feasible()) {
            MinImageTest t(blocks_, std::min(v_, max_used_ + 1));
            if (!t.smaller_exists()) extend();
        }
        pop(old_max);
    }

    void extend() {
        int m = static_cast<int>(blocks_.size());
        if (m == v_) {
            sink_(blocks_);
            return;
        }
        if (frontier_depth_ >= 0 && m == frontier_depth_) {
            frontier_->push_back(blocks_);
            return;
        }
        assert(deficient_ != 0);
        int sp = __builtin_ctz(deficient_);
        const Block& last = blocks_.back();
        if (sp < last[0]) return; // sp can never be covered again
        if (sp > max_used_ + 1) return;

        if (sp == max_used_ + 1) {
            // A fresh component starts: the block is three new points.
            if (sp + 2 <= v_ - 1) try_candidate(sp, sp + 1, sp + 2);
            return;
        }
        // y over used partners of sp, then one new point.
        for (int y = sp + 1; y <= max_used_; ++y) {
            if (rep_[y] >= 3 || ((pm_[sp] >> y) & 1u)) continue;
            for (int z = y + 1; z <= max_used_; ++z) {
                if (rep_[z] >= 3 || ((pm_[sp] >> z) & 1u) || ((pm_[y] >> z) & 1u)) continue;
                try_candidate(sp, y, z);
            }
            if (max_used_ + 1 <= v_ - 1) try_candidate(sp, y, max_used_ + 1);
        }
        if (max_used_ + 2 <= v_ - 1) try_candidate(sp, max_used_ + 1, max_used_ + 2);
    }
};

inline std::vector<std::vector<Block>> raw_enumerate(int v, int jobs) {
    std::vector<std::vector<Block>> raws;
    if (v < 7) return raws;
    if (jobs <= 1 || v <= 9) {
        OrderlyGen gen(v, [&](const std::vector<Block>& bs) { raws.push_back(bs); });
        gen.run();
        return raws;
    }
    std::vector<std::vector<Block>> frontier;
    {
        OrderlyGen gen(v, [&](const std::vector<Block>& bs) { raws.push_back(bs); });
        gen.run(5, &frontier); // complete objects of <= 5 blocks cannot occur at v >= 7
    }
    std::vector<std::vector<std::vector<Block>>> results(frontier.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= frontier.size()) break;
            OrderlyGen gen(v, [&, i](const std::vector<Block>& bs) { results[i].push_back(bs); });
            gen.resume(frontier[i]);
        }
    };
    std::vector<std::thread> pool;
    int nw = std::max(1, jobs);
    for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& r : results)
        for (auto& bs : r) raws.push_back(std::move(bs));
    return raws;
}

} // namespace detail

// Exactly one representative per isomorphism class, each in canonical
// labelling, sorted by canonical form.
inline std::vector<Configuration> enumerate_configs(int v, const EnumerateOptions& opts = {}) {
    if (v > opts.max_v && !opts.allow_long)
        throw BoundExceeded("enumerate_configs: v=" + std::to_string(v) +
                            " exceeds the bound " + std::to_string(opts.max_v) +
                            " (pass allow_long to override)");
    auto raws = detail::raw_enumerate(v, opts.jobs);
    std::vector<std::pair<std::string, Configuration>> keyed;
    keyed.reserve(raws.size());
    for (auto& bs : raws) {
        Configuration x = Configuration::from_blocks(v, bs);
        if (opts.connected_only && !is_connected(x)) continue;
        Configuration cx = canonicalize(x);
        std::string key = format_config(cx);
        keyed.emplace_back(std::move(key), std::move(cx));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Configuration> out;
    out.reserve(keyed.size());
    for (auto& kv : keyed) out.push_back(std::move(kv.second));
    return out;
}

inline std::vector<Configuration> enumerate_configs(int v, bool connected_only) {
    EnumerateOptions o;
    o.connected_only = connected_only;
    return enumerate_configs(v, o);
}

// One tabulated row of per-order statistics.  Histograms cover connected
// classes only; the symmetry counts cover all classes (disconnected ones are
// also counted separately).
struct TableRow {
    int v = 0;
    long long total = 0; // all classes, including disconnected
    long long self_dual = 0;
    long long self_polar = 0;
    long long point_transitive = 0;
    long long cyclic = 0;
    long long flag_transitive = 0;
    long long weakly_flag_transitive = 0;
    long long bsfree_connected = 0;
    long long disconnected = 0;
    std::map<int, long long> min_blocking; // connected classes with a blocking set
    long long no_blocking_set = 0;         // connected classes without one
    std::map<int, long long> chi_s;        // connected classes
};

inline TableRow tabulate_properties(int v, EnumerateOptions opts = {}) {
    opts.connected_only = false;
    auto classes = enumerate_configs(v, opts);
    TableRow row;
    row.v = v;
    row.total = static_cast<long long>(classes.size());

    int nw = std::max(1, opts.jobs);
    std::vector<TableRow> parts(nw);
    std::atomic<std::size_t> next{0};
    auto worker = [&](int t) {
        TableRow& r = parts[t];
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= classes.size()) break;
            const Configuration& c = classes[i];
            SymmetryProfile sym = symmetry_profile(c);
            if (sym.self_dual) ++r.self_dual;
            if (sym.self_polar) ++r.self_polar;
            if (sym.point_transitive) ++r.point_transitive;
            if (sym.cyclic) ++r.cyclic;
            if (sym.flag_transitive) ++r.flag_transitive;
            if (sym.weakly_flag_transitive) ++r.weakly_flag_transitive;
            if (!is_connected(c)) {
                ++r.disconnected;
                continue;
            }
            BlockingProfile bp = blocking_profile(c);
            if (bp.has)
                ++r.min_blocking[*bp.min_size];
            else {
                ++r.no_blocking_set;
                ++r.bsfree_connected;
            }
            ++r.chi_s[strong_chromatic_number(c).first];
        }
    };
    if (nw <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nw; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (const TableRow& r : parts) {
        row.self_dual += r.self_dual;
        row.self_polar += r.self_polar;
        row.point_transitive += r.point_transitive;
        row.cyclic += r.cyclic;
        row.flag_transitive += r.flag_transitive;
        row.weakly_flag_transitive += r.weakly_flag_transitive;
        row.bsfree_connected += r.bsfree_connected;
        row.disconnected += r.disconnected;
        row.no_blocking_set += r.no_blocking_set;
        for (auto& kv : r.min_blocking) row.min_blocking[kv.first] += kv.second;
        for (auto& kv : r.chi_s) row.chi_s[kv.first] += kv.second;
    }
    return row;
}

// Closure of the Fano plane under the v+v'-1 construction, at a given order.
struct StitchClosureRow {
    int v = 0;
    std::vector<Configuration> classes; // canonical, sorted
    long long self_dual = 0;
    long long self_polar = 0;
};

inline StitchClosureRow enumerate_3conn_bsfree(int v, bool allow_long = false) {
    if (v < 7 || v % 6 != 1)
        throw OutOfRange("enumerate_3conn_bsfree: v must satisfy v ≡ 1 (mod 6), got " +
                         std::to_string(v));
    if (v > 25 && !allow_long)
        throw BoundExceeded("enumerate_3conn_bsfree: v=" + std::to_string(v) +
                            " exceeds the desk bound 25 (pass allow_long to override)");

    std::map<int, std::vector<Configuration>> closure;
    closure[7] = {cyclic_config(7)}; // the Fano plane
    static const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (int u = 13; u <= v; u += 6) {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, Configuration>> keyed;
        for (int u1 = 7; u1 <= u - 6; u1 += 6) {
            int u2 = u + 1 - u1;
            auto it = closure.find(u2);
            if (u2 < 7 || it == closure.end()) continue;
            for (const Configuration& x : closure[u1]) {
                for (const Configuration& y : it->second) {
                    for (int bi = 0; bi < u1; ++bi) {
                        for (int p = 0; p < u2; ++p) {
                            for (const auto& perm : perms) {
                                StitchChoice ch;
                                ch.block = bi;
                                ch.point = p;
                                ch.pairing = perm;
                                Configuration z = stitch2(x, y, ch);
                                Configuration cz = canonicalize(z);
                                std::string key = format_config(cz);
                                if (seen.insert(key).second)
                                    keyed.emplace_back(std::move(key), std::move(cz));
                            }
                        }
                    }
                }
            }
        }
        std::sort(keyed.begin(), keyed.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Configuration>& reps = closure[u];
        for (auto& kv : keyed) {
            // Each member is re-verified: no blocking set and 3-connected.
            if (find_blocking_set(kv.second).has_value())
                throw std::logic_error("stitch closure produced a configuration with a blocking set");
            if (config_connectivity(kv.second).connectivity != 3)
                throw std::logic_error("stitch closure produced a non-3-connected configuration");
            reps.push_back(std::move(kv.second));
        }
    }
    StitchClosureRow row;
    row.v = v;
    row.classes = closure[v];
    for (const Configuration& c : row.classes) {
        SymmetryProfile sym = symmetry_profile(c);
        if (sym.self_dual) ++row.self_dual;
        if (sym.self_polar) ++row.self_polar;
    }
    return row;
}

// A component for the 2-connected search: a connected subcubic bipartite
// graph of order n with 3n/2-1 edges, girth >= 6, and exactly two vertices of
// degree 2, one in each part.
struct Component {
    Graph graph;
    int point2 = -1; // degree-2 vertex on the point side
    int block2 = -1; // degree-2 vertex on the block side
};

struct FourCycleRisk : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline int bfs_distance(const Graph& g, int s, int t) {
    std::vector<int> dist(g.n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        if (u == t) return dist[u];
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return -1;
}

namespace detail {

// Generates the near-configurations behind components on m points: m-1
// triples plus one pair-block, all pairs of points co-blocked at most once,
// exactly one point left with replication 2.
class NearGen {
public:
    using Sink = std::function<void(const std::vector<Block>&, const std::array<int, 2>&, int)>;

    NearGen(int m, Sink sink) : m_(m), sink_(std::move(sink)), rep_(m, 0), pm_(m, 0) {}

    void run() {
        if (m_ < 4) return;
        blocks_.push_back(make_block(0, 1, 2));
        add(make_block(0, 1, 2));
        extend();
        remove(make_block(0, 1, 2));
        blocks_.clear();
    }

private:
    int m_;
    Sink sink_;
    std::vector<Block> blocks_;
    std::vector<int> rep_;
    std::vector<std::uint32_t> pm_;
    int max_used_ = -1;

    void add(const Block& b) {
        for (int k = 0; k < 3; ++k) {
            ++rep_[b[k]];
            max_used_ = std::max(max_used_, b[k]);
        }
        pm_[b[0]] |= (1u << b[1]) | (1u << b[2]);
        pm_[b[1]] |= (1u << b[0]) | (1u << b[2]);
        pm_[b[2]] |= (1u << b[0]) | (1u << b[1]);
    }
    void remove(const Block& b) {
        for (int k = 0; k < 3; ++k) --rep_[b[k]];
        pm_[b[0]] &= ~((1u << b[1]) | (1u << b[2]));
        pm_[b[1]] &= ~((1u << b[0]) | (1u << b[2]));
        pm_[b[2]] &= ~((1u << b[0]) | (1u << b[1]));
    }

    // Points below the current block's first element can never be covered by
    // a later triple; their remaining deficits must fit the pair block plus
    // the single replication-2 allowance.
    bool locked_feasible() const {
        int first = blocks_.back()[0];
        int total = 0;
        for (int p = 0; p < first; ++p) {
            int d = 3 - rep_[p];
            if (d > 2) return false;
            total += d;
        }
        return total <= 3;
    }

    bool deficits_feasible() const {
        int r = (m_ - 1) - static_cast<int>(blocks_.size());
        int slack = 0;
        for (int p = 0; p < m_; ++p) {
            int d = 3 - rep_[p];
            if (d > r + 2) return false;
            if (d == r + 2) ++slack;
        }
        return slack <= 1;
    }

    void complete() {
        // Deficits must form either (2,1) or (1,1,1).
        std::vector<int> def;
        for (int p = 0; p < m_; ++p)
            if (rep_[p] < 3) def.push_back(p);
        std::vector<std::pair<std::array<int, 2>, int>> options; // pair, rep-2 point
        if (def.size() == 2) {
            int d0 = 3 - rep_[def[0]], d1 = 3 - rep_[def[1]];
            if (d0 + d1 != 3 || std::max(d0, d1) != 2) return;
            int p2 = (d0 == 2) ? def[0] : def[1];
            options.push_back({{def[0], def[1]}, p2});
        } else if (def.size() == 3) {
            for (int p : def)
                if (rep_[p] != 2) return;
            options.push_back({{def[0], def[1]}, def[2]});
            options.push_back({{def[0], def[2]}, def[1]});
            options.push_back({{def[1], def[2]}, def[0]});
        } else {
            return;
        }
        std::vector<std::vector<int>> autos;
        bool have_autos = false;
        for (const auto& opt : options) {
            int a = opt.first[0], b = opt.first[1];
            if ((pm_[a] >> b) & 1u) continue; // the pair-block pair must be fresh
            if (!have_autos) {
                MinImageTest t(blocks_, m_);
                autos = t.automorphisms();
                have_autos = true;
            }
            bool minimal = true;
            for (const auto& sg : autos) {
                int ia = sg[a], ib = sg[b];
                if (ia > ib) std::swap(ia, ib);
                if (ia < a || (ia == a && ib < b)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) sink_(blocks_, opt.first, opt.second);
        }
    }

    void extend() {
        if (static_cast<int>(blocks_.size()) == m_ - 1) {
            complete();
            return;
        }
        const Block last = blocks_.back();
        for (int a = last[0]; a < m_; ++a) {
            if (a > max_used_ + 1) break;
            if (a == max_used_ + 1) {
                // A fresh part of the structure starts with three new points.
                if (a + 2 < m_) {
                    Block cand = make_block(a, a + 1, a + 2);
                    int old_max = max_used_;
                    blocks_.push_back(cand);
                    add(cand);
                    if (locked_feasible() && deficits_feasible()) {
                        MinImageTest t(blocks_, std::min(m_, max_used_ + 1));
                        if (!t.smaller_exists()) extend();
                    }
                    remove(cand);
                    blocks_.pop_back();
                    max_used_ = old_max;
                }
                break;
            }
            if (rep_[a] >= 3) continue;
            for (int y = std::max(a + 1, a == last[0] ? last[1] : 0); y < m_; ++y) {
                if (rep_[y] >= 3 || ((pm_[a] >> y) & 1u)) continue;
                if (y > max_used_ + 1) break; // dense introduction
                for (int z = y + 1; z < m_; ++z) {
                    if (rep_[z] >= 3 || ((pm_[a] >> z) & 1u) || ((pm_[y] >> z) & 1u)) continue;
                    if (z > std::max(max_used_, y) + 1) break;
                    Block cand = make_block(a, y, z);
                    if (!(last < cand)) continue;
                    int old_max = max_used_;
                    blocks_.push_back(cand);
                    add(cand);
                    if (locked_feasible() && deficits_feasible()) {
                        MinImageTest t(blocks_, std::min(m_, max_used_ + 1));
                        if (!t.smaller_exists()) extend();
                    }
                    remove(cand);
                    blocks_.pop_back();
                    max_used_ = old_max;
                }
            }
        }
    }
};

} // namespace detail

// All components of a given (even) order, one per isomorphism class, sorted
// deterministically.
inline std::vector<Component> generate_components(int n, int max_n = 18, bool allow_long = false) {
    if (n % 2 != 0) throw OutOfRange("generate_components: order must be even, got " + std::to_string(n));
    if (n > max_n && !allow_long)
        throw BoundExceeded("generate_components: n=" + std::to_string(n) +
                            " exceeds the bound " + std::to_string(max_n) +
                            " (pass allow_long to override)");
    std::vector<Component> out;
    if (n < 6) return out;
    int m = n / 2;
    std::vector<std::pair<std::vector<std::uint64_t>, Component>> keyed;
    std::set<std::vector<std::uint64_t>> seen;
    detail::NearGen gen(m, [&](const std::vector<Block>& triples, const std::array<int, 2>& pair,
                               int point2) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t j = 0; j < triples.size(); ++j)
            for (int k = 0; k < 3; ++k) edges.push_back({triples[j][k], m + static_cast<int>(j)});
        int pairv = 2 * m - 1;
        edges.push_back({pair[0], pairv});
        edges.push_back({pair[1], pairv});
        Graph g = Graph::from_edges(2 * m, edges);
        g.side.assign(g.n, 0);
        for (int u = 0; u < g.n; ++u) g.side[u] = u < m ? 0 : 1;
        if (!graph_connected(g)) return;
        assert(girth(g) >= 6);
        std::vector<std::uint64_t> cert = graph_certificate(g);
        if (!seen.insert(cert).second) return; // same graph reached through a side swap
        Component comp;
        comp.graph = std::move(g);
        comp.point2 = point2;
        comp.block2 = pairv;
        keyed.emplace_back(std::move(cert), std::move(comp));
    });
    gen.run();
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& kv : keyed) out.push_back(std::move(kv.second));
    return out;
}

// Joins two components into a cubic bipartite graph of order n1+n2 with girth
// >= 6 and edge connectivity 2.  Variant 1 keeps both bipartitions; variant 2
// swaps the second component's parts, giving the other pairing of the
// degree-2 vertices.
inline Graph join_components(const Component& c1, const Component& c2, int variant) {
    if (variant != 1 && variant != 2)
        throw OutOfRange("join_components: variant must be 1 or 2");
    bool adj1 = c1.graph.has_edge(c1.point2, c1.block2);
    bool adj2 = c2.graph.has_edge(c2.point2, c2.block2);
    if (adj1 && adj2)
        throw FourCycleRisk("join_components: both components have adjacent degree-2 vertices");
    int n1 = c1.graph.n, n2 = c2.graph.n;
    std::vector<std::pair<int, int>> edges = c1.graph.edges();
    for (const auto& e : c2.graph.edges()) edges.push_back({e.first + n1, e.second + n1});
    if (variant == 1) {
        edges.push_back({c1.point2, c2.block2 + n1});
        edges.push_back({c2.point2 + n1, c1.block2});
    } else {
        edges.push_back({c1.point2, c2.point2 + n1});
        edges.push_back({c1.block2, c2.block2 + n1});
    }
    Graph g = Graph::from_edges(n1 + n2, edges);
    g.side.assign(g.n, 0);
    for (int u = 0; u < n1; ++u) g.side[u] = c1.graph.side[u];
    for (int u = 0; u < n2; ++u)
        g.side[n1 + u] = variant == 1 ? c2.graph.side[u] : 1 - c2.graph.side[u];
    for (int u = 0; u < g.n; ++u) {
        assert(static_cast<int>(g.adj[u].size()) == 3);
        for (int w : g.adj[u]) assert(g.side[u] != g.side[w]);
    }
    assert(girth(g) >= 6);
    return g;
}

} // namespace symcfg
