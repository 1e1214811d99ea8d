#pragma once

// Generative constructions: cyclic configurations, Martinetti extensions, the
// triangle family and its blocking/colouring variants, the two stitching
// operations that preserve blocking-set-freeness, chromatic families, and the
// colour-class-deleted-graph realization of cubic bipartite graphs.
//
// All constructors return validated configurations (Configuration::from_blocks
// re-checks the axioms), so a bad recipe fails loudly rather than producing a
// near-configuration.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcfg/blocking.hpp"
#include "symcfg/colouring.hpp"
#include "symcfg/core.hpp"
#include "symcfg/graph.hpp"

namespace symcfg {

struct InvalidBase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidChoice : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EvenCount : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadBase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Cyclic configurations

inline Configuration cyclic_config(int v, Block base = make_block(0, 1, 3)) {
    if (v < 3) throw InvalidBase("cyclic_config: v too small");
    std::vector<Block> blocks;
    blocks.reserve(v);
    for (int i = 0; i < v; ++i) {
        int x = (base[0] + i) % v, y = (base[1] + i) % v, z = (base[2] + i) % v;
        if (x == y || x == z || y == z)
            throw InvalidBase("cyclic_config: base not distinct modulo v");
        blocks.push_back(make_block(x, y, z));
    }
    try {
        return Configuration::from_blocks(v, std::move(blocks));
    } catch (const ValidationError& e) {
        throw InvalidBase(std::string("cyclic_config: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Martinetti extension: remove two disjoint blocks b1 = {a1,a2,a3} and
// b2 = {bb1,b2,b3}, introduce a new point c = v, and add the blocks
// {c,a2,a3}, {c,b2,b3} and {c,a1,bb1}.  Requires that a1 and bb1 are not
// already co-blocked.

inline Configuration martinetti_extend(const Configuration& x, Block b1, Block b2,
                                       Point a1, Point bb1) {
    std::sort(b1.begin(), b1.end());
    std::sort(b2.begin(), b2.end());
    auto i1 = std::find(x.blocks.begin(), x.blocks.end(), b1);
    auto i2 = std::find(x.blocks.begin(), x.blocks.end(), b2);
    if (i1 == x.blocks.end() || i2 == x.blocks.end())
        throw PreconditionViolated("martinetti_extend: block not in configuration");
    for (Point p : b1)
        for (Point q : b2)
            if (p == q) throw PreconditionViolated("martinetti_extend: blocks intersect");
    auto in_block = [](const Block& b, Point p) {
        return b[0] == p || b[1] == p || b[2] == p;
    };
    if (!in_block(b1, a1) || !in_block(b2, bb1))
        throw PreconditionViolated("martinetti_extend: chosen point not in its block");
    if (co_blocked(x, a1, bb1))
        throw PreconditionViolated("martinetti_extend: chosen points share a block");

    Point c = x.v;
    std::vector<Block> out;
    out.reserve(x.blocks.size() + 1);
    for (const Block& b : x.blocks)
        if (b != b1 && b != b2) out.push_back(b);
    auto rest = [&](const Block& b, Point skip) {
        std::array<Point, 2> r{};
        int at = 0;
        for (Point p : b)
            if (p != skip) r[at++] = p;
        return r;
    };
    auto r1 = rest(b1, a1);
    auto r2 = rest(b2, bb1);
    out.push_back(make_block(c, r1[0], r1[1]));
    out.push_back(make_block(c, r2[0], r2[1]));
    out.push_back(make_block(c, a1, bb1));
    return Configuration::from_blocks(x.v + 1, std::move(out));
}

// ---------------------------------------------------------------------------
// The triangle family on 3s points: a_i = i, b_i = s+i, c_i = 2s+i, blocks
// {a_i,b_i,c_{i+1}}, {a_i,b_{i+1},c_i}, {a_{i+1},b_i,c_i} (indices mod s).
// {a_i} is a blocking set of size ceil(v/3), and the classes {a},{b},{c} form
// a strong 3-colouring.

namespace detail {

inline std::vector<Block> triangle_blocks(int s, int off) {
    std::vector<Block> out;
    out.reserve(3 * s);
    auto a = [&](int i) { return off + (i % s); };
    auto b = [&](int i) { return off + s + (i % s); };
    auto c = [&](int i) { return off + 2 * s + (i % s); };
    for (int i = 0; i < s; ++i) {
        out.push_back(make_block(a(i), b(i), c(i + 1)));
        out.push_back(make_block(a(i), b(i + 1), c(i)));
        out.push_back(make_block(a(i + 1), b(i), c(i)));
    }
    return out;
}

}  // namespace detail

inline Configuration triangle_family(int s) {
    if (s < 3) throw OutOfRange("triangle_family needs s >= 3");
    return Configuration::from_blocks(3 * s, detail::triangle_blocks(s, 0));
}

// ---------------------------------------------------------------------------
// Minimum-possible minimal blocking sets: ceil(v/3) for every v >= 9.  The
// residue-1 and residue-2 cases extend the triangle family with one or two
// new points via Martinetti's operation.

inline Configuration minblocking_family(int v) {
    if (v < 9) throw OutOfRange("minblocking_family needs v >= 9");
    int r = v % 3;
    if (r == 0) return triangle_family(v / 3);
    int s = (v - r) / 3;  // s >= 3 here
    Configuration x = triangle_family(s);
    // infinity_0: {a0,b0,c1} and {a1,b1,c2} become {oo0,b0,b1}, {oo0,a0,c1},
    // {oo0,a1,c2}
    x = martinetti_extend(x, make_block(0, s, 2 * s + 1),
                          make_block(1, s + 1, 2 * s + 2), s, s + 1);
    if (r == 1) return x;
    // infinity_1: {a0,b1,c0} and {a1,b2,c1} become {oo1,b1,b2}, {oo1,a0,c0},
    // {oo1,a1,c1}
    return martinetti_extend(x, make_block(0, s + 1, 2 * s),
                             make_block(1, s + 2, 2 * s + 1), s + 1, s + 2);
}

// ---------------------------------------------------------------------------
// Appendix base systems used by the near-minimum merges (also the paper's
// fixed examples of 8_3, 9_3 and a 10_3 with minimal blocking set 5).

namespace detail {

inline const char* k8_blocks = "012 034 056 135 147 246 257 367";
inline const char* k9_blocks = "012 034 056 135 147 248 267 368 578";
inline const char* k10_blocks = "012 034 056 135 178 247 268 379 469 589";

// Frozen exemplars for the two sizes not covered by a printed list, a cyclic
// configuration or a merge, discovered by exhaustive enumeration: v = 12 with
// minimal blocking set 5 and v = 15 with minimal blocking set 7.  Both are
// re-verified by blocking_profile in the tests.
inline const char* k12_min5_blocks = "013 024 056 127 149 25a 36b 379 478 58b 68a 9ab";
inline const char* k15_min7_blocks = "013 024 056 127 148 2ad 359 378 47a 5bc 69c 6be 8ae 9bd cde";

inline const char* k16_min8_blocks = "012 034 156 078 59a 9bc 3de 57f 4bd 26b ace 8ef 479 13a 28c 6df";
inline const char* k19_min9_blocks =
    "012 034 056 137 189 25a 28b 3cd 46e 4cf 5gh 6gi 79h 7dg 8ei 9ef abc afh bdi";
inline const char* k20_min9_blocks =
    "012 034 056 135 146 237 245 678 79a 8bc 8de 9bf 9dg abh adi cej cfh egi fgj hij";

// Merge of a base system (with block {0,1,2} and a suitable blocking set)
// with a triangle family: swap the point 0 of the base with the point a_0 of
// the family across one block each.
inline Configuration merge_single(const Configuration& a, int s) {
    int k = a.v;
    int K = k;  // a_i = K+i, b_i = K+s+i, c_i = K+2s+i
    std::vector<Block> blocks;
    for (const Block& b : a.blocks) {
        if (b == make_block(0, 1, 2))
            blocks.push_back(make_block(K, 1, 2));
        else
            blocks.push_back(b);
    }
    for (Block b : detail::triangle_blocks(s, K)) {
        if (b == make_block(K, K + s, K + 2 * s + 1))
            b = make_block(0, K + s, K + 2 * s + 1);
        blocks.push_back(b);
    }
    return Configuration::from_blocks(k + 3 * s, std::move(blocks));
}

// Double merge: a second base system is hooked to b_0 the same way, using
// the block {a1,b0,c0} of the family.
inline Configuration merge_double(const Configuration& a, const Configuration& a2,
                                  int s) {
    int k1 = a.v, k2 = a2.v;
    int K = k1 + k2;
    std::vector<Block> blocks;
    for (const Block& b : a.blocks) {
        if (b == make_block(0, 1, 2))
            blocks.push_back(make_block(K, 1, 2));
        else
            blocks.push_back(b);
    }
    for (const Block& b : a2.blocks) {
        Block shifted = make_block(b[0] + k1, b[1] + k1, b[2] + k1);
        if (b == make_block(0, 1, 2))
            shifted = make_block(K + s, k1 + 1, k1 + 2);
        blocks.push_back(shifted);
    }
    for (Block b : detail::triangle_blocks(s, K)) {
        if (b == make_block(K, K + s, K + 2 * s + 1))
            b = make_block(0, K + s, K + 2 * s + 1);  // {a0,b0,c1} -> {0,b0,c1}
        else if (b == make_block(K + 1, K + s, K + 2 * s))
            b = make_block(K + 1, k1, K + 2 * s);  // {a1,b0,c0} -> {a1,0',c0}
        blocks.push_back(b);
    }
    return Configuration::from_blocks(k1 + k2 + 3 * s, std::move(blocks));
}

}  // namespace detail

// Configurations whose minimal blocking set has size ceil(v/3) + offset,
// offset = 1 (all v >= 8) or 2 (v = 12 and all v >= 15), built from cyclic
// systems, recorded exemplars, and the classical merge of a small base with
// the triangle family.
//
// Caveat, kept for fidelity to the classical argument: the merge swaps the
// base block {0,1,2} for {a0,1,2}, after which {0,1,2} is no longer a block,
// so a blocking set may contain all of 0, 1 and 2.  Both 10_3 bases have a
// point (9) covering every block disjoint from {0,1,2}, hence
// {0,1,2,9} + {b_i} blocks the merged system and the single merge for
// v = 1 (mod 3), v >= 19 attains ceil(v/3) exactly, one below the target.
// The double merges (offset 2, v >= 25) slip by one for the same reason via
// the second base copy.  The advertised size is attained everywhere else.
inline Configuration nearmin_family(int v, int offset) {
    auto frozen = [](const char* text, const char* what) {
        if (!*text)
            throw std::logic_error(std::string("nearmin_family: missing exemplar ") +
                                   what);
        return parse_config(text);
    };
    if (offset == 1) {
        if (v < 8) throw OutOfRange("nearmin_family(offset 1) needs v >= 8");
        switch (v) {
            case 8:
            case 9:
            case 11:
            case 13:
            case 14:
            case 15:
            case 16:
                return cyclic_config(v);
            case 10:
                return parse_config(detail::k10_blocks);
            case 12:
                return frozen(detail::k12_min5_blocks, "(12, offset 1)");
            default:
                break;
        }
        // v >= 17: merge a base 8_3 / 9_3 / 10_3 with a triangle family
        int r = v % 3;
        if (r == 2)
            return detail::merge_single(parse_config(detail::k8_blocks), (v - 8) / 3);
        if (r == 0)
            return detail::merge_single(parse_config(detail::k9_blocks), (v - 9) / 3);
        return detail::merge_single(parse_config(detail::k10_blocks), (v - 10) / 3);
    }
    if (offset == 2) {
        if (v != 12 && v < 15)
            throw OutOfRange("nearmin_family(offset 2) needs v = 12 or v >= 15");
        switch (v) {
            case 12:
            case 17:
            case 18:
            case 21:
            case 22:
            case 23:
            case 24:
                return cyclic_config(v);
            case 15:
                return frozen(detail::k15_min7_blocks, "(15, offset 2)");
            case 16:
                return parse_config(detail::k16_min8_blocks);
            case 19:
                return parse_config(detail::k19_min9_blocks);
            case 20:
                return parse_config(detail::k20_min9_blocks);
            default:
                break;
        }
        // v >= 25: double merges
        int r = v % 3;
        Configuration a8 = parse_config(detail::k8_blocks);
        Configuration a9 = parse_config(detail::k9_blocks);
        if (r == 1) return detail::merge_double(a8, a8, (v - 16) / 3);
        if (r == 2) return detail::merge_double(a9, a8, (v - 17) / 3);
        return detail::merge_double(a9, a9, (v - 18) / 3);
    }
    throw OutOfRange("nearmin_family: offset must be 1 or 2");
}

// ---------------------------------------------------------------------------
// Stitching constructions (blocking-set-freeness preserving).

struct StitchChoice {
    int block = 0;                      // block index in the first constituent
    Point point = 0;                    // distinguished point of the second
    std::array<int, 3> pairing{0, 1, 2};  // permutation pairing B's points with
                                          // the blocks through the point
};

// v + v' - 1 points: remove block B = {x1,x2,x3} of x and point x' of y;
// each block B'_k through x' becomes (B'_k \ {x'}) + one point of B.
inline Configuration stitch2(const Configuration& x, const Configuration& y,
                             const StitchChoice& choice = {}) {
    if (choice.block < 0 || choice.block >= (int)x.blocks.size())
        throw InvalidChoice("stitch2: block index out of range");
    if (choice.point < 0 || choice.point >= y.v)
        throw InvalidChoice("stitch2: point out of range");
    std::array<int, 3> perm = choice.pairing;
    std::array<int, 3> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2})
        throw InvalidChoice("stitch2: pairing is not a permutation");

    const Block& B = x.blocks[choice.block];
    auto thru = blocks_through(y)[choice.point];

    // y points other than the removed one are relabelled to v, v+1, ...
    std::vector<int> ymap(y.v, -1);
    int next = x.v;
    for (Point p = 0; p < y.v; ++p)
        if (p != choice.point) ymap[p] = next++;

    std::vector<Block> out;
    out.reserve(x.blocks.size() + y.blocks.size() - 1);
    for (int i = 0; i < (int)x.blocks.size(); ++i)
        if (i != choice.block) out.push_back(x.blocks[i]);
    for (int j = 0; j < (int)y.blocks.size(); ++j) {
        if (j == thru[0] || j == thru[1] || j == thru[2]) continue;
        const Block& b = y.blocks[j];
        out.push_back(make_block(ymap[b[0]], ymap[b[1]], ymap[b[2]]));
    }
    for (int k = 0; k < 3; ++k) {
        const Block& b = y.blocks[thru[k]];
        std::array<Point, 2> r{};
        int at = 0;
        for (Point p : b)
            if (p != choice.point) r[at++] = ymap[p];
        out.push_back(make_block(r[0], r[1], B[perm[k]]));
    }
    return Configuration::from_blocks(x.v + y.v - 1, std::move(out));
}

// Odd-length cyclic stitch: remove one block B^i from each constituent and a
// point x^i in it; add B^i_* = (B^i \ {x^i}) + x^{i+1} (indices mod n).
inline Configuration stitch3(const std::vector<Configuration>& xs,
                             const std::vector<StitchChoice>& choices) {
    int n = (int)xs.size();
    if (n < 3 || n % 2 == 0)
        throw EvenCount("stitch3 needs an odd number (>= 3) of constituents");
    if ((int)choices.size() != n)
        throw InvalidChoice("stitch3: one choice per constituent required");
    std::vector<int> off(n + 1, 0);
    for (int i = 0; i < n; ++i) off[i + 1] = off[i] + xs[i].v;

    for (int i = 0; i < n; ++i) {
        const auto& ch = choices[i];
        if (ch.block < 0 || ch.block >= (int)xs[i].blocks.size())
            throw InvalidChoice("stitch3: block index out of range");
        const Block& b = xs[i].blocks[ch.block];
        if (b[0] != ch.point && b[1] != ch.point && b[2] != ch.point)
            throw InvalidChoice("stitch3: chosen point not in chosen block");
    }

    std::vector<Block> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < (int)xs[i].blocks.size(); ++j) {
            if (j == choices[i].block) continue;
            const Block& b = xs[i].blocks[j];
            out.push_back(make_block(b[0] + off[i], b[1] + off[i], b[2] + off[i]));
        }
        const Block& b = xs[i].blocks[choices[i].block];
        std::array<Point, 2> r{};
        int at = 0;
        for (Point p : b)
            if (p != choices[i].point) r[at++] = p + off[i];
        int nx = (i + 1) % n;
        out.push_back(make_block(r[0], r[1], choices[nx].point + off[nx]));
    }
    return Configuration::from_blocks(off[n], std::move(out));
}

// ---------------------------------------------------------------------------
// Strongly 4-chromatic configurations for every v >= 8.

namespace detail {

// First Martinetti extension (by choice order) whose strong chromatic number
// is exactly 4; used for the small cases below the triangle-family chain.
inline std::optional<Configuration> first_chis4_extension(const Configuration& x) {
    for (int i = 0; i < (int)x.blocks.size(); ++i)
        for (int j = i + 1; j < (int)x.blocks.size(); ++j) {
            const Block &b1 = x.blocks[i], &b2 = x.blocks[j];
            bool disjoint = true;
            for (Point p : b1)
                for (Point q : b2)
                    if (p == q) disjoint = false;
            if (!disjoint) continue;
            for (Point a1 : b1)
                for (Point bb1 : b2) {
                    if (co_blocked(x, a1, bb1)) continue;
                    Configuration ext = martinetti_extend(x, b1, b2, a1, bb1);
                    if (strong_chromatic_number(ext).first == 4) return ext;
                }
        }
    return std::nullopt;
}

}  // namespace detail

inline Configuration chis4_family(int v) {
    if (v < 8) throw OutOfRange("chis4_family needs v >= 8");
    if (v <= 11) {
        // search upward from the unique 8_3, which is itself 4-chromatic
        Configuration x = parse_config(detail::k8_blocks);
        for (int w = 9; w <= v; ++w) {
            auto next = detail::first_chis4_extension(x);
            if (!next)
                throw std::logic_error("chis4_family: extension search failed");
            x = std::move(*next);
        }
        return x;
    }
    if (v == 12) return cyclic_config(12);
    int r = v % 3;
    int s = (v - (r == 0 ? 3 : r)) / 3;  // v = 3s + r with r in {1,2,3}
    Configuration x = triangle_family(s);
    // infinity_0: {a0,b0,c1},{a1,b1,c2} -> {oo0,b0,c2},{oo0,a0,c1},{oo0,a1,b1}
    x = martinetti_extend(x, make_block(0, s, 2 * s + 1),
                          make_block(1, s + 1, 2 * s + 2), s, 2 * s + 2);
    if (r == 1) return x;
    // infinity_1: {a0,b1,c0},{a1,b2,c1} -> {oo1,a0,b2},{oo1,b1,c0},{oo1,a1,c1}
    x = martinetti_extend(x, make_block(0, s + 1, 2 * s),
                          make_block(1, s + 2, 2 * s + 1), 0, s + 2);
    if (r == 2) return x;
    // infinity_2: {a1,b0,c0},{a2,b1,c1} -> {oo2,a2,c0},{oo2,a1,b0},{oo2,b1,c1}
    return martinetti_extend(x, make_block(1, s, 2 * s),
                             make_block(2, s + 1, 2 * s + 1), 2 * s, 2);
}

// ---------------------------------------------------------------------------
// Strongly 5-chromatic configurations for v = 0 (mod 4), v >= 12.

inline Configuration chis5_family(int v) {
    if (v % 4 != 0 || v < 12)
        throw OutOfRange("chis5_family needs v = 0 (mod 4), v >= 12");
    if (v == 12) return parse_config("012 034 056 135 146 237 289 48a 59b 6ab 78b 79a");
    if (v == 16)
        return parse_config(
            "012 034 056 135 146 236 278 479 57a 89b 8cd 9ef ace adf bcf bde");
    // v >= 20: C_11 glued to a 5-chromatic cyclic (v-11)_3 whose block {0,1,3}
    // is relabelled to {11,12,13}; swap {0,1,3},{11,12,13} -> {1,3,11},{0,12,13}
    int w = v - 11;
    Configuration base = cyclic_config(w);
    std::vector<int> map(w, -1);
    map[0] = 11;
    map[1] = 12;
    map[3] = 13;
    int next = 14;
    for (int p = 0; p < w; ++p)
        if (map[p] == -1) map[p] = next++;
    std::vector<Block> out;
    for (int i = 1; i < 11; ++i)
        out.push_back(make_block(i, (i + 1) % 11, (i + 3) % 11));
    Block removed = make_block(0, 1, 3);
    for (const Block& b : base.blocks) {
        if (b == removed) continue;
        out.push_back(make_block(map[b[0]], map[b[1]], map[b[2]]));
    }
    out.push_back(make_block(1, 3, 11));
    out.push_back(make_block(0, 12, 13));
    return Configuration::from_blocks(v, std::move(out));
}

// ---------------------------------------------------------------------------
// Strongly 6-chromatic configurations for v = 11 and all v >= 13.

inline Configuration chis6_family(int v,
                                  const std::optional<Configuration>& base_in =
                                      std::nullopt) {
    if (v == 11) return cyclic_config(11);
    if (v < 13) throw OutOfRange("chis6_family needs v = 11 or v >= 13");
    if (v == 13)
        return parse_config("012 034 056 135 146 236 278 49c 5ab 79b 7ac 89a 8bc");
    Configuration base = base_in ? *base_in : cyclic_config(v - 7);
    if (base.v != v - 7) throw BadBase("chis6_family: base must have v - 7 points");
    if (!is_connected(base)) throw BadBase("chis6_family: base must be connected");
    // relabel the base so one block becomes {7,8,9}, then swap
    // {0,1,3},{7,8,9} -> {1,3,7},{0,8,9}
    Block sel = base.blocks[0];
    auto pref = std::find(base.blocks.begin(), base.blocks.end(), make_block(0, 1, 3));
    if (pref != base.blocks.end()) sel = *pref;
    std::vector<int> map(base.v, -1);
    map[sel[0]] = 7;
    map[sel[1]] = 8;
    map[sel[2]] = 9;
    int next = 10;
    for (int p = 0; p < base.v; ++p)
        if (map[p] == -1) map[p] = next++;
    std::vector<Block> out;
    for (int i = 1; i < 7; ++i) out.push_back(make_block(i, (i + 1) % 7, (i + 3) % 7));
    for (const Block& b : base.blocks) {
        if (b == sel) continue;
        out.push_back(make_block(map[b[0]], map[b[1]], map[b[2]]));
    }
    out.push_back(make_block(1, 3, 7));
    out.push_back(make_block(0, 8, 9));
    return Configuration::from_blocks(v, std::move(out));
}

// ---------------------------------------------------------------------------
// Strongly 3-chromatic family whose three colour-class-deleted graphs are all
// isomorphic to the same cubic bipartite graph Gamma (a_i ~ b_j iff
// i - j in {-1,0,1} mod s).  The configuration is the triangle family; the
// three block types are its resolution classes.

struct Col3IsoFamily {
    Configuration config;
    Colouring colouring;
    Graph gamma;
};

inline Col3IsoFamily col3iso_family(int s) {
    Col3IsoFamily r;
    r.config = triangle_family(s);
    std::vector<int> assign(3 * s);
    for (int i = 0; i < 3 * s; ++i) assign[i] = i / s;
    r.colouring = Colouring::of(assign);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s; ++i)
        for (int d = -1; d <= 1; ++d) edges.emplace_back(i, s + ((i + d + s) % s));
    r.gamma = Graph::from_edges(2 * s, edges);
    r.gamma.side.assign(2 * s, 0);
    for (int i = s; i < 2 * s; ++i) r.gamma.side[i] = 1;
    return r;
}

// ---------------------------------------------------------------------------
// Realizing an arbitrary cubic bipartite graph as a colour-class-deleted
// graph: decompose gamma's edges into m triples of disjoint edges and join a
// new point to the endpoints of each triple.

struct DelGraphResult {
    Configuration config;
    Colouring colouring;
};

inline DelGraphResult delgraph_config(const Graph& gamma) {
    int n = gamma.n;
    if (n < 6 || n % 2 != 0)
        throw std::invalid_argument("delgraph_config: order must be 2m, m >= 3");
    for (int u = 0; u < n; ++u)
        if ((int)gamma.adj[u].size() != 3)
            throw std::invalid_argument("delgraph_config: graph is not cubic");
    // bipartition (per component)
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : gamma.adj[u]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    throw std::invalid_argument("delgraph_config: graph not bipartite");
                }
            }
        }
    }
    Graph g = gamma;
    g.side = side;
    auto triples = three_k2_decomposition(g);
    int m = n / 2;
    assert((int)triples.size() == m);
    std::vector<Block> blocks;
    blocks.reserve(3 * m);
    for (int j = 0; j < m; ++j)
        for (const auto& [u, w] : triples[j]) blocks.push_back(make_block(u, w, n + j));
    DelGraphResult r;
    r.config = Configuration::from_blocks(3 * m, std::move(blocks));
    std::vector<int> assign(3 * m, 2);
    for (int u = 0; u < n; ++u) assign[u] = side[u];
    r.colouring = Colouring::of(assign);
    return r;
}

}  // namespace symcfg
