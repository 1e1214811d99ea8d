#pragma once

// Blocking sets and determinant-extremality.
//
// A blocking set meets every block but contains none, i.e. the indicator
// 2-colouring leaves no block monochromatic; existence is equivalent to weak
// chromatic number 2.  Searches are backtracking with unit propagation on
// blocks (a block with two points decided one way forces the third the other
// way when needed).
//
// Determinant-extremality (|det| = per of the incidence matrix) is decided
// with exact integer arithmetic: fraction-free elimination for the
// determinant and Ryser's formula with Gray-code subset updates for the
// permanent, exploiting the three ones per column.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "symcfg/core.hpp"

namespace symcfg {

// ---------------------------------------------------------------------------
// Blocking sets

inline bool is_blocking_set(const Configuration& c, const std::vector<Point>& q) {
    std::vector<char> in(c.v, 0);
    for (Point p : q) {
        if (p < 0 || p >= c.v) return false;
        in[p] = 1;
    }
    for (const Block& b : c.blocks) {
        int hits = in[b[0]] + in[b[1]] + in[b[2]];
        if (hits == 0 || hits == 3) return false;
    }
    return true;
}

namespace detail {

// Searches for a 2-colouring with no monochromatic block.  `want` restricts
// the size of colour class 1 (the blocking set) when non-negative.
class BlockingSearch {
  public:
    BlockingSearch(const Configuration& c, int want) : c_(c), want_(want) {
        thru_ = blocks_through(c);
        colour_.assign(c.v, -1);
    }

    std::optional<std::vector<Point>> run() {
        if (solve(0)) {
            std::vector<Point> q;
            for (Point p = 0; p < c_.v; ++p)
                if (colour_[p] == 1) q.push_back(p);
            return q;
        }
        return std::nullopt;
    }

  private:
    const Configuration& c_;
    int want_;
    std::vector<std::array<int, 3>> thru_;
    std::vector<int> colour_;
    int count1_ = 0, count0_ = 0;

    bool counts_feasible() const {
        if (want_ < 0) return true;
        int undecided = c_.v - count0_ - count1_;
        return count1_ <= want_ && count1_ + undecided >= want_;
    }

    bool set_colour(Point p, int col, std::vector<Point>& trail) {
        if (colour_[p] != -1) return colour_[p] == col;
        colour_[p] = col;
        (col ? count1_ : count0_)++;
        trail.push_back(p);
        if (!counts_feasible()) return false;
        // propagate through the blocks of p
        for (int bi : thru_[p]) {
            const Block& b = c_.blocks[bi];
            int same = 0;
            Point free_pt = -1;
            for (Point t : b) {
                if (colour_[t] == col)
                    ++same;
                else if (colour_[t] == -1)
                    free_pt = t;
            }
            if (same == 3) return false;
            if (same == 2 && free_pt != -1) {
                if (!set_colour(free_pt, 1 - col, trail)) return false;
            }
        }
        return true;
    }

    void undo(std::vector<Point>& trail, size_t mark) {
        while (trail.size() > mark) {
            Point p = trail.back();
            trail.pop_back();
            (colour_[p] ? count1_ : count0_)--;
            colour_[p] = -1;
        }
    }

    bool solve(Point from) {
        Point p = -1;
        for (Point t = from; t < c_.v; ++t)
            if (colour_[t] == -1) {
                p = t;
                break;
            }
        if (p == -1) {
            for (Point t = 0; t < from; ++t)
                if (colour_[t] == -1) {
                    p = t;
                    break;
                }
        }
        if (p == -1) return want_ < 0 || count1_ == want_;
        // Complements of blocking sets are blocking sets, so when the size
        // constraint is complement-invariant the very first decision can be
        // fixed: the second branch would mirror the first.
        bool fresh = count0_ + count1_ == 0 && (want_ < 0 || 2 * want_ == c_.v);
        std::vector<Point> trail;
        for (int col : {1, 0}) {
            size_t mark = trail.size();
            if (set_colour(p, col, trail) && solve(p + 1)) return true;
            undo(trail, mark);
            if (fresh) break;
        }
        return false;
    }
};

}  // namespace detail

// Any blocking set, or nullopt.
inline std::optional<std::vector<Point>> find_blocking_set(const Configuration& c,
                                                           int size = -1) {
    detail::BlockingSearch s(c, size);
    return s.run();
}

struct BlockingProfile {
    bool has = false;
    std::optional<int> min_size;
    std::vector<int> sizes;  // the full interval [min, v - min] when non-empty
    std::optional<std::vector<Point>> witness_min;
    int chi_w = 3;
};

// Existence is settled by a single unrestricted search; only then is the
// minimum located by ascending exact-size searches from ceil(v/3).  A
// blocking set of size at most floor(v/2) exists whenever any exists
// (complements of blocking sets are blocking sets), so the unrestricted
// witness caps the ascent.
inline BlockingProfile blocking_profile(const Configuration& c) {
    BlockingProfile bp;
    auto any = find_blocking_set(c);
    bp.chi_w = any ? 2 : 3;
    if (!any) return bp;
    if ((int)any->size() > c.v / 2) {
        std::vector<char> in(c.v, 0);
        for (Point p : *any) in[p] = 1;
        std::vector<Point> comp;
        for (Point p = 0; p < c.v; ++p)
            if (!in[p]) comp.push_back(p);
        *any = std::move(comp);
    }
    bp.has = true;
    bp.min_size = (int)any->size();
    bp.witness_min = std::move(any);
    for (int q = (c.v + 2) / 3; q < *bp.min_size; ++q) {
        if (auto w = find_blocking_set(c, q)) {
            bp.min_size = q;
            bp.witness_min = std::move(w);
            break;
        }
    }
    for (int q = *bp.min_size; q <= c.v - *bp.min_size; ++q) bp.sizes.push_back(q);
    return bp;
}

// Exhaustively checks which cardinalities occur (test oracle for the
// spectrum-continuity property; exponential, intended for small v).
inline std::vector<int> blocking_set_sizes_direct(const Configuration& c) {
    std::vector<int> sizes;
    for (int q = 1; q < c.v; ++q)
        if (find_blocking_set(c, q)) sizes.push_back(q);
    return sizes;
}

// ---------------------------------------------------------------------------
// Determinant and permanent of the v x v incidence matrix (rows = points,
// columns = blocks).

namespace detail {

inline std::vector<std::uint64_t> incidence_rows(const Configuration& c) {
    std::vector<std::uint64_t> rows(c.v, 0);
    for (int j = 0; j < (int)c.blocks.size(); ++j)
        for (Point p : c.blocks[j]) rows[p] |= 1ull << j;
    return rows;
}

// Bareiss fraction-free elimination.  Intermediate entries are minors of a
// 0/1 matrix with three ones per row, so they fit comfortably in 64 bits for
// v <= 32 (Hadamard bound 3^(v/2)).
inline long long determinant_bareiss(std::vector<std::vector<long long>> a) {
    int n = (int)a.size();
    long long sign = 1, prev = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                pivot = i;
                break;
            }
        if (pivot == -1) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Ryser with Gray-code subset enumeration.  Each column flip touches exactly
// the three rows incident to that block, so a flip costs O(1) updates to the
// running row sums; the signed accumulator uses 128 bits.
inline long long permanent_ryser(const Configuration& c) {
    int n = c.v;
    std::vector<std::array<int, 3>> col_rows(n);
    {
        std::vector<int> cnt(n, 0);
        for (int j = 0; j < n; ++j)
            for (Point p : c.blocks[j]) col_rows[j][cnt[j]++] = p;
    }
    std::vector<int> rowsum(n, 0);
    int zero_rows = n;
    __int128 prod = 1;  // product of non-zero row sums
    __int128 total = 0;
    std::uint64_t gray = 0;
    std::uint64_t limit = 1ull << n;
    for (std::uint64_t it = 1; it < limit; ++it) {
        std::uint64_t new_gray = it ^ (it >> 1);
        int j = __builtin_ctzll(gray ^ new_gray);
        bool add = new_gray & (1ull << j);
        gray = new_gray;
        for (int p : col_rows[j]) {
            int old = rowsum[p];
            int now = old + (add ? 1 : -1);
            rowsum[p] = now;
            if (old == 0)
                --zero_rows;
            else
                prod /= old;
            if (now == 0)
                ++zero_rows;
            else
                prod *= now;
        }
        if (zero_rows == 0) {
            int bits = __builtin_popcountll(gray);
            // sign (-1)^(n - |S|)
            if ((n - bits) & 1)
                total -= prod;
            else
                total += prod;
        }
    }
    return (long long)total;
}

}  // namespace detail

struct DetExtremalResult {
    bool det_extremal = false;
    long long det_abs = 0;
    long long permanent = 0;
};

inline DetExtremalResult is_det_extremal(const Configuration& c, int max_v = 26) {
    if (c.v > max_v)
        throw BoundExceeded("permanent computation limited to " + std::to_string(max_v) +
                            " points");
    auto rows = detail::incidence_rows(c);
    std::vector<std::vector<long long>> a(c.v, std::vector<long long>(c.v, 0));
    for (int i = 0; i < c.v; ++i)
        for (int j = 0; j < c.v; ++j) a[i][j] = rows[i] >> j & 1;
    long long det = detail::determinant_bareiss(std::move(a));
    long long per = detail::permanent_ryser(c);
    long long det_abs = det < 0 ? -det : det;
    return {det_abs == per, det_abs, per};
}

// ---------------------------------------------------------------------------
// Circular binary words.  For the cyclic configuration with base {0,1,3} a
// point set Q is blocking iff its indicator word avoids the cyclic subwords
// 0000, 0010, 1101 and 1111; equivalently it alternates (even length) or all
// runs have length 2 or 3.

struct CircularWord {
    std::vector<std::uint8_t> bits;

    int length() const { return (int)bits.size(); }
    int weight() const {
        int w = 0;
        for (auto b : bits) w += b;
        return w;
    }
};

inline bool word_is_blocking(const CircularWord& w) {
    int n = w.length();
    if (n < 4) return false;
    static const int bad[4][4] = {
        {0, 0, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 1}, {1, 1, 1, 1}};
    for (int i = 0; i < n; ++i)
        for (const auto& pat : bad) {
            bool match = true;
            for (int k = 0; k < 4 && match; ++k)
                match = w.bits[(i + k) % n] == pat[k];
            if (match) return false;
        }
    return true;
}

// Indicator word of a point set in the natural cyclic order.
inline CircularWord indicator_word(int v, const std::vector<Point>& q) {
    CircularWord w;
    w.bits.assign(v, 0);
    for (Point p : q) w.bits[p] = 1;
    return w;
}

struct CyclicMinBlocking {
    int size = 0;
    CircularWord witness;
};

// Minimal blocking set size of the cyclic configuration with base {0,1,3}:
// 2*floor(v/5) + eps with eps = 0, 1, 2 according to v mod 5 (eps = 2 for
// residues 2, 3, 4).  The witness packs runs 11000 / 111000 / 1100 by
// residue class.
inline CyclicMinBlocking cyclic_min_blocking(int v) {
    if (v < 8) throw std::invalid_argument("cyclic_min_blocking needs v >= 8");
    int r = v % 5;
    int size = 2 * (v / 5) + (r == 0 ? 0 : r == 1 ? 1 : 2);
    CircularWord w;
    auto append = [&w](const char* s) {
        for (const char* p = s; *p; ++p) w.bits.push_back(*p == '1');
    };
    switch (r) {
        case 0:
            for (int i = 0; i < v / 5; ++i) append("11000");
            break;
        case 1:
            for (int i = 0; i < v / 5; ++i) append("11000");
            append("1");
            break;
        case 2:
            append("111000");
            append("111000");
            for (int i = 0; i < (v - 12) / 5; ++i) append("11000");
            break;
        case 3:
            append("1100");
            append("1100");
            for (int i = 0; i < (v - 8) / 5; ++i) append("11000");
            break;
        case 4:
            append("11000");
            append("1100");
            for (int i = 0; i < (v - 9) / 5; ++i) append("11000");
            break;
    }
    assert((int)w.bits.size() == v && w.weight() == size);
    return {size, w};
}

}  // namespace symcfg
