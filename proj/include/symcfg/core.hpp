#pragma once

// Core types for symmetric point-line configurations with three points per
// block and three blocks per point (v points, v blocks).  A configuration is
// stored in normal form: each block is a sorted triple and the block list is
// sorted lexicographically.  Points are 0-based and dense (every label in
// [0, v) is used; replication forces this for valid configurations).

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symcfg {

using Point = int;
using Block = std::array<Point, 3>;

inline Block make_block(Point a, Point b, Point c) {
    Block t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

// ---------------------------------------------------------------------------
// Errors

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class Violation {
    BlockSize,          // a block does not consist of three distinct points
    PointReplication,   // a point does not lie in exactly three blocks
    RepeatedPair,       // a pair of points occurs in two blocks
    BlockCount,         // the number of blocks differs from v
    PointRange,         // a point label outside [0, v)
};

inline const char* violation_name(Violation v) {
    switch (v) {
        case Violation::BlockSize: return "BlockSize";
        case Violation::PointReplication: return "PointReplication";
        case Violation::RepeatedPair: return "RepeatedPair";
        case Violation::BlockCount: return "BlockCount";
        case Violation::PointRange: return "PointRange";
    }
    return "?";
}

struct ValidationIssue {
    Violation rule;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;

    std::string to_string() const {
        if (ok) return "ok";
        std::string s;
        for (const auto& i : issues) {
            if (!s.empty()) s += "; ";
            s += violation_name(i.rule);
            s += ": ";
            s += i.detail;
        }
        return s;
    }
};

struct ValidationError : std::runtime_error {
    ValidationReport report;
    explicit ValidationError(ValidationReport r)
        : std::runtime_error("invalid configuration: " + r.to_string()),
          report(std::move(r)) {}
};

struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Validation of raw block lists

inline ValidationReport validate(int v, const std::vector<Block>& blocks) {
    ValidationReport rep;
    auto fail = [&rep](Violation rule, std::string detail) {
        rep.ok = false;
        rep.issues.push_back({rule, std::move(detail)});
    };

    if ((int)blocks.size() != v)
        fail(Violation::BlockCount,
             "expected " + std::to_string(v) + " blocks, got " + std::to_string(blocks.size()));

    for (size_t i = 0; i < blocks.size(); ++i) {
        Block b = blocks[i];
        std::sort(b.begin(), b.end());
        if (b[0] == b[1] || b[1] == b[2])
            fail(Violation::BlockSize, "block #" + std::to_string(i) + " has a repeated point");
        for (Point p : b)
            if (p < 0 || p >= v)
                fail(Violation::PointRange,
                     "block #" + std::to_string(i) + " uses point " + std::to_string(p));
    }
    if (!rep.ok) return rep;

    std::vector<int> repl(v, 0);
    std::set<std::pair<Point, Point>> pairs;
    for (size_t i = 0; i < blocks.size(); ++i) {
        Block b = blocks[i];
        std::sort(b.begin(), b.end());
        for (Point p : b) repl[p]++;
        const std::pair<Point, Point> ps[3] = {
            {b[0], b[1]}, {b[0], b[2]}, {b[1], b[2]}};
        for (auto& pr : ps)
            if (!pairs.insert(pr).second)
                fail(Violation::RepeatedPair,
                     "pair {" + std::to_string(pr.first) + "," + std::to_string(pr.second) +
                         "} repeated (block #" + std::to_string(i) + ")");
    }
    for (Point p = 0; p < v; ++p)
        if (repl[p] != 3)
            fail(Violation::PointReplication,
                 "point " + std::to_string(p) + " has replication " + std::to_string(repl[p]));
    return rep;
}

// ---------------------------------------------------------------------------
// Configuration

struct Configuration {
    int v = 0;
    std::vector<Block> blocks;  // normal form: sorted triples, sorted list

    void normalize() {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
    }

    bool operator==(const Configuration& o) const { return v == o.v && blocks == o.blocks; }
    bool operator<(const Configuration& o) const {
        return v != o.v ? v < o.v : blocks < o.blocks;
    }

    // Factory that normalizes and validates.
    static Configuration from_blocks(int v, std::vector<Block> blocks) {
        Configuration c{v, std::move(blocks)};
        c.normalize();
        ValidationReport rep = validate(c.v, c.blocks);
        if (!rep.ok) throw ValidationError(rep);
        return c;
    }
};

// ---------------------------------------------------------------------------
// Text formats.
//
// Compact: one block per 3-symbol token, symbols 0-9 then a-z (values 0..35).
// Decimal: each block a token of three comma-separated integers, e.g. 0,1,12.
// '#' starts a comment that runs to the end of the line.

inline int symbol_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

inline char value_symbol(int x) {
    return x < 10 ? char('0' + x) : char('a' + x - 10);
}

namespace detail {

inline std::string strip_comments(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (char c : text) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        out.push_back(in_comment ? ' ' : c);
    }
    return out;
}

}  // namespace detail

// Parses one configuration from `text` (tokens may span multiple lines).
// The number of points is inferred as 1 + the maximum point label.
inline Configuration parse_config(std::string_view text) {
    std::istringstream in(detail::strip_comments(text));
    std::vector<Block> blocks;
    Point maxp = -1;
    std::string tok;
    while (in >> tok) {
        Block b;
        if (tok.find(',') != std::string::npos) {
            int parts = 0;
            size_t pos = 0;
            bool consumed = false;
            while (!consumed && parts < 3) {
                size_t comma = tok.find(',', pos);
                std::string field = tok.substr(pos, comma == std::string::npos
                                                        ? std::string::npos
                                                        : comma - pos);
                if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
                    throw ParseError("malformed decimal token '" + tok + "'");
                b[parts++] = std::stoi(field);
                if (comma == std::string::npos)
                    consumed = true;
                else
                    pos = comma + 1;
            }
            if (parts != 3 || !consumed)
                throw ParseError("decimal token '" + tok + "' must have exactly three fields");
        } else {
            if (tok.size() != 3)
                throw ParseError("compact token '" + tok + "' must have exactly three symbols");
            for (int i = 0; i < 3; ++i) {
                int val = symbol_value(tok[i]);
                if (val < 0)
                    throw ParseError("unknown symbol '" + std::string(1, tok[i]) +
                                     "' in token '" + tok + "'");
                b[i] = val;
            }
        }
        std::sort(b.begin(), b.end());
        for (Point p : b) maxp = std::max(maxp, p);
        blocks.push_back(b);
    }
    if (blocks.empty()) throw ParseError("no blocks found");
    return Configuration::from_blocks(maxp + 1, std::move(blocks));
}

enum class Style { Compact, Decimal };

// Formats the block list; compact form requires every label < 36.
inline std::string format_config(const Configuration& c,
                                 std::optional<Style> style = std::nullopt) {
    Style s = style.value_or(c.v <= 36 ? Style::Compact : Style::Decimal);
    if (s == Style::Compact && c.v > 36)
        throw std::invalid_argument("compact form supports at most 36 points");
    std::string out;
    for (size_t i = 0; i < c.blocks.size(); ++i) {
        if (i) out += ' ';
        const Block& b = c.blocks[i];
        if (s == Style::Compact) {
            out += value_symbol(b[0]);
            out += value_symbol(b[1]);
            out += value_symbol(b[2]);
        } else {
            out += std::to_string(b[0]);
            out += ',';
            out += std::to_string(b[1]);
            out += ',';
            out += std::to_string(b[2]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Incidence helpers

// Indices of the blocks through each point, in block-list order.
inline std::vector<std::array<int, 3>> blocks_through(const Configuration& c) {
    std::vector<std::array<int, 3>> thru(c.v);
    std::vector<int> cnt(c.v, 0);
    for (int i = 0; i < (int)c.blocks.size(); ++i)
        for (Point p : c.blocks[i]) thru[p][cnt[p]++] = i;
    return thru;
}

inline bool co_blocked(const Configuration& c, Point p, Point q) {
    if (p == q) return false;
    for (const Block& b : c.blocks) {
        bool hp = b[0] == p || b[1] == p || b[2] == p;
        bool hq = b[0] == q || b[1] == q || b[2] == q;
        if (hp && hq) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Duality: points of the dual are the blocks of c (by index in normal form),
// blocks of the dual are the points of c.

inline Configuration dual(const Configuration& c) {
    auto thru = blocks_through(c);
    std::vector<Block> dual_blocks;
    dual_blocks.reserve(c.v);
    for (Point p = 0; p < c.v; ++p)
        dual_blocks.push_back(make_block(thru[p][0], thru[p][1], thru[p][2]));
    return Configuration::from_blocks(c.v, std::move(dual_blocks));
}

// ---------------------------------------------------------------------------
// Connectivity of the incidence structure

namespace detail {

// Union of points reachable from point 0 through shared blocks.
inline std::vector<int> point_component_ids(const Configuration& c) {
    std::vector<int> comp(c.v, -1);
    auto thru = blocks_through(c);
    int ncomp = 0;
    for (Point s = 0; s < c.v; ++s) {
        if (comp[s] != -1) continue;
        std::vector<Point> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            Point p = stack.back();
            stack.pop_back();
            for (int bi : thru[p])
                for (Point q : c.blocks[bi])
                    if (comp[q] == -1) {
                        comp[q] = ncomp;
                        stack.push_back(q);
                    }
        }
        ++ncomp;
    }
    return comp;
}

}  // namespace detail

inline bool is_connected(const Configuration& c) {
    auto comp = detail::point_component_ids(c);
    return std::all_of(comp.begin(), comp.end(), [](int x) { return x == 0; });
}

// Splits into connected components, each relabelled onto dense labels in the
// order induced by the original labels.
inline std::vector<Configuration> connected_components(const Configuration& c) {
    auto comp = detail::point_component_ids(c);
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<Block>> parts(ncomp);
    std::vector<int> relabel(c.v, -1), sizes(ncomp, 0);
    for (Point p = 0; p < c.v; ++p) relabel[p] = sizes[comp[p]]++;
    for (const Block& b : c.blocks)
        parts[comp[b[0]]].push_back(
            make_block(relabel[b[0]], relabel[b[1]], relabel[b[2]]));
    std::vector<Configuration> out;
    out.reserve(ncomp);
    for (int i = 0; i < ncomp; ++i)
        out.push_back(Configuration::from_blocks(sizes[i], std::move(parts[i])));
    return out;
}

// Disjoint union (used to assemble test fixtures and disconnected classes).
inline Configuration disjoint_union(const Configuration& a, const Configuration& b) {
    std::vector<Block> blocks = a.blocks;
    for (const Block& blk : b.blocks)
        blocks.push_back(make_block(blk[0] + a.v, blk[1] + a.v, blk[2] + a.v));
    return Configuration::from_blocks(a.v + b.v, std::move(blocks));
}

}  // namespace symcfg
