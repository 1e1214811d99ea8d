#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "symcfg/canonical.hpp"
#include "symcfg/core.hpp"

using namespace symcfg;

namespace {

const char* kFano = "013 026 045 124 156 235 346";

bool has_violation(const ValidationReport& r, Violation v) {
    return std::any_of(r.issues.begin(), r.issues.end(),
                       [&](const ValidationIssue& i) { return i.rule == v; });
}

} // namespace

TEST_CASE("make_block sorts its entries") {
    Block b = make_block(5, 1, 3);
    CHECK(b == Block{1, 3, 5});
    CHECK(make_block(2, 2, 1) == Block{1, 2, 2});  // validation rejects later
}

TEST_CASE("parse_config reads compact and decimal tokens") {
    Configuration a = parse_config(kFano);
    CHECK(a.v == 7);
    CHECK(a.blocks.size() == 7);

    Configuration b = parse_config("0,1,3 0,2,6 0,4,5 1,2,4 1,5,6 2,3,5 3,4,6");
    CHECK(a == b);

    // symbols beyond '9'
    Configuration c = parse_config("012 034 056 135 146 236 278 49c 5ab 79b 7ac 89a 8bc");
    CHECK(c.v == 13);
    CHECK(c.blocks.front() == Block{0, 1, 2});
    CHECK(c.blocks.back() == Block{8, 11, 12});
}

TEST_CASE("parse_config normalizes order") {
    Configuration a = parse_config("310 620 540 421 651 532 643");
    CHECK(a == parse_config(kFano));
    for (std::size_t i = 1; i < a.blocks.size(); ++i) CHECK(a.blocks[i - 1] < a.blocks[i]);
}

TEST_CASE("parse_config strips comments") {
    Configuration a = parse_config("# header\n013 026 045 # inline\n124 156 235 346\n");
    CHECK(a == parse_config(kFano));
}

TEST_CASE("parse_config rejects malformed input") {
    CHECK_THROWS_AS(parse_config(""), ParseError);
    CHECK_THROWS_AS(parse_config("# only a comment"), ParseError);
    CHECK_THROWS_AS(parse_config("01"), ParseError);
    CHECK_THROWS_AS(parse_config("0123"), ParseError);
    CHECK_THROWS_AS(parse_config("01!"), ParseError);
    CHECK_THROWS_AS(parse_config("0,1 034"), ParseError);
    CHECK_THROWS_AS(parse_config("0,1,2,3"), ParseError);
    CHECK_THROWS_AS(parse_config("0,x,2"), ParseError);
}

TEST_CASE("format_config round-trips both styles") {
    Configuration a = parse_config(kFano);
    CHECK(format_config(a) == kFano);
    CHECK(parse_config(format_config(a, Style::Decimal)) == a);

    Configuration big = parse_config("013 02c 0ab 124 1bc 235 346 457 568 679 78a 89b 9ac");
    CHECK(big.v == 13);
    CHECK(parse_config(format_config(big)) == big);
    CHECK(parse_config(format_config(big, Style::Decimal)) == big);
}

TEST_CASE("validate accepts exactly the configuration axioms") {
    Configuration a = parse_config(kFano);
    ValidationReport ok = validate(a.v, a.blocks);
    CHECK(ok.ok);
    CHECK(ok.issues.empty());
}

TEST_CASE("validate names the violated rule") {
    // repeated point inside a block
    {
        auto blocks = parse_config(kFano).blocks;
        blocks[0] = Block{1, 1, 3};
        ValidationReport r = validate(7, blocks);
        CHECK(!r.ok);
        CHECK(has_violation(r, Violation::BlockSize));
    }
    // block count != v
    {
        auto blocks = parse_config(kFano).blocks;
        blocks.pop_back();
        ValidationReport r = validate(7, blocks);
        CHECK(!r.ok);
        CHECK(has_violation(r, Violation::BlockCount));
    }
    // a pair of points in two blocks
    {
        std::vector<Block> blocks = {make_block(0, 1, 2), make_block(0, 1, 3),
                                     make_block(0, 4, 5), make_block(1, 4, 6),
                                     make_block(2, 3, 4), make_block(2, 5, 6),
                                     make_block(3, 5, 6)};
        ValidationReport r = validate(7, blocks);
        CHECK(!r.ok);
        CHECK(has_violation(r, Violation::RepeatedPair));
    }
    // point out of range
    {
        auto blocks = parse_config(kFano).blocks;
        blocks[6] = make_block(3, 4, 7);
        ValidationReport r = validate(7, blocks);
        CHECK(!r.ok);
        CHECK(has_violation(r, Violation::PointRange));
    }
    // replication number != 3
    {
        auto blocks = parse_config("012 034 056 135 147 246 257 367").blocks;
        std::swap(blocks[7], blocks[0]);
        blocks.pop_back();
        ValidationReport r = validate(8, blocks);
        CHECK(!r.ok);
        CHECK(has_violation(r, Violation::BlockCount));
    }
    {
        // 8 blocks on 8 points but point 0 used four times, point 7 twice
        auto blocks = parse_config("012 034 056 135 147 246 257 367").blocks;
        blocks[7] = make_block(0, 3, 7);  // was {3,6,7}; breaks replication only
        ValidationReport r = validate(8, blocks);
        CHECK(!r.ok);
        CHECK(has_violation(r, Violation::PointReplication));
    }
}

TEST_CASE("from_blocks validates and normalizes") {
    std::vector<Block> blocks = parse_config(kFano).blocks;
    std::reverse(blocks.begin(), blocks.end());
    Configuration c = Configuration::from_blocks(7, blocks);
    CHECK(c == parse_config(kFano));

    blocks.pop_back();
    CHECK_THROWS_AS(Configuration::from_blocks(7, blocks), ValidationError);
}

TEST_CASE("blocks_through lists the three blocks of every point") {
    Configuration c = parse_config(kFano);
    auto thru = blocks_through(c);
    REQUIRE(thru.size() == 7);
    for (Point p = 0; p < c.v; ++p) {
        for (int bi : thru[p]) {
            const Block& b = c.blocks[bi];
            CHECK((b[0] == p || b[1] == p || b[2] == p));
        }
    }
}

TEST_CASE("co_blocked matches the block lists") {
    Configuration c = parse_config(kFano);
    for (Point p = 0; p < c.v; ++p) {
        CHECK(!co_blocked(c, p, p));
        for (Point q = 0; q < c.v; ++q) {
            bool direct = false;
            for (const Block& b : c.blocks) {
                bool hp = b[0] == p || b[1] == p || b[2] == p;
                bool hq = b[0] == q || b[1] == q || b[2] == q;
                if (hp && hq && p != q) direct = true;
            }
            CHECK(co_blocked(c, p, q) == direct);
        }
    }
    // Fano: every pair of points is co-blocked
    for (Point p = 0; p < c.v; ++p)
        for (Point q = p + 1; q < c.v; ++q) CHECK(co_blocked(c, p, q));
}

TEST_CASE("dual is an involution up to relabelling") {
    for (const char* text : {kFano, "012 034 056 135 147 246 257 367",
                             "012 034 056 135 147 248 267 368 578"}) {
        Configuration c = parse_config(text);
        Configuration d = dual(c);
        CHECK(d.v == c.v);
        CHECK(validate(d.v, d.blocks).ok);
        // point/block roles swap back, but labels pass through block indices
        CHECK(canonicalize(dual(d)) == canonicalize(c));
    }
}

TEST_CASE("connectivity helpers") {
    Configuration fano = parse_config(kFano);
    CHECK(is_connected(fano));
    CHECK(connected_components(fano).size() == 1);

    Configuration two = disjoint_union(fano, fano);
    CHECK(two.v == 14);
    CHECK(validate(two.v, two.blocks).ok);
    CHECK(!is_connected(two));

    auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    for (const auto& comp : comps) {
        CHECK(comp.v == 7);
        CHECK(comp == fano);
    }

    auto ids = detail::point_component_ids(two);
    REQUIRE(ids.size() == 14);
    CHECK(ids[0] == ids[6]);
    CHECK(ids[7] == ids[13]);
    CHECK(ids[0] != ids[7]);
}

TEST_CASE("symbol helpers cover 0-9 and a-z") {
    for (int x = 0; x < 36; ++x) CHECK(symbol_value(value_symbol(x)) == x);
    CHECK(symbol_value('!') < 0);
}
