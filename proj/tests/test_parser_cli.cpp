#include <doctest.h>

#include "ringlab/catalog.hpp"
#include "ringlab/json_io.hpp"

using namespace ringlab;

TEST_CASE("parser accepts the grammar") {
    auto a = parse_spec("TrivExt(Z(4), Reg(Z(4)))");
    CHECK(a->kind == SpecNode::Kind::TrivExt);
    auto b = parse_spec("TrivExt(Prod(Z(2),Z(2)), Twist(Prod(Z(2),Z(2)), swap))");
    CHECK(b->kind == SpecNode::Kind::TrivExt);
    auto c = parse_spec("GF( 2 , x^2 + x + 1 )");
    CHECK(c->poly == std::vector<int>{1, 1, 1});
    auto d = parse_spec("Mat(2, GF(2, x^2+x+1))");
    CHECK(d->n == 2);
    auto e = parse_spec("TrivExt(Z(2), Twist(Z(2), [0,1]))");
    CHECK(e->children[1]->children[1]->kind == SpecNode::Kind::EndoList);
}

TEST_CASE("parser rejects bad input with spans") {
    CHECK_THROWS_AS(parse_spec("Z(4"), ParseError);
    CHECK_THROWS_AS(parse_spec("Zx(4)"), ParseError);
    CHECK_THROWS_AS(parse_spec("Z(4) junk"), ParseError);
    CHECK_THROWS_AS(parse_spec("TrivExt(Z(4))"), ParseError);
    // GF(4, ...) parses but fails the prime check at build time
    auto ast = parse_spec("GF(4, x^2+x+1)");
    CHECK_THROWS_AS(build_spec(ast), ParseError);
}

TEST_CASE("render -> parse round trip over the catalog") {
    for (const auto& entry : catalog()) {
        if (entry.spec.empty()) continue;
        auto ast = parse_spec(entry.spec);
        auto rendered = render_spec(*ast);
        auto again = parse_spec(rendered);
        CHECK(render_spec(*again) == rendered);
    }
}

TEST_CASE("every catalog entry builds and validates") {
    for (const auto& entry : catalog()) {
        auto built = build_catalog_entry(entry);
        CHECK(built.ring->order >= 1);
        validate_ring(*built.ring);
    }
}

TEST_CASE("build results match construction semantics") {
    auto b = build_spec(parse_spec("TrivExt(Z(4),Reg(Z(4)))"));
    REQUIRE(b.triv);
    CHECK(b.ring->order == 16);
    CHECK(b.base->order == 4);

    auto m = build_spec(parse_spec("Mat(2,Z(2))"));
    CHECK(m.ring->order == 16);

    CHECK_THROWS_AS(build_spec(parse_spec("TrivExt(Z(4),Reg(Z(2)))")), ParseError);
}

TEST_CASE("deterministic json reports") {
    auto spec = parse_spec("Z(6)");
    auto r1 = to_json(ring_properties(build_spec(spec).ring));
    auto r2 = to_json(ring_properties(build_spec(spec).ring));
    CHECK(r1.dump() == r2.dump());
    // alphabetical key order
    auto it = r1.begin();
    std::string prev = it.key();
    for (++it; it != r1.end(); ++it) {
        CHECK(prev < it.key());
        prev = it.key();
    }
}

TEST_CASE("table import rejects malformed text") {
    CHECK_THROWS_AS(parse_table_ring("bogus 8"), ParseError);
    CHECK_THROWS_AS(parse_table_ring("ring 2 0 1 1 0 0 0"), ParseError);  // truncated
}
