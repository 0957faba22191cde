#include <doctest.h>

#include "ringlab/catalog.hpp"
#include "ringlab/finite_ring.hpp"

using namespace ringlab;

namespace {
RingPtr mk(FiniteRing r) { return std::make_shared<const FiniteRing>(std::move(r)); }
}

TEST_CASE("cyclic rings") {
    auto z1 = build_cyclic(1);
    CHECK(z1.order == 1);
    CHECK(z1.zero == z1.one);

    auto z4 = build_cyclic(4);
    CHECK(z4.mul(2, 2) == 0);
    CHECK(z4.mul(3, 3) == 1);
    auto sets4 = units_idempotents_radical(z4);
    CHECK(sets4.units.members() == std::vector<std::uint32_t>{1, 3});
    CHECK(sets4.idempotents.members() == std::vector<std::uint32_t>{0, 1});
    CHECK(sets4.jacobson_radical.members() == std::vector<std::uint32_t>{0, 2});

    auto z6 = build_cyclic(6);
    CHECK(units_idempotents_radical(z6).units.members() == std::vector<std::uint32_t>{1, 5});
}

TEST_CASE("galois fields") {
    // F4 = F2[x]/(x^2+x+1); omega = x has index 2, omega^2 = omega+1 has index 3
    auto f4 = build_galois(2, {1, 1, 1});
    CHECK(f4.order == 4);
    CHECK(f4.mul(2, 2) == 3);

    auto f3 = build_galois(3, {0, 1});  // modulus x
    CHECK(f3.order == 3);

    CHECK_THROWS_AS(build_galois(2, {1, 0, 1}), RingError);  // x^2+1 = (x+1)^2

    auto f8 = build_galois(2, {1, 1, 0, 1});
    CHECK(f8.order == 8);
    CHECK(units_idempotents_radical(f8).units.count() == 7);
}

TEST_CASE("matrix ring M2(F2)") {
    auto f2 = build_cyclic(2);
    auto m = build_matrix_ring(2, f2);
    CHECK(m.order == 16);
    auto sets = units_idempotents_radical(m);
    CHECK(sets.units.count() == 6);  // |GL2(F2)|
    CHECK(sets.jacobson_radical.count() == 1);
    CHECK_FALSE(is_commutative(m));
    // identity matrix [[1,0],[0,1]] = index 9
    CHECK(m.one == 9);
    // permutation matrix [[0,1],[1,0]] = 6 is a non-central unit of order 2
    CHECK(sets.units.test(6));
    CHECK(m.mul(6, 6) == m.one);
}

TEST_CASE("products and CRT") {
    auto z2 = build_cyclic(2);
    auto z3 = build_cyclic(3);
    auto p = mk(build_product(z2, z3));
    auto z6 = mk(build_cyclic(6));
    // explicit CRT map k -> (k mod 2, k mod 3)
    std::vector<std::uint32_t> image(6);
    for (std::uint32_t k = 0; k < 6; ++k) image[k] = (k % 2) * 3 + (k % 3);
    auto iso = check_morphism(z6, p, image);
    CHECK(iso.automorphism);  // bijective

    auto f2 = build_cyclic(2);
    auto p22 = build_product(f2, f2);
    auto sets = units_idempotents_radical(p22);
    CHECK(sets.idempotents.count() == 4);
    CHECK(sets.jacobson_radical.count() == 1);
}

TEST_CASE("primitive central idempotent decompositions") {
    auto z6 = mk(build_cyclic(6));
    auto dec = primitive_central_idempotent_decomposition(z6);
    REQUIRE(dec.size() == 2);
    std::vector<std::uint32_t> orders{dec[0].corner.ring->order, dec[1].corner.ring->order};
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<std::uint32_t>{2, 3});

    auto z4 = mk(build_cyclic(4));
    auto dec4 = primitive_central_idempotent_decomposition(z4);
    REQUIRE(dec4.size() == 1);
    CHECK(dec4[0].corner.ring->order == 4);

    auto f2 = build_cyclic(2);
    auto p22 = mk(build_product(f2, f2));
    CHECK(primitive_central_idempotent_decomposition(p22).size() == 2);
}

TEST_CASE("product factor recovery across catalog products") {
    auto z4 = build_cyclic(4);
    auto z4x4 = mk(build_product(z4, z4));
    auto dec = primitive_central_idempotent_decomposition(z4x4);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].corner.ring->order == 4);
    CHECK(dec[1].corner.ring->order == 4);
}

TEST_CASE("quotient and corner rings") {
    auto z8 = mk(build_cyclic(8));
    Bitset ideal(8);
    for (std::uint32_t v : {0u, 4u}) ideal.set(v);
    auto q = quotient_ring(z8, ideal);
    CHECK(q.ring->order == 4);
    CHECK(q.ring->zero == 0);
    CHECK(q.ring->one == 1);

    auto f2 = build_cyclic(2);
    auto p22 = mk(build_product(f2, f2));
    // e = (1,0) has index 2 (left-index 1 * right order 2 + 0)
    auto c = corner_ring(p22, 2);
    CHECK(c.ring->order == 2);
}

TEST_CASE("endomorphisms") {
    auto f4 = mk(build_galois(2, {1, 1, 1}));
    auto frob = frobenius_endomorphism(f4);
    CHECK(frob.automorphism);
    CHECK(frob(2) == 3);  // omega -> omega^2 = omega + 1

    auto f2 = build_cyclic(2);
    auto p22 = mk(build_product(f2, f2));
    auto sw = swap_endomorphism(p22);
    CHECK(sw.automorphism);
    CHECK(sw(2) == 1);  // (1,0) <-> (0,1)

    auto m2 = mk(build_matrix_ring(2, f2));
    auto conj = conjugation_endomorphism(m2, 6);
    CHECK(conj.automorphism);

    // conj by the permutation matrix moves E11 = [[1,0],[0,0]] = index 8
    CHECK(conj(8) != 8);
}

TEST_CASE("table import and validation") {
    auto r = f2_xy_square_zero();
    CHECK(r->order == 8);
    auto sets = units_idempotents_radical(*r);
    CHECK(sets.jacobson_radical.members() == std::vector<std::uint32_t>{0, 2, 4, 6});
    CHECK(sets.units.count() == 4);
    CHECK(is_commutative(*r));
}

TEST_CASE("units form a group and J is an ideal") {
    for (std::uint64_t n : {4ull, 6ull, 8ull, 12ull}) {
        auto R = build_cyclic(n);
        auto sets = units_idempotents_radical(R);
        for (auto u : sets.units.members())
            for (auto v : sets.units.members()) CHECK(sets.units.test(R.mul(u, v)));
        for (auto x : sets.jacobson_radical.members()) {
            for (auto y : sets.jacobson_radical.members())
                CHECK(sets.jacobson_radical.test(R.add(x, y)));
            for (std::uint32_t r = 0; r < R.order; ++r) {
                CHECK(sets.jacobson_radical.test(R.mul(r, x)));
                CHECK(sets.jacobson_radical.test(R.mul(x, r)));
            }
        }
    }
}
