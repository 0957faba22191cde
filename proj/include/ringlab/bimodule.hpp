#pragma once

#include <optional>
#include <utility>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

enum class Side { Left, Right };

// A finite (R,R)-bimodule with dense addition and action tables.
// Immutable after construction.
struct FiniteBimodule {
    RingPtr ring;
    std::uint32_t order = 0;
    std::vector<std::uint32_t> add_table;    // order x order
    std::vector<std::uint32_t> left_action;  // ring.order x order: (r, m) -> r*m
    std::vector<std::uint32_t> right_action; // order x ring.order: (m, r) -> m*r
    std::uint32_t zero = 0;
    std::vector<std::uint32_t> neg_table;
    std::string construction;

    std::uint32_t add(std::uint32_t m, std::uint32_t n) const { return add_table[m * order + n]; }
    std::uint32_t lact(std::uint32_t r, std::uint32_t m) const { return left_action[r * order + m]; }
    std::uint32_t ract(std::uint32_t m, std::uint32_t r) const {
        return right_action[m * ring->order + r];
    }
    std::uint32_t neg(std::uint32_t m) const { return neg_table[m]; }
    std::uint32_t sub(std::uint32_t m, std::uint32_t n) const { return add(m, neg(n)); }
};

using ModPtr = std::shared_ptr<const FiniteBimodule>;

// Role a verified subset plays; closure under the claimed operations is
// checked on creation.
enum class SubsetRole {
    LeftIdeal,
    RightIdeal,
    LeftSubmodule,
    RightSubmodule,
    SubBimodule,
    Plain,
};

struct SubsetHandle {
    SubsetRole role = SubsetRole::Plain;
    bool over_ring = true;  // true: subset of ring elements, false: of module elements
    Bitset members;
};

// --- constructors -----------------------------------------------------------

FiniteBimodule regular_bimodule(const RingPtr& R);
FiniteBimodule twisted_bimodule(const RingPtr& R, const RingMorphism& sigma);
FiniteBimodule zero_bimodule(const RingPtr& R);
// M / N for a verified sub-bimodule N; zero coset re-indexed to 0.
FiniteBimodule quotient_bimodule(const ModPtr& M, const Bitset& sub);
// e*M*e as a bimodule over the corner ring eRe.
FiniteBimodule corner_bimodule(const ModPtr& M, const CornerRing& corner);

void validate_bimodule(const FiniteBimodule& M, const RingCaps& caps = {});

// --- subsets and annihilators -----------------------------------------------

// Verifies closure for the claimed role; throws on failure.
SubsetHandle make_subset(const FiniteBimodule& M, Bitset members, SubsetRole role,
                         bool over_ring);

// { r in R : r*m = 0 }, verified to be a left ideal.
SubsetHandle left_annihilator_of_module_element(const FiniteBimodule& M, std::uint32_t m);
SubsetHandle right_annihilator_of_module_element(const FiniteBimodule& M, std::uint32_t m);
// { x in M : a*x = 0 } resp. { x : x*a = 0 } for a ring element a.
SubsetHandle left_annihilator_in_module(const FiniteBimodule& M, std::uint32_t a);
SubsetHandle right_annihilator_in_module(const FiniteBimodule& M, std::uint32_t a);

struct AnnihilatorQuad {
    SubsetHandle ann_l_R;  // left annihilator in R of a module element
    SubsetHandle ann_r_R;
    SubsetHandle ann_l_M;  // left annihilator in M of a ring element
    SubsetHandle ann_r_M;
};

// All four annihilators attached to a (ring element, module element) pair.
AnnihilatorQuad annihilators_all(const FiniteBimodule& M, std::uint32_t ring_elem,
                                 std::uint32_t module_elem);

// Rm or mR as an exact subset.
SubsetHandle cyclic_submodule(const FiniteBimodule& M, std::uint32_t m, Side side);

// Least-index g in S with (side-)cyclic span equal to S, if any. Searching
// inside S is complete since any generator g satisfies g = 1*g in S.
std::optional<std::uint32_t> principal_generator(const FiniteBimodule& M, const Bitset& S,
                                                 Side side);

struct BezoutResult {
    bool bezout = true;
    std::uint32_t counter_m = 0;  // witness pair when bezout is false
    std::uint32_t counter_n = 0;
};

// Pairwise Bezout check: every Rm+Rn (or mR+nR) has a principal generator.
BezoutResult is_bezout(const FiniteBimodule& M, Side side);
BezoutResult is_bezout_ring(const RingPtr& R, Side side);

// Pointwise sum {x + y : x in A, y in B} of two subsets of module elements.
Bitset sum_of_subsets(const FiniteBimodule& M, const Bitset& A, const Bitset& B);

}  // namespace ringlab
