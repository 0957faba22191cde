#pragma once

#include "ringlab/bimodule.hpp"

namespace ringlab {

// R ∝ M materialized as a FiniteRing, with the pair codec
// index = r * M.order + m.
struct TrivialExtensionRing {
    RingPtr base;
    ModPtr bimodule;
    RingPtr as_ring;

    std::uint32_t pair_index(std::uint32_t r, std::uint32_t m) const {
        return r * bimodule->order + m;
    }
    std::pair<std::uint32_t, std::uint32_t> pair_of(std::uint32_t s) const {
        return {s / bimodule->order, s % bimodule->order};
    }
};

TrivialExtensionRing build_trivial_extension(const RingPtr& R, const ModPtr& M,
                                             const RingCaps& caps = {});

// R ∝ R(sigma); pairs (r, m) read as r + m t in R[t;sigma]/(t^2).
TrivialExtensionRing skew_poly_quotient(const RingPtr& R, const RingMorphism& sigma,
                                        const RingCaps& caps = {});

// The corner set (e,0) S (e',0), computed both as an element scan and as
// { (a,x) : a in eRe', x in eMe' }; the two are asserted equal.
Bitset corner_set(const TrivialExtensionRing& S, std::uint32_t e, std::uint32_t e_prime);

}  // namespace ringlab
