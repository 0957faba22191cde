#pragma once

#include "ringlab/morphic.hpp"

namespace ringlab {

// The map F : { cyclic right submodules of M } -> { principal left ideals of R },
// F(mR) = ann_l^R(m), built and verified for a morphic trivial extension.
struct LatticeMapEntry {
    Bitset submodule;        // mR as a subset of M
    std::uint32_t generator = 0;  // some m with mR = submodule
    Bitset image;            // ann_l^R(m) as a subset of R
    std::uint32_t image_generator = 0;  // a with Ra = image
    bool sub_bimodule = false;
    bool image_two_sided = false;
};

struct LatticeMap {
    std::vector<LatticeMapEntry> entries;
    bool injective = false;
    bool inclusion_reversing = false;
};

LatticeMap build_lattice_map(const TrivialExtensionRing& S);

// Theorem-leftcyc construction: for a left-cyclic bimodule M = Rx with
// ann_l^R(x) a two-sided ideal, the quotient R/ann(x), the endomorphism
// sigma with x r = sigma-rep(r) x, and the bimodule isomorphism psi(s) = s x.
struct SigmaConstruction {
    QuotientRing quotient;            // R-bar = R / ann_l^R(x)
    RingMorphism sigma;               // endomorphism of R-bar
    std::vector<std::uint32_t> psi;   // R-bar index -> M index, psi(s) = rep(s) * x
    std::uint32_t generator = 0;      // x
    bool sigma_automorphism = false;
    bool right_cyclic_match = false;  // xR = Rx (Theorem-quot pathway)
};

SigmaConstruction construct_sigma(const ModPtr& M, std::uint32_t x);

// Per-factor verdicts of the perfect-case classification.
struct FactorVerdict {
    std::uint32_t idempotent = 0;
    std::uint32_t ring_order = 0;
    std::uint32_t module_order = 0;
    bool simple_artinian = false;
    bool verdict = false;
    std::string reason;
};

struct ClassificationVerdict {
    bool predicted_morphic = false;
    bool commutation_obstruction = false;
    std::uint32_t failing_idempotent = 0;  // when commutation_obstruction
    std::uint32_t failing_module_elem = 0;
    std::vector<FactorVerdict> factors;
};

ClassificationVerdict classify_perfect_case(const RingPtr& R, const ModPtr& M);

// Prediction vs. brute force on the materialized extension; a mismatch is a
// contradiction alarm.
struct ReconcileReport {
    bool predicted = false;
    bool brute_force = false;
    bool match = false;
    ClassificationVerdict verdict;
};

ReconcileReport reconcile(const RingPtr& R, const ModPtr& M, const RingCaps& caps = {});

// For a two-sided quasi-morphic extension: M cyclic on both sides, base
// Bezout on both sides, and sigma recoverable with the automorphism flag.
struct CyclicFiniteLengthReport {
    bool ok = false;
    std::uint32_t left_generator = 0;
    std::uint32_t right_generator = 0;
    bool base_bezout_both = false;
    bool sigma_ok = false;
};

CyclicFiniteLengthReport verify_cyclic_finite_length(const TrivialExtensionRing& S);

}  // namespace ringlab
