#pragma once

#include <map>

#include "ringlab/trivial_extension.hpp"

namespace ringlab {

// Precomputed per-element data for one ring: principal one-sided ideals and
// one-sided annihilators, all as bitsets. Every decider in this module works
// from these sets.
struct RingAnalysis {
    RingPtr R;
    std::vector<Bitset> left_span;   // Ra
    std::vector<Bitset> right_span;  // aR
    std::vector<Bitset> ann_l;       // { x : x a = 0 }
    std::vector<Bitset> ann_r;       // { x : a x = 0 }

    explicit RingAnalysis(RingPtr ring);
};

// Witness b with ann(a) = Rb and ann(b) = Ra on the tagged side. The
// annihilator sets ride along and are re-verified on construction.
struct MorphicWitness {
    std::uint32_t element = 0;
    std::uint32_t partner = 0;
    Bitset ann_of_element;  // ann(a), equal to the span of the partner
    Bitset ann_of_partner;  // ann(b), equal to the span of the element
    Side side = Side::Left;
};

struct QuasiMorphicWitness {
    std::uint32_t element = 0;
    std::uint32_t generator = 0;  // b with span(b) = ann(a)
    std::uint32_t cogenerator = 0;  // c with ann(c) = span(a)
    Side side = Side::Left;
};

std::optional<MorphicWitness> left_morphic_witness(const RingAnalysis& A, std::uint32_t a);
std::optional<MorphicWitness> right_morphic_witness(const RingAnalysis& A, std::uint32_t a);
std::optional<MorphicWitness> morphic_witness(const RingAnalysis& A, std::uint32_t a, Side side);

std::optional<QuasiMorphicWitness> quasi_morphic_witness(const RingAnalysis& A, std::uint32_t a,
                                                          Side side);

enum class Regularity { NotRegular, Regular, UnitRegular };

struct RegularityResult {
    Regularity kind = Regularity::NotRegular;
    std::uint32_t inner_inverse = 0;  // x with a x a = a, when regular
    std::uint32_t unit = 0;           // unit u with a u a = a, when unit regular
};

RegularityResult regularity(const FiniteRing& R, std::uint32_t a);

struct ScanConfig {
    std::uint32_t full_scan_cap = 4096;  // exhaustive element scans up to this order
    std::uint32_t sample_count = 4096;
    std::uint64_t seed = 0;
    bool allow_sampling = true;
};

// Aggregated per-ring report.
struct RingReport {
    std::uint32_t order = 0;
    bool is_commutative = false;
    std::vector<std::uint32_t> units;
    std::vector<std::uint32_t> idempotents;
    std::vector<std::uint32_t> central_idempotents;
    std::vector<std::uint32_t> jacobson_radical;
    std::vector<std::uint32_t> primitive_central_idempotents;
    bool left_bezout = false, right_bezout = false;
    bool left_morphic = false, right_morphic = false, morphic = false;
    bool left_quasi_morphic = false, right_quasi_morphic = false, quasi_morphic = false;
    bool regular = false, unit_regular = false;
    bool semisimple = false, simple = false, local = false;
    bool sampled = false;
    std::map<std::string, std::uint32_t> counterexamples;  // property -> element index
};

RingReport ring_properties(const RingPtr& R, const ScanConfig& cfg = {});

// Lemma-ann verification harness: computes both sides of equivalences
// (A) ann_l^S(0,m) = S(a,n)  <->  ann_l^R(m) = Ra and ann_l^R(a)n + Ma = M
// (B) ann_l^S(a,n) = S(0,m)  <->  ann_l^M(a) = Rm, ann_l^R(a)n ∩ Ma = 0,
//                                 ann_l^R(a) ∩ ann_l^R(n) = 0
// directly and reports which hold.
struct AnnCharacterization {
    bool A1 = false, A2 = false, B1 = false, B2 = false;
    bool consistent() const { return A1 == A2 && B1 == B2; }
};

AnnCharacterization check_annihilator_characterization(const TrivialExtensionRing& S,
                                                       std::uint32_t a, std::uint32_t m,
                                                       std::uint32_t n);

// For a two-sided morphic element a, every left witness b also satisfies
// ann_r(b) = aR and ann_r(a) = bR.
struct RlTransferReport {
    std::uint32_t element = 0;
    std::vector<std::uint32_t> left_witnesses;
    bool ok = false;
};

RlTransferReport verify_rl_transfer(const RingAnalysis& A, std::uint32_t a);

// For every a: (a,0) morphic in R∝R(sigma) implies a morphic in R; when sigma
// is an automorphism, also the left-only implication.
struct GenczReport {
    bool ok = true;
    std::vector<std::uint32_t> violations;  // base elements violating an implication
};

GenczReport verify_gencz(const RingPtr& R, const RingMorphism& sigma,
                         const RingCaps& caps = {});

// Central idempotent commutation obstruction (with the left-morphic verdict
// computed by full scan).
struct CommutationReport {
    bool left_morphic = false;
    bool all_commute = false;
    std::uint32_t failing_idempotent = 0;  // valid when !all_commute
    std::uint32_t failing_module_elem = 0;
    bool consistent() const { return !left_morphic || all_commute; }
};

CommutationReport verify_central_idempotent_commutation(const TrivialExtensionRing& S);

// Convenience ring-level scans.
bool ring_left_morphic(const RingPtr& R);
bool ring_right_morphic(const RingPtr& R);
bool ring_morphic(const RingPtr& R);

}  // namespace ringlab
