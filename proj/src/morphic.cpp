#include "ringlab/morphic.hpp"

#include <random>

namespace ringlab {

RingAnalysis::RingAnalysis(RingPtr ring) : R(std::move(ring)) {
    const FiniteRing& r = *R;
    const std::uint32_t n = r.order;
    left_span.assign(n, Bitset(n));
    right_span.assign(n, Bitset(n));
    ann_l.assign(n, Bitset(n));
    ann_r.assign(n, Bitset(n));
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t x = 0; x < n; ++x) {
            left_span[a].set(r.mul(x, a));
            right_span[a].set(r.mul(a, x));
            if (r.mul(x, a) == r.zero) ann_l[a].set(x);
            if (r.mul(a, x) == r.zero) ann_r[a].set(x);
        }
    }
}

namespace {

std::optional<MorphicWitness> witness_impl(const RingAnalysis& A, std::uint32_t a, Side side) {
    const auto& span = side == Side::Left ? A.left_span : A.right_span;
    const auto& ann = side == Side::Left ? A.ann_l : A.ann_r;
    // A witness b satisfies span(b) = ann(a), hence b = 1*b lies in ann(a);
    // scanning the generators of ann(a) is complete.
    std::optional<MorphicWitness> out;
    ann[a].for_each([&](std::size_t b) {
        if (out) return;
        if (span[b] == ann[a] && ann[b] == span[a]) {
            MorphicWitness w;
            w.element = a;
            w.partner = static_cast<std::uint32_t>(b);
            w.ann_of_element = ann[a];
            w.ann_of_partner = ann[b];
            w.side = side;
            // re-verify the defining equalities from the carried sets
            if (!(w.ann_of_element == span[b]) || !(w.ann_of_partner == span[a]))
                throw RingError("morphic witness failed re-verification");
            out = w;
        }
    });
    return out;
}

}  // namespace

std::optional<MorphicWitness> left_morphic_witness(const RingAnalysis& A, std::uint32_t a) {
    return witness_impl(A, a, Side::Left);
}

std::optional<MorphicWitness> right_morphic_witness(const RingAnalysis& A, std::uint32_t a) {
    return witness_impl(A, a, Side::Right);
}

std::optional<MorphicWitness> morphic_witness(const RingAnalysis& A, std::uint32_t a, Side side) {
    return witness_impl(A, a, side);
}

std::optional<QuasiMorphicWitness> quasi_morphic_witness(const RingAnalysis& A, std::uint32_t a,
                                                          Side side) {
    const auto& span = side == Side::Left ? A.left_span : A.right_span;
    const auto& ann = side == Side::Left ? A.ann_l : A.ann_r;
    const auto& opp_ann = side == Side::Left ? A.ann_r : A.ann_l;
    std::optional<std::uint32_t> b, c;
    ann[a].for_each([&](std::size_t x) {
        if (!b && span[x] == ann[a]) b = static_cast<std::uint32_t>(x);
    });
    // ann(c) ⊇ span(a) forces a*c = 0 (left case), so c ranges over the
    // opposite-side annihilator of a.
    opp_ann[a].for_each([&](std::size_t x) {
        if (!c && ann[x] == span[a]) c = static_cast<std::uint32_t>(x);
    });
    if (!b || !c) return std::nullopt;
    return QuasiMorphicWitness{a, *b, *c, side};
}

RegularityResult regularity(const FiniteRing& R, std::uint32_t a) {
    RegularityResult res;
    for (std::uint32_t x = 0; x < R.order; ++x) {
        if (R.mul(R.mul(a, x), a) == a) {
            res.kind = Regularity::Regular;
            res.inner_inverse = x;
            break;
        }
    }
    if (res.kind == Regularity::NotRegular) return res;
    for (std::uint32_t u = 0; u < R.order; ++u) {
        if (R.mul(R.mul(a, u), a) == a && inverse_of(R, u)) {
            res.kind = Regularity::UnitRegular;
            res.unit = u;
            break;
        }
    }
    return res;
}

RingReport ring_properties(const RingPtr& R, const ScanConfig& cfg) {
    const FiniteRing& r = *R;
    RingReport rep;
    rep.order = r.order;
    rep.is_commutative = is_commutative(r);

    RingSets sets = units_idempotents_radical(r);
    rep.units = sets.units.members();
    rep.idempotents = sets.idempotents.members();
    rep.central_idempotents = sets.central_idempotents.members();
    rep.jacobson_radical = sets.jacobson_radical.members();
    for (const auto& f : primitive_central_idempotent_decomposition(R))
        rep.primitive_central_idempotents.push_back(f.idempotent);

    if (r.order > cfg.full_scan_cap && !cfg.allow_sampling)
        throw CapExceededError("ring_properties: order exceeds full-scan cap");

    RingAnalysis A(R);
    std::vector<std::uint32_t> elems;
    if (r.order <= cfg.full_scan_cap) {
        elems.resize(r.order);
        for (std::uint32_t i = 0; i < r.order; ++i) elems[i] = i;
    } else {
        rep.sampled = true;
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::uint32_t> dist(0, r.order - 1);
        for (std::uint32_t i = 0; i < cfg.sample_count; ++i) elems.push_back(dist(rng));
    }

    rep.left_morphic = rep.right_morphic = true;
    rep.left_quasi_morphic = rep.right_quasi_morphic = true;
    rep.regular = rep.unit_regular = true;
    for (auto a : elems) {
        if (rep.left_morphic && !left_morphic_witness(A, a)) {
            rep.left_morphic = false;
            rep.counterexamples.emplace("left_morphic", a);
        }
        if (rep.right_morphic && !right_morphic_witness(A, a)) {
            rep.right_morphic = false;
            rep.counterexamples.emplace("right_morphic", a);
        }
        if (rep.left_quasi_morphic && !quasi_morphic_witness(A, a, Side::Left)) {
            rep.left_quasi_morphic = false;
            rep.counterexamples.emplace("left_quasi_morphic", a);
        }
        if (rep.right_quasi_morphic && !quasi_morphic_witness(A, a, Side::Right)) {
            rep.right_quasi_morphic = false;
            rep.counterexamples.emplace("right_quasi_morphic", a);
        }
        auto reg = regularity(r, a);
        if (rep.regular && reg.kind == Regularity::NotRegular) {
            rep.regular = false;
            rep.counterexamples.emplace("regular", a);
        }
        if (rep.unit_regular && reg.kind != Regularity::UnitRegular) {
            rep.unit_regular = false;
            rep.counterexamples.emplace("unit_regular", a);
        }
    }
    rep.morphic = rep.left_morphic && rep.right_morphic;
    rep.quasi_morphic = rep.left_quasi_morphic && rep.right_quasi_morphic;

    auto bl = is_bezout_ring(R, Side::Left);
    auto br = is_bezout_ring(R, Side::Right);
    rep.left_bezout = bl.bezout;
    rep.right_bezout = br.bezout;
    if (!bl.bezout) rep.counterexamples.emplace("left_bezout", bl.counter_m);
    if (!br.bezout) rep.counterexamples.emplace("right_bezout", br.counter_m);

    rep.semisimple = sets.jacobson_radical.count() == 1;  // J = {0}
    rep.simple = rep.semisimple && sets.central_idempotents.count() <= 2;
    // local: non-units closed under addition
    rep.local = true;
    for (std::uint32_t x = 0; x < r.order && rep.local; ++x) {
        if (sets.units.test(x)) continue;
        for (std::uint32_t y = 0; y < r.order && rep.local; ++y) {
            if (sets.units.test(y)) continue;
            if (sets.units.test(r.add(x, y))) rep.local = false;
        }
    }
    return rep;
}

AnnCharacterization check_annihilator_characterization(const TrivialExtensionRing& S,
                                                       std::uint32_t a, std::uint32_t m,
                                                       std::uint32_t n) {
    const FiniteRing& R = *S.base;
    const FiniteBimodule& M = *S.bimodule;
    const FiniteRing& E = *S.as_ring;
    AnnCharacterization out;

    auto ann_l_S = [&](std::uint32_t s) {
        Bitset b(E.order);
        for (std::uint32_t x = 0; x < E.order; ++x)
            if (E.mul(x, s) == E.zero) b.set(x);
        return b;
    };
    auto span_l_S = [&](std::uint32_t s) {
        Bitset b(E.order);
        for (std::uint32_t x = 0; x < E.order; ++x) b.set(E.mul(x, s));
        return b;
    };

    std::uint32_t zm = S.pair_index(R.zero, m);
    std::uint32_t an = S.pair_index(a, n);
    out.A1 = ann_l_S(zm) == span_l_S(an);
    out.B1 = ann_l_S(an) == span_l_S(zm);

    // base-level sets
    Bitset ann_R_m = left_annihilator_of_module_element(M, m).members;  // {x in R : x m = 0}
    Bitset Ra(R.order);
    for (std::uint32_t x = 0; x < R.order; ++x) Ra.set(R.mul(x, a));
    Bitset ann_R_a(R.order);  // {x in R : x a = 0}
    for (std::uint32_t x = 0; x < R.order; ++x)
        if (R.mul(x, a) == R.zero) ann_R_a.set(x);

    Bitset ann_a_n(M.order);  // ann_l^R(a) * n
    ann_R_a.for_each([&](std::size_t c) {
        ann_a_n.set(M.lact(static_cast<std::uint32_t>(c), n));
    });
    Bitset Ma(M.order);
    for (std::uint32_t x = 0; x < M.order; ++x) Ma.set(M.ract(x, a));
    Bitset all_M(M.order);
    for (std::uint32_t x = 0; x < M.order; ++x) all_M.set(x);

    out.A2 = (ann_R_m == Ra) && (sum_of_subsets(M, ann_a_n, Ma) == all_M);

    Bitset ann_M_a = left_annihilator_in_module(M, a).members;  // {x in M : x a = 0}
    Bitset Rm(M.order);
    for (std::uint32_t x = 0; x < R.order; ++x) Rm.set(M.lact(x, m));
    Bitset zero_M(M.order);
    zero_M.set(M.zero);
    Bitset zero_R(R.order);
    zero_R.set(R.zero);
    Bitset ann_R_n = left_annihilator_of_module_element(M, n).members;

    out.B2 = (ann_M_a == Rm) && ((ann_a_n & Ma) == zero_M) && ((ann_R_a & ann_R_n) == zero_R);
    return out;
}

RlTransferReport verify_rl_transfer(const RingAnalysis& A, std::uint32_t a) {
    RlTransferReport rep;
    rep.element = a;
    if (!left_morphic_witness(A, a) || !right_morphic_witness(A, a))
        throw RingError("verify_rl_transfer: element is not two-sided morphic");
    rep.ok = true;
    A.ann_l[a].for_each([&](std::size_t b) {
        if (A.left_span[b] == A.ann_l[a] && A.ann_l[b] == A.left_span[a]) {
            rep.left_witnesses.push_back(static_cast<std::uint32_t>(b));
            if (!(A.ann_r[b] == A.right_span[a]) || !(A.ann_r[a] == A.right_span[b]))
                rep.ok = false;
        }
    });
    return rep;
}

GenczReport verify_gencz(const RingPtr& R, const RingMorphism& sigma, const RingCaps& caps) {
    TrivialExtensionRing S = skew_poly_quotient(R, sigma, caps);
    RingAnalysis base(R);
    RingAnalysis ext(S.as_ring);
    GenczReport rep;
    for (std::uint32_t a = 0; a < R->order; ++a) {
        std::uint32_t a0 = S.pair_index(a, S.bimodule->zero);
        bool ext_left = left_morphic_witness(ext, a0).has_value();
        bool ext_right = right_morphic_witness(ext, a0).has_value();
        bool base_left = left_morphic_witness(base, a).has_value();
        bool base_right = right_morphic_witness(base, a).has_value();
        if (ext_left && ext_right && !(base_left && base_right)) {
            rep.ok = false;
            rep.violations.push_back(a);
            continue;
        }
        if (sigma.automorphism && ext_left && !base_left) {
            rep.ok = false;
            rep.violations.push_back(a);
        }
    }
    return rep;
}

CommutationReport verify_central_idempotent_commutation(const TrivialExtensionRing& S) {
    const FiniteRing& R = *S.base;
    const FiniteBimodule& M = *S.bimodule;
    CommutationReport rep;
    rep.left_morphic = ring_left_morphic(S.as_ring);
    rep.all_commute = true;
    RingSets sets = units_idempotents_radical(R);
    sets.central_idempotents.for_each([&](std::size_t e) {
        if (!rep.all_commute) return;
        for (std::uint32_t m = 0; m < M.order; ++m) {
            if (M.lact(static_cast<std::uint32_t>(e), m) != M.ract(m, static_cast<std::uint32_t>(e))) {
                rep.all_commute = false;
                rep.failing_idempotent = static_cast<std::uint32_t>(e);
                rep.failing_module_elem = m;
                return;
            }
        }
    });
    return rep;
}

bool ring_left_morphic(const RingPtr& R) {
    RingAnalysis A(R);
    for (std::uint32_t a = 0; a < R->order; ++a)
        if (!left_morphic_witness(A, a)) return false;
    return true;
}

bool ring_right_morphic(const RingPtr& R) {
    RingAnalysis A(R);
    for (std::uint32_t a = 0; a < R->order; ++a)
        if (!right_morphic_witness(A, a)) return false;
    return true;
}

bool ring_morphic(const RingPtr& R) {
    RingAnalysis A(R);
    for (std::uint32_t a = 0; a < R->order; ++a)
        if (!left_morphic_witness(A, a) || !right_morphic_witness(A, a)) return false;
    return true;
}

}  // namespace ringlab
