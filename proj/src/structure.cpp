#include "ringlab/structure.hpp"

#include <algorithm>
#include <unordered_map>

namespace ringlab {

LatticeMap build_lattice_map(const TrivialExtensionRing& S) {
    const FiniteRing& R = *S.base;
    const FiniteBimodule& M = *S.bimodule;
    if (!ring_morphic(S.as_ring))
        throw RingError("build_lattice_map: extension is not two-sided morphic");

    // group module elements by their cyclic right submodule
    std::unordered_map<Bitset, std::vector<std::uint32_t>, BitsetHash> by_submodule;
    for (std::uint32_t m = 0; m < M.order; ++m) {
        Bitset span(M.order);
        for (std::uint32_t r = 0; r < R.order; ++r) span.set(M.ract(m, r));
        by_submodule[span].push_back(m);
    }

    FiniteBimodule reg = regular_bimodule(S.base);
    LatticeMap out;
    for (auto& [sub, gens] : by_submodule) {
        LatticeMapEntry e;
        e.submodule = sub;
        e.generator = *std::min_element(gens.begin(), gens.end());
        // F(mR) = ann_l^R(m); well-definedness over every generator m' with m'R = mR.
        // Only elements m' generating the full submodule qualify as generators.
        bool first = true;
        for (auto m : gens) {
            Bitset span(M.order);
            for (std::uint32_t r = 0; r < R.order; ++r) span.set(M.ract(m, r));
            if (!(span == sub)) continue;
            Bitset ann = left_annihilator_of_module_element(M, m).members;
            if (first) {
                e.image = ann;
                first = false;
            } else if (!(e.image == ann)) {
                throw RingError("build_lattice_map: F not well-defined");
            }
        }
        auto gen = principal_generator(reg, e.image, Side::Left);
        if (!gen)
            throw RingError("build_lattice_map: image not principal");
        e.image_generator = *gen;
        // sub-bimodule test: closed under the left action as well
        e.sub_bimodule = true;
        sub.for_each([&](std::size_t m) {
            for (std::uint32_t r = 0; r < R.order && e.sub_bimodule; ++r)
                if (!sub.test(M.lact(r, static_cast<std::uint32_t>(m)))) e.sub_bimodule = false;
        });
        if (e.sub_bimodule) {
            e.image_two_sided = true;
            e.image.for_each([&](std::size_t x) {
                for (std::uint32_t r = 0; r < R.order && e.image_two_sided; ++r) {
                    if (!e.image.test(R.mul(static_cast<std::uint32_t>(x), r)) ||
                        !e.image.test(R.mul(r, static_cast<std::uint32_t>(x))))
                        e.image_two_sided = false;
                }
            });
            if (!e.image_two_sided)
                throw RingError(
                    "build_lattice_map: image of sub-bimodule not an ideal");
        }
        out.entries.push_back(std::move(e));
    }

    out.injective = true;
    out.inclusion_reversing = true;
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
        for (std::size_t j = 0; j < out.entries.size(); ++j) {
            if (i == j) continue;
            if (out.entries[i].image == out.entries[j].image) out.injective = false;
            if (out.entries[i].submodule.is_subset_of(out.entries[j].submodule) &&
                !out.entries[j].image.is_subset_of(out.entries[i].image))
                out.inclusion_reversing = false;
        }
    }
    return out;
}

SigmaConstruction construct_sigma(const ModPtr& Mp, std::uint32_t x) {
    const FiniteBimodule& M = *Mp;
    const FiniteRing& R = *M.ring;

    Bitset Rx(M.order);
    for (std::uint32_t r = 0; r < R.order; ++r) Rx.set(M.lact(r, x));
    if (Rx.count() != M.order)
        throw RingError("construct_sigma: module is not left-cyclic at the given generator");

    Bitset ann(R.order);
    for (std::uint32_t r = 0; r < R.order; ++r)
        if (M.lact(r, x) == M.zero) ann.set(r);
    QuotientRing Q = quotient_ring(M.ring, ann);  // verifies ann is a two-sided ideal

    SigmaConstruction out;
    out.generator = x;
    // phi(r) = class of the least s with x r = s x; must exist for every r
    std::vector<std::uint32_t> phi(R.order);
    for (std::uint32_t r = 0; r < R.order; ++r) {
        std::optional<std::uint32_t> s;
        std::uint32_t xr = M.ract(x, r);
        for (std::uint32_t cand = 0; cand < R.order && !s; ++cand)
            if (M.lact(cand, x) == xr) s = cand;
        if (!s)
            throw RingError("construct_sigma: x r outside Rx for r=" + std::to_string(r) +
                            " (xR not contained in Rx)");
        phi[r] = Q.proj[*s];
    }
    // well-definedness of sigma on the quotient
    for (std::uint32_t r = 0; r < R.order; ++r)
        for (std::uint32_t r2 = 0; r2 < R.order; ++r2)
            if (Q.proj[r] == Q.proj[r2] && phi[r] != phi[r2])
                throw RingError("construct_sigma: sigma not well-defined on the quotient");

    std::vector<std::uint32_t> sigma_img(Q.ring->order);
    for (std::uint32_t s = 0; s < Q.ring->order; ++s) sigma_img[s] = phi[Q.rep[s]];
    out.sigma = check_morphism(Q.ring, Q.ring, sigma_img);
    out.sigma_automorphism = out.sigma.automorphism;

    // psi(s-bar) = rep(s) x; verify additive bijection and two-sided linearity
    out.psi.resize(Q.ring->order);
    Bitset seen(M.order);
    for (std::uint32_t s = 0; s < Q.ring->order; ++s) {
        out.psi[s] = M.lact(Q.rep[s], x);
        if (seen.test(out.psi[s])) throw RingError("construct_sigma: psi not injective");
        seen.set(out.psi[s]);
    }
    if (Q.ring->order != M.order) throw RingError("construct_sigma: psi not surjective");
    const FiniteRing& Rb = *Q.ring;
    for (std::uint32_t s = 0; s < Rb.order; ++s) {
        for (std::uint32_t t = 0; t < Rb.order; ++t)
            if (out.psi[Rb.add(s, t)] != M.add(out.psi[s], out.psi[t]))
                throw RingError("construct_sigma: psi not additive");
        for (std::uint32_t a = 0; a < R.order; ++a) {
            // left: psi(a-bar * s) = a * psi(s)
            if (out.psi[Rb.mul(Q.proj[a], s)] != M.lact(a, out.psi[s]))
                throw RingError("construct_sigma: psi not left-linear");
            // right: psi(s * sigma(a-bar)) = psi(s) * a
            if (out.psi[Rb.mul(s, out.sigma(Q.proj[a]))] != M.ract(out.psi[s], a))
                throw RingError("construct_sigma: psi not right-linear");
        }
    }

    Bitset xR(M.order);
    for (std::uint32_t r = 0; r < R.order; ++r) xR.set(M.ract(x, r));
    out.right_cyclic_match = xR == Rx;
    out.quotient = std::move(Q);
    return out;
}

ClassificationVerdict classify_perfect_case(const RingPtr& R, const ModPtr& M) {
    ClassificationVerdict out;
    const FiniteRing& r = *R;
    const FiniteBimodule& m = *M;

    // Step 1: central idempotents must commute with the module.
    RingSets sets = units_idempotents_radical(r);
    bool obstruction = false;
    sets.central_idempotents.for_each([&](std::size_t e) {
        if (obstruction) return;
        for (std::uint32_t x = 0; x < m.order; ++x) {
            if (m.lact(static_cast<std::uint32_t>(e), x) != m.ract(x, static_cast<std::uint32_t>(e))) {
                obstruction = true;
                out.failing_idempotent = static_cast<std::uint32_t>(e);
                out.failing_module_elem = x;
                return;
            }
        }
    });
    if (obstruction) {
        out.commutation_obstruction = true;
        out.predicted_morphic = false;
        return out;
    }

    // Step 2: split along primitive central idempotents.
    auto factors = primitive_central_idempotent_decomposition(R);
    out.predicted_morphic = true;
    for (const auto& f : factors) {
        FactorVerdict v;
        v.idempotent = f.idempotent;
        auto corner_R = f.corner;
        auto Mi = std::make_shared<const FiniteBimodule>(corner_bimodule(M, corner_R));
        v.ring_order = corner_R.ring->order;
        v.module_order = Mi->order;

        RingSets fsets = units_idempotents_radical(*corner_R.ring);
        v.simple_artinian =
            fsets.jacobson_radical.count() == 1 && fsets.central_idempotents.count() <= 2;

        if (v.simple_artinian) {
            if (Mi->order == 1) {
                v.verdict = true;
                v.reason = "simple artinian with M = 0";
            } else {
                v.verdict = false;
                for (std::uint32_t x = 0; x < Mi->order && !v.verdict; ++x) {
                    Bitset span(Mi->order);
                    bool faithful = true;
                    for (std::uint32_t rr = 0; rr < Mi->ring->order; ++rr) {
                        std::uint32_t y = Mi->lact(rr, x);
                        span.set(y);
                        if (y == Mi->zero && rr != Mi->ring->zero) faithful = false;
                    }
                    if (!faithful || span.count() != Mi->order) continue;
                    try {
                        auto sc = construct_sigma(Mi, x);
                        if (sc.sigma_automorphism) v.verdict = true;
                    } catch (const RingError&) {
                        // this generator does not realize a twist; keep searching
                    }
                }
                v.reason = v.verdict ? "simple artinian with M isomorphic to R(sigma)"
                                     : "simple artinian but M not a twisted copy of R";
            }
        } else {
            if (Mi->order != 1) {
                v.verdict = false;
                v.reason = "non-simple factor with nonzero module part";
            } else {
                bool bez = is_bezout_ring(corner_R.ring, Side::Left).bezout &&
                           is_bezout_ring(corner_R.ring, Side::Right).bezout;
                v.verdict = bez;
                v.reason = bez ? "non-simple factor, M = 0, artinian principal"
                               : "factor ring is not Bezout on both sides";
            }
        }
        out.predicted_morphic = out.predicted_morphic && v.verdict;
        out.factors.push_back(std::move(v));
    }
    return out;
}

ReconcileReport reconcile(const RingPtr& R, const ModPtr& M, const RingCaps& caps) {
    ReconcileReport rep;
    rep.verdict = classify_perfect_case(R, M);
    rep.predicted = rep.verdict.predicted_morphic;
    TrivialExtensionRing S = build_trivial_extension(R, M, caps);
    rep.brute_force = ring_morphic(S.as_ring);
    rep.match = rep.predicted == rep.brute_force;
    return rep;
}

CyclicFiniteLengthReport verify_cyclic_finite_length(const TrivialExtensionRing& S) {
    const FiniteRing& R = *S.base;
    const FiniteBimodule& M = *S.bimodule;
    RingAnalysis ext(S.as_ring);
    for (std::uint32_t a = 0; a < S.as_ring->order; ++a)
        if (!quasi_morphic_witness(ext, a, Side::Left) ||
            !quasi_morphic_witness(ext, a, Side::Right))
            throw RingError("verify_cyclic_finite_length: extension not two-sided quasi-morphic");

    CyclicFiniteLengthReport rep;
    std::optional<std::uint32_t> lx, ry;
    for (std::uint32_t x = 0; x < M.order && !lx; ++x) {
        Bitset span(M.order);
        for (std::uint32_t r = 0; r < R.order; ++r) span.set(M.lact(r, x));
        if (span.count() == M.order) lx = x;
    }
    for (std::uint32_t y = 0; y < M.order && !ry; ++y) {
        Bitset span(M.order);
        for (std::uint32_t r = 0; r < R.order; ++r) span.set(M.ract(y, r));
        if (span.count() == M.order) ry = y;
    }
    if (!lx || !ry) return rep;
    rep.left_generator = *lx;
    rep.right_generator = *ry;
    rep.base_bezout_both = is_bezout_ring(S.base, Side::Left).bezout &&
                           is_bezout_ring(S.base, Side::Right).bezout;
    rep.sigma_ok = false;
    for (std::uint32_t x = 0; x < M.order && !rep.sigma_ok; ++x) {
        Bitset span(M.order);
        for (std::uint32_t r = 0; r < R.order; ++r) span.set(M.lact(r, x));
        if (span.count() != M.order) continue;
        try {
            auto sc = construct_sigma(S.bimodule, x);
            if (sc.sigma_automorphism) rep.sigma_ok = true;
        } catch (const RingError&) {
        }
    }
    rep.ok = rep.base_bezout_both && rep.sigma_ok;
    return rep;
}

}  // namespace ringlab
