#include "ringlab/trivial_extension.hpp"

namespace ringlab {

TrivialExtensionRing build_trivial_extension(const RingPtr& R, const ModPtr& M,
                                             const RingCaps& caps) {
    if (M->ring.get() != R.get())
        throw RingError("build_trivial_extension: bimodule is not over the given ring");
    std::uint64_t order = static_cast<std::uint64_t>(R->order) * M->order;
    if (order > caps.order_cap)
        throw CapExceededError("build_trivial_extension: order exceeds cap");

    const std::uint32_t nm = M->order, n = static_cast<std::uint32_t>(order);
    FiniteRing S;
    S.order = n;
    S.add_table.resize(static_cast<std::size_t>(n) * n);
    S.mul_table.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t s1 = 0; s1 < n; ++s1) {
        std::uint32_t r1 = s1 / nm, m1 = s1 % nm;
        for (std::uint32_t s2 = 0; s2 < n; ++s2) {
            std::uint32_t r2 = s2 / nm, m2 = s2 % nm;
            S.add_table[s1 * n + s2] = R->add(r1, r2) * nm + M->add(m1, m2);
            // (r1,m1)(r2,m2) = (r1 r2, r1 m2 + m1 r2)
            S.mul_table[s1 * n + s2] =
                R->mul(r1, r2) * nm + M->add(M->lact(r1, m2), M->ract(m1, r2));
        }
    }
    S.zero = 0;
    S.one = R->one * nm + M->zero;
    S.construction.kind = Construction::Kind::TrivExt;
    S.construction.left_order = R->order;
    S.construction.right_order = nm;
    S.construction.text = "TrivExt(" + R->construction.text + ", " + M->construction + ")";
    S.neg_table.assign(n, 0);
    for (std::uint32_t s = 0; s < n; ++s)
        S.neg_table[s] = R->neg(s / nm) * nm + M->neg(s % nm);
    validate_ring(S, caps);

    TrivialExtensionRing out;
    out.base = R;
    out.bimodule = M;
    out.as_ring = std::make_shared<const FiniteRing>(std::move(S));
    return out;
}

TrivialExtensionRing skew_poly_quotient(const RingPtr& R, const RingMorphism& sigma,
                                        const RingCaps& caps) {
    auto M = std::make_shared<const FiniteBimodule>(twisted_bimodule(R, sigma));
    return build_trivial_extension(R, M, caps);
}

Bitset corner_set(const TrivialExtensionRing& S, std::uint32_t e, std::uint32_t e_prime) {
    const FiniteRing& R = *S.base;
    const FiniteBimodule& M = *S.bimodule;
    const FiniteRing& A = *S.as_ring;
    if (R.mul(e, e) != e || R.mul(e_prime, e_prime) != e_prime)
        throw RingError("corner_set: inputs must be idempotent");
    std::uint32_t el = S.pair_index(e, M.zero);
    std::uint32_t er = S.pair_index(e_prime, M.zero);
    Bitset scanned(A.order);
    for (std::uint32_t s = 0; s < A.order; ++s) scanned.set(A.mul(A.mul(el, s), er));
    // independent description: eRe' x eMe'
    Bitset expected(A.order);
    for (std::uint32_t r = 0; r < R.order; ++r) {
        std::uint32_t a = R.mul(R.mul(e, r), e_prime);
        for (std::uint32_t m = 0; m < M.order; ++m) {
            std::uint32_t x = M.lact(e, M.ract(m, e_prime));
            expected.set(S.pair_index(a, x));
        }
    }
    if (scanned != expected)
        throw RingError("corner_set: scan disagrees with eRe' x eMe' description");
    return scanned;
}

}  // namespace ringlab
