#include "ringlab/weak_baer.hpp"

#include "ringlab/bimodule.hpp"

namespace ringlab {

WeakBaerReport weak_baer_bezout_witness(const RingPtr& R) {
    if (!is_commutative(*R)) throw RingError("weak_baer_bezout_witness: ring is not commutative");

    WeakBaerReport rep;
    rep.commutative = true;

    // reduced: a^2 = 0 forces a = 0 (commutative, so this covers all nilpotents)
    rep.reduced = true;
    for (std::uint32_t a = 0; a < R->order; ++a)
        if (a != R->zero && R->mul(a, a) == R->zero) {
            rep.reduced = false;
            break;
        }

    rep.bezout = is_bezout_ring(R, Side::Left).bezout;

    auto sets = units_idempotents_radical(*R);
    auto Mreg = std::make_shared<const FiniteBimodule>(regular_bimodule(R));

    rep.weak_baer = true;
    rep.all_annihilators_principal = true;
    for (std::uint32_t a = 0; a < R->order; ++a) {
        AnnIdempotentEntry entry;
        entry.element = a;
        Bitset ann(R->order);
        for (std::uint32_t r = 0; r < R->order; ++r)
            if (R->mul(r, a) == R->zero) ann.set(r);
        entry.annihilator = ann.members();
        bool principal = false;
        for (std::uint32_t g : ann.members()) {
            if (cyclic_submodule(*Mreg, g, Side::Left).members == ann) {
                principal = true;
                if (sets.idempotents.test(g)) {
                    entry.idempotent_generator = g;
                    break;
                }
            }
        }
        if (!principal) rep.all_annihilators_principal = false;
        if (!entry.idempotent_generator) rep.weak_baer = false;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace ringlab
