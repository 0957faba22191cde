#pragma once

#include <optional>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

// Per-element record: the annihilator {r : ra = 0} and, when one exists,
// an idempotent generating it.
struct AnnIdempotentEntry {
    std::uint32_t element = 0;
    std::vector<std::uint32_t> annihilator;
    std::optional<std::uint32_t> idempotent_generator;
};

struct WeakBaerReport {
    bool commutative = false;
    bool reduced = false;            // no nonzero nilpotents
    bool bezout = false;
    bool weak_baer = false;          // every ann(a) generated by an idempotent
    bool all_annihilators_principal = false;
    std::vector<AnnIdempotentEntry> entries;
};

// Requires a commutative ring; throws RingError otherwise.
WeakBaerReport weak_baer_bezout_witness(const RingPtr& R);

}  // namespace ringlab
