#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/bitset.hpp"

namespace ringlab {

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapExceededError : public RingError {
public:
    using RingError::RingError;
};

// How a ring was built. Downstream code uses this to construct canonical
// endomorphisms (frobenius needs the characteristic, swap needs the factor
// split) and to render specs back to text.
struct Construction {
    enum class Kind { Cyclic, Galois, MatrixRing, Product, Quotient, TrivExt, Table, Corner };
    Kind kind = Kind::Table;
    std::uint64_t n = 0;             // Cyclic modulus
    int p = 0;                       // Galois characteristic
    std::vector<int> modulus;        // Galois modulus coefficients, low degree first
    int k = 0;                       // MatrixRing size
    std::uint32_t left_order = 0;    // Product factor orders
    std::uint32_t right_order = 0;
    std::string text;                // rendered descriptor
};

// A finite associative unital ring given by dense operation tables over
// element indices 0..order-1. Zero is always index 0. Immutable after
// construction.
struct FiniteRing {
    std::uint32_t order = 0;
    std::vector<std::uint32_t> add_table;  // order x order, row-major
    std::vector<std::uint32_t> mul_table;
    std::uint32_t zero = 0;
    std::uint32_t one = 0;
    std::vector<std::uint32_t> neg_table;  // additive inverses
    Construction construction;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_table[a * order + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_table[a * order + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_table[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
};

using RingPtr = std::shared_ptr<const FiniteRing>;

struct RingCaps {
    std::uint64_t order_cap = 65536;       // maximal constructible order
    std::uint32_t exhaustive_cap = 256;    // full triple-loop axiom checks up to this order
    std::uint64_t sample_count = 100000;   // sampled triples above the cap
    std::uint64_t seed = 0;
};

// Validated ring homomorphism given by its image array.
struct RingMorphism {
    RingPtr source;
    RingPtr target;
    std::vector<std::uint32_t> image;
    bool automorphism = false;

    std::uint32_t operator()(std::uint32_t a) const { return image[a]; }
};

// Ring together with the projection/representative maps of a quotient or
// re-indexed construction.
struct QuotientRing {
    RingPtr ring;
    std::vector<std::uint32_t> proj;  // base index -> quotient index
    std::vector<std::uint32_t> rep;   // quotient index -> representative base index
};

// Corner ring eRe with its embedding back into the ambient ring.
struct CornerRing {
    RingPtr ring;
    std::uint32_t idempotent = 0;
    std::vector<std::uint32_t> embed;             // corner index -> ambient index
    std::vector<std::uint32_t> project;           // ambient index -> corner index of e*x*e
};

// --- constructors -----------------------------------------------------------

FiniteRing build_cyclic(std::uint64_t n, const RingCaps& caps = {});
FiniteRing build_galois(int p, const std::vector<int>& modulus, const RingCaps& caps = {});
FiniteRing build_matrix_ring(int k, const FiniteRing& base, const RingCaps& caps = {});
FiniteRing build_product(const FiniteRing& left, const FiniteRing& right, const RingCaps& caps = {});
FiniteRing ring_from_tables(std::uint32_t order, std::vector<std::uint32_t> add,
                            std::vector<std::uint32_t> mul, const RingCaps& caps = {});

// Quotient by a two-sided ideal (verified). Elements re-indexed with the
// zero coset at 0 and the coset of one at 1.
QuotientRing quotient_ring(const RingPtr& base, const Bitset& ideal);

// eRe for an idempotent e, re-indexed with zero at 0 and e (the corner one) at 1.
CornerRing corner_ring(const RingPtr& base, std::uint32_t e);

// Full axiom verification; throws RingError with a description on failure.
void validate_ring(const FiniteRing& R, const RingCaps& caps = {});

// --- morphisms --------------------------------------------------------------

RingMorphism check_morphism(const RingPtr& source, const RingPtr& target,
                            const std::vector<std::uint32_t>& image);

RingMorphism identity_endomorphism(const RingPtr& R);
// a -> a^p on a Galois-constructed ring.
RingMorphism frobenius_endomorphism(const RingPtr& R);
// (a,b) -> (b,a) on a product of two equal factors.
RingMorphism swap_endomorphism(const RingPtr& R);
// r -> u r u^-1 for a unit u.
RingMorphism conjugation_endomorphism(const RingPtr& R, std::uint32_t u);

// --- element scans ----------------------------------------------------------

struct RingSets {
    Bitset units;
    Bitset idempotents;
    Bitset central_idempotents;
    Bitset jacobson_radical;
};

// Units by two-sided-inverse scan, idempotents, central idempotents, and
// J(R) via the quasi-regular criterion { x : 1 - r*x is a unit for all r }.
RingSets units_idempotents_radical(const FiniteRing& R);

std::optional<std::uint32_t> inverse_of(const FiniteRing& R, std::uint32_t u);

struct CentralFactor {
    std::uint32_t idempotent;
    CornerRing corner;
};

// Pairwise-orthogonal primitive central idempotents summing to one, with the
// corner rings they cut out.
std::vector<CentralFactor> primitive_central_idempotent_decomposition(const RingPtr& R);

bool is_commutative(const FiniteRing& R);

}  // namespace ringlab
