#include "ringlab/bimodule.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace ringlab {

namespace {

void finish_module(FiniteBimodule& M) {
    M.neg_table.assign(M.order, 0);
    for (std::uint32_t m = 0; m < M.order; ++m)
        for (std::uint32_t n = 0; n < M.order; ++n)
            if (M.add(m, n) == M.zero) {
                M.neg_table[m] = n;
                break;
            }
}

}  // namespace

FiniteBimodule regular_bimodule(const RingPtr& R) {
    FiniteBimodule M;
    M.ring = R;
    M.order = R->order;
    M.add_table = R->add_table;
    M.left_action = R->mul_table;
    M.right_action = R->mul_table;
    M.zero = R->zero;
    M.construction = "Reg(" + R->construction.text + ")";
    finish_module(M);
    return M;
}

FiniteBimodule twisted_bimodule(const RingPtr& R, const RingMorphism& sigma) {
    if (sigma.source.get() != R.get() || sigma.target.get() != R.get())
        throw RingError("twisted_bimodule: sigma is not an endomorphism of R");
    FiniteBimodule M;
    M.ring = R;
    M.order = R->order;
    M.add_table = R->add_table;
    M.left_action = R->mul_table;
    M.right_action.resize(static_cast<std::size_t>(R->order) * R->order);
    for (std::uint32_t m = 0; m < R->order; ++m)
        for (std::uint32_t r = 0; r < R->order; ++r)
            M.right_action[m * R->order + r] = R->mul(m, sigma(r));
    M.zero = R->zero;
    M.construction = "Twist(" + R->construction.text + ")";
    finish_module(M);
    return M;
}

FiniteBimodule zero_bimodule(const RingPtr& R) {
    FiniteBimodule M;
    M.ring = R;
    M.order = 1;
    M.add_table = {0};
    M.left_action.assign(R->order, 0);
    M.right_action.assign(R->order, 0);
    M.zero = 0;
    M.construction = "Zero(" + R->construction.text + ")";
    finish_module(M);
    return M;
}

FiniteBimodule quotient_bimodule(const ModPtr& Mp, const Bitset& sub) {
    const FiniteBimodule& M = *Mp;
    make_subset(M, sub, SubsetRole::SubBimodule, false);  // verifies closure
    const std::uint32_t n = M.order;
    std::vector<std::uint32_t> least(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t best = x;
        sub.for_each([&](std::size_t i) {
            best = std::min(best, M.add(x, static_cast<std::uint32_t>(i)));
        });
        least[x] = best;
    }
    std::vector<std::uint32_t> reps;
    reps.push_back(least[M.zero]);
    for (std::uint32_t x = 0; x < n; ++x)
        if (least[x] == x && x != least[M.zero]) reps.push_back(x);
    std::vector<std::uint32_t> idx(n, 0);
    for (std::uint32_t i = 0; i < reps.size(); ++i) idx[reps[i]] = i;
    auto proj = [&](std::uint32_t x) { return idx[least[x]]; };

    FiniteBimodule Q;
    Q.ring = M.ring;
    Q.order = static_cast<std::uint32_t>(reps.size());
    Q.add_table.resize(static_cast<std::size_t>(Q.order) * Q.order);
    for (std::uint32_t a = 0; a < Q.order; ++a)
        for (std::uint32_t b = 0; b < Q.order; ++b)
            Q.add_table[a * Q.order + b] = proj(M.add(reps[a], reps[b]));
    Q.left_action.resize(static_cast<std::size_t>(M.ring->order) * Q.order);
    Q.right_action.resize(static_cast<std::size_t>(Q.order) * M.ring->order);
    for (std::uint32_t r = 0; r < M.ring->order; ++r)
        for (std::uint32_t a = 0; a < Q.order; ++a) {
            Q.left_action[r * Q.order + a] = proj(M.lact(r, reps[a]));
            Q.right_action[a * M.ring->order + r] = proj(M.ract(reps[a], r));
        }
    Q.zero = 0;
    Q.construction = "Quot(" + M.construction + ")";
    finish_module(Q);
    validate_bimodule(Q);
    return Q;
}

FiniteBimodule corner_bimodule(const ModPtr& Mp, const CornerRing& corner) {
    const FiniteBimodule& M = *Mp;
    const FiniteRing& R = *M.ring;
    std::uint32_t e = corner.idempotent;
    // collect e*M*e with canonical indexing, zero first
    std::vector<std::uint32_t> image_of(M.order);
    Bitset members(M.order);
    for (std::uint32_t m = 0; m < M.order; ++m) {
        image_of[m] = M.lact(e, M.ract(m, e));
        members.set(image_of[m]);
    }
    std::vector<std::uint32_t> embed;
    embed.push_back(M.zero);
    members.for_each([&](std::size_t m) {
        if (m != M.zero) embed.push_back(static_cast<std::uint32_t>(m));
    });
    std::vector<std::uint32_t> idx(M.order, 0);
    for (std::uint32_t i = 0; i < embed.size(); ++i) idx[embed[i]] = i;

    FiniteBimodule C;
    C.ring = corner.ring;
    C.order = static_cast<std::uint32_t>(embed.size());
    C.add_table.resize(static_cast<std::size_t>(C.order) * C.order);
    for (std::uint32_t a = 0; a < C.order; ++a)
        for (std::uint32_t b = 0; b < C.order; ++b) {
            std::uint32_t s = M.add(embed[a], embed[b]);
            if (!members.test(s)) throw RingError("corner_bimodule: not closed under addition");
            C.add_table[a * C.order + b] = idx[s];
        }
    C.left_action.resize(static_cast<std::size_t>(C.ring->order) * C.order);
    C.right_action.resize(static_cast<std::size_t>(C.order) * C.ring->order);
    for (std::uint32_t r = 0; r < C.ring->order; ++r) {
        std::uint32_t ar = corner.embed[r];  // ambient ring element
        for (std::uint32_t a = 0; a < C.order; ++a) {
            std::uint32_t lm = M.lact(ar, embed[a]);
            std::uint32_t rm = M.ract(embed[a], ar);
            if (!members.test(lm) || !members.test(rm))
                throw RingError("corner_bimodule: not closed under corner actions");
            C.left_action[r * C.order + a] = idx[lm];
            C.right_action[a * C.ring->order + r] = idx[rm];
        }
    }
    C.zero = 0;
    C.construction = "Corner(" + M.construction + ", e=" + std::to_string(e) + ")";
    finish_module(C);
    validate_bimodule(C);
    (void)R;
    return C;
}

void validate_bimodule(const FiniteBimodule& M, const RingCaps& caps) {
    const FiniteRing& R = *M.ring;
    const std::uint32_t n = M.order, rn = R.order;
    if (M.zero != 0) throw RingError("validate_bimodule: zero is not index 0");
    for (std::uint32_t a = 0; a < n; ++a) {
        if (M.add(M.zero, a) != a) throw RingError("validate_bimodule: zero not neutral");
        if (M.add(a, M.neg(a)) != M.zero) throw RingError("validate_bimodule: missing negative");
        if (M.lact(R.one, a) != a || M.ract(a, R.one) != a)
            throw RingError("validate_bimodule: actions not unital");
        if (M.lact(R.zero, a) != M.zero || M.ract(a, R.zero) != M.zero)
            throw RingError("validate_bimodule: zero ring element acts nontrivially");
        for (std::uint32_t b = 0; b < n; ++b)
            if (M.add(a, b) != M.add(b, a))
                throw RingError("validate_bimodule: addition not commutative");
    }
    bool exhaustive = static_cast<std::uint64_t>(rn) * n <= 65536;
    auto check = [&](std::uint32_t r, std::uint32_t s, std::uint32_t m, std::uint32_t m2) {
        if (M.add(M.add(m, m2), M.neg(m2)) != m)
            throw RingError("validate_bimodule: addition not a group");
        if (M.lact(R.mul(r, s), m) != M.lact(r, M.lact(s, m)))
            throw RingError("validate_bimodule: left action not associative");
        if (M.ract(M.ract(m, r), s) != M.ract(m, R.mul(r, s)))
            throw RingError("validate_bimodule: right action not associative");
        if (M.ract(M.lact(r, m), s) != M.lact(r, M.ract(m, s)))
            throw RingError("validate_bimodule: actions do not commute");
        if (M.lact(R.add(r, s), m) != M.add(M.lact(r, m), M.lact(s, m)))
            throw RingError("validate_bimodule: left action not additive in the scalar");
        if (M.lact(r, M.add(m, m2)) != M.add(M.lact(r, m), M.lact(r, m2)))
            throw RingError("validate_bimodule: left action not additive in the module");
        if (M.ract(m, R.add(r, s)) != M.add(M.ract(m, r), M.ract(m, s)))
            throw RingError("validate_bimodule: right action not additive in the scalar");
        if (M.ract(M.add(m, m2), r) != M.add(M.ract(m, r), M.ract(m2, r)))
            throw RingError("validate_bimodule: right action not additive in the module");
    };
    if (exhaustive) {
        for (std::uint32_t r = 0; r < rn; ++r)
            for (std::uint32_t s = 0; s < rn; ++s)
                for (std::uint32_t m = 0; m < n; ++m)
                    for (std::uint32_t m2 = 0; m2 < n; ++m2) check(r, s, m, m2);
    } else {
        std::mt19937_64 rng(caps.seed);
        std::uniform_int_distribution<std::uint32_t> dr(0, rn - 1), dm(0, n - 1);
        for (std::uint64_t i = 0; i < caps.sample_count; ++i)
            check(dr(rng), dr(rng), dm(rng), dm(rng));
    }
}

SubsetHandle make_subset(const FiniteBimodule& M, Bitset members, SubsetRole role,
                         bool over_ring) {
    const FiniteRing& R = *M.ring;
    const std::uint32_t expected = over_ring ? R.order : M.order;
    if (members.universe() != expected) throw RingError("make_subset: universe mismatch");
    auto closed_add = [&]() {
        bool ok = true;
        members.for_each([&](std::size_t a) {
            members.for_each([&](std::size_t b) {
                std::uint32_t s = over_ring
                                      ? R.add(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))
                                      : M.add(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
                if (!members.test(s)) ok = false;
            });
        });
        return ok;
    };
    auto closed_mul = [&](bool left) {
        bool ok = true;
        members.for_each([&](std::size_t a) {
            for (std::uint32_t r = 0; r < R.order; ++r) {
                std::uint32_t v;
                if (over_ring)
                    v = left ? R.mul(r, static_cast<std::uint32_t>(a))
                             : R.mul(static_cast<std::uint32_t>(a), r);
                else
                    v = left ? M.lact(r, static_cast<std::uint32_t>(a))
                             : M.ract(static_cast<std::uint32_t>(a), r);
                if (!members.test(v)) ok = false;
            }
        });
        return ok;
    };
    bool ok = true;
    switch (role) {
        case SubsetRole::Plain: break;
        case SubsetRole::LeftIdeal:
        case SubsetRole::LeftSubmodule: ok = closed_add() && closed_mul(true); break;
        case SubsetRole::RightIdeal:
        case SubsetRole::RightSubmodule: ok = closed_add() && closed_mul(false); break;
        case SubsetRole::SubBimodule: ok = closed_add() && closed_mul(true) && closed_mul(false); break;
    }
    bool contains_zero = members.test(over_ring ? R.zero : M.zero);
    if (role != SubsetRole::Plain && (!ok || !contains_zero))
        throw RingError("make_subset: subset not closed for its claimed role");
    return SubsetHandle{role, over_ring, std::move(members)};
}

SubsetHandle left_annihilator_of_module_element(const FiniteBimodule& M, std::uint32_t m) {
    Bitset b(M.ring->order);
    for (std::uint32_t r = 0; r < M.ring->order; ++r)
        if (M.lact(r, m) == M.zero) b.set(r);
    return make_subset(M, std::move(b), SubsetRole::LeftIdeal, true);
}

SubsetHandle right_annihilator_of_module_element(const FiniteBimodule& M, std::uint32_t m) {
    Bitset b(M.ring->order);
    for (std::uint32_t r = 0; r < M.ring->order; ++r)
        if (M.ract(m, r) == M.zero) b.set(r);
    return make_subset(M, std::move(b), SubsetRole::RightIdeal, true);
}

SubsetHandle left_annihilator_in_module(const FiniteBimodule& M, std::uint32_t a) {
    Bitset b(M.order);
    for (std::uint32_t m = 0; m < M.order; ++m)
        if (M.ract(m, a) == M.zero) b.set(m);
    // { x : x*a = 0 } is closed under left multiplication
    return make_subset(M, std::move(b), SubsetRole::LeftSubmodule, false);
}

SubsetHandle right_annihilator_in_module(const FiniteBimodule& M, std::uint32_t a) {
    Bitset b(M.order);
    for (std::uint32_t m = 0; m < M.order; ++m)
        if (M.lact(a, m) == M.zero) b.set(m);
    return make_subset(M, std::move(b), SubsetRole::RightSubmodule, false);
}

AnnihilatorQuad annihilators_all(const FiniteBimodule& M, std::uint32_t ring_elem,
                                 std::uint32_t module_elem) {
    return AnnihilatorQuad{
        left_annihilator_of_module_element(M, module_elem),
        right_annihilator_of_module_element(M, module_elem),
        left_annihilator_in_module(M, ring_elem),
        right_annihilator_in_module(M, ring_elem),
    };
}

SubsetHandle cyclic_submodule(const FiniteBimodule& M, std::uint32_t m, Side side) {
    Bitset b(M.order);
    for (std::uint32_t r = 0; r < M.ring->order; ++r)
        b.set(side == Side::Left ? M.lact(r, m) : M.ract(m, r));
    return make_subset(M, std::move(b),
                       side == Side::Left ? SubsetRole::LeftSubmodule : SubsetRole::RightSubmodule,
                       false);
}

std::optional<std::uint32_t> principal_generator(const FiniteBimodule& M, const Bitset& S,
                                                 Side side) {
    std::optional<std::uint32_t> out;
    bool done = false;
    S.for_each([&](std::size_t g) {
        if (done) return;
        Bitset span(M.order);
        for (std::uint32_t r = 0; r < M.ring->order; ++r)
            span.set(side == Side::Left ? M.lact(r, static_cast<std::uint32_t>(g))
                                        : M.ract(static_cast<std::uint32_t>(g), r));
        if (span == S) {
            out = static_cast<std::uint32_t>(g);
            done = true;
        }
    });
    return out;
}

Bitset sum_of_subsets(const FiniteBimodule& M, const Bitset& A, const Bitset& B) {
    Bitset out(M.order);
    A.for_each([&](std::size_t a) {
        B.for_each([&](std::size_t b) {
            out.set(M.add(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
        });
    });
    return out;
}

BezoutResult is_bezout(const FiniteBimodule& M, Side side) {
    // precompute all cyclic spans
    std::vector<Bitset> span(M.order, Bitset(M.order));
    for (std::uint32_t m = 0; m < M.order; ++m) {
        Bitset b(M.order);
        for (std::uint32_t r = 0; r < M.ring->order; ++r)
            b.set(side == Side::Left ? M.lact(r, m) : M.ract(m, r));
        span[m] = std::move(b);
    }
    std::unordered_map<Bitset, bool, BitsetHash> memo;
    for (std::uint32_t m = 0; m < M.order; ++m) {
        for (std::uint32_t n = m; n < M.order; ++n) {
            if (span[n].is_subset_of(span[m]) || span[m].is_subset_of(span[n])) continue;
            Bitset sum = sum_of_subsets(M, span[m], span[n]);
            auto it = memo.find(sum);
            if (it != memo.end() && it->second) continue;
            bool principal = false;
            sum.for_each([&](std::size_t g) {
                if (principal) return;
                if (span[g] == sum) principal = true;
            });
            memo[sum] = principal;
            if (!principal) return BezoutResult{false, m, n};
        }
    }
    return BezoutResult{true, 0, 0};
}

BezoutResult is_bezout_ring(const RingPtr& R, Side side) {
    FiniteBimodule M = regular_bimodule(R);
    return is_bezout(M, side);
}

}  // namespace ringlab
