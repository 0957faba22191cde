#include "ringlab/finite_ring.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace ringlab {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void check_cap(std::uint64_t order, const RingCaps& caps, const std::string& what) {
    if (order == 0 || order > caps.order_cap)
        throw CapExceededError(what + ": order " + std::to_string(order) + " exceeds cap " +
                               std::to_string(caps.order_cap));
}

void finish_ring(FiniteRing& R) {
    R.neg_table.assign(R.order, 0);
    for (std::uint32_t a = 0; a < R.order; ++a) {
        for (std::uint32_t b = 0; b < R.order; ++b) {
            if (R.add(a, b) == R.zero) {
                R.neg_table[a] = b;
                break;
            }
        }
    }
}

// Polynomials over F_p, coefficients low-degree first, trimmed.
using Fp = std::vector<int>;

Fp fp_trim(Fp a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Fp fp_mul(const Fp& a, const Fp& b, int p) {
    if (a.empty() || b.empty()) return {};
    Fp c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return fp_trim(c);
}

// Remainder of a modulo monic b.
Fp fp_rem(Fp a, const Fp& b, int p) {
    a = fp_trim(a);
    while (a.size() >= b.size()) {
        int lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] = ((a[i + shift] - lead * b[i]) % p + p) % p;
        }
        a = fp_trim(a);
    }
    return a;
}

bool fp_divides(const Fp& d, const Fp& a, int p) { return fp_rem(a, d, p).empty(); }

}  // namespace

FiniteRing build_cyclic(std::uint64_t n, const RingCaps& caps) {
    check_cap(n, caps, "build_cyclic");
    FiniteRing R;
    R.order = static_cast<std::uint32_t>(n);
    R.add_table.resize(n * n);
    R.mul_table.resize(n * n);
    for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) {
            R.add_table[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
            R.mul_table[a * n + b] = static_cast<std::uint32_t>((a * b) % n);
        }
    }
    R.zero = 0;
    R.one = n == 1 ? 0 : 1;
    R.construction.kind = Construction::Kind::Cyclic;
    R.construction.n = n;
    R.construction.text = "Z(" + std::to_string(n) + ")";
    finish_ring(R);
    return R;
}

FiniteRing build_galois(int p, const std::vector<int>& modulus_in, const RingCaps& caps) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw RingError("build_galois: " + std::to_string(p) + " is not prime");
    Fp m = fp_trim(modulus_in);
    for (auto& c : m) c = ((c % p) + p) % p;
    m = fp_trim(m);
    if (m.size() < 2) throw RingError("build_galois: modulus must have degree >= 1");
    // normalize monic
    if (m.back() != 1) {
        // multiply by the inverse of the leading coefficient
        int lead = m.back(), inv = 0;
        for (int i = 1; i < p; ++i)
            if ((lead * i) % p == 1) inv = i;
        for (auto& c : m) c = (c * inv) % p;
    }
    int deg = static_cast<int>(m.size()) - 1;
    if (deg >= 2) {
        // irreducibility: no root, and for degree >= 4 no factor of degree <= deg/2
        for (int r = 0; r < p; ++r) {
            int v = 0;
            for (int i = deg; i >= 0; --i) v = (v * r + m[static_cast<std::size_t>(i)]) % p;
            if (v == 0)
                throw RingError("build_galois: modulus has root " + std::to_string(r) +
                                " over F_" + std::to_string(p));
        }
        for (int d = 2; d <= deg / 2; ++d) {
            // enumerate monic candidates of degree d
            std::uint64_t total = 1;
            for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(p);
            for (std::uint64_t code = 0; code < total; ++code) {
                Fp cand(static_cast<std::size_t>(d) + 1, 0);
                std::uint64_t c = code;
                for (int i = 0; i < d; ++i) {
                    cand[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
                    c /= static_cast<std::uint64_t>(p);
                }
                cand[static_cast<std::size_t>(d)] = 1;
                if (fp_divides(cand, m, p))
                    throw RingError("build_galois: modulus reducible (degree " +
                                    std::to_string(d) + " factor)");
            }
        }
    }

    std::uint64_t order = 1;
    for (int i = 0; i < deg; ++i) order *= static_cast<std::uint64_t>(p);
    check_cap(order, caps, "build_galois");

    auto decode = [&](std::uint32_t idx) {
        Fp a(static_cast<std::size_t>(deg), 0);
        for (int i = 0; i < deg; ++i) {
            a[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::uint32_t>(p));
            idx /= static_cast<std::uint32_t>(p);
        }
        return fp_trim(a);
    };
    auto encode = [&](const Fp& a) {
        std::uint32_t idx = 0;
        for (std::size_t i = a.size(); i-- > 0;)
            idx = idx * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(a[i]);
        return idx;
    };

    FiniteRing R;
    R.order = static_cast<std::uint32_t>(order);
    R.add_table.resize(order * order);
    R.mul_table.resize(order * order);
    for (std::uint32_t a = 0; a < R.order; ++a) {
        Fp pa = decode(a);
        for (std::uint32_t b = 0; b < R.order; ++b) {
            Fp pb = decode(b);
            Fp sum(std::max(pa.size(), pb.size()), 0);
            for (std::size_t i = 0; i < sum.size(); ++i) {
                int v = 0;
                if (i < pa.size()) v += pa[i];
                if (i < pb.size()) v += pb[i];
                sum[i] = v % p;
            }
            R.add_table[a * R.order + b] = encode(fp_trim(sum));
            R.mul_table[a * R.order + b] = encode(fp_rem(fp_mul(pa, pb, p), m, p));
        }
    }
    R.zero = 0;
    R.one = 1;
    R.construction.kind = Construction::Kind::Galois;
    R.construction.p = p;
    R.construction.modulus = m;
    {
        std::string s;
        for (int i = deg; i >= 0; --i) {
            int c = m[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0)
                s += std::to_string(c);
            else {
                if (c != 1) s += std::to_string(c) + "*";
                s += i == 1 ? "x" : "x^" + std::to_string(i);
            }
        }
        R.construction.text = "GF(" + std::to_string(p) + ", " + s + ")";
    }
    finish_ring(R);
    return R;
}

FiniteRing build_matrix_ring(int k, const FiniteRing& base, const RingCaps& caps) {
    if (k < 1) throw RingError("build_matrix_ring: k must be positive");
    std::uint64_t order = 1;
    std::uint64_t cells = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k);
    for (std::uint64_t i = 0; i < cells; ++i) {
        order *= base.order;
        if (order > caps.order_cap)
            throw CapExceededError("build_matrix_ring: order exceeds cap");
    }
    auto decode = [&](std::uint32_t idx, std::vector<std::uint32_t>& m) {
        for (std::uint64_t i = 0; i < cells; ++i) {
            m[cells - 1 - i] = idx % base.order;
            idx /= base.order;
        }
    };
    auto encode = [&](const std::vector<std::uint32_t>& m) {
        std::uint32_t idx = 0;
        for (std::uint64_t i = 0; i < cells; ++i) idx = idx * base.order + m[i];
        return idx;
    };

    FiniteRing R;
    R.order = static_cast<std::uint32_t>(order);
    R.add_table.resize(order * order);
    R.mul_table.resize(order * order);
    std::vector<std::uint32_t> ma(cells), mb(cells), mc(cells);
    for (std::uint32_t a = 0; a < R.order; ++a) {
        decode(a, ma);
        for (std::uint32_t b = 0; b < R.order; ++b) {
            decode(b, mb);
            for (std::uint64_t i = 0; i < cells; ++i) mc[i] = base.add(ma[i], mb[i]);
            R.add_table[a * R.order + b] = encode(mc);
            int kk = k;
            for (int i = 0; i < kk; ++i) {
                for (int j = 0; j < kk; ++j) {
                    std::uint32_t s = base.zero;
                    for (int t = 0; t < kk; ++t)
                        s = base.add(s, base.mul(ma[static_cast<std::size_t>(i * kk + t)],
                                                 mb[static_cast<std::size_t>(t * kk + j)]));
                    mc[static_cast<std::size_t>(i * kk + j)] = s;
                }
            }
            R.mul_table[a * R.order + b] = encode(mc);
        }
    }
    // identity matrix index
    std::vector<std::uint32_t> id(cells, base.zero);
    for (int i = 0; i < k; ++i) id[static_cast<std::size_t>(i * k + i)] = base.one;
    R.zero = 0;
    R.one = encode(id);
    R.construction.kind = Construction::Kind::MatrixRing;
    R.construction.k = k;
    R.construction.text = "Mat(" + std::to_string(k) + ", " + base.construction.text + ")";
    finish_ring(R);
    return R;
}

FiniteRing build_product(const FiniteRing& left, const FiniteRing& right, const RingCaps& caps) {
    std::uint64_t order = static_cast<std::uint64_t>(left.order) * right.order;
    check_cap(order, caps, "build_product");
    FiniteRing R;
    R.order = static_cast<std::uint32_t>(order);
    R.add_table.resize(order * order);
    R.mul_table.resize(order * order);
    for (std::uint32_t a = 0; a < R.order; ++a) {
        std::uint32_t al = a / right.order, ar = a % right.order;
        for (std::uint32_t b = 0; b < R.order; ++b) {
            std::uint32_t bl = b / right.order, br = b % right.order;
            R.add_table[a * R.order + b] = left.add(al, bl) * right.order + right.add(ar, br);
            R.mul_table[a * R.order + b] = left.mul(al, bl) * right.order + right.mul(ar, br);
        }
    }
    R.zero = 0;
    R.one = left.one * right.order + right.one;
    R.construction.kind = Construction::Kind::Product;
    R.construction.left_order = left.order;
    R.construction.right_order = right.order;
    R.construction.text =
        "Prod(" + left.construction.text + ", " + right.construction.text + ")";
    finish_ring(R);
    return R;
}

FiniteRing ring_from_tables(std::uint32_t order, std::vector<std::uint32_t> add,
                            std::vector<std::uint32_t> mul, const RingCaps& caps) {
    check_cap(order, caps, "ring_from_tables");
    if (add.size() != static_cast<std::size_t>(order) * order ||
        mul.size() != static_cast<std::size_t>(order) * order)
        throw RingError("ring_from_tables: table size mismatch");
    FiniteRing R;
    R.order = order;
    R.add_table = std::move(add);
    R.mul_table = std::move(mul);
    // locate zero and one
    bool found_zero = false, found_one = false;
    for (std::uint32_t z = 0; z < order && !found_zero; ++z) {
        bool ok = true;
        for (std::uint32_t a = 0; a < order; ++a)
            if (R.add(z, a) != a || R.add(a, z) != a) {
                ok = false;
                break;
            }
        if (ok) {
            R.zero = z;
            found_zero = true;
        }
    }
    if (!found_zero || R.zero != 0)
        throw RingError("ring_from_tables: zero must exist and have index 0");
    for (std::uint32_t e = 0; e < order && !found_one; ++e) {
        bool ok = true;
        for (std::uint32_t a = 0; a < order; ++a)
            if (R.mul(e, a) != a || R.mul(a, e) != a) {
                ok = false;
                break;
            }
        if (ok) {
            R.one = e;
            found_one = true;
        }
    }
    if (!found_one) throw RingError("ring_from_tables: no multiplicative identity");
    R.construction.kind = Construction::Kind::Table;
    R.construction.text = "Table(order=" + std::to_string(order) + ")";
    finish_ring(R);
    validate_ring(R, caps);
    return R;
}

void validate_ring(const FiniteRing& R, const RingCaps& caps) {
    const std::uint32_t n = R.order;
    if (n == 0) throw RingError("validate_ring: empty ring");
    if (R.zero != 0) throw RingError("validate_ring: zero is not index 0");
    // abelian group under addition
    for (std::uint32_t a = 0; a < n; ++a) {
        if (R.add(R.zero, a) != a) throw RingError("validate_ring: zero not neutral");
        if (R.add(a, R.neg(a)) != R.zero) throw RingError("validate_ring: missing negative");
        for (std::uint32_t b = 0; b < n; ++b)
            if (R.add(a, b) != R.add(b, a)) throw RingError("validate_ring: addition not commutative");
    }
    for (std::uint32_t a = 0; a < n; ++a) {
        if (R.mul(R.one, a) != a || R.mul(a, R.one) != a)
            throw RingError("validate_ring: one is not a two-sided identity");
    }
    auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
            throw RingError("validate_ring: addition not associative");
        if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
            throw RingError("validate_ring: multiplication not associative");
        if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
            throw RingError("validate_ring: left distributivity fails");
        if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))
            throw RingError("validate_ring: right distributivity fails");
    };
    if (n <= caps.exhaustive_cap) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937_64 rng(caps.seed);
        std::uniform_int_distribution<std::uint32_t> dist(0, n - 1);
        for (std::uint64_t s = 0; s < caps.sample_count; ++s)
            check_triple(dist(rng), dist(rng), dist(rng));
    }
}

RingMorphism check_morphism(const RingPtr& source, const RingPtr& target,
                            const std::vector<std::uint32_t>& image) {
    if (image.size() != source->order)
        throw RingError("check_morphism: image length mismatch");
    for (auto v : image)
        if (v >= target->order) throw RingError("check_morphism: image entry out of range");
    if (image[source->one] != target->one)
        throw RingError("check_morphism: one not preserved");
    for (std::uint32_t a = 0; a < source->order; ++a) {
        for (std::uint32_t b = 0; b < source->order; ++b) {
            if (image[source->add(a, b)] != target->add(image[a], image[b]))
                throw RingError("check_morphism: additivity fails at pair (" + std::to_string(a) +
                                "," + std::to_string(b) + ")");
            if (image[source->mul(a, b)] != target->mul(image[a], image[b]))
                throw RingError("check_morphism: multiplicativity fails at pair (" +
                                std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    RingMorphism f;
    f.source = source;
    f.target = target;
    f.image = image;
    if (source->order == target->order) {
        Bitset seen(target->order);
        bool bij = true;
        for (auto v : image) {
            if (seen.test(v)) {
                bij = false;
                break;
            }
            seen.set(v);
        }
        f.automorphism = bij;
    }
    return f;
}

RingMorphism identity_endomorphism(const RingPtr& R) {
    std::vector<std::uint32_t> img(R->order);
    for (std::uint32_t a = 0; a < R->order; ++a) img[a] = a;
    return check_morphism(R, R, img);
}

RingMorphism frobenius_endomorphism(const RingPtr& R) {
    if (R->construction.kind != Construction::Kind::Galois)
        throw RingError("frobenius: ring is not a Galois field construction");
    int p = R->construction.p;
    std::vector<std::uint32_t> img(R->order);
    for (std::uint32_t a = 0; a < R->order; ++a) {
        std::uint32_t v = R->one;
        for (int i = 0; i < p; ++i) v = R->mul(v, a);
        // v = a^p via repeated multiplication (p is small)
        img[a] = v;
    }
    return check_morphism(R, R, img);
}

RingMorphism swap_endomorphism(const RingPtr& R) {
    if (R->construction.kind != Construction::Kind::Product ||
        R->construction.left_order != R->construction.right_order)
        throw RingError("swap: ring is not a product of two equal-order factors");
    std::uint32_t m = R->construction.right_order;
    std::vector<std::uint32_t> img(R->order);
    for (std::uint32_t a = 0; a < R->order; ++a) img[a] = (a % m) * m + a / m;
    return check_morphism(R, R, img);
}

RingMorphism conjugation_endomorphism(const RingPtr& R, std::uint32_t u) {
    auto inv = inverse_of(*R, u);
    if (!inv) throw RingError("conjugation: element " + std::to_string(u) + " is not a unit");
    std::vector<std::uint32_t> img(R->order);
    for (std::uint32_t a = 0; a < R->order; ++a) img[a] = R->mul(R->mul(u, a), *inv);
    return check_morphism(R, R, img);
}

std::optional<std::uint32_t> inverse_of(const FiniteRing& R, std::uint32_t u) {
    for (std::uint32_t v = 0; v < R.order; ++v)
        if (R.mul(u, v) == R.one && R.mul(v, u) == R.one) return v;
    return std::nullopt;
}

RingSets units_idempotents_radical(const FiniteRing& R) {
    const std::uint32_t n = R.order;
    RingSets s{Bitset(n), Bitset(n), Bitset(n), Bitset(n)};
    for (std::uint32_t u = 0; u < n; ++u) {
        if (inverse_of(R, u)) s.units.set(u);
        if (R.mul(u, u) == u) {
            s.idempotents.set(u);
            bool central = true;
            for (std::uint32_t r = 0; r < n && central; ++r)
                central = R.mul(u, r) == R.mul(r, u);
            if (central) s.central_idempotents.set(u);
        }
    }
    for (std::uint32_t x = 0; x < n; ++x) {
        bool in_radical = true;
        for (std::uint32_t r = 0; r < n && in_radical; ++r)
            in_radical = s.units.test(R.sub(R.one, R.mul(r, x)));
        if (in_radical) s.jacobson_radical.set(x);
    }
    return s;
}

QuotientRing quotient_ring(const RingPtr& base, const Bitset& ideal) {
    const FiniteRing& R = *base;
    const std::uint32_t n = R.order;
    if (ideal.universe() != n) throw RingError("quotient_ring: ideal universe mismatch");
    if (!ideal.test(R.zero)) throw RingError("quotient_ring: ideal does not contain zero");
    // verify two-sided ideal
    ideal.for_each([&](std::size_t i) {
        ideal.for_each([&](std::size_t j) {
            if (!ideal.test(R.add(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j))))
                throw RingError("quotient_ring: not closed under addition");
        });
        for (std::uint32_t r = 0; r < n; ++r) {
            if (!ideal.test(R.mul(r, static_cast<std::uint32_t>(i))) ||
                !ideal.test(R.mul(static_cast<std::uint32_t>(i), r)))
                throw RingError("quotient_ring: not a two-sided ideal");
        }
    });
    // coset representatives: least element of x + I
    std::vector<std::uint32_t> least(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t best = x;
        ideal.for_each([&](std::size_t i) {
            best = std::min(best, R.add(x, static_cast<std::uint32_t>(i)));
        });
        least[x] = best;
    }
    std::vector<std::uint32_t> reps;
    for (std::uint32_t x = 0; x < n; ++x)
        if (least[x] == x) reps.push_back(x);
    // order cosets: zero first, coset of one second
    std::uint32_t one_rep = least[R.one];
    std::vector<std::uint32_t> ordered;
    ordered.push_back(least[R.zero]);
    if (one_rep != least[R.zero]) ordered.push_back(one_rep);
    for (auto r : reps)
        if (r != least[R.zero] && r != one_rep) ordered.push_back(r);

    std::uint32_t q = static_cast<std::uint32_t>(ordered.size());
    std::vector<std::uint32_t> idx_of_rep(n, 0);
    for (std::uint32_t i = 0; i < q; ++i) idx_of_rep[ordered[i]] = i;

    QuotientRing out;
    out.rep = ordered;
    out.proj.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) out.proj[x] = idx_of_rep[least[x]];

    FiniteRing Q;
    Q.order = q;
    Q.add_table.resize(static_cast<std::size_t>(q) * q);
    Q.mul_table.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            Q.add_table[a * q + b] = out.proj[R.add(ordered[a], ordered[b])];
            Q.mul_table[a * q + b] = out.proj[R.mul(ordered[a], ordered[b])];
        }
    Q.zero = 0;
    Q.one = out.proj[R.one];
    Q.construction.kind = Construction::Kind::Quotient;
    Q.construction.text = "Quot(" + R.construction.text + ")";
    finish_ring(Q);
    validate_ring(Q);
    out.ring = std::make_shared<const FiniteRing>(std::move(Q));
    return out;
}

CornerRing corner_ring(const RingPtr& base, std::uint32_t e) {
    const FiniteRing& R = *base;
    if (R.mul(e, e) != e) throw RingError("corner_ring: element is not idempotent");
    std::vector<std::uint32_t> corner_of(R.order);
    Bitset members(R.order);
    for (std::uint32_t x = 0; x < R.order; ++x) {
        corner_of[x] = R.mul(R.mul(e, x), e);
        members.set(corner_of[x]);
    }
    std::vector<std::uint32_t> embed;
    embed.push_back(R.zero);
    if (e != R.zero) embed.push_back(e);
    members.for_each([&](std::size_t x) {
        if (x != R.zero && x != e) embed.push_back(static_cast<std::uint32_t>(x));
    });
    std::vector<std::uint32_t> idx(R.order, 0);
    for (std::uint32_t i = 0; i < embed.size(); ++i) idx[embed[i]] = i;

    std::uint32_t q = static_cast<std::uint32_t>(embed.size());
    FiniteRing C;
    C.order = q;
    C.add_table.resize(static_cast<std::size_t>(q) * q);
    C.mul_table.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            C.add_table[a * q + b] = idx[R.add(embed[a], embed[b])];
            C.mul_table[a * q + b] = idx[R.mul(embed[a], embed[b])];
        }
    C.zero = 0;
    C.one = idx[e];
    C.construction.kind = Construction::Kind::Corner;
    C.construction.text = "Corner(" + R.construction.text + ", e=" + std::to_string(e) + ")";
    finish_ring(C);
    validate_ring(C);

    CornerRing out;
    out.ring = std::make_shared<const FiniteRing>(std::move(C));
    out.idempotent = e;
    out.embed = std::move(embed);
    out.project.resize(R.order);
    for (std::uint32_t x = 0; x < R.order; ++x) out.project[x] = idx[corner_of[x]];
    return out;
}

std::vector<CentralFactor> primitive_central_idempotent_decomposition(const RingPtr& R) {
    RingSets s = units_idempotents_radical(*R);
    auto central = s.central_idempotents.members();
    std::vector<CentralFactor> factors;
    for (auto e : central) {
        if (e == R->zero) continue;
        bool primitive = true;
        for (auto f : central) {
            if (f == R->zero || f == e) continue;
            if (R->mul(e, f) == f) {  // f lies under e, so e splits as f + (e - f)
                primitive = false;
                break;
            }
        }
        if (primitive) factors.push_back(CentralFactor{e, corner_ring(R, e)});
    }
    // verify orthogonality and that the primitives sum to one
    std::uint32_t sum = R->zero;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        sum = R->add(sum, factors[i].idempotent);
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (R->mul(factors[i].idempotent, factors[j].idempotent) != R->zero)
                throw RingError("central decomposition: primitives not orthogonal");
    }
    if (R->order > 1 && sum != R->one)
        throw RingError("central decomposition: primitives do not sum to one");
    return factors;
}

bool is_commutative(const FiniteRing& R) {
    for (std::uint32_t a = 0; a < R.order; ++a)
        for (std::uint32_t b = a + 1; b < R.order; ++b)
            if (R.mul(a, b) != R.mul(b, a)) return false;
    return true;
}

}  // namespace ringlab
