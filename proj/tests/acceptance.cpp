// Acceptance gate: twelve exact (tolerance-zero) criteria, one pass/fail line
// each. Exit status is the number of failing criteria.

#include <functional>
#include <iostream>

#include "ringlab/catalog.hpp"
#include "ringlab/json_io.hpp"
#include "ringlab/matrix.hpp"

using namespace ringlab;

namespace {

int failures = 0;

void report(int index, const char* label, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << index << " [" << label << "]: " << (ok ? "pass" : "FAIL");
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

RingPtr mk(FiniteRing r) { return std::make_shared<const FiniteRing>(std::move(r)); }
ModPtr mkm(FiniteBimodule m) { return std::make_shared<const FiniteBimodule>(std::move(m)); }

// gcd of all k x k minors, the independent SNF oracle
template <class D>
typename D::Elem gcd_of_minors(const D& d, const Mat<D>& A, int k) {
    std::vector<int> rows(k), cols(k);
    typename D::Elem g = d.zero();
    std::function<void(int, int)> pick_cols = [&](int idx, int start) {
        if (idx == k) {
            Mat<D> sub(d, k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = A.at(rows[i], cols[j]);
            g = d.gcd(g, determinant(d, sub));
            return;
        }
        for (int c = start; c < A.cols; ++c) {
            cols[idx] = c;
            pick_cols(idx + 1, c + 1);
        }
    };
    std::function<void(int, int)> pick_rows = [&](int idx, int start) {
        if (idx == k) {
            pick_cols(0, 0);
            return;
        }
        for (int r = start; r < A.rows; ++r) {
            rows[idx] = r;
            pick_rows(idx + 1, r + 1);
        }
    };
    pick_rows(0, 0);
    return d.canonical(g);
}

// 1: morphic <-> quasi-morphic <-> two-sided Bezout on catalog rings
void criterion1() {
    bool ok = true;
    std::string detail;
    bool saw_negative = false;
    for (const auto& entry : catalog()) {
        auto built = build_catalog_entry(entry);
        if (built.ring->order > 4096) continue;
        auto rep = ring_properties(built.ring);
        bool bez = rep.left_bezout && rep.right_bezout;
        if (!(rep.morphic == rep.quasi_morphic && rep.quasi_morphic == bez)) {
            ok = false;
            detail = entry.name;
        }
        if (entry.name == "F2[x,y]/(x,y)^2") {
            saw_negative = true;
            if (rep.morphic || rep.quasi_morphic || bez) {
                ok = false;
                detail = entry.name + " should fail all three";
            }
        }
    }
    report(1, "quasi-morphic equivalences", ok && saw_negative, detail);
}

// 2: Lemma-ann biconditionals over all (a, m, n) triples
void criterion2() {
    bool ok = true;
    std::string detail;
    auto z4 = mk(build_cyclic(4));
    auto p22 = mk(build_product(build_cyclic(2), build_cyclic(2)));
    for (const auto& S : {build_trivial_extension(z4, mkm(regular_bimodule(z4))),
                          build_trivial_extension(p22, mkm(regular_bimodule(p22)))}) {
        auto n_ring = S.base->order;
        auto n_mod = S.bimodule->order;
        for (std::uint32_t a = 0; a < n_ring; ++a)
            for (std::uint32_t m = 0; m < n_mod; ++m)
                for (std::uint32_t n = 0; n < n_mod; ++n) {
                    auto c = check_annihilator_characterization(S, a, m, n);
                    if (!c.consistent()) {
                        ok = false;
                        detail = "triple (" + std::to_string(a) + "," + std::to_string(m) + "," +
                                 std::to_string(n) + ")";
                    }
                }
    }
    report(2, "annihilator characterization", ok, detail);
}

// 3: left-morphic(R x R) == unit-regular(R) over the catalog
void criterion3() {
    bool ok = true;
    std::string detail;
    for (const auto& entry : catalog()) {
        auto built = build_catalog_entry(entry);
        auto R = built.ring;
        if (std::uint64_t(R->order) * R->order > 4096) continue;  // extension must stay scannable
        bool unit_reg = true;
        for (std::uint32_t a = 0; a < R->order && unit_reg; ++a)
            if (regularity(*R, a).kind != Regularity::UnitRegular) unit_reg = false;
        auto S = build_trivial_extension(R, mkm(regular_bimodule(R)));
        bool lm = ring_left_morphic(S.as_ring);
        if (lm != unit_reg) {
            ok = false;
            detail = entry.name;
        }
    }
    // pinned instances
    auto z4 = mk(build_cyclic(4));
    auto S4 = build_trivial_extension(z4, mkm(regular_bimodule(z4)));
    RingAnalysis A4(S4.as_ring);
    if (left_morphic_witness(A4, S4.pair_index(0, 2)).has_value()) {
        ok = false;
        detail = "(0,2) in Z4xZ4 unexpectedly morphic";
    }
    auto m2 = mk(build_matrix_ring(2, build_cyclic(2)));
    auto SM = build_trivial_extension(m2, mkm(regular_bimodule(m2)));
    if (!ring_morphic(SM.as_ring)) {
        ok = false;
        detail = "M2(F2) x M2(F2) should be morphic";
    }
    report(3, "R x R iff unit regular", ok, detail);
}

// 4: central idempotent obstruction with the pinpointed idempotent
void criterion4() {
    auto p22 = mk(build_product(build_cyclic(2), build_cyclic(2)));
    auto S_swap =
        build_trivial_extension(p22, mkm(twisted_bimodule(p22, swap_endomorphism(p22))));
    auto rep = verify_central_idempotent_commutation(S_swap);
    // (1,0) has index 2 and (0,1) has index 1; either pinpoints the failure
    bool ok = !rep.left_morphic && !rep.all_commute &&
              (rep.failing_idempotent == 1 || rep.failing_idempotent == 2);
    auto S_id =
        build_trivial_extension(p22, mkm(twisted_bimodule(p22, identity_endomorphism(p22))));
    ok = ok && ring_left_morphic(S_id.as_ring);
    report(4, "central idempotent obstruction", ok);
}

// 5: classification prediction == brute force, >= 12 pairs
void criterion5() {
    struct NamedPair {
        std::string name;
        RingPtr R;
        ModPtr M;
    };
    std::vector<NamedPair> pairs;
    auto add = [&](std::string name, RingPtr R, FiniteBimodule M) {
        pairs.push_back({std::move(name), R, mkm(std::move(M))});
    };
    auto z2 = mk(build_cyclic(2)), z3 = mk(build_cyclic(3)), z4 = mk(build_cyclic(4)),
         z6 = mk(build_cyclic(6)), z8 = mk(build_cyclic(8)), z9 = mk(build_cyclic(9));
    auto f4 = mk(build_galois(2, {1, 1, 1}));
    auto p22 = mk(build_product(build_cyclic(2), build_cyclic(2)));
    auto m2 = mk(build_matrix_ring(2, build_cyclic(2)));
    add("Z2 reg", z2, regular_bimodule(z2));
    add("Z3 reg", z3, regular_bimodule(z3));
    add("Z4 reg", z4, regular_bimodule(z4));
    add("Z4 zero", z4, zero_bimodule(z4));
    add("Z6 reg", z6, regular_bimodule(z6));
    add("Z8 reg", z8, regular_bimodule(z8));
    add("Z9 reg", z9, regular_bimodule(z9));
    add("F4 reg", f4, regular_bimodule(f4));
    add("F4 frobenius", f4, twisted_bimodule(f4, frobenius_endomorphism(f4)));
    add("F2xF2 reg", p22, regular_bimodule(p22));
    add("F2xF2 swap", p22, twisted_bimodule(p22, swap_endomorphism(p22)));
    add("M2(F2) reg", m2, regular_bimodule(m2));
    add("M2(F2) conj", m2, twisted_bimodule(m2, conjugation_endomorphism(m2, 6)));
    bool ok = pairs.size() >= 12;
    std::string detail;
    bool conj_morphic = false, z4_not = false;
    for (const auto& p : pairs) {
        auto rec = reconcile(p.R, p.M);
        if (!rec.match) {
            ok = false;
            detail = p.name;
        }
        if (p.name == "M2(F2) conj" && rec.brute_force) conj_morphic = true;
        if (p.name == "Z4 reg" && !rec.brute_force) z4_not = true;
    }
    report(5, "classification reconciliation", ok && conj_morphic && z4_not, detail);
}

// 6: sigma round trip on Twist(F4, Frobenius)
void criterion6() {
    auto f4 = mk(build_galois(2, {1, 1, 1}));
    auto frob = frobenius_endomorphism(f4);
    auto M = mkm(twisted_bimodule(f4, frob));
    bool ok = true;
    try {
        auto sc = construct_sigma(M, 1);
        ok = sc.sigma_automorphism && sc.quotient.ring->order == 4;
        for (std::uint32_t r = 0; r < 4 && ok; ++r)
            if (sc.sigma(sc.quotient.proj[r]) != sc.quotient.proj[frob(r)]) ok = false;
    } catch (const RingError&) {
        ok = false;
    }
    report(6, "sigma round trip", ok);
}

// 7: lattice map injective and inclusion-reversing on morphic extensions
void criterion7() {
    bool ok = true;
    std::string detail;
    int checked = 0;
    for (const auto& entry : catalog()) {
        auto built = build_catalog_entry(entry);
        if (!built.triv) continue;
        if (!ring_morphic(built.ring)) continue;
        auto map = build_lattice_map(*built.triv);
        ++checked;
        if (!map.injective || !map.inclusion_reversing) {
            ok = false;
            detail = entry.name;
        }
    }
    report(7, "lattice map", ok && checked > 0, detail);
}

// 8: annihilator generator contracts, exhaustive within bounds
void criterion8() {
    IntegerDomain Z;
    bool ok = true;
    std::string detail;
    for (long q = 2; q <= 1000 && ok; ++q)
        for (long p = 1; p < q && ok; ++p) {
            if (boost::multiprecision::gcd(BigInt(p), BigInt(q)) != 1) continue;
            Fraction<IntegerDomain> x{BigInt(p), BigInt(q)};
            // q is the annihilator generator: r x = 0 iff q | r
            if (annihilator_generator_in_R(Z, x) != q) {
                ok = false;
                detail = "intgen";
            }
            if (!fraction_is_zero(Z, scalar_mul(Z, BigInt(q), x))) {
                ok = false;
                detail = "q*x != 0";
            }
            for (long r = 1; r < q; ++r)
                if (q % r == 0 && fraction_is_zero(Z, scalar_mul(Z, BigInt(r), x))) {
                    ok = false;
                    detail = "proper divisor kills";
                }
            // reverse contract: y * q = 0 iff den(y) | q — test on divisors and non-divisors
            auto gen = annihilator_generator_in_QmodR(Z, BigInt(q));
            if (gen.den != q) {
                ok = false;
                detail = "qmodr gen";
            }
        }
    // monic q of degree <= 6 over F2, all coprime numerators of lower degree
    PolyDomain F2(2);
    for (std::uint64_t mask = 2; mask < (1u << 7) && ok; ++mask) {
        PolyElem q;
        for (int i = 0; i < 7; ++i)
            if (mask & (1u << i)) {
                if (q.c.size() < std::size_t(i) + 1) q.c.resize(std::size_t(i) + 1, 0);
                q.c[std::size_t(i)] = 1;
            }
        if (F2.degree(q) < 1) continue;
        for (std::uint64_t pm = 1; pm < (1u << F2.degree(q)) && ok; ++pm) {
            PolyElem p;
            for (int i = 0; i < F2.degree(q); ++i)
                if (pm & (1u << i)) {
                    if (p.c.size() < std::size_t(i) + 1) p.c.resize(std::size_t(i) + 1, 0);
                    p.c[std::size_t(i)] = 1;
                }
            if (!F2.is_unit(F2.gcd(p, q))) continue;
            Fraction<PolyDomain> x{p, q};
            if (!F2.eq(annihilator_generator_in_R(F2, x), q)) {
                ok = false;
                detail = "polygen";
            }
            if (!fraction_is_zero(F2, scalar_mul(F2, q, x))) {
                ok = false;
                detail = "poly q*x != 0";
            }
        }
    }
    report(8, "annihilator formulas", ok, detail);
}

// 9: verify_partner in Z x Q/Z, 10^4 seeded elements plus negative control
void criterion9() {
    IntegerDomain Z;
    std::mt19937_64 rng(0);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 10000 && ok; ++i) {
        QExtElem<IntegerDomain> e{Z.random_elem(rng, 1000),
                                  reduce_fraction(Z, Z.random_elem(rng, 1000),
                                                  Z.random_nonzero(rng, 1000))};
        auto w = morphic_partner(Z, e);
        auto rep = verify_partner(Z, e, w, 1000, rng(), 64);
        if (!rep.ok()) {
            ok = false;
            detail = "sample " + std::to_string(i) + " " + rep.witness;
        }
    }
    // deliberate negative control: (0, 1/2) paired with (3, 0) must fail
    QExtElem<IntegerDomain> e{BigInt(0), reduce_fraction(Z, BigInt(1), BigInt(2))};
    QExtElem<IntegerDomain> wrong{BigInt(3), fraction_zero(Z)};
    if (verify_partner(Z, e, wrong, 1000, 7).ok()) {
        ok = false;
        detail = "negative control passed";
    }
    report(9, "torsion morphic witnesses", ok, detail);
}

// 10: SNF correctness on 10^3 seeded integer matrices
void criterion10() {
    IntegerDomain Z;
    std::mt19937_64 rng(0);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 1000 && ok; ++t) {
        int n = 1 + int(rng() % 4), m = 1 + int(rng() % 4);
        Mat<IntegerDomain> A(Z, n, m);
        for (auto& e : A.a) e = Z.random_elem(rng, 100);
        auto snf = smith_normal_form(Z, A);
        if (!mat_eq(Z, mat_mul(Z, mat_mul(Z, snf.P, A), snf.Q), snf.D_mat)) {
            ok = false;
            detail = "PAQ != D";
            break;
        }
        auto dp = determinant(Z, snf.P), dq = determinant(Z, snf.Q);
        if (!(dp == 1 || dp == -1) || !(dq == 1 || dq == -1)) {
            ok = false;
            detail = "non-unimodular transform";
            break;
        }
        BigInt running = 1;
        int lim = std::min(n, m);
        for (int i = 0; i < lim; ++i) {
            auto e = snf.D_mat.at(i, i);
            if (i > 0 && !Z.divides(snf.D_mat.at(i - 1, i - 1), e)) {
                ok = false;
                detail = "chain";
            }
            if (e != 0) {
                running *= e;
                if (running != gcd_of_minors(Z, A, i + 1)) {
                    ok = false;
                    detail = "minors oracle";
                }
            }
        }
    }
    report(10, "smith normal form", ok, detail);
}

// 11: diagonalization and witness certification over Z x Q/Z
void criterion11() {
    IntegerDomain Z;
    std::mt19937_64 rng(0);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 1000 && ok; ++t) {
        int n = 1 + int(rng() % 4);
        QMat<IntegerDomain> B(Z, n, n);
        for (auto& e : B.a) {
            e.r = Z.random_elem(rng, 50);
            e.m = reduce_fraction(Z, Z.random_elem(rng, 50), Z.random_nonzero(rng, 50));
        }
        auto res = diagonalize_trivext(Z, B);
        bool good = qmat_is_diagonal(Z, res.D_mat) &&
                    qmat_eq(Z, qmat_mul(Z, qmat_mul(Z, res.U, B), res.V), res.D_mat) &&
                    qmat_eq(Z, qmat_mul(Z, res.U, res.Uinv), qmat_identity(Z, n)) &&
                    qmat_eq(Z, qmat_mul(Z, res.V, res.Vinv), qmat_identity(Z, n)) &&
                    Z.is_unit(determinant(Z, res.U.ring_part(Z))) &&
                    Z.is_unit(determinant(Z, res.V.ring_part(Z)));
        if (!good) {
            ok = false;
            detail = "diagonalization " + std::to_string(t);
        }
        if (ok && t < 100) {
            auto w = matrix_morphic_witness(Z, B, 50, rng(), 40);
            if (!w.report.ok()) {
                ok = false;
                detail = "witness " + std::to_string(t) + " " + w.report.witness;
            }
        }
    }
    report(11, "trivial extension diagonalization", ok, detail);
}

// 12: Theorem-dom conditions for all a, q <= 500
void criterion12() {
    IntegerDomain Z;
    bool ok = true;
    std::string detail;
    for (long a = 1; a <= 500 && ok; ++a) {
        // partner existence both directions
        QExtElem<IntegerDomain> e{BigInt(a), fraction_zero(Z)};
        auto w = morphic_partner(Z, e);
        if (!(w.r == 0 && w.m.den == a)) {
            ok = false;
            detail = "partner of (a,0)";
        }
        for (long q = 1; q <= 500 && ok; ++q) {
            // divisibility: divide solves a * x = p/q for every target
            auto target = reduce_fraction(Z, BigInt(std::max(1l, q - 1)), BigInt(q));
            auto x = fraction_divide(Z, target, BigInt(a));
            if (!fraction_eq(Z, scalar_mul(Z, BigInt(a), x), target)) {
                ok = false;
                detail = "divide";
            }
        }
        // exact sequence: kernel of (.a) on Q/Z = image of (. * 1/a)
        for (long q = 1; q <= 500 && ok; ++q) {
            Fraction<IntegerDomain> y = reduce_fraction(Z, BigInt(1), BigInt(q));
            bool in_kernel = fraction_is_zero(Z, scalar_mul(Z, BigInt(a), y));
            bool in_image = Z.divides(y.den, BigInt(a));
            if (in_kernel != in_image) {
                ok = false;
                detail = "exact sequence";
            }
        }
        // reverse partner: (0, p/q) -> (q, 0) with both annihilator equalities
        QExtElem<IntegerDomain> e2{BigInt(0), reduce_fraction(Z, BigInt(1), BigInt(a))};
        auto w2 = morphic_partner(Z, e2);
        if (a > 1 && !(w2.r == a && fraction_is_zero(Z, w2.m))) {
            ok = false;
            detail = "partner of (0,1/a)";
        }
        if (!descr_eq(Z, describe_annihilator(Z, e2), describe_span(Z, w2))) {
            ok = false;
            detail = "ann equality";
        }
    }
    report(12, "divisible module conditions", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failing")
              << std::endl;
    return failures;
}
