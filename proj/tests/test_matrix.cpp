#include <doctest.h>

#include "ringlab/json_io.hpp"
#include "ringlab/matrix.hpp"

using namespace ringlab;

namespace {

// Independent SNF oracle: d_1...d_k equals the gcd of all k x k minors.
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

template <class D>
void check_snf(const D& d, const Mat<D>& A) {
    auto snf = smith_normal_form(d, A);
    CHECK(mat_eq(d, mat_mul(d, mat_mul(d, snf.P, A), snf.Q), snf.D_mat));
    CHECK(d.is_unit(determinant(d, snf.P)));
    CHECK(d.is_unit(determinant(d, snf.Q)));
    CHECK(mat_eq(d, mat_mul(d, snf.P, snf.Pinv), mat_identity(d, A.rows)));
    CHECK(mat_eq(d, mat_mul(d, snf.Q, snf.Qinv), mat_identity(d, A.cols)));
    int lim = std::min(A.rows, A.cols);
    // diagonal, divisibility chain, nonzero first, canonical entries
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (i != j) CHECK(d.is_zero(snf.D_mat.at(i, j)));
    typename D::Elem running = d.one();
    for (int i = 0; i < lim; ++i) {
        const auto& e = snf.D_mat.at(i, i);
        CHECK(d.eq(e, d.canonical(e)));
        if (i > 0) CHECK(d.divides(snf.D_mat.at(i - 1, i - 1), e));
        if (!d.is_zero(e)) {
            if (i > 0) CHECK_FALSE(d.is_zero(snf.D_mat.at(i - 1, i - 1)));
            running = d.mul(running, e);
            CHECK(d.eq(d.canonical(running), gcd_of_minors(d, A, i + 1)));
        }
    }
}

}  // namespace

TEST_CASE("smith normal form basics") {
    IntegerDomain Z;
    Mat<IntegerDomain> A(Z, 2, 2);
    A.at(0, 0) = 2;
    A.at(0, 1) = 4;
    A.at(1, 0) = 6;
    A.at(1, 1) = 8;
    auto snf = smith_normal_form(Z, A);
    CHECK(snf.D_mat.at(0, 0) == 2);
    CHECK(snf.D_mat.at(1, 1) == 4);
    check_snf(Z, A);

    Mat<IntegerDomain> zero(Z, 3, 2);
    auto sz = smith_normal_form(Z, zero);
    CHECK(mat_eq(Z, sz.D_mat, zero));
    CHECK(mat_eq(Z, sz.P, mat_identity(Z, 3)));
    CHECK(mat_eq(Z, sz.Q, mat_identity(Z, 2)));

    auto id = mat_identity(Z, 3);
    auto si = smith_normal_form(Z, id);
    CHECK(mat_eq(Z, si.D_mat, id));
}

TEST_CASE("SNF against the gcd-of-minors oracle, integers") {
    IntegerDomain Z;
    std::mt19937_64 rng(101);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + int(rng() % 4), m = 1 + int(rng() % 4);
        Mat<IntegerDomain> A(Z, n, m);
        for (auto& e : A.a) e = Z.random_elem(rng, 100);
        check_snf(Z, A);
    }
}

TEST_CASE("SNF against the gcd-of-minors oracle, F2[x] and F3[x]") {
    for (int p : {2, 3}) {
        PolyDomain F(p);
        std::mt19937_64 rng(103 + p);
        for (int t = 0; t < 100; ++t) {
            int n = 1 + int(rng() % 3), m = 1 + int(rng() % 3);
            Mat<PolyDomain> A(F, n, m);
            for (auto& e : A.a) e = F.random_elem(rng, 3);
            check_snf(F, A);
        }
    }
}

TEST_CASE("fraction block generator") {
    IntegerDomain Z;
    std::vector<Fraction<IntegerDomain>> block{reduce_fraction(Z, BigInt(1), BigInt(2)),
                                               reduce_fraction(Z, BigInt(1), BigInt(3))};
    auto g = generator_of_fraction_block(Z, block, 1, 2);
    CHECK(g.n.den == 6);
    CHECK(g.coefficients.at(0, 0) == 3);
    CHECK(g.coefficients.at(0, 1) == 2);
    for (int j = 0; j < 2; ++j)
        CHECK(fraction_eq(Z, scalar_mul(Z, g.coefficients.at(0, j), g.n), block[std::size_t(j)]));

    std::vector<Fraction<IntegerDomain>> zeros{fraction_zero(Z)};
    auto gz = generator_of_fraction_block(Z, zeros, 1, 1);
    CHECK(fraction_is_zero(Z, gz.n));
    CHECK(Z.is_zero(gz.coefficients.at(0, 0)));

    std::vector<Fraction<IntegerDomain>> one{reduce_fraction(Z, BigInt(2), BigInt(5))};
    auto g1 = generator_of_fraction_block(Z, one, 1, 1);
    CHECK(g1.n.den == 5);
    CHECK(g1.coefficients.at(0, 0) == 2);
}

namespace {

template <class D>
void check_diag(const D& d, const QMat<D>& B) {
    auto res = diagonalize_trivext(d, B);
    CHECK(qmat_is_diagonal(d, res.D_mat));
    CHECK(qmat_eq(d, qmat_mul(d, qmat_mul(d, res.U, B), res.V), res.D_mat));
    CHECK(qmat_eq(d, qmat_mul(d, res.U, res.Uinv), qmat_identity(d, B.rows)));
    CHECK(qmat_eq(d, qmat_mul(d, res.V, res.Vinv), qmat_identity(d, B.rows)));
    CHECK(d.is_unit(determinant(d, res.U.ring_part(d))));
    CHECK(d.is_unit(determinant(d, res.V.ring_part(d))));
    // ring diagonal keeps the divisibility chain among the nonzero leaders
    for (int i = 1; i < res.ring_rank; ++i)
        CHECK(d.divides(res.D_mat.at(i - 1, i - 1).r, res.D_mat.at(i, i).r));
}

}  // namespace

TEST_CASE("trivial extension diagonalization, worked examples") {
    IntegerDomain Z;
    QMat<IntegerDomain> B(Z, 2, 2);
    B.at(0, 0) = {BigInt(2), fraction_zero(Z)};
    B.at(0, 1) = {BigInt(0), reduce_fraction(Z, BigInt(1), BigInt(2))};
    B.at(1, 1) = {BigInt(0), reduce_fraction(Z, BigInt(1), BigInt(3))};
    auto res = diagonalize_trivext(Z, B);
    CHECK(res.D_mat.at(0, 0).r == 2);
    CHECK(fraction_is_zero(Z, res.D_mat.at(0, 0).m));
    CHECK(res.D_mat.at(1, 1).r == 0);
    CHECK(res.D_mat.at(1, 1).m.den == 3);
    check_diag(Z, B);

    // pure module block: generator 1/30, coefficients [[15,10],[6,0]]
    QMat<IntegerDomain> N(Z, 2, 2);
    N.at(0, 0) = {BigInt(0), reduce_fraction(Z, BigInt(1), BigInt(2))};
    N.at(0, 1) = {BigInt(0), reduce_fraction(Z, BigInt(1), BigInt(3))};
    N.at(1, 0) = {BigInt(0), reduce_fraction(Z, BigInt(1), BigInt(5))};
    check_diag(Z, N);

    // already diagonal
    QMat<IntegerDomain> Dg(Z, 2, 2);
    Dg.at(0, 0) = {BigInt(2), fraction_zero(Z)};
    Dg.at(1, 1) = {BigInt(0), reduce_fraction(Z, BigInt(1), BigInt(3))};
    auto rd = diagonalize_trivext(Z, Dg);
    CHECK(qmat_eq(Z, rd.D_mat, Dg));
}

TEST_CASE("matrix morphic witness on the diagonal example") {
    IntegerDomain Z;
    QMat<IntegerDomain> B(Z, 2, 2);
    B.at(0, 0) = {BigInt(2), fraction_zero(Z)};
    B.at(1, 1) = {BigInt(0), reduce_fraction(Z, BigInt(1), BigInt(3))};
    auto w = matrix_morphic_witness(Z, B, 100, 0);
    CHECK(w.report.ok());
    // entrywise partner diagonal: (0,1/2) and (3,0)
    CHECK(w.W.at(0, 0).r == 0);
    CHECK(w.W.at(0, 0).m.den == 2);
    CHECK(w.W.at(1, 1).r == 3);

    auto id = qmat_identity(Z, 2);
    auto wi = matrix_morphic_witness(Z, id, 100, 0);
    CHECK(wi.report.ok());
    CHECK(qmat_is_zero(Z, wi.W));
}

TEST_CASE("random diagonalizations over both bases") {
    IntegerDomain Z;
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + int(rng() % 3);
        QMat<IntegerDomain> B(Z, n, n);
        for (auto& e : B.a) {
            e.r = Z.random_elem(rng, 30);
            e.m = reduce_fraction(Z, Z.random_elem(rng, 30), Z.random_nonzero(rng, 30));
        }
        check_diag(Z, B);
        if (t < 10) CHECK(matrix_morphic_witness(Z, B, 50, rng(), 50).report.ok());
    }

    PolyDomain F2(2);
    for (int t = 0; t < 25; ++t) {
        int n = 1 + int(rng() % 3);
        QMat<PolyDomain> B(F2, n, n);
        for (auto& e : B.a) {
            e.r = F2.random_elem(rng, 3);
            e.m = reduce_fraction(F2, F2.random_elem(rng, 3), F2.random_nonzero(rng, 3));
        }
        check_diag(F2, B);
        if (t < 5) CHECK(matrix_morphic_witness(F2, B, 4, rng(), 30).report.ok());
    }
}

TEST_CASE("matrix json round trip") {
    IntegerDomain Z;
    QMat<IntegerDomain> B(Z, 2, 2);
    B.at(0, 1) = {BigInt(3), reduce_fraction(Z, BigInt(1), BigInt(2))};
    auto j = to_json(Z, B);
    auto back = qmat_from_json(Z, j);
    CHECK(qmat_eq(Z, B, back));
}
