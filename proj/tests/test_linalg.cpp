#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qframes/errors.hpp"
#include "qframes/harness.hpp"
#include "qframes/linalg.hpp"

using namespace qframes;

namespace {

const Quaternion one = Quaternion::one();
const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();
const Quaternion qk = Quaternion::unit_k();

QMatrix diag(std::initializer_list<double> values) {
    QMatrix m(values.size(), values.size());
    std::size_t r = 0;
    for (double v : values) {
        m(r, r) = Quaternion::real(v);
        ++r;
    }
    return m;
}

double dist_to_span(const QVector& v, const std::vector<QVector>& basis) {
    QVector w = v;
    for (int pass = 0; pass < 2; ++pass) {
        for (const QVector& z : basis) {
            w = w - z * inner(z, w);
        }
    }
    return norm(w);
}

} // namespace

TEST_CASE("inner product basics") {
    const QVector e1 = QVector::standard_basis(2, 0);
    const QVector e2 = QVector::standard_basis(2, 1);
    CHECK(inner(e1, e1) == one);
    CHECK(inner(e1, e2) == Quaternion::zero());
    // <(i,0),(j,0)> = conj(i) j = -i j = -k
    CHECK(inner(QVector{qi, Quaternion::zero()}, QVector{qj, Quaternion::zero()}) == -qk);
    CHECK_THROWS_AS(inner(e1, QVector(3)), DimensionMismatch);
}

TEST_CASE("inner product is right-linear in the second slot and conjugate symmetric") {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        const QVector u = gen_vector(rng, 4);
        const QVector v = gen_vector(rng, 4);
        const Quaternion q = gen_quaternion(rng);
        const double scale = 1.0 + norm(u) * norm(v) * abs(q);
        CHECK(abs(inner(v, u * q) - inner(v, u) * q) <= 1e-13 * scale);
        CHECK(abs(inner(u, v) - conj(inner(v, u))) <= 1e-13 * scale);
    }
}

TEST_CASE("norm examples and homogeneity") {
    CHECK(norm(QVector{one + qi, one - qi}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(norm(QVector(3)) == 0.0);
    Rng rng(22);
    for (int t = 0; t < 100; ++t) {
        const QVector u = gen_vector(rng, 4);
        const Quaternion q = gen_quaternion(rng);
        CHECK(std::fabs(norm(u * q) - norm(u) * abs(q)) <= 1e-12 * (1.0 + norm(u) * abs(q)));
        const QVector v = gen_vector(rng, 4);
        CHECK(abs(inner(u, v)) <= norm(u) * norm(v) + 1e-12);
    }
}

TEST_CASE("matrix action and composition") {
    Rng rng(23);
    const QMatrix id = QMatrix::identity(4);
    for (int t = 0; t < 50; ++t) {
        const QVector v = gen_vector(rng, 4);
        CHECK(id * v == v);
        const QMatrix p = gen_matrix(rng, 3, 4);
        const QMatrix q = gen_matrix(rng, 4, 5);
        const QVector w = gen_vector(rng, 5);
        const Quaternion s = gen_quaternion(rng);
        const double scale = 1.0 + frobenius_norm(p) * frobenius_norm(q) * norm(w);
        CHECK(norm((p * q) * w - p * (q * w)) <= 1e-12 * scale);
        CHECK(norm(q * (w * s) - (q * w) * s) <= 1e-12 * scale * (1.0 + abs(s)));
    }
    CHECK_THROWS_AS(gen_matrix(rng, 2, 3) * gen_matrix(rng, 2, 3), DimensionMismatch);
    CHECK_THROWS_AS(gen_matrix(rng, 2, 3) * gen_vector(rng, 2), DimensionMismatch);
}

TEST_CASE("adjoint") {
    CHECK(adjoint(QMatrix::identity(3)) == QMatrix::identity(3));
    QMatrix mi(1, 1);
    mi(0, 0) = qi;
    CHECK(adjoint(mi)(0, 0) == -qi);
    Rng rng(24);
    for (int t = 0; t < 100; ++t) {
        const QMatrix l = gen_matrix(rng, 3, 4);
        CHECK(adjoint(adjoint(l)) == l);
        const QVector u = gen_vector(rng, 4);
        const QVector v = gen_vector(rng, 3);
        const double scale = 1.0 + frobenius_norm(l) * norm(u) * norm(v);
        CHECK(abs(inner(l * u, v) - inner(u, adjoint(l) * v)) <= 1e-12 * scale);
    }
}

TEST_CASE("embedding examples") {
    QMatrix m1(1, 1);
    m1(0, 0) = one;
    const ComplexMatrix c1 = embed(m1);
    CHECK(c1(0, 0) == ComplexMatrix::Scalar{1.0, 0.0});
    CHECK(c1(0, 1) == ComplexMatrix::Scalar{0.0, 0.0});
    CHECK(c1(1, 0) == ComplexMatrix::Scalar{0.0, 0.0});
    CHECK(c1(1, 1) == ComplexMatrix::Scalar{1.0, 0.0});

    QMatrix mj(1, 1);
    mj(0, 0) = qj;
    const ComplexMatrix cj = embed(mj);
    CHECK(cj(0, 0) == ComplexMatrix::Scalar{0.0, 0.0});
    CHECK(cj(0, 1) == ComplexMatrix::Scalar{-1.0, 0.0});
    CHECK(cj(1, 0) == ComplexMatrix::Scalar{1.0, 0.0});
    CHECK(cj(1, 1) == ComplexMatrix::Scalar{0.0, 0.0});
}

TEST_CASE("embedding is a *-homomorphism and inverts exactly") {
    Rng rng(25);
    for (int t = 0; t < 100; ++t) {
        const QMatrix p = gen_matrix(rng, 3, 4);
        const QMatrix q = gen_matrix(rng, 4, 2);
        const double scale = 1.0 + frobenius_norm(p) * frobenius_norm(q);
        const ComplexMatrix lhs = embed(p * q);
        const ComplexMatrix rhs = embed(p) * embed(q);
        double worst = 0.0;
        for (std::size_t k = 0; k < lhs.data().size(); ++k) {
            worst = std::max(worst, std::abs(lhs.data()[k] - rhs.data()[k]));
        }
        CHECK(worst <= 1e-12 * scale);

        const ComplexMatrix adj_lhs = embed(adjoint(p));
        const ComplexMatrix adj_rhs = conj_transpose(embed(p));
        for (std::size_t k = 0; k < adj_lhs.data().size(); ++k) {
            CHECK(adj_lhs.data()[k] == adj_rhs.data()[k]);
        }
        CHECK(unembed(embed(p)) == p);
    }
}

TEST_CASE("unembed rejects asymmetric blocks") {
    ComplexMatrix bad(2, 2);
    bad(0, 0) = 1.0;
    bad(0, 1) = 2.0;
    bad(1, 0) = 3.0;
    bad(1, 1) = 4.0;
    CHECK_THROWS_AS(unembed(bad), NotEmbeddable);
    CHECK_THROWS_AS(unembed(ComplexMatrix(3, 2)), NotEmbeddable);
}

TEST_CASE("hermitian_eig examples") {
    const HermitianEig id = hermitian_eig(QMatrix::identity(3));
    REQUIRE(id.values.size() == 3);
    for (double v : id.values) {
        CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    }
    const HermitianEig d = hermitian_eig(diag({2.0, 1.0}));
    CHECK(d.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.values[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(hermitian_eig(QMatrix(2, 3)), DimensionMismatch);

    QMatrix not_herm(2, 2);
    not_herm(0, 1) = qi;
    not_herm(1, 0) = qi;
    CHECK_THROWS_AS(hermitian_eig(not_herm), NotHermitian);
}

TEST_CASE("hermitian_eig residuals, positivity, and doubled embedded spectrum") {
    Rng rng(26);
    for (int t = 0; t < 30; ++t) {
        const QMatrix g = gen_matrix(rng, 4, 4);
        const QMatrix h = adjoint(g) * g;
        const double scale = std::max(1.0, frobenius_norm(h));
        const HermitianEig eig = hermitian_eig(h);
        REQUIRE(eig.values.size() == 4);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(eig.values[k] >= -1e-10 * scale);
            CHECK(norm(h * eig.vectors[k] - eig.vectors[k] * eig.values[k]) <=
                  1e-9 * scale);
            for (std::size_t l = 0; l < k; ++l) {
                CHECK(abs(inner(eig.vectors[k], eig.vectors[l])) <= 1e-12);
            }
        }
        // chi(H) carries each eigenvalue twice.
        const std::vector<double> doubled = complex_hermitian_eigenvalues(embed(h));
        REQUIRE(doubled.size() == 8);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(std::fabs(doubled[2 * k] - eig.values[k]) <= 1e-9 * scale);
            CHECK(std::fabs(doubled[2 * k + 1] - eig.values[k]) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("svd examples") {
    const Svd z = svd(QMatrix(2, 3));
    REQUIRE(z.singular_values.size() == 2);
    CHECK(z.singular_values[0] == 0.0);
    CHECK(z.singular_values[1] == 0.0);

    const Svd d = svd(diag({3.0, 4.0}));
    CHECK(d.singular_values[0] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(d.singular_values[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("svd reconstruction and sup-sampling oracle") {
    Rng rng(27);
    const QMatrix q = gen_matrix(rng, 4, 6);
    const Svd s = svd(q);
    const double scale = std::max(1.0, s.singular_values.front());

    QMatrix rec(4, 6);
    for (std::size_t k = 0; k < s.singular_values.size(); ++k) {
        rec = rec + outer(s.left[k], s.right[k]) * s.singular_values[k];
    }
    CHECK(frobenius_norm(q - rec) <= 1e-9 * scale);

    // Operator norm dominates ||Q u|| over sampled unit vectors.
    double sampled = 0.0;
    for (int t = 0; t < 1000; ++t) {
        QVector u = gen_vector(rng, 6);
        u = u * (1.0 / norm(u));
        sampled = std::max(sampled, norm(q * u));
    }
    CHECK(operator_norm(q) >= sampled - 1e-9);
    CHECK(operator_norm(q) == doctest::Approx(s.singular_values.front()).epsilon(1e-12));
}

TEST_CASE("operator norm is submultiplicative") {
    Rng rng(28);
    for (int t = 0; t < 20; ++t) {
        const QMatrix p = gen_matrix(rng, 3, 4);
        const QMatrix q = gen_matrix(rng, 4, 3);
        CHECK(operator_norm(p * q) <= operator_norm(p) * operator_norm(q) + 1e-9);
    }
}

TEST_CASE("pinv examples and Penrose identities") {
    CHECK(frobenius_norm(pinv(QMatrix::identity(3)) - QMatrix::identity(3)) <= 1e-12);
    const QMatrix halved = pinv(diag({2.0, 0.0}));
    CHECK(abs(halved(0, 0) - Quaternion::real(0.5)) <= 1e-13);
    CHECK(abs(halved(1, 1)) <= 1e-13);

    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        const QMatrix q = gen_matrix(rng, 4, 2) * gen_matrix(rng, 2, 5); // rank 2
        const QMatrix p = pinv(q);
        const double scale = std::max(1.0, operator_norm(q));
        CHECK(operator_norm(q * p * q - q) <= 1e-8 * scale);
        CHECK(operator_norm(p * q * p - p) <= 1e-8 * std::max(1.0, operator_norm(p)));
        CHECK(operator_norm(adjoint(q * p) - q * p) <= 1e-8);
        CHECK(operator_norm(adjoint(p * q) - p * q) <= 1e-8);
    }
}

TEST_CASE("rank, null space, and range") {
    CHECK(rank(QMatrix::identity(3)) == 3);
    const std::vector<QVector> nb = null_basis(QMatrix(2, 2));
    REQUIRE(nb.size() == 2);
    CHECK(abs(inner(nb[0], nb[1])) <= 1e-13);
    CHECK(norm(nb[0]) == doctest::Approx(1.0).epsilon(1e-13));

    Rng rng(30);
    for (int t = 0; t < 20; ++t) {
        const QMatrix q = gen_matrix(rng, 4, 3) * gen_matrix(rng, 3, 6); // rank 3
        const double scale = std::max(1.0, operator_norm(q));
        CHECK(rank(q) == 3);
        const std::vector<QVector> kernel = null_basis(q);
        CHECK(kernel.size() + rank(q) == q.cols());
        for (const QVector& v : kernel) {
            CHECK(norm(q * v) <= 1e-9 * scale);
        }
        const std::vector<QVector> image = range_basis(q);
        CHECK(image.size() == 3);
    }
}

TEST_CASE("gram_schmidt") {
    const QVector e1 = QVector::standard_basis(2, 0);
    const QVector e2 = QVector::standard_basis(2, 1);
    const std::vector<QVector> kept = gram_schmidt({e1, e2});
    REQUIRE(kept.size() == 2);
    CHECK(kept[0] == e1);
    CHECK(kept[1] == e2);
    CHECK(gram_schmidt({e1, e1}).size() == 1);

    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        std::vector<QVector> raw;
        for (int i = 0; i < 3; ++i) {
            raw.push_back(gen_vector(rng, 4));
        }
        const std::vector<QVector> basis = gram_schmidt(raw);
        REQUIRE(basis.size() == 3);
        QVector u(4);
        for (const QVector& z : basis) {
            u = u + z * gen_quaternion(rng);
        }
        double energy = 0.0;
        for (const QVector& z : basis) {
            energy += norm_sq(inner(z, u));
        }
        CHECK(std::fabs(norm_sq(u) - energy) <= 1e-10 * (1.0 + norm_sq(u)));
    }
}

TEST_CASE("orth_complement") {
    const std::vector<QVector> c1 =
        orth_complement({QVector::standard_basis(2, 0)}, 2);
    REQUIRE(c1.size() == 1);
    CHECK(abs(abs(inner(c1[0], QVector::standard_basis(2, 1))) - 1.0) <= 1e-13);

    CHECK(orth_complement({}, 3).size() == 3);

    Rng rng(32);
    for (int t = 0; t < 30; ++t) {
        std::vector<QVector> a;
        for (int i = 0; i < 2; ++i) {
            a.push_back(gen_vector(rng, 4));
        }
        const std::vector<QVector> comp = orth_complement(a, 4);
        const std::vector<QVector> doubled = orth_complement(comp, 4);
        const std::vector<QVector> span = gram_schmidt(a);
        CHECK(comp.size() + span.size() == 4);
        for (const QVector& v : doubled) {
            CHECK(dist_to_span(v, span) <= 1e-9);
        }
        for (const QVector& v : span) {
            CHECK(dist_to_span(v, doubled) <= 1e-9);
        }
    }
}

TEST_CASE("psd order") {
    CHECK(psd_geq(QMatrix(2, 2), QMatrix::identity(2), 0.0));
    CHECK_FALSE(psd_geq(QMatrix::identity(2) * 2.0, QMatrix::identity(2), 1e-9));
    QMatrix skew(2, 2);
    skew(0, 1) = qi;
    CHECK_THROWS_AS(psd_geq(skew, QMatrix::identity(2), 0.0), NotHermitian);

    // Agreement with the sampled quadratic form.
    Rng rng(33);
    const QMatrix g1 = gen_matrix(rng, 3, 3);
    const QMatrix g2 = gen_matrix(rng, 3, 3);
    const QMatrix h1 = adjoint(g1) * g1;
    const QMatrix h2 = h1 + adjoint(g2) * g2;
    CHECK(psd_geq(h1, h2, 1e-10));
    bool sampled_ok = true;
    for (int t = 0; t < 1000; ++t) {
        const QVector u = gen_vector(rng, 3);
        if (inner(u, (h2 - h1) * u).w < -1e-10) {
            sampled_ok = false;
        }
    }
    CHECK(sampled_ok);
    CHECK_FALSE(psd_geq(h2, h1, 1e-9 * frobenius_norm(h2)));
}
