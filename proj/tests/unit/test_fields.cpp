#include "dunkl/field.hpp"
#include "dunkl/matrix.hpp"
#include "dunkl/signature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace dunkl;

namespace {

Rational rand_rat(std::mt19937& g, int range = 9, int den = 6)
{
    std::uniform_int_distribution<int> num(-range, range), d(1, den);
    return Rational(num(g), d(g));
}

Scalar rand_scalar(std::mt19937& g, const FieldSpec& f)
{
    Scalar::Coords c;
    for (int i = 0; i < f.degree(); ++i) c.push_back(rand_rat(g, 5, 4));
    return Scalar(f, c);
}

// floating elimination with partial pivoting, the rank oracle
int float_rank(std::vector<std::vector<double>> a)
{
    const int r = static_cast<int>(a.size()), c = static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < c && rank < r; ++col) {
        int p = rank;
        for (int i = rank; i < r; ++i)
            if (std::fabs(a[i][col]) > std::fabs(a[p][col])) p = i;
        if (std::fabs(a[p][col]) < 1e-9) continue;
        std::swap(a[p], a[rank]);
        for (int i = rank + 1; i < r; ++i) {
            double f = a[i][col] / a[rank][col];
            for (int j = col; j < c; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST(Rational, ArithmeticAndParsing)
{
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, -3), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("3/12"), Rational(1, 4));
    EXPECT_EQ(Rational::parse("-5"), Rational(-5));
    EXPECT_EQ(Rational(7, 3).floor(), 2);
    EXPECT_EQ(Rational(-7, 3).floor(), -3);
    EXPECT_EQ(Rational(-7, 3).frac(), Rational(2, 3));
    EXPECT_EQ((Rational(1, 6) + Rational(1, 3)).str(), "1/2");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
}

TEST(Fields, ExactRankExamples)
{
    const FieldSpec q = FieldSpec::Q();
    EXPECT_EQ(exact_rank(ExactMatrix::identity(q, 3)), 3);
    EXPECT_EQ(exact_rank(ExactMatrix(q, 2, 5)), 0);
    // the six roots e_i - e_j of A3 in R^4
    std::vector<Vec> rows;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Vec v = zero_vec(q, 4);
            v[i] = Scalar(q, Rational(1));
            v[j] = Scalar(q, Rational(-1));
            rows.push_back(v);
        }
    EXPECT_EQ(exact_rank(ExactMatrix::from_rows(rows)), 3);
}

TEST(Fields, MixedFieldsRejected)
{
    Vec a{Scalar(FieldSpec::Q(), Rational(1))};
    Vec b{Scalar(FieldSpec::quadratic(5), Rational(1))};
    EXPECT_THROW(ExactMatrix::from_rows({a, b}), std::invalid_argument);
    EXPECT_THROW(Scalar(FieldSpec::Q(), Rational(1)) + Scalar(FieldSpec::quadratic(5), Rational(1)),
                 std::invalid_argument);
}

TEST(Fields, RankMatchesFloatingElimination)
{
    std::mt19937 g(11);
    std::uniform_int_distribution<int> dim(1, 6);
    const FieldSpec q = FieldSpec::Q();
    for (int t = 0; t < 500; ++t) {
        int r = dim(g), c = dim(g);
        ExactMatrix m(q, r, c);
        std::vector<std::vector<double>> f(r, std::vector<double>(c));
        // half of the cases get dependent rows
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                Rational x = rand_rat(g);
                if (t % 2 && i > 0 && j < c) x = (i % 2) ? m.at(i - 1, j).to_rational() * Rational(2, 3) : x;
                m.at(i, j) = Scalar(q, x);
                f[i][j] = x.to_double();
            }
        EXPECT_EQ(exact_rank(m), float_rank(f)) << m.str();
    }
}

TEST(Fields, SignatureExamples)
{
    EXPECT_EQ(hermitian_signature(Eigen::MatrixXcd::Identity(3, 3)), (Signature{3, 0, 0}));
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
    d(0, 0) = 1;
    d(2, 2) = -1;
    EXPECT_EQ(hermitian_signature(d), (Signature{1, 1, 1}));
    const double c4 = std::cos(M_PI / 4), c5 = std::cos(M_PI / 5);
    Eigen::MatrixXcd h(3, 3);
    h << c4, -c5, 0, -c5, c4, -0.5, 0, -0.5, c4;
    EXPECT_EQ(hermitian_signature(h, 1e-9), (Signature{2, 0, 1}));
    Eigen::MatrixXcd bad(2, 2);
    bad << 1, 1, 0, 1;
    EXPECT_THROW(hermitian_signature(bad, 1e-9), std::invalid_argument);
}

TEST(Fields, SignatureCongruenceInvariance)
{
    std::mt19937 g(5);
    std::normal_distribution<double> nd;
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + t % 5;
        // hermitian with prescribed spectrum, some exact zeros
        Eigen::VectorXd spec(n);
        for (int i = 0; i < n; ++i) spec(i) = (i % 3 == 0) ? 0.0 : (i % 3 == 1 ? 1.0 + i : -2.0 - i);
        Eigen::MatrixXcd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = {nd(g), nd(g)};
        Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
        Eigen::MatrixXcd gm = q * spec.cast<std::complex<double>>().asDiagonal() * q.adjoint();
        gm = (gm + gm.adjoint()) / 2.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = {nd(g), nd(g)};
        Eigen::MatrixXcd p = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
        Eigen::MatrixXcd cg = p * gm * p.adjoint();
        cg = (cg + cg.adjoint()) / 2.0;
        EXPECT_EQ(hermitian_signature(cg, 1e-9), hermitian_signature(gm, 1e-9));
    }
}

TEST(Fields, ExactSignatureMatchesNumeric)
{
    std::mt19937 g(3);
    const FieldSpec f = FieldSpec::cyclotomic(12);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + t % 4;
        // B^* D B with a zero on the diagonal of D produces exact degeneracy
        ExactMatrix b(f, n, n), d(f, n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) b.at(i, j) = rand_scalar(g, f);
            d.at(i, i) = Scalar(f, Rational(i == 0 ? 0 : (i % 2 ? 1 : -2)));
        }
        ExactMatrix m = b.adjoint() * d * b;
        Signature ex = exact_hermitian_signature(m);
        Signature nu = hermitian_signature(m.numeric(), 1e-7);
        EXPECT_EQ(ex, nu);
        EXPECT_EQ(ex.dim(), n);
    }
    // zero diagonal with off-diagonal coupling
    ExactMatrix h(f, 2, 2);
    h.at(0, 1) = Scalar::gen_power(f, 3);
    h.at(1, 0) = h.at(0, 1).conj();
    EXPECT_EQ(exact_hermitian_signature(h), (Signature{1, 0, 1}));
}

TEST(Fields, FieldAxiomsQuadraticAndCyclotomic)
{
    std::mt19937 g(7);
    for (const FieldSpec& f : {FieldSpec::quadratic(5), FieldSpec::cyclotomic(12)}) {
        for (int t = 0; t < 200; ++t) {
            Scalar a = rand_scalar(g, f), b = rand_scalar(g, f), c = rand_scalar(g, f);
            EXPECT_EQ((a + b) * c, a * c + b * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ((a - a), Scalar(f));
            if (!a.is_zero()) {
                EXPECT_TRUE((a * a.inverse()).is_one());
                EXPECT_EQ(a * b / a, b);
            }
            EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
            auto na = a.numeric(), nb = b.numeric();
            EXPECT_NEAR(std::abs((a * b).numeric() - na * nb), 0.0, 1e-9);
        }
    }
}

TEST(Fields, GeneratorsAndSigns)
{
    const FieldSpec f5 = FieldSpec::quadratic(5);
    Scalar s5 = Scalar::gen_power(f5, 1);
    EXPECT_EQ(s5 * s5, Scalar(f5, Rational(5)));
    EXPECT_EQ(s5.sign(), 1);
    EXPECT_EQ((s5 - Scalar(f5, Rational(3))).sign(), -1);
    const FieldSpec c5 = FieldSpec::cyclotomic(5);
    Scalar z = Scalar::gen_power(c5, 1);
    Scalar one(c5, Rational(1));
    EXPECT_TRUE(Scalar::gen_power(c5, 5).is_one());
    // 1 + 2(z + z^4) = sqrt 5
    Scalar r5 = one + (z + Scalar::gen_power(c5, 4)) * Rational(2);
    EXPECT_EQ(r5 * r5, Scalar(c5, Rational(5)));
    EXPECT_EQ(r5.sign(), 1);
    EXPECT_NEAR(r5.numeric().real(), std::sqrt(5.0), 1e-12);
    EXPECT_THROW(z.sign(), std::domain_error);
    // sign of a tiny real cyclotomic element agrees with its embedding
    std::mt19937 g(1);
    const FieldSpec c24 = FieldSpec::cyclotomic(24);
    for (int t = 0; t < 200; ++t) {
        Scalar a = rand_scalar(g, c24);
        Scalar r = a + a.conj();
        double v = r.numeric().real();
        if (std::fabs(v) > 1e-12) {
            EXPECT_EQ(r.sign(), v > 0 ? 1 : -1);
        }
    }
    EXPECT_EQ(Scalar(c24).sign(), 0);
}

TEST(Fields, NormAndJson)
{
    const FieldSpec f = FieldSpec::cyclotomic(3);
    Scalar w = Scalar::gen_power(f, 1);
    EXPECT_EQ((Scalar(f, Rational(1)) - w).norm(), Rational(3));
    nlohmann::json j = scalar_to_json(w * Rational(2, 3));
    EXPECT_EQ(scalar_from_json(j, f), w * Rational(2, 3));
    EXPECT_EQ(field_from_json(field_to_json(FieldSpec::cyclotomic(5))), FieldSpec::cyclotomic(5));
    EXPECT_EQ(field_to_json(FieldSpec::cyclotomic(5)).dump(), R"({"N":5,"kind":"cyclotomic"})");
    EXPECT_EQ(scalar_from_json(nlohmann::json("3/4"), FieldSpec::Q()), Scalar(FieldSpec::Q(), Rational(3, 4)));
}

TEST(Fields, ExactLinearAlgebra)
{
    const FieldSpec f = FieldSpec::quadratic(5);
    std::mt19937 g(9);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + t % 4;
        ExactMatrix m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = rand_scalar(g, f);
        if (m.det().is_zero()) continue;
        EXPECT_EQ(m * m.inverse(), ExactMatrix::identity(f, n));
    }
    ExactMatrix s(f, 2, 3);
    s.at(0, 0) = Scalar(f, Rational(1));
    s.at(0, 1) = Scalar::gen_power(f, 1);
    s.at(1, 2) = Scalar(f, Rational(2));
    auto ns = s.nullspace();
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_TRUE(is_zero(s.apply(ns[0])));
    EXPECT_TRUE(positive_definite(ExactMatrix::identity(f, 3)));
}
