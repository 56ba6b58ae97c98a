#include "dunkl/forms.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace dunkl;

namespace {

constexpr double kPi = std::numbers::pi;

Rational R(std::int64_t p, std::int64_t q = 1)
{
    return Rational(p, q);
}

// inertia of Q_w restricted to A_w, straight from the definitions
Signature lauricella_oracle(const std::vector<Rational>& mu)
{
    const int n1 = static_cast<int>(mu.size());
    std::vector<std::complex<double>> w;
    double acc = 0;
    for (const auto& m : mu) {
        acc += m.to_double();
        w.push_back(std::polar(1.0, kPi * acc));
    }
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n1, n1);
    for (int j = 0; j < n1; ++j)
        for (int k = j + 1; k < n1; ++k) q(j, k) = q(k, j) = std::imag(w[j] * std::conj(w[k])) / 2;
    Eigen::RowVectorXd row(n1);
    for (int k = 0; k < n1; ++k) row(k) = std::imag(w[k]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(row, Eigen::ComputeFullV);
    Eigen::MatrixXd b = svd.matrixV().rightCols(n1 - 1);
    Eigen::MatrixXd restricted = b.transpose() * q * b;
    return hermitian_signature(Eigen::MatrixXcd(restricted.cast<std::complex<double>>()), 1e-8);
}

std::vector<std::string> real_groups()
{
    return {"A2", "A3", "A4", "B2", "B3", "B4", "D4", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)", "I2(8)"};
}

Eigen::MatrixXcd artin_word(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int len)
{
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    for (int i = 0; i < len; ++i) p = p * (i % 2 == 0 ? a : b);
    return p;
}

} // namespace

TEST(Forms, LauricellaSignatureExamples)
{
    EXPECT_EQ(lauricella_signature({R(1, 4), R(1, 4), R(1, 4), R(1, 4)}), (Signature{2, 1, 0}));
    EXPECT_EQ(lauricella_signature({R(2, 5), R(2, 5), R(2, 5), R(2, 5)}), (Signature{2, 0, 1}));
    EXPECT_EQ(lauricella_signature({R(1, 6), R(1, 6), R(1, 6), R(1, 6)}), (Signature{3, 0, 0}));
    // integral sum: one null direction and a hyperbolic quotient
    EXPECT_EQ(lauricella_signature({R(1, 2), R(1, 2), R(1, 2), R(1, 2)}), (Signature{1, 1, 1}));
    EXPECT_THROW(lauricella_signature({R(1), R(2)}), std::domain_error);
}

TEST(Forms, LauricellaSignatureMatchesExplicitForm)
{
    std::mt19937 g(2024);
    std::uniform_int_distribution<int> nd(1, 6), dd(1, 24);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        const int n = nd(g);
        std::vector<Rational> mu;
        bool integral = true;
        for (int i = 0; i <= n; ++i) {
            int q = dd(g);
            std::uniform_int_distribution<int> pd(-q, 2 * q);
            mu.push_back(R(pd(g), q));
            integral = integral && mu.back().is_integer();
        }
        if (integral) mu[0] += R(1, 2);
        ASSERT_EQ(lauricella_signature(mu), lauricella_oracle(mu)) << t;
        ++checked;
    }
    EXPECT_EQ(checked, 1000);
}

TEST(Forms, LauricellaClosedFormAwayFromIntegers)
{
    std::mt19937 g(3);
    std::uniform_int_distribution<int> nd(1, 6), pd(1, 47);
    for (int t = 0; t < 300; ++t) {
        std::vector<Rational> mu;
        Rational sum;
        for (int i = 0; i <= nd(g); ++i) {
            mu.push_back(R(pd(g), 24));
            sum += mu.back();
        }
        bool integral = sum.is_integer();
        for (const auto& m : mu) integral = integral || m.is_integer();
        if (integral) continue;
        std::int64_t index = sum.floor();
        for (const auto& m : mu) index -= m.floor();
        Signature s = lauricella_signature(mu);
        EXPECT_EQ(s.null, 0);
        EXPECT_EQ(s.neg, index);
    }
}

TEST(Forms, HeckeGramA2)
{
    CoxeterDatum a2 = coxeter_datum("A2");
    Eigen::MatrixXd h = hecke_gram(a2, {1.0 / 3});
    EXPECT_NEAR(h(0, 0), std::cos(kPi / 6), 1e-15);
    EXPECT_NEAR(h(0, 1), -0.5, 1e-15);
    EXPECT_NEAR(h.determinant(), 0.5, 1e-14);
    EXPECT_NEAR(coxeter_det(a2, 1.0 / 3), 0.5, 1e-14);
}

TEST(Forms, HeckeGramInertia)
{
    Eigen::MatrixXd h3 = hecke_gram(coxeter_datum("H3"), {0.5});
    EXPECT_EQ(hermitian_signature(Eigen::MatrixXcd(h3.cast<std::complex<double>>())), (Signature{2, 0, 1}));
    Eigen::MatrixXd f4 = hecke_gram(coxeter_datum("F4"), {0.0, 1.0 / 3});
    EXPECT_EQ(hermitian_signature(Eigen::MatrixXcd(f4.cast<std::complex<double>>())), (Signature{3, 1, 0}));
    const double c = std::cos(kPi / 4), c10 = std::cos(kPi / 10);
    EXPECT_NEAR(coxeter_det(coxeter_datum("H3"), 0.5), c * (c * c - c10 * c10), 1e-14);
}

TEST(Forms, ReflectionRepresentation)
{
    std::mt19937 g(8);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (const auto& label : real_groups()) {
        CoxeterDatum cd = coxeter_datum(label);
        for (int t = 0; t < 20; ++t) {
            std::vector<double> k{u(g)};
            if (class_count(cd) == 2) k.push_back(u(g));
            auto s = reflection_rep(cd, k);
            Eigen::MatrixXd h = hecke_gram(cd, k);
            auto cls = reflection_classes(cd);
            const int n = cd.rank;
            Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
            for (int i = 0; i < n; ++i) {
                std::complex<double> t2 = std::polar(1.0, kPi * k[k.size() == 1 ? 0 : cls[i]]);
                EXPECT_LT(((s[i] - id) * (s[i] + t2 * id)).norm(), 1e-12) << label;
                EXPECT_LT((s[i].adjoint() * h * s[i] - h).norm(), 1e-12) << label;
                for (int j = i + 1; j < n; ++j) {
                    int m = cd.m[i][j];
                    EXPECT_LT((artin_word(s[i], s[j], m) - artin_word(s[j], s[i], m)).norm(), 1e-12) << label;
                }
            }
        }
    }
}

TEST(Forms, A2ProductEigenvalues)
{
    const double k = 1.0 / 3;  // t = exp(i pi / 6)
    auto s = reflection_rep(coxeter_datum("A2"), {k});
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(s[0] * s[1]);
    std::complex<double> t2 = std::polar(1.0, kPi * k);
    std::vector<std::complex<double>> want{t2 * std::polar(1.0, 2 * kPi / 3), t2 * std::polar(1.0, -2 * kPi / 3)};
    for (const auto& w : want) {
        double best = 1;
        for (int i = 0; i < 2; ++i) best = std::min(best, std::abs(es.eigenvalues()(i) - w));
        EXPECT_LT(best, 1e-12);
    }
}

TEST(Forms, CoxeterDeterminantFormula)
{
    std::mt19937 g(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const std::string label : {"A1", "A2", "A3", "A4", "D4", "H3", "H4", "I2(5)", "I2(7)"}) {
        CoxeterDatum cd = coxeter_datum(label);
        for (int t = 0; t < 50; ++t) {
            double k = u(g);
            double want = coxeter_det(cd, k);
            double got = hecke_gram(cd, {k}).determinant();
            EXPECT_LE(std::abs(got - want), 1e-10 * std::abs(want)) << label << " " << k;
        }
    }
    // equal weights on both classes: the form is cos(pi/4) times the one-class form
    for (const std::string label : {"B3", "F4", "B4"}) {
        CoxeterDatum cd = coxeter_datum(label);
        double k = 0.37, p = std::pow(std::cos(kPi / 4), cd.rank);
        for (int m : cd.exponents) p *= std::cos(kPi * k / 2) - std::cos(kPi * m / cd.h);
        EXPECT_NEAR(hecke_gram(cd, {k, k}).determinant(), p, 1e-12);
    }
}

TEST(Forms, DegenerateExactlyAtExponents)
{
    for (const std::string label : {"A3", "B3", "H3", "H4"}) {
        CoxeterDatum cd = coxeter_datum(label);
        for (int k0 = 1; k0 < cd.h; ++k0) {
            // kappa0 = h kappa / 2
            double k = 2.0 * k0 / cd.h;
            double d = hecke_gram(cd, {k}).determinant();
            bool exponent = std::find(cd.exponents.begin(), cd.exponents.end(), k0) != cd.exponents.end();
            if (exponent)
                EXPECT_LT(std::abs(d), 1e-12) << label << " " << k0;
            else
                EXPECT_GT(std::abs(d), 1e-6) << label << " " << k0;
        }
    }
}

TEST(Forms, DefiniteExactlyBelowOne)
{
    std::mt19937 g(6);
    std::uniform_real_distribution<double> u(0.001, 0.999);
    const std::vector<std::string> groups{"A3", "A4", "D4", "D5", "E6", "H3", "H4", "B3", "F4"};
    for (int t = 0; t < 100; ++t) {
        CoxeterDatum cd = coxeter_datum(groups[t % groups.size()]);
        double k = u(g);
        double k0 = cd.h * k / 2;
        if (std::abs(k0 - 1) < 1e-6) continue;
        Signature s = hermitian_signature(Eigen::MatrixXcd(hecke_gram(cd, {k}).cast<std::complex<double>>()), 1e-9);
        EXPECT_EQ(s == (Signature{cd.rank, 0, 0}), k0 < 1) << cd.label << " " << k;
    }
    for (const std::string label : {"A3", "E6", "H4"}) {
        CoxeterDatum cd = coxeter_datum(label);
        Signature s = hermitian_signature(Eigen::MatrixXcd(hecke_gram(cd, {2.0 / cd.h}).cast<std::complex<double>>()), 1e-9);
        EXPECT_EQ(s, (Signature{cd.rank - 1, 1, 0})) << label;
    }
}

TEST(Forms, HyperbolicExponent)
{
    auto h3 = hyperbolic_exponent(coxeter_datum("H3"), {1.0 / 3});
    EXPECT_TRUE(h3.exact);
    EXPECT_EQ(h3.value, R(5));
    EXPECT_EQ(hyperbolic_exponent(coxeter_datum("A3"), {0.2}).value, R(2));
    CoxeterDatum f4 = coxeter_datum("F4");
    auto r = hyperbolic_exponent(f4, {0.0, 1.0 / 3});
    EXPECT_FALSE(r.exact);
    EXPECT_LT(r.hi - r.lo, 1e-7);
    EXPECT_GT(r.lo, 1.0);
    // determinant changes sign across the bracket
    auto det = [&](double k0) {
        double s = k0 / class_kappa0(f4, {0.0, 1.0 / 3});
        return hecke_gram(f4, {0.0, s / 3}).determinant();
    };
    EXPECT_LT(det(r.lo) * det(r.hi), 0.0);
    EXPECT_TRUE(ray_admissible(f4, {0.0, 1 - 2.0 / 12}));
}
