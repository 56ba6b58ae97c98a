#pragma once

#include "dunkl/dunkl.hpp"

#include "json.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace dunkl {

// Gauss rule for the weight (1 - x)^alpha (1 + x)^beta on [-1, 1] (Golub-Welsch)
struct GaussRule {
    Eigen::VectorXd x;
    Eigen::VectorXd w;
};
GaussRule gauss_jacobi(int n, double alpha, double beta);

struct QuadratureSpec {
    int nodes = 24;      // per panel; doubled once for the error estimate
    int max_depth = 30;  // panel bisections
    double tol = 1e-12;  // relative
};

// integral over [a, b] of (b - t)^alpha (t - a)^beta g(t), alpha, beta > -1.
// Panels next to a and b keep the Jacobi weight, inner panels are Gauss-Legendre.
struct QuadratureResult {
    double value = 0;
    double error = 0;
};
QuadratureResult jacobi_integral(const std::function<double(double)>& g, double a, double b, double alpha, double beta,
                                 const QuadratureSpec& spec = {});

// F_k = int over [z_{k-1}, z_k] of the real positive branch of
// prod |z_i - t|^{-mu_i} dt, k = 1..n; F_{n+1} over [z_n, infinity) is added
// when sum mu > 1. z strictly increasing, mu_i in (0, 1).
struct LauricellaValues {
    std::vector<double> F;
    std::vector<double> error;
    bool tail = false;
};
LauricellaValues lauricella_values(const std::vector<double>& mu, const std::vector<double>& z, double tol = 1e-12);

// sum_k im(w_k) F_k relative to max |F_k|
double lauricella_relation(const std::vector<double>& mu, const LauricellaValues& v);

// N = sum_{j<k} im(w_j conj w_k) F_j F_k and the direct value -int_C |eta|^2 dA;
// requires 1 < sum mu < 2
struct HermitianN {
    double formula = 0;
    double direct = 0;
    double direct_error = 0;
    double relative_difference = 0;
    std::vector<double> F;
};
HermitianN hermitian_N(const std::vector<double>& mu, const std::vector<double>& z, double tol = 1e-6);
double planar_integral(const std::vector<double>& mu, const std::vector<double>& z, double tol, double* error = nullptr);

// closed polygon in V (coordinates of the system's arrangement); the last
// vertex connects back to the first
struct Loop {
    std::vector<Eigen::VectorXcd> vertices;
    std::string description;
};

// small loop around mirror x, based at a generic point next to it
Loop mirror_loop(const DunklSystem& sys, int x, double radius_fraction = 0.25, int sides = 48, unsigned seed = 7);

struct MonodromyResult {
    std::string loop;
    Eigen::MatrixXcd matrix;
    Eigen::VectorXcd eigenvalues;
    double residual = 0;  // transport difference against a nearby homotopic loop
    double tol = 0;
    long steps = 0;
};

// solves dY = Omega(gamma') Y along the path, Omega = sum kappa_H dphi_H / phi_H pi_H
Eigen::MatrixXcd transport(const DunklSystem& sys, const std::vector<Eigen::VectorXcd>& path, double tol = 1e-10,
                           double margin = 1e-3, long* steps = nullptr);
MonodromyResult monodromy_transport(const DunklSystem& sys, const Loop& loop, double tol = 1e-10, double margin = 1e-3);

// walls of the chamber of the real point x0 (real arrangements only)
std::vector<int> chamber_walls(const DunklSystem& sys, const Eigen::VectorXd& x0);
// transport from x0 to s_H x0 along a half turn around H, composed with s_H
Eigen::MatrixXcd braid_generator(const DunklSystem& sys, const Eigen::VectorXd& x0, int wall, double tol = 1e-10);
// a real point in an open chamber, fixed by the seed
Eigen::VectorXd generic_real_point(const DunklSystem& sys, unsigned seed = 11);

// max over i < j of |d_i d_j F - (mu_j d_i F - mu_i d_j F)/(z_i - z_j)| for F = F_k,
// by central differences with step h
struct PdeResidual {
    double residual = 0;
    double noise = 0;  // quadrature error propagated through the differences
};
PdeResidual pde_residual(const std::vector<double>& mu, const std::vector<double>& z, double h, int k = 1);

nlohmann::json lauricella_to_json(const std::vector<double>& mu, const std::vector<double>& z, const LauricellaValues& v);
nlohmann::json monodromy_to_json(const MonodromyResult& r);

} // namespace dunkl
