#pragma once

#include "dunkl/rational.hpp"
#include "dunkl/rootdata.hpp"
#include "dunkl/signature.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace dunkl {

// Inertia of Q_w on A_w for w_k = exp(pi i (mu_0 + ... + mu_{k-1})), by the
// inductive reduction: mod-1 reduction, removal of integral weights, then
// peeling off the last coordinate. Throws std::domain_error when every mu_i
// is an integer (A_w is then not a hyperplane).
Signature lauricella_signature(const std::vector<Rational>& mu);

// w_1..w_{n+1}
std::vector<std::complex<double>> lauricella_w(const std::vector<Rational>& mu);

// Reflection class of each simple root: 0 for the class of root 0, 1 for the other.
std::vector<int> reflection_classes(const CoxeterDatum& cd);
int class_count(const CoxeterDatum& cd);
// number of mirrors in each class
std::vector<int> class_mirror_counts(const CoxeterDatum& cd);

// kappa0 of the weights kappa_c (one per class) on the whole arrangement
double class_kappa0(const CoxeterDatum& cd, const std::vector<double>& kappa);

// Invariant hermitian form of the Hecke reflection representation, with
// t_c = exp(i pi kappa_c / 2). kappa holds one value per class (a single value
// is used for every class).
Eigen::MatrixXd hecke_gram(const CoxeterDatum& cd, const std::vector<double>& kappa);

// rho(sigma_i)(z) = z - l_i(z) e_i
std::vector<Eigen::MatrixXcd> reflection_rep(const CoxeterDatum& cd, const std::vector<double>& kappa);

// prod_j (cos(pi kappa / 2) - cos(pi m_j / h)); single-class groups only
double coxeter_det(const CoxeterDatum& cd, double kappa);

struct HyperbolicExponent {
    bool exact = false;
    Rational value;         // kappa0 units, when exact
    double lo = 0, hi = 0;  // bracket in kappa0 units otherwise
};

// Supremum of kappa0 along the ray s * kappa (kappa per class) up to which the
// flat form stays hyperbolic. For constant weights this is m_2; otherwise the
// first zero of det(hecke_gram) past the parabolic point, bracketed to 1e-8.
HyperbolicExponent hyperbolic_exponent(const CoxeterDatum& cd, const std::vector<double>& kappa);

// No sign change of det(hecke_gram(s kappa)) for s between the parabolic point
// and 1 (10^4 samples, bisection on suspected zeros).
bool ray_admissible(const CoxeterDatum& cd, const std::vector<double>& kappa);

} // namespace dunkl
