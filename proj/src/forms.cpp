#include "dunkl/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {

namespace {

constexpr double kPi = std::numbers::pi;

Rational frac(const Rational& x)
{
    return x - Rational(x.floor());
}

// mu_i in (0,1), not all removed
Signature peel(std::vector<Rational> mu)
{
    const int n = static_cast<int>(mu.size()) - 1;
    if (n == 0) return {};
    Rational head;
    for (int i = 0; i < n; ++i) head += mu[i];
    if (!head.is_integer()) {
        // Q_w = Q_w' (+) (-t im w_{n+1}) a_{n+1}^2
        Rational total = head + mu[n];
        mu.pop_back();
        Signature s = peel(mu);
        if (total.is_integer())
            s.null += 1;
        else if (total.floor() == head.floor() + 1)
            s.neg += 1;
        else
            s.pos += 1;
        return s;
    }
    // w_n real: the last two coordinates split off a hyperbolic plane
    mu.resize(n - 1);
    Signature s = peel(mu);
    s.pos += 1;
    s.neg += 1;
    return s;
}

std::complex<double> unit(double turns_half)
{
    return std::polar(1.0, kPi * turns_half);
}

bool in_class_list(const std::vector<int>& v, int i)
{
    return std::find(v.begin(), v.end(), i) != v.end();
}

std::vector<double> per_root(const CoxeterDatum& cd, const std::vector<double>& kappa)
{
    if (!cd.real) throw std::invalid_argument(cd.label + " has no Coxeter matrix");
    if (kappa.empty() || static_cast<int>(kappa.size()) > class_count(cd))
        throw std::invalid_argument("one weight per reflection class expected");
    auto cls = reflection_classes(cd);
    std::vector<double> out;
    for (int c : cls) out.push_back(kappa.size() == 1 ? kappa[0] : kappa[c]);
    return out;
}

// Re(exp(i pi / m) t_i^{1/2} t_j^{-1/2}), zero for commuting generators
double lambda(int m, double ki, double kj)
{
    if (m == 2) return 0.0;
    return std::cos(kPi / m + kPi * (ki - kj) / 4);
}

double det_at(const CoxeterDatum& cd, const std::vector<double>& kappa, double s)
{
    std::vector<double> k;
    for (double x : kappa) k.push_back(s * x);
    return hecke_gram(cd, k).determinant();
}

} // namespace

Signature lauricella_signature(const std::vector<Rational>& mu)
{
    if (mu.empty()) throw std::invalid_argument("no weights");
    Signature s;
    std::vector<Rational> kept;
    for (const auto& m : mu) {
        Rational r = frac(m);
        // an integral weight repeats a w and adds one null direction
        if (r.is_zero())
            s.null += 1;
        else
            kept.push_back(r);
    }
    if (kept.empty()) throw std::domain_error("all weights are integers");
    s += peel(kept);
    return s;
}

std::vector<std::complex<double>> lauricella_w(const std::vector<Rational>& mu)
{
    std::vector<std::complex<double>> w;
    Rational acc;
    for (const auto& m : mu) {
        acc += m;
        // reduce mod 2 before converting
        Rational r = acc - Rational(2 * (acc / Rational(2)).floor());
        w.push_back(unit(r.to_double()));
    }
    return w;
}

std::vector<int> reflection_classes(const CoxeterDatum& cd)
{
    std::vector<int> c(cd.rank, 0);
    for (int i = 0; i < cd.rank; ++i)
        if (in_class_list(cd.short_roots, i)) c[i] = 1;
    return c;
}

int class_count(const CoxeterDatum& cd)
{
    return cd.short_roots.empty() ? 1 : 2;
}

std::vector<int> class_mirror_counts(const CoxeterDatum& cd)
{
    if (class_count(cd) == 1) return {cd.mirrors};
    const int n = cd.rank;
    if (cd.label == "F4") return {12, 12};
    if (cd.label[0] == 'B') return {n * (n - 1), n};
    // dihedral of even order
    return {cd.mirrors / 2, cd.mirrors / 2};
}

double class_kappa0(const CoxeterDatum& cd, const std::vector<double>& kappa)
{
    auto counts = class_mirror_counts(cd);
    double s = 0;
    for (std::size_t c = 0; c < counts.size(); ++c) s += counts[c] * (kappa.size() == 1 ? kappa[0] : kappa[c]);
    return s / cd.rank;
}

Eigen::MatrixXd hecke_gram(const CoxeterDatum& cd, const std::vector<double>& kappa)
{
    const int n = cd.rank;
    auto k = per_root(cd, kappa);
    auto cls = reflection_classes(cd);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    if (class_count(cd) == 1) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) h(i, j) = i == j ? std::cos(kPi * k[i] / 2) : -std::cos(kPi / cd.m[i][j]);
        return h;
    }
    // the edge joining the classes fixes lambda (class 0 to 1) and lambda' (1 to 0)
    int j0 = -1, j1 = -1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cls[i] == 0 && cls[j] == 1 && cd.m[i][j] != 2) j0 = i, j1 = j;
    const int m = cd.m[j0][j1];
    const double lam = lambda(m, k[j0], k[j1]);
    const double lamp = lambda(m, k[j1], k[j0]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double c = i == j ? 0.0 : std::cos(kPi / cd.m[i][j]);
            if (i == j)
                h(i, j) = (cls[i] == 0 ? lamp : lam) * std::cos(kPi * k[i] / 2);
            else if (cls[i] == 0 && cls[j] == 0)
                h(i, j) = -lamp * c;
            else if (cls[i] == 1 && cls[j] == 1)
                h(i, j) = -lam * c;
            else if (cd.m[i][j] != 2)
                h(i, j) = -lam * lamp;
        }
    return h;
}

std::vector<Eigen::MatrixXcd> reflection_rep(const CoxeterDatum& cd, const std::vector<double>& kappa)
{
    const int n = cd.rank;
    auto k = per_root(cd, kappa);
    std::vector<Eigen::MatrixXcd> out;
    for (int i = 0; i < n; ++i) {
        const std::complex<double> t = unit(k[i] / 2);
        Eigen::RowVectorXcd l(n);
        for (int j = 0; j < n; ++j) l(j) = i == j ? 1.0 + t * t : -2.0 * lambda(cd.m[i][j], k[i], k[j]) * t;
        Eigen::MatrixXcd s = Eigen::MatrixXcd::Identity(n, n);
        s.row(i) -= l;
        out.push_back(s);
    }
    return out;
}

double coxeter_det(const CoxeterDatum& cd, double kappa)
{
    if (!cd.real) throw std::invalid_argument(cd.label + " has no Coxeter matrix");
    if (class_count(cd) != 1) throw std::invalid_argument(cd.label + " has two reflection classes");
    double p = 1;
    for (int m : cd.exponents) p *= std::cos(kPi * kappa / 2) - std::cos(kPi * m / cd.h);
    return p;
}

HyperbolicExponent hyperbolic_exponent(const CoxeterDatum& cd, const std::vector<double>& kappa)
{
    if (!cd.real) throw std::invalid_argument(cd.label + " has no Coxeter matrix");
    HyperbolicExponent r;
    const bool constant = kappa.size() == 1 || std::all_of(kappa.begin(), kappa.end(), [&](double x) { return x == kappa[0]; });
    if (constant) {
        r.exact = true;
        r.value = Rational(cd.exponents.at(1));
        r.lo = r.hi = cd.exponents.at(1);
        return r;
    }
    const double k0 = class_kappa0(cd, kappa);
    if (k0 <= 0) throw std::invalid_argument("ray never reaches the parabolic point");
    const double sp = 1.0 / k0;
    const double kmax = *std::max_element(kappa.begin(), kappa.end());
    const double smax = 2.0 / kmax;
    const int samples = 10000;
    double prev_s = sp * (1 + 1e-6);
    double prev = det_at(cd, kappa, prev_s);
    for (int i = 1; i <= samples; ++i) {
        double s = prev_s + (smax - sp) / samples;
        double d = det_at(cd, kappa, s);
        if ((d > 0) != (prev > 0) || d == 0) {
            double a = prev_s, b = s, da = prev;
            while ((b - a) * k0 > 1e-8) {
                double mid = (a + b) / 2, dm = det_at(cd, kappa, mid);
                if ((dm > 0) == (da > 0) && dm != 0)
                    a = mid, da = dm;
                else
                    b = mid;
            }
            r.lo = a * k0;
            r.hi = b * k0;
            return r;
        }
        prev_s = s;
        prev = d;
    }
    throw std::runtime_error("no degeneration of the hermitian form along the ray");
}

bool ray_admissible(const CoxeterDatum& cd, const std::vector<double>& kappa)
{
    const double k0 = class_kappa0(cd, kappa);
    if (k0 <= 1) return true;
    const double sp = 1.0 / k0;
    const int samples = 10000;
    const double a = sp * (1 + 1e-9);
    std::vector<double> s(samples + 1), d(samples + 1);
    double scale = 0;
    for (int i = 0; i <= samples; ++i) {
        s[i] = a + (1.0 - a) * i / samples;
        d[i] = det_at(cd, kappa, s[i]);
        scale = std::max(scale, std::abs(d[i]));
        if (d[i] == 0 || (d[i] > 0) != (d[0] > 0)) return false;
    }
    // a double zero between samples keeps the sign: refine small local minima of |det|
    for (int i = 1; i < samples; ++i) {
        if (!(std::abs(d[i]) <= std::abs(d[i - 1]) && std::abs(d[i]) <= std::abs(d[i + 1]))) continue;
        if (std::abs(d[i]) > 1e-3 * scale) continue;
        double lo = s[i - 1], hi = s[i + 1];
        for (int it = 0; it < 100; ++it) {
            double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (std::abs(det_at(cd, kappa, m1)) < std::abs(det_at(cd, kappa, m2)))
                hi = m2;
            else
                lo = m1;
        }
        if (std::abs(det_at(cd, kappa, (lo + hi) / 2)) < 1e-12 * std::max(1.0, scale)) return false;
    }
    return true;
}

} // namespace dunkl
