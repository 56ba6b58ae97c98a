#include "dunkl/numlab.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

namespace dunkl {

namespace {

constexpr double kPi = 3.14159265358979323846;

const GaussRule& cached_rule(int n, double alpha, double beta)
{
    thread_local std::map<std::tuple<int, double, double>, GaussRule> cache;
    auto key = std::make_tuple(n, alpha, beta);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, gauss_jacobi(n, alpha, beta)).first;
    return it->second;
}

struct Panels {
    const std::function<double(double)>& g;
    double a, b, alpha, beta;
    const QuadratureSpec& spec;

    // weight exponent at lo is wl (0 or beta), at hi is wr (0 or alpha)
    double pass(double lo, double hi, int n) const
    {
        const bool left = lo == a, right = hi == b;
        const double wl = left ? beta : 0, wr = right ? alpha : 0;
        const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        const GaussRule& r = cached_rule(n, wr, wl);
        double s = 0;
        for (int i = 0; i < r.x.size(); ++i) {
            const double t = c + h * r.x(i);
            double v = g(t);
            if (!left) v *= std::pow(t - a, beta);
            if (!right) v *= std::pow(b - t, alpha);
            s += r.w(i) * v;
        }
        return s * std::pow(h, 1 + wl + wr);
    }

    QuadratureResult run(double lo, double hi, int depth, double abs_tol) const
    {
        const double coarse = pass(lo, hi, spec.nodes);
        const double fine = pass(lo, hi, 2 * spec.nodes);
        const double err = std::abs(fine - coarse);
        if (err <= abs_tol || err <= 64 * std::numeric_limits<double>::epsilon() * std::abs(fine) || depth >= spec.max_depth)
            return {fine, err};
        const double mid = 0.5 * (lo + hi);
        QuadratureResult l = run(lo, mid, depth + 1, abs_tol / 2);
        QuadratureResult r = run(mid, hi, depth + 1, abs_tol / 2);
        return {l.value + r.value, l.error + r.error};
    }
};

std::vector<double> partial_sums(const std::vector<double>& mu)
{
    // s_k = mu_0 + ... + mu_{k-1}, k = 1..n+1
    std::vector<double> s(mu.size());
    double acc = 0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
        acc += mu[k];
        s[k] = acc;
    }
    return s;
}

void check_points(const std::vector<double>& mu, const std::vector<double>& z)
{
    if (mu.size() < 2 || mu.size() != z.size()) throw std::invalid_argument("need matching mu and z with at least two points");
    for (double m : mu)
        if (!(m > 0 && m < 1)) throw std::invalid_argument("weights must lie in (0,1)");
    for (std::size_t i = 1; i < z.size(); ++i)
        if (!(z[i] > z[i - 1])) throw std::invalid_argument("z must be strictly increasing");
}

struct NumericArrangement {
    int n = 0;
    std::vector<Eigen::RowVectorXcd> a;  // phi_H(x) = a_H x
    std::vector<Eigen::VectorXcd> normal;
    std::vector<Eigen::MatrixXcd> P;  // kappa_H pi_H
    std::vector<std::string> labels;
    bool real = true;

    explicit NumericArrangement(const DunklSystem& sys)
    {
        const Arrangement& arr = sys.arrangement;
        n = arr.dim;
        Eigen::MatrixXcd G = arr.gram.numeric();
        for (int x = 0; x < arr.size(); ++x) {
            Eigen::VectorXcd v(n);
            for (int i = 0; i < n; ++i) v(i) = arr.normals[x][i].numeric();
            Eigen::RowVectorXcd row = (G * v.conjugate()).transpose();
            const std::complex<double> nn = row * v;
            a.push_back(row);
            normal.push_back(v);
            P.push_back(sys.kappa[x].to_double() * (v * row) / nn);
            labels.push_back(arr.labels[x]);
            if (v.imag().norm() > 1e-14) real = false;
        }
        if (G.imag().norm() > 1e-14) real = false;
    }

    double distance(int x, const Eigen::VectorXcd& p) const { return std::abs((a[x] * p)(0)) / a[x].norm(); }

    // min over the segment [p, q] of the distance to mirror x
    double segment_distance(int x, const Eigen::VectorXcd& p, const Eigen::VectorXcd& q) const
    {
        const std::complex<double> c0 = (a[x] * p)(0), c1 = (a[x] * (q - p))(0);
        double t = std::norm(c1) > 0 ? -std::real(std::conj(c1) * c0) / std::norm(c1) : 0;
        t = std::clamp(t, 0.0, 1.0);
        return std::abs(c0 + t * c1) / a[x].norm();
    }

    Eigen::VectorXcd reflect(int x, const Eigen::VectorXcd& v) const
    {
        const std::complex<double> nn = (a[x] * normal[x])(0);
        return v - 2.0 * (a[x] * v)(0) / nn * normal[x];
    }
};

using State = std::vector<std::complex<double>>;

double loop_margin(const NumericArrangement& na, const std::vector<Eigen::VectorXcd>& path, bool closed)
{
    double d = std::numeric_limits<double>::infinity();
    const std::size_t segs = closed ? path.size() : path.size() - 1;
    for (std::size_t i = 0; i < segs; ++i)
        for (std::size_t x = 0; x < na.a.size(); ++x)
            d = std::min(d, na.segment_distance(static_cast<int>(x), path[i], path[(i + 1) % path.size()]));
    return d;
}

Eigen::MatrixXcd transport_path(const NumericArrangement& na, const std::vector<Eigen::VectorXcd>& path, bool closed, double tol,
                                double margin, long* steps)
{
    namespace odeint = boost::numeric::odeint;
    if (path.size() < 2) throw std::invalid_argument("path needs at least two vertices");
    double diam = 0;
    for (const auto& p : path)
        for (const auto& q : path) diam = std::max(diam, (p - q).norm());
    const std::size_t segs = closed ? path.size() : path.size() - 1;
    for (std::size_t i = 0; i < segs; ++i)
        for (std::size_t x = 0; x < na.a.size(); ++x)
            if (na.segment_distance(static_cast<int>(x), path[i], path[(i + 1) % path.size()]) <= margin * diam)
                throw std::domain_error("path passes within the margin of mirror " + na.labels[x]);
    const int n = na.n;
    State y(n * n);
    for (int i = 0; i < n; ++i) y[i * n + i] = 1;
    long count = 0;
    for (std::size_t s = 0; s < segs; ++s) {
        const Eigen::VectorXcd p = path[s], d = path[(s + 1) % path.size()] - path[s];
        std::vector<std::complex<double>> c0, c1;
        for (const auto& a : na.a) {
            c0.push_back((a * p)(0));
            c1.push_back((a * d)(0));
        }
        auto rhs = [&](const State& st, State& dst, double t) {
            Eigen::Map<const Eigen::MatrixXcd> Y(st.data(), n, n);
            Eigen::MatrixXcd om = Eigen::MatrixXcd::Zero(n, n);
            for (std::size_t x = 0; x < na.P.size(); ++x) om += (c1[x] / (c0[x] + t * c1[x])) * na.P[x];
            Eigen::Map<Eigen::MatrixXcd> D(dst.data(), n, n);
            D = om * Y;
        };
        auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<State>());
        count += static_cast<long>(odeint::integrate_adaptive(stepper, rhs, y, 0.0, 1.0, 1e-3));
    }
    if (steps) *steps = count;
    return Eigen::Map<Eigen::MatrixXcd>(y.data(), n, n);
}

} // namespace

GaussRule gauss_jacobi(int n, double alpha, double beta)
{
    if (n < 1) throw std::invalid_argument("need at least one node");
    if (!(alpha > -1 && beta > -1)) throw std::invalid_argument("Jacobi exponents must exceed -1");
    Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + alpha + beta;
        diag(k) = k == 0 ? (beta - alpha) / (alpha + beta + 2) : (beta * beta - alpha * alpha) / (s * (s + 2));
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + alpha + beta;
        double b2;
        if (k == 1) b2 = 4 * (1 + alpha) * (1 + beta) / ((2 + alpha + beta) * (2 + alpha + beta) * (3 + alpha + beta));
        else b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + alpha + beta) / (s * s * (s + 1) * (s - 1));
        off(k - 1) = std::sqrt(b2);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    const double mu0 = std::pow(2.0, alpha + beta + 1) * boost::math::beta(alpha + 1, beta + 1);
    GaussRule r;
    r.x = es.eigenvalues();
    r.w.resize(n);
    for (int i = 0; i < n; ++i) r.w(i) = mu0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    return r;
}

QuadratureResult jacobi_integral(const std::function<double(double)>& g, double a, double b, double alpha, double beta,
                                 const QuadratureSpec& spec)
{
    if (!(b > a)) throw std::invalid_argument("empty interval");
    if (!(alpha > -1 && beta > -1)) throw std::invalid_argument("Jacobi exponents must exceed -1");
    Panels p{g, a, b, alpha, beta, spec};
    const double first = p.pass(a, b, 2 * spec.nodes);
    return p.run(a, b, 0, spec.tol * std::max(std::abs(first), std::numeric_limits<double>::min()));
}

LauricellaValues lauricella_values(const std::vector<double>& mu, const std::vector<double>& z, double tol)
{
    check_points(mu, z);
    const int n = static_cast<int>(mu.size()) - 1;
    QuadratureSpec spec;
    spec.tol = tol;
    LauricellaValues out;
    for (int k = 1; k <= n; ++k) {
        auto g = [&, k](double t) {
            double v = 1;
            for (int i = 0; i <= n; ++i)
                if (i != k - 1 && i != k) v *= std::pow(std::abs(z[i] - t), -mu[i]);
            return v;
        };
        QuadratureResult r = jacobi_integral(g, z[k - 1], z[k], -mu[k], -mu[k - 1], spec);
        out.F.push_back(r.value);
        out.error.push_back(r.error);
    }
    const double total = std::accumulate(mu.begin(), mu.end(), 0.0);
    if (total > 1) {
        // t = z_n + L (1 + x) / (1 - x)
        const double L = z[n] - z[0];
        auto g = [&](double x) {
            double v = 2 * std::pow(L, 1 - mu[n]);
            for (int i = 0; i < n; ++i) v *= std::pow((z[n] - z[i]) * (1 - x) + L * (1 + x), -mu[i]);
            return v;
        };
        QuadratureResult r = jacobi_integral(g, -1, 1, total - 2, -mu[n], spec);
        out.F.push_back(r.value);
        out.error.push_back(r.error);
        out.tail = true;
    }
    return out;
}

double lauricella_relation(const std::vector<double>& mu, const LauricellaValues& v)
{
    if (!v.tail) throw std::domain_error("the relation needs F_{n+1}: sum of weights must exceed 1");
    auto s = partial_sums(mu);
    double acc = 0, scale = 0;
    for (std::size_t k = 0; k < v.F.size(); ++k) {
        acc += std::sin(kPi * s[k]) * v.F[k];
        scale = std::max(scale, std::abs(v.F[k]));
    }
    return std::abs(acc) / scale;
}

double planar_integral(const std::vector<double>& mu, const std::vector<double>& z, double tol, double* error)
{
    check_points(mu, z);
    const double total = std::accumulate(mu.begin(), mu.end(), 0.0);
    if (!(total > 1)) throw std::domain_error("the planar integral diverges unless the weights sum to more than 1");
    const int m = static_cast<int>(mu.size());
    const double span = z.back() - z.front();
    const double R = 4 * span;
    const double p = 1 / (2 * total - 2);
    QuadratureSpec spec;
    spec.tol = tol * 1e-2;
    spec.nodes = 16;
    spec.max_depth = 24;
    double sum = 0, err = 0;
    for (int i = 0; i < m; ++i) {
        // phi_i |f|^2 r at zeta = z_i + r e^{i theta}
        auto density = [&, i](double r, double th) {
            const std::complex<double> zeta = z[i] + std::polar(r, th);
            double f2 = 1, inv = 0;
            for (int j = 0; j < m; ++j) {
                const double d = std::abs(zeta - z[j]);
                f2 *= std::pow(d, -2 * mu[j]);
                inv += std::pow(r / d, 4);
            }
            return f2 / inv * r;
        };
        auto radial = [&](double th) {
            // near r = 0 the density behaves like r^{1 - 2 mu_i}
            auto inner = [&](double r) { return density(r, th) * std::pow(r, 2 * mu[i] - 1); };
            QuadratureResult a = jacobi_integral(inner, 0, R, 0, 1 - 2 * mu[i], spec);
            // r = R u^{-p} flattens the r^{1 - 2 sum mu} decay
            auto outer = [&](double u) {
                const double r = R * std::pow(u, -p);
                return density(r, th) * R * p * std::pow(u, -p - 1);
            };
            QuadratureResult b = jacobi_integral(outer, 0, 1, 0, 0, spec);
            return a.value + b.value;
        };
        double e = 0;
        const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(radial, 0.0, kPi, 12, tol, &e);
        sum += 2 * v;
        err += 2 * e * std::abs(v);
    }
    if (error) *error = err;
    return -sum;
}

HermitianN hermitian_N(const std::vector<double>& mu, const std::vector<double>& z, double tol)
{
    const double total = std::accumulate(mu.begin(), mu.end(), 0.0);
    if (!(total > 1 && total < 2)) throw std::domain_error("hermitian_N needs 1 < sum mu < 2");
    HermitianN out;
    LauricellaValues v = lauricella_values(mu, z, 1e-13);
    out.F = v.F;
    auto s = partial_sums(mu);
    for (std::size_t j = 0; j < v.F.size(); ++j)
        for (std::size_t k = j + 1; k < v.F.size(); ++k) out.formula += std::sin(kPi * (s[j] - s[k])) * v.F[j] * v.F[k];
    out.direct = planar_integral(mu, z, tol, &out.direct_error);
    out.relative_difference = std::abs(out.formula - out.direct) / std::abs(out.direct);
    return out;
}

Loop mirror_loop(const DunklSystem& sys, int x, double radius_fraction, int sides, unsigned seed)
{
    NumericArrangement na(sys);
    if (x < 0 || x >= static_cast<int>(na.a.size())) throw std::out_of_range("no such mirror");
    std::mt19937 g(seed);
    std::normal_distribution<double> nd;
    Eigen::VectorXcd x0(na.n);
    for (int i = 0; i < na.n; ++i) x0(i) = nd(g);
    const std::complex<double> nn = (na.a[x] * na.normal[x])(0);
    const Eigen::VectorXcd p = x0 - (na.a[x] * x0)(0) / nn * na.normal[x];
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < na.a.size(); ++y)
        if (static_cast<int>(y) != x) d = std::min(d, na.distance(static_cast<int>(y), p));
    if (!std::isfinite(d)) d = p.norm() > 0 ? p.norm() : 1;
    const double r = radius_fraction * d;
    const Eigen::VectorXcd u = na.normal[x] / na.normal[x].norm();
    Loop loop;
    for (int k = 0; k < sides; ++k) loop.vertices.push_back(p + r * std::polar(1.0, 2 * kPi * k / sides) * u);
    loop.description = "mirror " + na.labels[x];
    return loop;
}

Eigen::MatrixXcd transport(const DunklSystem& sys, const std::vector<Eigen::VectorXcd>& path, double tol, double margin, long* steps)
{
    return transport_path(NumericArrangement(sys), path, false, tol, margin, steps);
}

MonodromyResult monodromy_transport(const DunklSystem& sys, const Loop& loop, double tol, double margin)
{
    NumericArrangement na(sys);
    MonodromyResult out;
    out.loop = loop.description;
    out.tol = tol;
    out.matrix = transport_path(na, loop.vertices, true, tol, margin, &out.steps);
    out.eigenvalues = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(out.matrix).eigenvalues();
    // a homotopic loop: vertices moved by less than a fifth of the clearance
    const double clearance = loop_margin(na, loop.vertices, true);
    std::mt19937 g(3);
    std::normal_distribution<double> nd;
    std::vector<Eigen::VectorXcd> moved = loop.vertices;
    for (std::size_t i = 1; i < moved.size(); ++i) {
        Eigen::VectorXcd e(na.n);
        for (int j = 0; j < na.n; ++j) e(j) = {nd(g), nd(g)};
        moved[i] += 0.2 * clearance * e / e.norm();
    }
    Eigen::MatrixXcd other = transport_path(na, moved, true, tol, margin, nullptr);
    out.residual = (other - out.matrix).norm() / out.matrix.norm();
    return out;
}

Eigen::VectorXd generic_real_point(const DunklSystem& sys, unsigned seed)
{
    NumericArrangement na(sys);
    std::mt19937 g(seed);
    std::normal_distribution<double> nd;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Eigen::VectorXd x(na.n);
        for (int i = 0; i < na.n; ++i) x(i) = nd(g);
        bool ok = true;
        for (std::size_t y = 0; y < na.a.size() && ok; ++y) ok = na.distance(static_cast<int>(y), x.cast<std::complex<double>>()) > 1e-2 * x.norm();
        if (ok) return x;
    }
    throw std::runtime_error("no generic point found");
}

std::vector<int> chamber_walls(const DunklSystem& sys, const Eigen::VectorXd& x0)
{
    NumericArrangement na(sys);
    if (!na.real) throw std::invalid_argument("chambers need a real arrangement");
    const Eigen::VectorXcd x = x0.cast<std::complex<double>>();
    std::vector<int> walls;
    for (std::size_t h = 0; h < na.a.size(); ++h) {
        const Eigen::VectorXcd y = na.reflect(static_cast<int>(h), x);
        bool wall = true;
        for (std::size_t k = 0; k < na.a.size() && wall; ++k)
            if (k != h) wall = std::real((na.a[k] * x)(0)) * std::real((na.a[k] * y)(0)) > 0;
        if (wall) walls.push_back(static_cast<int>(h));
    }
    return walls;
}

Eigen::MatrixXcd braid_generator(const DunklSystem& sys, const Eigen::VectorXd& x0, int wall, double tol)
{
    NumericArrangement na(sys);
    if (!na.real) throw std::invalid_argument("braid generators need a real arrangement");
    const Eigen::VectorXcd x = x0.cast<std::complex<double>>();
    const Eigen::VectorXcd y = na.reflect(wall, x);
    const std::complex<double> nn = (na.a[wall] * na.normal[wall])(0);
    // phi_H runs from c to -c through the upper half plane, whatever the sign of c
    const double delta = std::real((na.a[wall] * x)(0) / nn);
    // half turn in the positive sense around the wall
    std::vector<Eigen::VectorXcd> path;
    const int pieces = 64;
    for (int k = 0; k <= pieces; ++k) {
        const double t = static_cast<double>(k) / pieces;
        path.push_back(x + t * (y - x) + std::complex<double>(0, delta * std::sin(kPi * t)) * na.normal[wall]);
    }
    Eigen::MatrixXcd T = transport_path(na, path, false, tol, 1e-4, nullptr);
    Eigen::MatrixXcd S(na.n, na.n);
    for (int j = 0; j < na.n; ++j) S.col(j) = na.reflect(wall, Eigen::VectorXcd::Unit(na.n, j));
    return S * T;
}

PdeResidual pde_residual(const std::vector<double>& mu, const std::vector<double>& z, double h, int k)
{
    check_points(mu, z);
    const int m = static_cast<int>(z.size());
    if (k < 1 || k >= m) throw std::invalid_argument("k must index an interval between two points");
    double quad_err = 0, scale = 0;
    auto F = [&](std::vector<double> zz) {
        LauricellaValues v = lauricella_values(mu, zz, 1e-14);
        quad_err = std::max(quad_err, v.error[k - 1]);
        scale = std::max(scale, std::abs(v.F[k - 1]));
        return v.F[k - 1];
    };
    auto shifted = [&](std::vector<std::pair<int, double>> moves) {
        std::vector<double> zz = z;
        for (auto [i, s] : moves) zz[i] += s;
        return F(zz);
    };
    std::vector<double> d1(m);
    for (int i = 0; i < m; ++i) d1[i] = (shifted({{i, h}}) - shifted({{i, -h}})) / (2 * h);
    PdeResidual out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const double d2 = (shifted({{i, h}, {j, h}}) - shifted({{i, h}, {j, -h}}) - shifted({{i, -h}, {j, h}}) +
                               shifted({{i, -h}, {j, -h}})) /
                              (4 * h * h);
            const double want = (mu[j] * d1[i] - mu[i] * d1[j]) / (z[i] - z[j]);
            out.residual = std::max(out.residual, std::abs(d2 - want));
        }
    out.noise = quad_err / (h * h);
    if (out.noise > 1e-2 * std::max(scale, 1.0)) throw std::domain_error("step too small for the quadrature accuracy");
    return out;
}

nlohmann::json lauricella_to_json(const std::vector<double>& mu, const std::vector<double>& z, const LauricellaValues& v)
{
    nlohmann::json j;
    j["mu"] = mu;
    j["z"] = z;
    j["F"] = v.F;
    j["error"] = v.error;
    if (v.tail) j["relation"] = lauricella_relation(mu, v);
    return j;
}

nlohmann::json monodromy_to_json(const MonodromyResult& r)
{
    nlohmann::json j;
    j["loop"] = r.loop;
    j["tol"] = r.tol;
    j["steps"] = r.steps;
    j["residual"] = r.residual;
    auto cplx = [](std::complex<double> c) { return nlohmann::json::array({c.real(), c.imag()}); };
    j["eigenvalues"] = nlohmann::json::array();
    for (int i = 0; i < r.eigenvalues.size(); ++i) j["eigenvalues"].push_back(cplx(r.eigenvalues(i)));
    j["matrix"] = nlohmann::json::array();
    for (int i = 0; i < r.matrix.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < r.matrix.cols(); ++c) row.push_back(cplx(r.matrix(i, c)));
        j["matrix"].push_back(row);
    }
    return j;
}

} // namespace dunkl
