#include "dunkl/field.hpp"

#include "bigrational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace mp = boost::multiprecision;

std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t r = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n)
{
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto q = cyclotomic_polynomial(d);
        // exact division by the monic q
        std::vector<std::int64_t> out(p.size() - q.size() + 1, 0);
        for (std::size_t i = out.size(); i-- > 0;) {
            std::int64_t c = p[i + q.size() - 1];
            out[i] = c;
            for (std::size_t j = 0; j < q.size(); ++j) p[i + j] -= c * q[j];
        }
        p = out;
    }
    return p;
}

namespace {

struct FieldData {
    int k = 1;
    // red[i] is x^(k+i) expressed on the basis
    std::vector<std::vector<Rational>> red;
    // conj(x^j) on the basis
    std::vector<std::vector<Rational>> conj;
    std::complex<double> gen;
};

bool squarefree(std::int64_t d)
{
    for (std::int64_t p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

// reduce a polynomial (lowest first) modulo the field's minimal polynomial
std::vector<Rational> reduce_with(const FieldData& fd, std::vector<Rational> poly)
{
    if (poly.size() > fd.red.size() + fd.k) throw std::logic_error("polynomial degree beyond reduction table");
    for (std::size_t m = poly.size(); m-- > static_cast<std::size_t>(fd.k);) {
        if (poly[m].is_zero()) continue;
        const auto& r = fd.red[m - fd.k];
        for (int j = 0; j < fd.k; ++j)
            if (!r[j].is_zero()) poly[j] += poly[m] * r[j];
        poly[m] = Rational(0);
    }
    poly.resize(fd.k);
    return poly;
}

std::unique_ptr<FieldData> make_field(const FieldSpec& f)
{
    auto fd = std::make_unique<FieldData>();
    std::vector<std::int64_t> minpoly;
    switch (f.kind) {
    case FieldSpec::Kind::rational:
        minpoly = {-1, 1};
        fd->gen = 1.0;
        break;
    case FieldSpec::Kind::quadratic:
        minpoly = {-f.param, 0, 1};
        fd->gen = std::sqrt(static_cast<double>(f.param));
        break;
    case FieldSpec::Kind::cyclotomic:
        minpoly = cyclotomic_polynomial(f.param);
        fd->gen = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(f.param));
        break;
    }
    fd->k = static_cast<int>(minpoly.size()) - 1;
    const int k = fd->k;
    // x^m for m = k..maxdeg, each reduced onto the basis
    int maxdeg = 2 * k - 2;
    if (f.kind == FieldSpec::Kind::cyclotomic) maxdeg = std::max<int>(maxdeg, static_cast<int>(f.param) - 1);
    std::vector<Rational> cur(k);
    for (int j = 0; j < k; ++j) cur[j] = Rational(-minpoly[j]);
    for (int m = k; m <= maxdeg; ++m) {
        fd->red.push_back(cur);
        std::vector<Rational> next(k);
        for (int j = 0; j + 1 < k; ++j) next[j + 1] = cur[j];
        for (int j = 0; j < k; ++j) next[j] += cur[k - 1] * Rational(-minpoly[j]);
        cur = next;
    }
    fd->conj.assign(k, std::vector<Rational>(k));
    for (int j = 0; j < k; ++j) {
        if (f.kind == FieldSpec::Kind::cyclotomic) {
            std::int64_t e = (f.param - j) % f.param;
            std::vector<Rational> poly(e + 1);
            poly[e] = Rational(1);
            fd->conj[j] = reduce_with(*fd, poly);
        } else {
            fd->conj[j][j] = Rational(1);
        }
    }
    return fd;
}

const FieldData& data(const FieldSpec& f)
{
    static std::mutex mu;
    static std::map<std::pair<int, std::int64_t>, std::unique_ptr<FieldData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(f.kind), f.param);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_field(f)).first;
    return *it->second;
}

} // namespace

FieldSpec FieldSpec::quadratic(std::int64_t d)
{
    if (d <= 1 || !squarefree(d)) throw std::invalid_argument("quadratic field needs squarefree d > 1");
    return {Kind::quadratic, d};
}

FieldSpec FieldSpec::cyclotomic(std::int64_t n)
{
    if (n < 1) throw std::invalid_argument("cyclotomic field needs N >= 1");
    return {Kind::cyclotomic, n};
}

int FieldSpec::degree() const
{
    switch (kind) {
    case Kind::rational: return 1;
    case Kind::quadratic: return 2;
    case Kind::cyclotomic: return static_cast<int>(euler_phi(param));
    }
    return 1;
}

std::string FieldSpec::str() const
{
    switch (kind) {
    case Kind::rational: return "Q";
    case Kind::quadratic: return "Q(sqrt" + std::to_string(param) + ")";
    case Kind::cyclotomic: return "Q(zeta" + std::to_string(param) + ")";
    }
    return "?";
}

nlohmann::json field_to_json(const FieldSpec& f)
{
    switch (f.kind) {
    case FieldSpec::Kind::rational: return {{"kind", "rational"}};
    case FieldSpec::Kind::quadratic: return {{"kind", "quadratic"}, {"d", f.param}};
    case FieldSpec::Kind::cyclotomic: return {{"kind", "cyclotomic"}, {"N", f.param}};
    }
    return {};
}

FieldSpec field_from_json(const nlohmann::json& j)
{
    std::string kind = j.at("kind");
    if (kind == "rational") return FieldSpec::Q();
    if (kind == "quadratic") return FieldSpec::quadratic(j.at("d").get<std::int64_t>());
    if (kind == "cyclotomic") return FieldSpec::cyclotomic(j.at("N").get<std::int64_t>());
    throw std::invalid_argument("unknown field kind " + kind);
}

Scalar::Scalar(const FieldSpec& f) : f_(f), c_(f.degree()) {}

Scalar::Scalar(const FieldSpec& f, const Rational& r) : f_(f), c_(f.degree())
{
    c_[0] = r;
}

Scalar::Scalar(const FieldSpec& f, Coords c) : f_(f), c_(std::move(c))
{
    const auto& fd = data(f_);
    if (static_cast<int>(c_.size()) > fd.k) {
        std::vector<Rational> poly(c_.begin(), c_.end());
        auto r = reduce_with(fd, poly);
        c_.assign(r.begin(), r.end());
    }
    c_.resize(fd.k);
}

Scalar Scalar::gen_power(const FieldSpec& f, std::int64_t k)
{
    if (f.kind == FieldSpec::Kind::cyclotomic) {
        std::int64_t e = ((k % f.param) + f.param) % f.param;
        Coords c(e + 1);
        c[e] = Rational(1);
        return Scalar(f, c);
    }
    if (f.kind == FieldSpec::Kind::quadratic) {
        if (k < 0) throw std::invalid_argument("negative power of sqrt");
        Scalar r(f, Rational(1));
        Scalar g(f);
        g.c_[1] = Rational(1);
        for (std::int64_t i = 0; i < k; ++i) r *= g;
        return r;
    }
    return Scalar(f, Rational(1));
}

void Scalar::check_same(const Scalar& o) const
{
    if (!(f_ == o.f_)) throw std::invalid_argument("mixed fields: " + f_.str() + " vs " + o.f_.str());
}

bool Scalar::is_zero() const
{
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Scalar::is_one() const
{
    if (c_[0] != Rational(1)) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool Scalar::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Scalar::to_rational() const
{
    if (!is_rational()) throw std::domain_error("scalar is not rational: " + str());
    return c_[0];
}

Scalar Scalar::conj() const
{
    if (f_.kind != FieldSpec::Kind::cyclotomic) return *this;
    const auto& fd = data(f_);
    Scalar r(f_);
    for (int j = 0; j < fd.k; ++j) {
        if (c_[j].is_zero()) continue;
        for (int i = 0; i < fd.k; ++i)
            if (!fd.conj[j][i].is_zero()) r.c_[i] += c_[j] * fd.conj[j][i];
    }
    return r;
}

Scalar Scalar::operator-() const
{
    Scalar r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    return *this;
}

Scalar& Scalar::operator*=(const Rational& r)
{
    for (auto& x : c_) x *= r;
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    a.check_same(b);
    const std::size_t k = a.c_.size();
    if (k == 1) return Scalar(a.f_, a.c_[0] * b.c_[0]);
    const auto& fd = data(a.f_);
    std::vector<Rational> prod(2 * k - 1);
    for (std::size_t i = 0; i < k; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < k; ++j)
            if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
    }
    auto r = reduce_with(fd, std::move(prod));
    Scalar out(a.f_);
    out.c_.assign(r.begin(), r.end());
    return out;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    *this = *this * o;
    return *this;
}

namespace {

// matrix of multiplication by s on the power basis (column j = s * x^j)
std::vector<std::vector<Rational>> mult_matrix(const Scalar& s)
{
    const int k = static_cast<int>(s.coords().size());
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    Scalar basis = Scalar(s.field(), Rational(1));
    Scalar x = s.field().kind == FieldSpec::Kind::rational ? basis : Scalar::gen_power(s.field(), 1);
    for (int j = 0; j < k; ++j) {
        Scalar col = s * basis;
        for (int i = 0; i < k; ++i) m[i][j] = col.coords()[i];
        basis *= x;
    }
    return m;
}

} // namespace

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    const int k = static_cast<int>(c_.size());
    if (k == 1) return Scalar(f_, c_[0].inverse());
    if (f_.kind == FieldSpec::Kind::quadratic) {
        Rational n = c_[0] * c_[0] - Rational(f_.param) * c_[1] * c_[1];
        Coords c{c_[0] / n, -c_[1] / n};
        return Scalar(f_, c);
    }
    // solve M y = e_0
    auto m = mult_matrix(*this);
    std::vector<Rational> rhs(k);
    rhs[0] = Rational(1);
    for (int col = 0; col < k; ++col) {
        int piv = col;
        while (m[piv][col].is_zero()) ++piv;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Rational inv = m[col][col].inverse();
        for (int j = col; j < k; ++j) m[col][j] *= inv;
        rhs[col] *= inv;
        for (int r = 0; r < k; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int j = col; j < k; ++j)
                if (!m[col][j].is_zero()) m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    Coords c(rhs.begin(), rhs.end());
    return Scalar(f_, c);
}

Rational Scalar::norm() const
{
    const int k = static_cast<int>(c_.size());
    if (k == 1) return c_[0];
    auto m = mult_matrix(*this);
    std::vector<std::vector<mp::cpp_rational>> a(k, std::vector<mp::cpp_rational>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = to_big(m[i][j]);
    mp::cpp_rational det = 1;
    for (int col = 0; col < k; ++col) {
        int piv = col;
        while (piv < k && a[piv][col] == 0) ++piv;
        if (piv == k) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < k; ++r) {
            if (a[r][col] == 0) continue;
            mp::cpp_rational f = a[r][col] / a[col][col];
            for (int j = col; j < k; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return from_big(det);
}

std::complex<double> Scalar::numeric() const
{
    const auto& fd = data(f_);
    std::complex<double> acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * fd.gen + c_[i].to_double();
    return acc;
}

int Scalar::sign() const
{
    if (f_.kind == FieldSpec::Kind::rational || is_rational()) return c_[0].sign();
    if (f_.kind == FieldSpec::Kind::quadratic) {
        int sa = c_[0].sign(), sb = c_[1].sign();
        if (sa == 0) return sb;
        if (sb == 0 || sa == sb) return sa;
        Rational a2 = c_[0] * c_[0], db2 = Rational(f_.param) * c_[1] * c_[1];
        if (a2 > db2) return sa;
        return sb;
    }
    if (!is_real()) throw std::domain_error("sign of a non-real scalar");
    if (is_zero()) return 0;
    // Every conjugate is bounded by B = sum |c_j|, so |x| >= |N(x)| / B^(k-1).
    double B = 0;
    for (const auto& x : c_) B += std::fabs(x.to_double());
    const int k = static_cast<int>(c_.size());
    long double logLB;
    try {
        Rational n = norm();
        logLB = std::log(std::fabs(n.to_long_double())) - (k - 1) * std::log(static_cast<long double>(B));
        if (!std::isfinite(static_cast<double>(logLB))) logLB = -200;
    } catch (const std::overflow_error&) {
        logLB = -200;
    }
    double v = numeric().real();
    double err = 1e-14 * B * k;
    if (std::fabs(v) > err && std::log(static_cast<long double>(err)) < logLB) return v > 0 ? 1 : -1;
    using F = mp::cpp_bin_float_100;
    F acc = 0;
    F theta = 2 * boost::math::constants::pi<F>() / f_.param;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        acc += F(to_big(c_[j])) * mp::cos(theta * static_cast<int>(j));
    }
    F bound = F(1e-90) * B * k;
    if (mp::abs(acc) <= bound) throw std::runtime_error("sign undecided at 100 digits");
    return acc > 0 ? 1 : -1;
}

bool less(const Scalar& a, const Scalar& b)
{
    return (b - a).sign() > 0;
}

std::string Scalar::str() const
{
    if (is_rational()) return c_[0].str();
    std::ostringstream os;
    bool first = true;
    const char* g = f_.kind == FieldSpec::Kind::quadratic ? "s" : "z";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].str();
        if (i > 0) os << "*" << g << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

std::size_t Scalar::hash() const
{
    std::size_t h = 0;
    for (const auto& x : c_) h = h * 1315423911u + std::hash<Rational>()(x);
    return h;
}

nlohmann::json scalar_to_json(const Scalar& s)
{
    auto j = nlohmann::json::array();
    for (const auto& x : s.coords()) j.push_back(x.str());
    return j;
}

Scalar scalar_from_json(const nlohmann::json& j, const FieldSpec& f)
{
    if (j.is_string()) return Scalar(f, Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(f, Rational(j.get<std::int64_t>()));
    Scalar::Coords c;
    for (const auto& x : j) c.push_back(x.is_string() ? Rational::parse(x.get<std::string>()) : Rational(x.get<std::int64_t>()));
    if (static_cast<int>(c.size()) > f.degree()) throw std::invalid_argument("too many coordinates for " + f.str());
    return Scalar(f, c);
}

} // namespace dunkl
