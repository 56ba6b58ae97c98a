#include "dunkl/rational.hpp"

#include "bigrational.hpp"

#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace dunkl {

namespace mp = boost::multiprecision;

namespace {

__int128 gcd128(__int128 a, __int128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

mp::cpp_int to_cpp(__int128 x)
{
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
    mp::cpp_int r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? mp::cpp_int(-r) : r;
}

} // namespace

mp::cpp_rational to_big(const Rational& r)
{
    if (r.big()) return r.big()->v;
    return mp::cpp_rational(r.num(), r.den());
}

Rational from_big(const mp::cpp_rational& v)
{
    return Rational::from_big(BigRational{v});
}

Rational Rational::from_big(const BigRational& b)
{
    const mp::cpp_int n = mp::numerator(b.v), d = mp::denominator(b.v);
    static const mp::cpp_int lim = mp::cpp_int(std::numeric_limits<std::int64_t>::max());
    Rational r;
    if (mp::abs(n) <= lim && d <= lim) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    r.num_ = 0;
    r.den_ = 1;
    r.big_ = std::make_shared<const BigRational>(b);
    return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    return static_cast<std::int64_t>(gcd128(a, b));
}

std::int64_t lcm64(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0) return 0;
    __int128 l = static_cast<__int128>(a / gcd64(a, b)) * b;
    if (l < 0) l = -l;
    if (l > kMax) throw std::overflow_error("lcm overflow");
    return static_cast<std::int64_t>(l);
}

Rational Rational::from128(__int128 n, __int128 d)
{
    if (d == 0) throw std::domain_error("division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n > kMax || n < -kMax || d > kMax) return from_big(BigRational{mp::cpp_rational(to_cpp(n), to_cpp(d))});
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d)
{
    *this = from128(n, d);
}

std::int64_t Rational::num() const
{
    if (big_) throw std::overflow_error("rational numerator exceeds 64 bits");
    return num_;
}

std::int64_t Rational::den() const
{
    if (big_) throw std::overflow_error("rational denominator exceeds 64 bits");
    return den_;
}

bool Rational::is_integer() const
{
    if (big_) return mp::denominator(big_->v) == 1;
    return den_ == 1;
}

int Rational::sign() const
{
    if (big_) return big_->v.sign();
    return (num_ > 0) - (num_ < 0);
}

double Rational::to_double() const
{
    if (big_) return big_->v.convert_to<double>();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

long double Rational::to_long_double() const
{
    if (big_) return big_->v.convert_to<long double>();
    return static_cast<long double>(num_) / static_cast<long double>(den_);
}

bool Rational::big_equal(const Rational& a, const Rational& b)
{
    // a value that fits is never stored big
    if (!a.big_ || !b.big_) return false;
    return a.big_->v == b.big_->v;
}

std::size_t Rational::hash() const
{
    if (big_) return std::hash<std::string>()(big_->v.str());
    return std::hash<std::int64_t>()(num_) * 1000003u ^ std::hash<std::int64_t>()(den_);
}

Rational Rational::parse(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

std::int64_t Rational::floor() const
{
    if (big_) {
        mp::cpp_int q = mp::numerator(big_->v) / mp::denominator(big_->v);
        if (big_->v.sign() < 0 && q * mp::denominator(big_->v) != mp::numerator(big_->v)) --q;
        if (mp::abs(q) > mp::cpp_int(std::numeric_limits<std::int64_t>::max()))
            throw std::overflow_error("floor exceeds 64 bits");
        return static_cast<std::int64_t>(q);
    }
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::inverse() const
{
    if (big_) {
        if (big_->v == 0) throw std::domain_error("division by zero");
        return dunkl::from_big(1 / big_->v);
    }
    return from128(den_, num_);
}

std::string Rational::str() const
{
    if (big_) return big_->v.str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const
{
    if (big_) return dunkl::from_big(-big_->v);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    if (big_ || o.big_) return *this = dunkl::from_big(to_big(*this) + to_big(o));
    if (den_ == 1 && o.den_ == 1) {
        __int128 s = static_cast<__int128>(num_) + o.num_;
        if (s > kMax || s < -kMax) return *this = from128(s, 1);
        num_ = static_cast<std::int64_t>(s);
        return *this;
    }
    *this = from128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    return *this += -o;
}

Rational& Rational::operator*=(const Rational& o)
{
    if (is_zero() || o.is_zero()) {
        *this = Rational();
        return *this;
    }
    if (big_ || o.big_) return *this = dunkl::from_big(to_big(*this) * to_big(o));
    // cross-cancel first so that 128-bit products stay exact
    std::int64_t g1 = gcd64(num_, o.den_), g2 = gcd64(o.num_, den_);
    *this = from128(static_cast<__int128>(num_ / g1) * (o.num_ / g2), static_cast<__int128>(den_ / g2) * (o.den_ / g1));
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (a.big() || b.big()) {
        auto x = to_big(a), y = to_big(b);
        if (x < y) return std::strong_ordering::less;
        if (x > y) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    __int128 l = static_cast<__int128>(a.num()) * b.den();
    __int128 r = static_cast<__int128>(b.num()) * a.den();
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

} // namespace dunkl
