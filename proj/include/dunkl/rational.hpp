#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>

namespace dunkl {

struct BigRational;

// Reduced fraction. Values with 64-bit numerator and denominator are stored
// inline and combined in 128-bit intermediates; anything larger moves to an
// arbitrary-precision representation and moves back when it fits again.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    static Rational parse(const std::string& s);

    // 64-bit parts; throw std::overflow_error for a large value
    std::int64_t num() const;
    std::int64_t den() const;
    bool is_small() const { return !big_; }
    const BigRational* big() const { return big_.get(); }
    static Rational from_big(const BigRational& b);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_integer() const;
    int sign() const;
    double to_double() const;
    long double to_long_double() const;

    // floor and fractional part in [0,1)
    std::int64_t floor() const;
    Rational frac() const { return *this - Rational(floor()); }
    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational inverse() const;

    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        return big_equal(a, b);
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::size_t hash() const;

private:
    static Rational from128(__int128 n, __int128 d);
    static bool big_equal(const Rational& a, const Rational& b);
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

} // namespace dunkl

template <>
struct std::hash<dunkl::Rational> {
    std::size_t operator()(const dunkl::Rational& r) const noexcept { return r.hash(); }
};
