#pragma once

#include "dunkl/rational.hpp"

#include <boost/container/small_vector.hpp>
#include "json.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace dunkl {

// Q, Q(sqrt d) with d squarefree and positive, or Q(zeta_N).
struct FieldSpec {
    enum class Kind { rational, quadratic, cyclotomic };
    Kind kind = Kind::rational;
    std::int64_t param = 1;

    static FieldSpec Q() { return {}; }
    static FieldSpec quadratic(std::int64_t d);
    static FieldSpec cyclotomic(std::int64_t n);

    int degree() const;
    bool is_real() const { return kind != Kind::cyclotomic || param <= 2; }
    std::string str() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b)
    {
        return a.kind == b.kind && a.param == b.param;
    }
};

nlohmann::json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const nlohmann::json& j);

// Element of a FieldSpec, stored as rational coordinates on the power basis
// 1, x, ..., x^(k-1) where x is sqrt d or zeta_N.
class Scalar {
public:
    using Coords = boost::container::small_vector<Rational, 8>;

    Scalar() : Scalar(FieldSpec::Q()) {}
    explicit Scalar(const FieldSpec& f);
    Scalar(const FieldSpec& f, const Rational& r);
    Scalar(const FieldSpec& f, Coords c);

    // generator power: zeta_N^k (cyclotomic) or sqrt(d) (quadratic, k = 1)
    static Scalar gen_power(const FieldSpec& f, std::int64_t k);

    const FieldSpec& field() const { return f_; }
    const Coords& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational to_rational() const;  // throws unless is_rational()

    Scalar conj() const;
    bool is_real() const { return conj() == *this; }

    // exact norm down to Q (product of all conjugates)
    Rational norm() const;

    std::complex<double> numeric() const;
    // exact sign of a real element; throws std::domain_error on non-real input
    int sign() const;

    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
    Scalar& operator*=(const Rational& r);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator*(Scalar a, const Rational& r) { return a *= r; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

    std::string str() const;
    std::size_t hash() const;

private:
    void check_same(const Scalar& o) const;
    FieldSpec f_;
    Coords c_;
};

// real comparison helpers (both arguments real, same field)
bool less(const Scalar& a, const Scalar& b);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j, const FieldSpec& f);

// Phi_n as integer coefficients, lowest degree first
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

} // namespace dunkl
