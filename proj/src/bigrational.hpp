#pragma once

#include "dunkl/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace dunkl {

struct BigRational {
    boost::multiprecision::cpp_rational v;
};

boost::multiprecision::cpp_rational to_big(const Rational& r);
Rational from_big(const boost::multiprecision::cpp_rational& v);

} // namespace dunkl
