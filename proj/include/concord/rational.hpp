#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace concord {

// Expression templates stay off so values compose with std::min/max and
// aggregate initialization.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

struct NumberError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p/q", integers, and finite decimals ("0.6" becomes 6/10 exactly).
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

// Fixed-point decimal approximation, 6 digits, correctly rounded (ties away
// from zero). Display only; fractions stay authoritative.
std::string approx_decimal(const Rational& r, int digits = 6);

inline bool in_unit_interval(const Rational& r) {
  return r >= 0 && r <= 1;
}

}  // namespace concord
