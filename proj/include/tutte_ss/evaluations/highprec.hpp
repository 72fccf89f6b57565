#pragma once

#include "tutte_ss/exactmath/numbers.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace tutte_ss {

// 160 significant decimal digits.
using HighFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<160>,
                                                boost::multiprecision::et_off>;

HighFloat to_high(const BigInt& value);
HighFloat to_high(const Rational& value);
// Natural log of a positive big integer without overflowing a double.
HighFloat log_big(const BigInt& value);
std::string to_string(const HighFloat& value, int digits = 40);

}  // namespace tutte_ss
