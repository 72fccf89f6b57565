#pragma once

#include "tutte_ss/exactmath/bipoly.hpp"
#include "tutte_ss/exactmath/numbers.hpp"
#include "tutte_ss/exactmath/unipoly.hpp"

namespace tutte_ss {

inline BiPoly scaled(const BiPoly& p, long k) { return p * k; }
inline Rational scaled(const Rational& q, long k) { return Rational(q * k); }
inline UniPoly scaled(const UniPoly& p, long k) { return p * Rational(k); }

}  // namespace tutte_ss
