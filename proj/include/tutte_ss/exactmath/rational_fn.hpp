#pragma once

#include "tutte_ss/exactmath/unipoly.hpp"

namespace tutte_ss {

// Quotient of two ordinary polynomials over Q. The denominator is kept
// monic; common factors are not cancelled unless reduced() is called, so
// equality is decided by cross-multiplication.
class RationalFn {
 public:
  RationalFn() : num_(0), den_(1) {}
  RationalFn(UniPoly num);  // NOLINT(google-explicit-constructor)
  RationalFn(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Cancels the polynomial gcd of numerator and denominator.
  RationalFn reduced() const;
  // Exact polynomial if den divides num; throws Error(NotDivisible) otherwise.
  UniPoly to_polynomial() const;
  Rational eval(const Rational& at) const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend bool operator==(const RationalFn& a, const RationalFn& b);

 private:
  void normalize();
  UniPoly num_;
  UniPoly den_;
};

}  // namespace tutte_ss
