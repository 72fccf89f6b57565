#pragma once

#include "tutte_ss/exactmath/numbers.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace tutte_ss {

// Sparse univariate polynomial with Rational coefficients. Exponents are
// signed, so the same type carries Laurent polynomials (the Ising partition
// function in t). No stored coefficient is ever zero.
class UniPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Rational>;

  UniPoly() = default;
  UniPoly(long constant);                 // NOLINT(google-explicit-constructor)
  UniPoly(const Rational& constant);      // NOLINT(google-explicit-constructor)
  explicit UniPoly(Terms terms);

  static UniPoly monomial(const Rational& coeff, Exponent exponent);
  static UniPoly variable() { return monomial(1, 1); }
  // Dense ascending coefficient list c0 + c1 t + ...
  static UniPoly from_coefficients(const std::vector<Rational>& ascending);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Highest / lowest exponent; the zero polynomial reports 0 for both.
  Exponent degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  Exponent min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  bool is_laurent() const { return !terms_.empty() && min_exponent() < 0; }

  Rational coeff(Exponent exponent) const;
  const Rational& leading_coeff() const;
  bool has_integer_coefficients() const;

  Rational eval(const Rational& at) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rational& scalar);
  UniPoly& operator/=(const Rational& scalar);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

  UniPoly pow(unsigned exponent) const;
  // Multiplies by t^shift (shift may be negative).
  UniPoly shifted(Exponent shift) const;
  // p(t) -> p(t^factor).
  UniPoly inflate(unsigned factor) const;
  // p(t) -> p(value_poly(t)) for an ordinary (non-Laurent) p.
  UniPoly compose(const UniPoly& inner) const;

  // Euclidean division over Q; both must be ordinary polynomials.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  // Throws Error(NotDivisible) on a nonzero remainder.
  UniPoly divide_exact(const UniPoly& divisor) const;

 private:
  void add_term(Exponent exponent, const Rational& coeff);
  Terms terms_;
};

// Monic gcd over Q (zero if both are zero).
UniPoly gcd(UniPoly a, UniPoly b);

}  // namespace tutte_ss
