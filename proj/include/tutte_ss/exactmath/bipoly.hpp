#pragma once

#include "tutte_ss/exactmath/numbers.hpp"
#include "tutte_ss/exactmath/rational_fn.hpp"
#include "tutte_ss/exactmath/unipoly.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tutte_ss {

// Sparse polynomial in Z[x, y]. Terms are kept sorted ascending by
// (x exponent, y exponent) with no zero coefficients, so structural
// equality is mathematical equality.
class BiPoly {
 public:
  struct Term {
    std::uint32_t xe = 0;
    std::uint32_t ye = 0;
    BigInt c;

    friend bool operator==(const Term&, const Term&) = default;
  };

  BiPoly() = default;
  BiPoly(long constant);           // NOLINT(google-explicit-constructor)
  BiPoly(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  // Sorts, merges duplicate exponents, drops zeros.
  static BiPoly from_terms(std::vector<Term> terms);
  static BiPoly monomial(const BigInt& coeff, std::uint32_t xe, std::uint32_t ye);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t degree_x() const;
  std::uint32_t degree_y() const;
  BigInt coeff(std::uint32_t xe, std::uint32_t ye) const;
  bool all_coefficients_nonnegative() const;

  Rational eval(const Rational& x0, const Rational& y0) const;
  // p(x0, y) as a polynomial in y.
  UniPoly restrict_x(const Rational& x0) const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BigInt& scalar);
  BiPoly& operator*=(long scalar) { return *this *= BigInt(scalar); }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) { return a *= -1L; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, long s) { return a *= s; }
  friend BiPoly operator*(long s, BiPoly a) { return a *= s; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly pow(unsigned exponent) const;
  // Multiplies by (x - 1)^k without a general product.
  BiPoly times_x_minus_1(unsigned k = 1) const;

 private:
  static BiPoly merge(const BiPoly& a, const BiPoly& b, bool subtract);
  std::vector<Term> terms_;
};

// Returns q with p = (x-1)^k q; throws Error(NotDivisible) otherwise.
BiPoly divide_exact_x_minus_1(const BiPoly& p, unsigned k);

// y := 0, x := 1 - lambda.
UniPoly subst_chromatic(const BiPoly& p);

// x := (y+1)/(y-1), as a rational function of y.
RationalFn subst_hyperbola(const BiPoly& p);

// Worker threads used by BiPoly multiplication. Output rows are partitioned
// between workers, so results are bit-identical for every setting.
void set_multiplication_threads(unsigned threads);
unsigned multiplication_threads();

}  // namespace tutte_ss
