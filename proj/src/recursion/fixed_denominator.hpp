#pragma once

// Point evaluation without per-operation gcds. Every value is an integer
// numerator over a power of one fixed denominator D (the lcm of the point's
// denominators); sums align exponents, products add them, and the single
// reduction happens when converting back to a Rational.

#include "tutte_ss/exactmath/numbers.hpp"

#include <map>
#include <utility>

namespace tutte_ss::detail {

class DenominatorPowers {
 public:
  explicit DenominatorPowers(BigInt d) : d_(std::move(d)) {}

  const BigInt& base() const { return d_; }
  bool trivial() const { return d_ == 1; }

  const BigInt& power(unsigned long k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), d_.get_mpz_t(), k);
    return cache_.emplace(k, std::move(p)).first->second;
  }

 private:
  BigInt d_;
  std::map<unsigned long, BigInt> cache_;
};

class FixedDenominator {
 public:
  FixedDenominator() = default;
  FixedDenominator(BigInt num, unsigned long exp, DenominatorPowers* powers)
      : num_(std::move(num)), exp_(exp), powers_(powers) {
    if (num_ == 0) exp_ = 0;
  }

  // q as num / D^k; D must be a multiple of q's denominator.
  static FixedDenominator from_rational(const Rational& q, DenominatorPowers* powers) {
    if (q.get_den() == 1) return {q.get_num(), 0, powers};
    return {q.get_num() * (powers->base() / q.get_den()), 1, powers};
  }

  Rational to_rational() const {
    if (exp_ == 0) return Rational(num_);
    Rational r(num_, powers_->power(exp_));
    r.canonicalize();
    return r;
  }

  friend FixedDenominator operator+(const FixedDenominator& a, const FixedDenominator& b) {
    return combine(a, b, false);
  }
  friend FixedDenominator operator-(const FixedDenominator& a, const FixedDenominator& b) {
    return combine(a, b, true);
  }
  friend FixedDenominator operator*(const FixedDenominator& a, const FixedDenominator& b) {
    return {a.num_ * b.num_, a.exp_ + b.exp_, a.powers_ ? a.powers_ : b.powers_};
  }
  friend FixedDenominator scaled(const FixedDenominator& a, long k) {
    return {a.num_ * k, a.exp_, a.powers_};
  }

 private:
  static FixedDenominator combine(const FixedDenominator& a, const FixedDenominator& b, bool subtract) {
    if (b.num_ == 0) return a;
    if (a.num_ == 0) return subtract ? FixedDenominator{-b.num_, b.exp_, b.powers_} : b;
    if (a.exp_ == b.exp_ || a.powers_->trivial()) {
      return {subtract ? BigInt(a.num_ - b.num_) : BigInt(a.num_ + b.num_), std::max(a.exp_, b.exp_), a.powers_};
    }
    if (a.exp_ < b.exp_) {
      BigInt lifted = a.num_ * a.powers_->power(b.exp_ - a.exp_);
      return {subtract ? BigInt(lifted - b.num_) : BigInt(lifted + b.num_), b.exp_, a.powers_};
    }
    BigInt lifted = b.num_ * a.powers_->power(a.exp_ - b.exp_);
    return {subtract ? BigInt(a.num_ - lifted) : BigInt(a.num_ + lifted), a.exp_, a.powers_};
  }

  BigInt num_;
  unsigned long exp_ = 0;
  DenominatorPowers* powers_ = nullptr;
};

}  // namespace tutte_ss::detail
