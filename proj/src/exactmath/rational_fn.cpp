#include "tutte_ss/exactmath/rational_fn.hpp"

#include "tutte_ss/errors.hpp"

namespace tutte_ss {

RationalFn::RationalFn(UniPoly num) : num_(std::move(num)), den_(1) {
  if (num_.is_laurent()) throw Error(ErrorKind::DomainError, "rational function numerator is Laurent");
}

RationalFn::RationalFn(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DomainError, "zero denominator");
  if (num_.is_laurent() || den_.is_laurent()) {
    throw Error(ErrorKind::DomainError, "rational function parts must be ordinary polynomials");
  }
  normalize();
}

void RationalFn::normalize() {
  Rational lead = den_.leading_coeff();
  if (lead != 1) {
    num_ /= lead;
    den_ /= lead;
  }
}

RationalFn RationalFn::reduced() const {
  if (num_.is_zero()) return RationalFn();
  UniPoly g = gcd(num_, den_);
  return RationalFn(num_.divide_exact(g), den_.divide_exact(g));
}

UniPoly RationalFn::to_polynomial() const { return num_.divide_exact(den_); }

Rational RationalFn::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (d == 0) throw Error(ErrorKind::DomainError, "pole of rational function");
  return num_.eval(at) / d;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn(a.num_ - b.num_, a.den_);
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.num_.is_zero()) throw Error(ErrorKind::DomainError, "division by zero rational function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

}  // namespace tutte_ss
