#include "tutte_ss/exactmath/unipoly.hpp"

#include "tutte_ss/errors.hpp"

namespace tutte_ss {

UniPoly::UniPoly(long constant) : UniPoly(Rational(constant)) {}

UniPoly::UniPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

UniPoly::UniPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

UniPoly UniPoly::monomial(const Rational& coeff, Exponent exponent) {
  UniPoly out;
  out.add_term(exponent, coeff);
  return out;
}

UniPoly UniPoly::from_coefficients(const std::vector<Rational>& ascending) {
  UniPoly out;
  for (std::size_t i = 0; i < ascending.size(); ++i) out.add_term(static_cast<Exponent>(i), ascending[i]);
  return out;
}

void UniPoly::add_term(Exponent exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational UniPoly::coeff(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& UniPoly::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorKind::DomainError, "leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

bool UniPoly::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Rational UniPoly::eval(const Rational& at) const {
  if (terms_.empty()) return 0;
  if (at == 0) {
    if (min_exponent() < 0) throw Error(ErrorKind::DomainError, "Laurent polynomial evaluated at 0");
    return coeff(0);
  }
  // Horner from the top, stepping over gaps with explicit powers.
  Rational acc = 0;
  Exponent current = terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= tutte_ss::pow(at, static_cast<long>(current - it->first));
    acc += it->second;
    current = it->first;
  }
  return acc * tutte_ss::pow(at, static_cast<long>(current));
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

UniPoly& UniPoly::operator/=(const Rational& scalar) {
  if (scalar == 0) throw Error(ErrorKind::DomainError, "division by zero");
  for (auto& [e, c] : terms_) c /= scalar;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly::Terms acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ea + eb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return UniPoly(std::move(acc));
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result(1);
  UniPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

UniPoly UniPoly::shifted(Exponent shift) const {
  UniPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

UniPoly UniPoly::inflate(unsigned factor) const {
  UniPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e * factor, c);
  return out;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  if (is_laurent()) throw Error(ErrorKind::DomainError, "compose on a Laurent polynomial");
  UniPoly acc;
  Exponent current = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc = acc * inner.pow(static_cast<unsigned>(current - it->first));
    acc += UniPoly(it->second);
    current = it->first;
  }
  return acc * inner.pow(static_cast<unsigned>(current));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DomainError, "polynomial division by zero");
  if (is_laurent() || divisor.is_laurent()) {
    throw Error(ErrorKind::DomainError, "divmod on a Laurent polynomial");
  }
  UniPoly quotient;
  UniPoly remainder = *this;
  const Exponent dd = divisor.degree();
  const Rational& lead = divisor.leading_coeff();
  while (!remainder.is_zero() && remainder.degree() >= dd) {
    Exponent shift = remainder.degree() - dd;
    Rational factor = remainder.leading_coeff() / lead;
    quotient.add_term(shift, factor);
    for (const auto& [e, c] : divisor.terms_) remainder.add_term(e + shift, -factor * c);
  }
  return {std::move(quotient), std::move(remainder)};
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw Error(ErrorKind::NotDivisible, "nonzero remainder in univariate division");
  return q;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a /= a.leading_coeff();
  return a;
}

}  // namespace tutte_ss
