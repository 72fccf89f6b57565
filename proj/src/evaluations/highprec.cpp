#include "tutte_ss/evaluations/highprec.hpp"

#include "tutte_ss/errors.hpp"

#include <sstream>

namespace tutte_ss {

HighFloat to_high(const BigInt& value) {
  HighFloat out;
  mpfr_set_z(out.backend().data(), value.get_mpz_t(), MPFR_RNDN);
  return out;
}

HighFloat to_high(const Rational& value) {
  HighFloat out;
  mpfr_set_q(out.backend().data(), value.get_mpq_t(), MPFR_RNDN);
  return out;
}

HighFloat log_big(const BigInt& value) {
  if (value <= 0) throw Error(ErrorKind::DomainError, "log of a non-positive integer");
  return log(to_high(value));
}

std::string to_string(const HighFloat& value, int digits) {
  return value.str(digits, std::ios_base::fmtflags(0));
}

}  // namespace tutte_ss
