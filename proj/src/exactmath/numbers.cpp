#include "tutte_ss/exactmath/numbers.hpp"

#include "tutte_ss/errors.hpp"

#include <cctype>

namespace tutte_ss {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::TooManyEdges: return "TooManyEdges";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotLaurent: return "NotLaurent";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorKind::DomainError, "zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Rational out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()),
             static_cast<unsigned long>(exponent));
  // (a/b)^k stays reduced when a/b is reduced.
  return out;
}

BigInt pow_ui(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

namespace {

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorKind::InvalidArgument, "empty number");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorKind::InvalidArgument, "not a number: " + std::string(text));
    }
  }
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return BigInt(owned, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    std::string digits(whole);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    digits += frac;
    Rational out(parse_integer(digits), pow_ui(10, frac.size()));
    out.canonicalize();
    if (negative && out > 0) out = -out;
    return out;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

BigInt to_integer(const Rational& value) {
  if (!is_integer(value)) {
    throw Error(ErrorKind::InvalidArgument, "expected an integer, got " + to_string(value));
  }
  return value.get_num();
}

}  // namespace tutte_ss
