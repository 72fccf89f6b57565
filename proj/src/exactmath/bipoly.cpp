#include "tutte_ss/exactmath/bipoly.hpp"

#include "tutte_ss/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace tutte_ss {

namespace {

std::atomic<unsigned> g_threads{1};

bool term_less(const BiPoly::Term& a, const BiPoly::Term& b) {
  return a.xe != b.xe ? a.xe < b.xe : a.ye < b.ye;
}

// Binomial row (1 + s t)^n coefficients as integers, ascending.
std::vector<BigInt> binomial_row(unsigned n, long sign) {
  std::vector<BigInt> row(n + 1);
  BigInt c = 1;
  for (unsigned k = 0; k <= n; ++k) {
    row[k] = (sign < 0 && (k & 1U)) ? BigInt(-c) : c;
    c = c * (n - k) / (k + 1);
  }
  return row;
}

}  // namespace

void set_multiplication_threads(unsigned threads) { g_threads = std::max(1U, threads); }
unsigned multiplication_threads() { return g_threads; }

BiPoly::BiPoly(long constant) : BiPoly(BigInt(constant)) {}

BiPoly::BiPoly(const BigInt& constant) {
  if (constant != 0) terms_.push_back({0, 0, constant});
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), term_less);
  BiPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().xe == t.xe && out.terms_.back().ye == t.ye) {
      out.terms_.back().c += t.c;
    } else {
      if (!out.terms_.empty() && out.terms_.back().c == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().c == 0) out.terms_.pop_back();
  return out;
}

BiPoly BiPoly::monomial(const BigInt& coeff, std::uint32_t xe, std::uint32_t ye) {
  BiPoly out;
  if (coeff != 0) out.terms_.push_back({xe, ye, coeff});
  return out;
}

std::uint32_t BiPoly::degree_x() const { return terms_.empty() ? 0 : terms_.back().xe; }

std::uint32_t BiPoly::degree_y() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.ye);
  return d;
}

BigInt BiPoly::coeff(std::uint32_t xe, std::uint32_t ye) const {
  Term key{xe, ye, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
  if (it != terms_.end() && it->xe == xe && it->ye == ye) return it->c;
  return 0;
}

bool BiPoly::all_coefficients_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.c >= 0; });
}

Rational BiPoly::eval(const Rational& x0, const Rational& y0) const {
  if (terms_.empty()) return 0;
  // Integer-only accumulation: with x0 = a/b and y0 = c/d the value is
  // sum c_ij a^i b^(Dx-i) c^j d^(Dy-j) / (b^Dx d^Dy).
  const std::uint32_t dx = degree_x();
  const std::uint32_t dy = degree_y();
  auto powers = [](const BigInt& base, std::uint32_t n) {
    std::vector<BigInt> out(n + 1);
    out[0] = 1;
    for (std::uint32_t i = 1; i <= n; ++i) out[i] = out[i - 1] * base;
    return out;
  };
  const auto xa = powers(x0.get_num(), dx);
  const auto xb = powers(x0.get_den(), dx);
  const auto yc = powers(y0.get_num(), dy);
  const auto yd = powers(y0.get_den(), dy);
  BigInt acc = 0;
  BigInt tmp;
  for (const auto& t : terms_) {
    tmp = t.c * xa[t.xe];
    tmp *= xb[dx - t.xe];
    tmp *= yc[t.ye];
    tmp *= yd[dy - t.ye];
    acc += tmp;
  }
  Rational out(acc, xb[dx] * yd[dy]);
  out.canonicalize();
  return out;
}

UniPoly BiPoly::restrict_x(const Rational& x0) const {
  std::map<UniPoly::Exponent, Rational> acc;
  std::uint32_t dx = degree_x();
  std::vector<Rational> xp(dx + 1);
  xp[0] = 1;
  for (std::uint32_t i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * x0;
  for (const auto& t : terms_) acc[t.ye] += Rational(t.c) * xp[t.xe];
  return UniPoly(std::move(acc));
}

BiPoly BiPoly::merge(const BiPoly& a, const BiPoly& b, bool subtract) {
  BiPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && term_less(*ia, *ib))) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || term_less(*ib, *ia)) {
      out.terms_.push_back({ib->xe, ib->ye, subtract ? BigInt(-ib->c) : ib->c});
      ++ib;
    } else {
      BigInt c = subtract ? BigInt(ia->c - ib->c) : BigInt(ia->c + ib->c);
      if (c != 0) out.terms_.push_back({ia->xe, ia->ye, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  if (other.terms_.empty()) return *this;
  *this = merge(*this, other, false);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  if (other.terms_.empty()) return *this;
  *this = merge(*this, other, true);
  return *this;
}

BiPoly& BiPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= scalar;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::uint32_t out_dx = a.degree_x() + b.degree_x();
  const std::uint32_t out_dy = a.degree_y() + b.degree_y();
  const std::size_t width = static_cast<std::size_t>(out_dy) + 1;
  const std::size_t cells = (static_cast<std::size_t>(out_dx) + 1) * width;

  // Very sparse operands (a few high-degree monomials) would waste a dense
  // accumulator; fall back to an ordered map.
  if (cells > 4 * a.size() * b.size() + 4096) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, BigInt> acc;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        mpz_addmul(acc[{ta.xe + tb.xe, ta.ye + tb.ye}].get_mpz_t(), ta.c.get_mpz_t(), tb.c.get_mpz_t());
      }
    }
    std::vector<BiPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [key, c] : acc) {
      if (c != 0) terms.push_back({key.first, key.second, std::move(c)});
    }
    BiPoly out;
    out.terms_ = std::move(terms);
    return out;
  }

  // Group b's terms by x exponent so each output row x = i collects
  // a-row j times b-row i-j.
  const std::uint32_t bdx = b.degree_x();
  std::vector<std::size_t> b_row_start(bdx + 2, 0);
  for (const auto& t : b.terms_) ++b_row_start[t.xe + 1];
  for (std::uint32_t i = 0; i <= bdx; ++i) b_row_start[i + 1] += b_row_start[i];

  std::vector<BigInt> dense(cells);
  auto fill_rows = [&](std::uint32_t row_begin, std::uint32_t row_end) {
    for (const auto& ta : a.terms_) {
      if (ta.xe > row_end - 1) break;
      std::uint32_t lo = row_begin > ta.xe ? row_begin - ta.xe : 0;
      std::uint32_t hi = std::min<std::uint32_t>(row_end - ta.xe, bdx + 1);
      if (lo >= hi) continue;
      for (std::size_t k = b_row_start[lo]; k < b_row_start[hi]; ++k) {
        const auto& tb = b.terms_[k];
        std::size_t cell = static_cast<std::size_t>(ta.xe + tb.xe) * width + (ta.ye + tb.ye);
        mpz_addmul(dense[cell].get_mpz_t(), ta.c.get_mpz_t(), tb.c.get_mpz_t());
      }
    }
  };

  const unsigned threads = std::min<unsigned>(multiplication_threads(), out_dx + 1);
  if (threads <= 1 || a.size() * b.size() < 20000) {
    fill_rows(0, out_dx + 1);
  } else {
    // Interleave rows so middle-heavy products balance across workers.
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::uint32_t row = w; row <= out_dx; row += threads) fill_rows(row, row + 1);
      });
    }
  }

  BiPoly out;
  for (std::uint32_t i = 0; i <= out_dx; ++i) {
    for (std::uint32_t j = 0; j <= out_dy; ++j) {
      auto& c = dense[static_cast<std::size_t>(i) * width + j];
      if (c != 0) out.terms_.push_back({i, j, std::move(c)});
    }
  }
  return out;
}

BiPoly BiPoly::pow(unsigned exponent) const {
  BiPoly result(1);
  BiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BiPoly BiPoly::times_x_minus_1(unsigned k) const {
  BiPoly out = *this;
  for (unsigned step = 0; step < k; ++step) {
    BiPoly shifted = out;
    for (auto& t : shifted.terms_) ++t.xe;
    out = shifted - out;
  }
  return out;
}

BiPoly divide_exact_x_minus_1(const BiPoly& p, unsigned k) {
  // Synthetic division by (x - 1) on each y-column, top x-degree first.
  std::map<std::uint32_t, std::map<std::uint32_t, BigInt>> columns;
  for (const auto& t : p.terms()) columns[t.ye][t.xe] = t.c;

  std::vector<BiPoly::Term> out;
  for (auto& [ye, col] : columns) {
    if (col.empty()) continue;
    std::uint32_t deg = col.rbegin()->first;
    std::vector<BigInt> coeffs(deg + 1);
    for (auto& [xe, c] : col) coeffs[xe] = std::move(c);
    for (unsigned stage = 0; stage < k; ++stage) {
      if (coeffs.size() == 1) {
        if (coeffs[0] != 0) throw Error(ErrorKind::NotDivisible, "(x-1) does not divide polynomial");
        break;
      }
      std::vector<BigInt> q(coeffs.size() - 1);
      BigInt carry = 0;
      for (std::size_t i = coeffs.size() - 1; i >= 1; --i) {
        carry += coeffs[i];
        q[i - 1] = carry;
      }
      if (carry + coeffs[0] != 0) {
        throw Error(ErrorKind::NotDivisible, "(x-1) does not divide polynomial");
      }
      coeffs = std::move(q);
    }
    for (std::uint32_t xe = 0; xe < coeffs.size(); ++xe) {
      if (coeffs[xe] != 0) out.push_back({xe, ye, std::move(coeffs[xe])});
    }
  }
  return BiPoly::from_terms(std::move(out));
}

UniPoly subst_chromatic(const BiPoly& p) {
  // Sum over y^0 terms of c_i (1 - lambda)^i, expanded with binomials.
  std::map<UniPoly::Exponent, Rational> acc;
  for (const auto& t : p.terms()) {
    if (t.ye != 0) continue;
    auto row = binomial_row(t.xe, -1);
    for (std::uint32_t k = 0; k <= t.xe; ++k) acc[k] += Rational(t.c * row[k]);
  }
  return UniPoly(std::move(acc));
}

RationalFn subst_hyperbola(const BiPoly& p) {
  // Common denominator (y-1)^D with D = deg_x p:
  // num = sum c_ij (y+1)^i (y-1)^(D-i) y^j.
  if (p.is_zero()) return RationalFn();
  const std::uint32_t d = p.degree_x();
  std::vector<UniPoly> mixed(d + 1);
  for (std::uint32_t i = 0; i <= d; ++i) {
    auto plus = binomial_row(i, 1);
    auto minus = binomial_row(d - i, -1);  // (1 - y)^(D-i) ascending in y
    std::vector<BigInt> prod(d + 1, 0);
    for (std::uint32_t a = 0; a <= i; ++a) {
      for (std::uint32_t b = 0; b <= d - i; ++b) prod[a + b] += plus[a] * minus[b];
    }
    // (y-1)^(D-i) = (-1)^(D-i) (1-y)^(D-i)
    std::vector<Rational> asc(prod.begin(), prod.end());
    UniPoly poly = UniPoly::from_coefficients(asc);
    if ((d - i) & 1U) poly *= Rational(-1);
    mixed[i] = std::move(poly);
  }
  std::map<UniPoly::Exponent, Rational> acc;
  for (const auto& t : p.terms()) {
    for (const auto& [e, c] : mixed[t.xe].terms()) acc[e + t.ye] += c * Rational(t.c);
  }
  auto den_row = binomial_row(d, -1);
  std::vector<Rational> den_asc(den_row.begin(), den_row.end());
  UniPoly den = UniPoly::from_coefficients(den_asc);
  if (d & 1U) den *= Rational(-1);
  return RationalFn(UniPoly(std::move(acc)), std::move(den));
}

}  // namespace tutte_ss
