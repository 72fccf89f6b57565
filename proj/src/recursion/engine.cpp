#include "tutte_ss/recursion/engine.hpp"

#include "tutte_ss/errors.hpp"
#include "tutte_ss/recursion/steps.hpp"
#include "fixed_denominator.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace tutte_ss {

std::string_view to_string(Family family) {
  return family == Family::sierpinski ? "sierpinski" : "hanoi";
}

Family family_from_string(std::string_view name) {
  if (name == "sierpinski") return Family::sierpinski;
  if (name == "hanoi") return Family::hanoi;
  throw Error(ErrorKind::InvalidArgument, "unknown family: " + std::string(name));
}

namespace {

std::uint64_t pow3(int n) {
  if (n < 0 || n > 39) throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(n) + " outside [0, 39]");
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

void check_level(int n) {
  if (n < 1) throw Error(ErrorKind::LevelOutOfRange, "level must be >= 1, got " + std::to_string(n));
}

}  // namespace

std::uint64_t vertex_count(Family family, int n) {
  check_level(n);
  return family == Family::sierpinski ? (pow3(n) + 3) / 2 : pow3(n);
}

std::uint64_t edge_count(Family family, int n) {
  check_level(n);
  return family == Family::sierpinski ? pow3(n) : (pow3(n + 1) - 3) / 2;
}

std::uint64_t cycle_rank(Family family, int n) { return edge_count(family, n) - vertex_count(family, n) + 1; }

BiPoly TutteTriple::total() const { return t2 + t1 * 3L + t0; }

TutteTriple ReducedTriple::expand() const {
  return {family, level, t2, n.times_x_minus_1(1), m.times_x_minus_1(2)};
}

BiPoly ReducedTriple::total() const { return expand().total(); }

std::size_t default_term_cap() {
  if (const char* env = std::getenv("TUTTE_SS_TERM_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, std::string("TUTTE_SS_TERM_CAP is not a number: ") + env);
    }
  }
  return 500'000;
}

namespace {

const BiPoly& x_minus_1() {
  static const BiPoly u = BiPoly::x() - BiPoly(1);
  return u;
}

const BiPoly& y_minus_1() {
  static const BiPoly w = BiPoly::y() - BiPoly(1);
  return w;
}

ReducedValues<BiPoly> symbolic_initial() { return {BiPoly::y() + BiPoly(2), BiPoly(1), BiPoly(1)}; }

// Upper bound on stored terms of a level: three polynomials within the
// generic Tutte degree box deg_x <= |V|-1, deg_y <= |E|-|V|+1.
double level_term_bound(Family family, int n) {
  double v = static_cast<double>(vertex_count(family, n));
  double c = static_cast<double>(cycle_rank(family, n));
  return 3.0 * v * (c + 1.0);
}

void check_cap(Family family, int n, std::size_t actual, std::size_t cap) {
  if (actual > cap) {
    throw Error(ErrorKind::ResourceCap, std::string(to_string(family)) + " level " + std::to_string(n) + " holds " +
                                            std::to_string(actual) + " terms, above the cap of " +
                                            std::to_string(cap) + "; use point evaluation instead");
  }
}

class TripleCache {
 public:
  static TripleCache& instance() {
    static TripleCache cache;
    return cache;
  }

  std::shared_ptr<const ReducedTriple> get(Family family, int level) {
    std::lock_guard lock(mutex_);
    auto it = entries_.find({family, level});
    return it == entries_.end() ? nullptr : it->second;
  }

  void put(std::shared_ptr<const ReducedTriple> triple) {
    std::lock_guard lock(mutex_);
    entries_[{triple->family, triple->level}] = std::move(triple);
  }

  void clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<Family, int>, std::shared_ptr<const ReducedTriple>> entries_;
};

// Serializes symbolic computation so one level is built once.
std::mutex& compute_mutex() {
  static std::mutex m;
  return m;
}

// The bound grows with the level, so checking the target level up front
// refuses hopeless requests before any work is done.
void check_bound(Family family, int n, std::size_t cap) {
  const double bound = level_term_bound(family, n);
  if (bound > static_cast<double>(cap)) {
    throw Error(ErrorKind::ResourceCap, std::string(to_string(family)) + " level " + std::to_string(n) +
                                            " may hold up to " + std::to_string(static_cast<std::uint64_t>(bound)) +
                                            " terms, above the cap of " + std::to_string(cap) +
                                            "; use point evaluation instead");
  }
}

ReducedTriple compute_uncached(Family family, int n, const RecursionOptions& options) {
  check_bound(family, n, options.term_cap);
  ReducedValues<BiPoly> values = symbolic_initial();
  for (int level = 1; level < n; ++level) {
    values = reduced_step(family, values, x_minus_1(), y_minus_1(), options.perturb);
    check_cap(family, level + 1, values.t2.size() + values.n.size() + values.m.size(), options.term_cap);
  }
  return {family, n, std::move(values.t2), std::move(values.n), std::move(values.m)};
}

}  // namespace

void clear_triple_cache() { TripleCache::instance().clear(); }

ReducedTriple reduced_triple(Family family, int n, const RecursionOptions& options) {
  check_level(n);
  if (options.perturb != 0) return compute_uncached(family, n, options);

  auto& cache = TripleCache::instance();
  if (auto hit = cache.get(family, n)) return *hit;

  check_bound(family, n, options.term_cap);
  std::lock_guard lock(compute_mutex());
  // Walk down to the highest cached level, then build upwards.
  int start = n;
  std::shared_ptr<const ReducedTriple> base;
  while (start > 1 && !(base = cache.get(family, start))) --start;
  if (!base) {
    auto initial = symbolic_initial();
    base = std::make_shared<const ReducedTriple>(
        ReducedTriple{family, 1, std::move(initial.t2), std::move(initial.n), std::move(initial.m)});
    cache.put(base);
  }
  for (int level = base->level; level < n; ++level) {
    ReducedValues<BiPoly> values{base->t2, base->n, base->m};
    values = reduced_step(family, values, x_minus_1(), y_minus_1());
    check_cap(family, level + 1, values.t2.size() + values.n.size() + values.m.size(), options.term_cap);
    base = std::make_shared<const ReducedTriple>(
        ReducedTriple{family, level + 1, std::move(values.t2), std::move(values.n), std::move(values.m)});
    cache.put(base);
  }
  return *base;
}

ReducedTriple sierpinski_reduced(int n, const RecursionOptions& options) {
  return reduced_triple(Family::sierpinski, n, options);
}

ReducedTriple hanoi_reduced(int n, const RecursionOptions& options) {
  return reduced_triple(Family::hanoi, n, options);
}

TutteTriple tutte_triple(Family family, int n, const RecursionOptions& options) {
  return reduced_triple(family, n, options).expand();
}

TutteTriple sierpinski_triple(int n, const RecursionOptions& options) {
  return tutte_triple(Family::sierpinski, n, options);
}

TutteTriple hanoi_triple(int n, const RecursionOptions& options) { return tutte_triple(Family::hanoi, n, options); }

namespace {

// Runs levels 1..n at (x0, y0), calling visit(level, values) after each.
template <class Visit>
void run_point_recursion(Family family, int n, const Rational& x0, const Rational& y0, long perturb, Visit visit) {
  check_level(n);
  BigInt d;
  mpz_lcm(d.get_mpz_t(), x0.get_den_mpz_t(), y0.get_den_mpz_t());
  detail::DenominatorPowers powers(d);
  auto lift = [&](const Rational& q) { return detail::FixedDenominator::from_rational(q, &powers); };
  const detail::FixedDenominator u = lift(x0 - 1);
  const detail::FixedDenominator w = lift(y0 - 1);
  ReducedValues<detail::FixedDenominator> values{lift(y0 + 2), lift(1), lift(1)};
  visit(1, values);
  for (int level = 1; level < n; ++level) {
    values = reduced_step(family, values, u, w, perturb);
    visit(level + 1, values);
  }
}

PointTriple to_point(Family family, int level, const Rational& x0, const Rational& y0,
                     const ReducedValues<detail::FixedDenominator>& v) {
  return {family, level, x0, y0, v.t2.to_rational(), v.n.to_rational(), v.m.to_rational()};
}

}  // namespace

std::vector<PointTriple> point_series(Family family, int n, const Rational& x0, const Rational& y0, long perturb) {
  std::vector<PointTriple> out;
  run_point_recursion(family, n, x0, y0, perturb, [&](int level, const auto& values) {
    out.push_back(to_point(family, level, x0, y0, values));
  });
  return out;
}

PointTriple eval_triple_at_point(Family family, int n, const Rational& x0, const Rational& y0, long perturb) {
  PointTriple out;
  run_point_recursion(family, n, x0, y0, perturb, [&](int level, const auto& values) {
    if (level == n) out = to_point(family, level, x0, y0, values);
  });
  return out;
}

TutteTriple undivided_triple(Family family, int n) {
  check_level(n);
  std::function<BiPoly(const BiPoly&)> divide = [](const BiPoly& p) { return divide_exact_x_minus_1(p, 1); };
  const BiPoly& u = x_minus_1();
  FullValues<BiPoly> values{BiPoly::y() + BiPoly(2), u, u * u};
  for (int level = 1; level < n; ++level) values = full_step(family, values, u, y_minus_1(), divide);
  return {family, n, std::move(values.t2), std::move(values.t1), std::move(values.t0)};
}

BiPoly contracted_tutte(int n, const RecursionOptions& options) {
  if (n < 2) throw Error(ErrorKind::LevelOutOfRange, "contracted family starts at level 2");
  ReducedTriple hanoi = hanoi_reduced(n - 1, options);
  ReducedValues<BiPoly> in{hanoi.t2, hanoi.n, hanoi.m};
  auto out = reduced_step(Family::sierpinski, in, x_minus_1(), y_minus_1());
  return ReducedTriple{Family::sierpinski, n, std::move(out.t2), std::move(out.n), std::move(out.m)}.total();
}

Rational contracted_tutte_at(int n, const Rational& x0, const Rational& y0) {
  if (n < 2) throw Error(ErrorKind::LevelOutOfRange, "contracted family starts at level 2");
  PointTriple hanoi = eval_triple_at_point(Family::hanoi, n - 1, x0, y0);
  ReducedValues<Rational> in{hanoi.t2, hanoi.n, hanoi.m};
  auto out = reduced_step(Family::sierpinski, in, Rational(x0 - 1), Rational(y0 - 1));
  PointTriple contracted{Family::sierpinski, n, x0, y0, out.t2, out.n, out.m};
  return contracted.total();
}

BiPoly join_identity_residual(int n, const RecursionOptions& options) {
  check_level(n);
  BiPoly next = hanoi_reduced(n + 1, options).total();
  BiPoly current = hanoi_reduced(n, options).total();
  BiPoly factor = BiPoly::monomial(1, 2, 0) + BiPoly::x() + BiPoly(1);
  return next - factor * current.pow(3) - contracted_tutte(n + 1, options);
}

Rational join_identity_residual_at(int n, const Rational& x0, const Rational& y0) {
  check_level(n);
  Rational next = eval_triple_at_point(Family::hanoi, n + 1, x0, y0).total();
  Rational current = eval_triple_at_point(Family::hanoi, n, x0, y0).total();
  Rational factor = x0 * x0 + x0 + 1;
  return next - factor * current * current * current - contracted_tutte_at(n + 1, x0, y0);
}

}  // namespace tutte_ss
