#include "tutte_ss/evaluations/growth.hpp"

#include "tutte_ss/errors.hpp"
#include "tutte_ss/recursion/engine.hpp"

namespace tutte_ss {

GrowthSeries growth_constant_series(Family family, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::LevelOutOfRange, "max level must be >= 1");
  GrowthSeries series;
  series.family = family;
  // One pass of the point recursion yields every level's complexity.
  const auto points = point_series(family, n_max, Rational(1), Rational(1));
  for (const PointTriple& p : points) {
    const BigInt tau = to_integer(p.total());
    const HighFloat v = to_high(BigInt(std::to_string(vertex_count(family, p.level))));
    series.entries.push_back({p.level, log_big(tau) / v});
  }
  return series;
}

HighFloat growth_constant_limit(Family family) {
  const HighFloat l2 = log(HighFloat(2));
  const HighFloat l3 = log(HighFloat(3));
  const HighFloat l5 = log(HighFloat(5));
  if (family == Family::sierpinski) return l2 / 3 + l3 / 2 + l5 / 6;
  return (l3 + l5) / 4;
}

}  // namespace tutte_ss
