#include "tutte_ss/errors.hpp"
#include "tutte_ss/oracle/oracle.hpp"

#include <vector>

namespace tutte_ss::oracle {

BigInt spanning_tree_count(const Multigraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "matrix-tree needs a connected graph");
  const std::uint32_t v = g.vertex_count();
  if (v <= 1) return 1;

  // Laplacian with the last row and column removed.
  const std::size_t n = v - 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if (e.u < n) a[e.u][e.u] += 1;
    if (e.v < n) a[e.v][e.v] += 1;
    if (e.u < n && e.v < n) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }

  // Bareiss: every intermediate division is exact.
  int sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  return sign > 0 ? det : BigInt(-det);
}

}  // namespace tutte_ss::oracle
