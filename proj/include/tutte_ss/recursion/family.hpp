#pragma once

#include <cstdint>
#include <string_view>

namespace tutte_ss {

// Recursive families: Sierpinski graphs Gamma_n and loopless Hanoi
// Schreier graphs Sigma_n.
enum class Family { sierpinski, hanoi };

std::string_view to_string(Family family);
Family family_from_string(std::string_view name);

// |V| and |E| of the level-n graph (loopless for Hanoi). n <= 39.
std::uint64_t vertex_count(Family family, int n);
std::uint64_t edge_count(Family family, int n);
// Cycle rank |E| - |V| + 1.
std::uint64_t cycle_rank(Family family, int n);

}  // namespace tutte_ss
