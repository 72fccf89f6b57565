#pragma once

#include "tutte_ss/graphs/multigraph.hpp"

#include <string>
#include <string_view>

namespace tutte_ss {

enum class GraphFamily { sierpinski, hanoi, contracted };

std::string_view to_string(GraphFamily family);

struct CornerTriple {
  VertexId up = 0;
  VertexId left = 0;
  VertexId right = 0;

  friend bool operator==(const CornerTriple&, const CornerTriple&) = default;
};

struct BuiltGraph {
  GraphFamily family = GraphFamily::sierpinski;
  int level = 0;
  Multigraph graph;
  CornerTriple corners;
};

// Builders refuse levels above this (the graphs have 3^n edges).
inline constexpr int kMaxBuildLevel = 13;

// Gamma_n: K_3 at n = 1; level n+1 glues three copies of level n at corners
// (top.left = left.up, top.right = right.up, left.right = right.left).
// Ids: top copy keeps its ids, then new ids of the left copy, then right.
BuiltGraph build_sierpinski(int n);

// Sigma_n on the 3^n ternary words (id = word read in base 3, first letter
// most significant). Edge {w, g(w)} for g in a, b, c, emitted in ascending
// w then a, b, c order; fixed points become loops iff include_loops.
BuiltGraph build_hanoi(int n, bool include_loops = false);

// I_n: Sigma_n (loopless) with its three top-level special edges contracted.
BuiltGraph build_contracted(int n);

// Action of a Hanoi generator on a word over {0,1,2}:
// a = (01)(id,id,a), b = (02)(id,b,id), c = (12)(c,id,id).
std::string generator_image(std::string_view word, Generator g);

}  // namespace tutte_ss
