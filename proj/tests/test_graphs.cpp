#include "tutte_ss/errors.hpp"
#include "tutte_ss/graphs/builders.hpp"
#include "tutte_ss/graphs/graph_json.hpp"

#include <doctest.h>

#include <set>

using namespace tutte_ss;

namespace {

bool has_parallel_or_loop(const Multigraph& g) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) return true;
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("sierpinski graphs: sizes, simplicity, degrees") {
  for (int n = 1; n <= 7; ++n) {
    const BuiltGraph g = build_sierpinski(n);
    const std::uint64_t p3 = pow_ui(3, static_cast<unsigned long>(n)).get_ui();
    CHECK(g.graph.vertex_count() == (p3 + 3) / 2);
    CHECK(g.graph.edge_count() == p3);
    CHECK(is_connected(g.graph));
    CHECK_FALSE(has_parallel_or_loop(g.graph));
    const auto deg = g.graph.degrees();
    for (VertexId v = 0; v < g.graph.vertex_count(); ++v) {
      const bool corner = v == g.corners.up || v == g.corners.left || v == g.corners.right;
      CHECK(deg[v] == (corner ? 2U : 4U));
    }
  }
  CHECK_THROWS_AS(build_sierpinski(0), Error);
  CHECK_THROWS_AS(build_sierpinski(kMaxBuildLevel + 1), Error);
}

TEST_CASE("hanoi graphs: generator action and sizes") {
  CHECK(generator_image("00", Generator::a) == "10");
  CHECK(generator_image("00", Generator::b) == "20");
  CHECK(generator_image("00", Generator::c) == "00");
  CHECK(generator_image("201", Generator::a) == "211");
  CHECK_THROWS_AS(generator_image("03", Generator::a), Error);
  for (const char* w : {"012", "221", "100", "000"}) {
    for (Generator g : {Generator::a, Generator::b, Generator::c}) CHECK(generator_image(generator_image(w, g), g) == w);
  }
  for (int n = 1; n <= 7; ++n) {
    const BuiltGraph g = build_hanoi(n);
    const std::uint64_t p3 = pow_ui(3, static_cast<unsigned long>(n)).get_ui();
    CHECK(g.graph.vertex_count() == p3);
    CHECK(g.graph.edge_count() == (3 * p3 - 3) / 2);
    CHECK(is_connected(g.graph));
    CHECK(g.graph.loop_count() == 0);
    CHECK(build_hanoi(n, true).graph.loop_count() == 3);
  }
  const BuiltGraph s1 = build_hanoi(1);
  CHECK(isomorphic_small(s1.graph, build_sierpinski(1).graph));
}

TEST_CASE("hanoi level 2 has the expected labelled edges") {
  const BuiltGraph g = build_hanoi(2);
  const auto& labels = *g.graph.vertex_labels();
  const auto& gens = *g.graph.edge_labels();
  std::set<std::tuple<std::string, std::string, char>> edges;
  for (std::size_t i = 0; i < g.graph.edge_count(); ++i) {
    const Edge& e = g.graph.edge(i);
    edges.insert({labels[e.u], labels[e.v], static_cast<char>(gens[i])});
  }
  CHECK(edges.count({"00", "10", 'a'}) == 1);
  CHECK(edges.count({"00", "20", 'b'}) == 1);
  CHECK(g.corners == CornerTriple{0, 4, 8});
}

TEST_CASE("contracted graphs") {
  const BuiltGraph i2 = build_contracted(2);
  CHECK(i2.graph.vertex_count() == 6);
  CHECK(i2.graph.edge_count() == 9);
  CHECK(isomorphic_small(i2.graph, build_sierpinski(2).graph));
  const BuiltGraph i3 = build_contracted(3);
  CHECK(i3.graph.vertex_count() == 24);
  CHECK(i3.graph.edge_count() == 36);
  CHECK(is_connected(i3.graph));
  const auto& labels = *i3.graph.vertex_labels();
  CHECK(labels[i3.corners.up] == "000");
  CHECK(labels[i3.corners.left] == "111");
  CHECK(labels[i3.corners.right] == "222");
  CHECK_THROWS_AS(build_contracted(1), Error);
}

TEST_CASE("components and joins") {
  Multigraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  CHECK(connected_components(g).count == 2);
  const std::size_t only_first[] = {0};
  const Partition p = connected_components(g, only_first);
  CHECK(p.count == 4);
  CHECK(p.component_of[0] == p.component_of[1]);
  CHECK_FALSE(is_connected(g));

  const Multigraph k3 = build_sierpinski(1).graph;
  const Multigraph bowtie = one_point_join(k3, 0, k3, 0);
  CHECK(bowtie.vertex_count() == 5);
  CHECK(bowtie.edge_count() == 6);
  CHECK(is_connected(bowtie));
}

TEST_CASE("graph json is deterministic") {
  const Json a = to_json(build_hanoi(2, true));
  const Json b = to_json(build_hanoi(2, true));
  CHECK(a.dump() == b.dump());
  CHECK(a["family"] == "hanoi");
  CHECK(a["vertices"].size() == 9);
  CHECK(a["edges"].size() == 15);
  CHECK(a["corners"] == Json::array({0, 4, 8}));
}
