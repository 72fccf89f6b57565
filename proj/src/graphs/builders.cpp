#include "tutte_ss/graphs/builders.hpp"

#include "tutte_ss/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace tutte_ss {

std::string_view to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::sierpinski: return "sierpinski";
    case GraphFamily::hanoi: return "hanoi";
    case GraphFamily::contracted: return "contracted";
  }
  return "unknown";
}

namespace {

void check_level(int n, int min_level) {
  if (n < min_level || n > kMaxBuildLevel) {
    throw Error(ErrorKind::LevelOutOfRange,
                "level " + std::to_string(n) + " outside [" + std::to_string(min_level) + ", " +
                    std::to_string(kMaxBuildLevel) + "]");
  }
}

struct SwapRule {
  char first;
  char second;
  char fixed;
};

constexpr SwapRule rule_for(Generator g) {
  switch (g) {
    case Generator::a: return {'0', '1', '2'};
    case Generator::b: return {'0', '2', '1'};
    case Generator::c: return {'1', '2', '0'};
  }
  return {'0', '1', '2'};
}

constexpr std::array<Generator, 3> kGenerators{Generator::a, Generator::b, Generator::c};

std::string word_of(std::uint32_t id, int n) {
  std::string w(static_cast<std::size_t>(n), '0');
  for (int i = n - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<char>('0' + id % 3);
    id /= 3;
  }
  return w;
}

std::uint32_t id_of(std::string_view w) {
  std::uint32_t id = 0;
  for (char ch : w) id = id * 3 + static_cast<std::uint32_t>(ch - '0');
  return id;
}

}  // namespace

std::string generator_image(std::string_view word, Generator g) {
  if (word.empty()) throw Error(ErrorKind::InvalidArgument, "generator applied to empty word");
  for (char ch : word) {
    if (ch < '0' || ch > '2') throw Error(ErrorKind::InvalidAlphabet, "letter outside {0,1,2}: " + std::string(word));
  }
  const SwapRule rule = rule_for(g);
  std::string out(word);
  for (char& ch : out) {
    if (ch == rule.fixed) continue;
    ch = ch == rule.first ? rule.second : rule.first;
    break;
  }
  return out;
}

BuiltGraph build_sierpinski(int n) {
  check_level(n, 1);
  std::uint32_t vertices = 3;
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  CornerTriple corners{0, 1, 2};

  for (int level = 1; level < n; ++level) {
    const std::uint32_t v = vertices;
    std::vector<VertexId> top(v), left(v, UINT32_MAX), right(v, UINT32_MAX);
    std::iota(top.begin(), top.end(), VertexId{0});
    VertexId next = v;
    left[corners.up] = top[corners.left];
    for (auto& id : left) {
      if (id == UINT32_MAX) id = next++;
    }
    right[corners.up] = top[corners.right];
    right[corners.left] = left[corners.right];
    for (auto& id : right) {
      if (id == UINT32_MAX) id = next++;
    }
    std::vector<Edge> grown;
    grown.reserve(edges.size() * 3);
    for (const auto* map : {&top, &left, &right}) {
      for (const auto& e : edges) grown.push_back({(*map)[e.u], (*map)[e.v]});
    }
    corners = {top[corners.up], left[corners.left], right[corners.right]};
    edges = std::move(grown);
    vertices = next;
  }

  BuiltGraph out{GraphFamily::sierpinski, n, Multigraph(vertices), corners};
  for (const auto& e : edges) out.graph.add_edge(e.u, e.v);
  return out;
}

BuiltGraph build_hanoi(int n, bool include_loops) {
  check_level(n, 1);
  std::uint32_t count = 1;
  for (int i = 0; i < n; ++i) count *= 3;

  BuiltGraph out{GraphFamily::hanoi, n, Multigraph(count), {}};
  std::vector<std::string> labels(count);
  for (std::uint32_t id = 0; id < count; ++id) labels[id] = word_of(id, n);

  for (std::uint32_t id = 0; id < count; ++id) {
    for (Generator g : kGenerators) {
      std::uint32_t image = id_of(generator_image(labels[id], g));
      if (image > id || (image == id && include_loops)) out.graph.add_edge(id, image, g);
    }
  }
  out.graph.set_vertex_labels(std::move(labels));
  out.corners = {0, (count - 1) / 2, count - 1};  // 0^n, 1^n, 2^n
  return out;
}

BuiltGraph build_contracted(int n) {
  check_level(n, 2);
  BuiltGraph sigma = build_hanoi(n, false);
  const std::uint32_t count = sigma.graph.vertex_count();
  const auto& labels = *sigma.graph.vertex_labels();
  const std::string tail0(static_cast<std::size_t>(n - 1), '0');
  const std::string tail1(static_cast<std::size_t>(n - 1), '1');
  const std::string tail2(static_cast<std::size_t>(n - 1), '2');

  // The copies of Sigma_(n-1) share a last letter; these edges change it.
  struct Special {
    std::uint32_t u, v;
    Generator g;
  };
  const std::array<Special, 3> specials{{
      {id_of(tail2 + "0"), id_of(tail2 + "1"), Generator::a},
      {id_of(tail1 + "0"), id_of(tail1 + "2"), Generator::b},
      {id_of(tail0 + "1"), id_of(tail0 + "2"), Generator::c},
  }};

  std::vector<VertexId> rep(count);
  std::iota(rep.begin(), rep.end(), VertexId{0});
  for (const auto& s : specials) rep[std::max(s.u, s.v)] = std::min(s.u, s.v);

  std::vector<VertexId> compact(count, UINT32_MAX);
  std::vector<std::string> new_labels;
  for (std::uint32_t id = 0; id < count; ++id) {
    if (rep[id] == id) {
      compact[id] = static_cast<VertexId>(new_labels.size());
      new_labels.push_back(labels[id]);
    }
  }
  for (std::uint32_t id = 0; id < count; ++id) {
    if (rep[id] != id) {
      compact[id] = compact[rep[id]];
      new_labels[compact[id]] += "|" + labels[id];
    }
  }

  BuiltGraph out{GraphFamily::contracted, n, Multigraph(static_cast<std::uint32_t>(new_labels.size())), {}};
  const auto& edge_labels = *sigma.graph.edge_labels();
  for (std::size_t i = 0; i < sigma.graph.edge_count(); ++i) {
    const Edge& e = sigma.graph.edge(i);
    bool special = std::any_of(specials.begin(), specials.end(), [&](const Special& s) {
      return std::min(s.u, s.v) == std::min(e.u, e.v) && std::max(s.u, s.v) == std::max(e.u, e.v) &&
             s.g == edge_labels[i];
    });
    if (special) continue;
    out.graph.add_edge(compact[e.u], compact[e.v], edge_labels[i]);
  }
  out.graph.set_vertex_labels(std::move(new_labels));
  out.corners = {compact[sigma.corners.up], compact[sigma.corners.left], compact[sigma.corners.right]};
  return out;
}

}  // namespace tutte_ss
