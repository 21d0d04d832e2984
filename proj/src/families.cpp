#include "cdc/families.hpp"

#include <array>
#include <string>

namespace cdc {

Graph complete_graph(int n) {
  if (n < 1) throw PreconditionError("complete_graph needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return Graph(n, pairs);
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle_graph needs n >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph(n, pairs);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) pairs.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) pairs.emplace_back(i, i + 5);
  for (int i = 0; i < 5; ++i) pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  return Graph(10, pairs);
}

Graph prism_graph(int n) {
  if (n < 6 || n % 2 != 0) throw PreconditionError("prism_graph needs even n >= 6");
  const int h = n / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < h; ++i) pairs.emplace_back(i, (i + 1) % h);
  for (int i = 0; i < h; ++i) pairs.emplace_back(h + i, h + (i + 1) % h);
  for (int i = 0; i < h; ++i) pairs.emplace_back(i, h + i);
  return Graph(n, pairs);
}

Graph ladder_graph(int n) {
  if (n < 6 || n % 2 != 0) throw PreconditionError("ladder_graph needs even n >= 6");
  if (n == 6) return prism_graph(6);
  const int r = (n - 8) / 2;
  std::vector<std::pair<int, int>> pairs;
  // diamond with tips p, q and middle pair x, y
  auto diamond = [&](int p, int q, int x, int y) {
    pairs.insert(pairs.end(), {{p, x}, {p, y}, {q, x}, {q, y}, {x, y}});
  };
  diamond(0, 1, 2, 3);
  diamond(4, 5, 6, 7);
  // top rail 0 - 8 - 10 - ... - 4, bottom rail 1 - 9 - 11 - ... - 5
  int top = 0, bottom = 1;
  for (int i = 0; i < r; ++i) {
    const int t = 8 + 2 * i, b = 9 + 2 * i;
    pairs.emplace_back(top, t);
    pairs.emplace_back(bottom, b);
    pairs.emplace_back(t, b);
    top = t;
    bottom = b;
  }
  pairs.emplace_back(top, 4);
  pairs.emplace_back(bottom, 5);
  return Graph(n, pairs);
}

Graph double_wheel(int n) {
  if (n < 5) throw PreconditionError("double_wheel needs n >= 5");
  const int r = n - 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < r; ++i) pairs.emplace_back(i, (i + 1) % r);
  for (int i = 0; i < r; ++i) pairs.emplace_back(i, r);
  for (int i = 0; i < r; ++i) pairs.emplace_back(i, r + 1);
  return Graph(n, pairs);
}

Graph icosahedron_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) pairs.emplace_back(0, 1 + i);
  for (int i = 0; i < 5; ++i) pairs.emplace_back(1 + i, 1 + (i + 1) % 5);
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(1 + i, 6 + i);
    pairs.emplace_back(1 + (i + 1) % 5, 6 + i);
  }
  for (int i = 0; i < 5; ++i) pairs.emplace_back(6 + i, 6 + (i + 1) % 5);
  for (int i = 0; i < 5; ++i) pairs.emplace_back(6 + i, 11);
  return Graph(12, pairs);
}

Graph dodecahedron_graph() { return dual(embed_or_throw(icosahedron_graph())).graph; }

Graph octahedron_graph() { return gen_theorem2_graph(3, 2).graph; }

Graph stacked_triangulation(int n, int pattern) {
  if (n < 4) throw PreconditionError("stacked_triangulation needs n >= 4");
  std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int v = 4; v < n; ++v) {
    const std::size_t pick = pattern == 0 ? faces.size() - 1 : static_cast<std::size_t>(v * 7) % faces.size();
    const auto [a, b, c] = faces[pick];
    pairs.emplace_back(a, v);
    pairs.emplace_back(b, v);
    pairs.emplace_back(c, v);
    faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(pick));
    faces.push_back({a, b, v});
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  return Graph(n, pairs);
}

PlaneEmbedding embed_or_throw(const Graph& g) {
  auto e = planar_embed(g);
  if (!e) throw PreconditionError("graph is not planar");
  return *e;
}

EdgeId Theorem2Graph::edge(int level_a, int ja, int level_b, int jb) const {
  const EdgeId e = graph.edge_between(vertex(level_a, ja), vertex(level_b, jb));
  if (e < 0) throw InternalAssertion("missing edge in the nested-cycles graph");
  return e;
}

Cycle Theorem2Graph::level_cycle(int level) const {
  std::vector<EdgeId> edges;
  for (int j = 0; j < k; ++j) edges.push_back(edge(level, j, level, j + 1));
  return Cycle(graph, edges);
}

Cycle Theorem2Graph::triangle(int band, int kind, int j) const {
  if (kind == 0) {
    return Cycle(graph, {edge(band, j, band, j + 1), edge(band, j, band + 1, j + 1), edge(band, j + 1, band + 1, j + 1)});
  }
  return Cycle(graph, {edge(band, j, band + 1, j), edge(band, j, band + 1, j + 1), edge(band + 1, j, band + 1, j + 1)});
}

Theorem2Graph gen_theorem2_graph(int k, int l) {
  if (k < 3 || l < 2) throw PreconditionError("gen_theorem2_graph needs k >= 3 and l >= 2");
  Theorem2Graph t;
  t.k = k;
  t.l = l;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < k; ++j) pairs.emplace_back(t.vertex(i, j), t.vertex(i, j + 1));
  }
  for (int i = 0; i + 1 < l; ++i) {
    for (int j = 0; j < k; ++j) pairs.emplace_back(t.vertex(i, j), t.vertex(i + 1, j));
  }
  for (int i = 0; i + 1 < l; ++i) {
    for (int j = 0; j < k; ++j) pairs.emplace_back(t.vertex(i, j), t.vertex(i + 1, j + 1));
  }
  t.graph = Graph(k * l, pairs);

  // Nested drawing: around (i,j) the neighbours come in the order below, skipping absent levels.
  std::vector<std::vector<EdgeEnd>> rotation(static_cast<std::size_t>(k * l));
  auto end_at = [&](Vertex v, Vertex w) {
    const EdgeId e = t.graph.edge_between(v, w);
    return EdgeEnd{e, t.graph.edge(e).u == v ? 0 : 1};
  };
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < k; ++j) {
      const Vertex v = t.vertex(i, j);
      auto& rot = rotation[static_cast<std::size_t>(v)];
      if (i > 0) rot.push_back(end_at(v, t.vertex(i - 1, j)));
      rot.push_back(end_at(v, t.vertex(i, j + 1)));
      if (i + 1 < l) {
        rot.push_back(end_at(v, t.vertex(i + 1, j + 1)));
        rot.push_back(end_at(v, t.vertex(i + 1, j)));
      }
      rot.push_back(end_at(v, t.vertex(i, j - 1)));
      if (i > 0) rot.push_back(end_at(v, t.vertex(i - 1, j - 1)));
    }
  }
  t.embedding = PlaneEmbedding(t.graph, std::move(rotation));
  if (t.embedding.face_count() != t.face_total()) {
    throw InternalAssertion("nested embedding has " + std::to_string(t.embedding.face_count()) + " faces");
  }
  return t;
}

AntiprismLayout gen_antiprism(int k) {
  if (k < 3) throw PreconditionError("gen_antiprism needs k >= 3");
  AntiprismLayout a;
  a.k = k;
  a.base = gen_theorem2_graph(k, 2);
  for (int j = 0; j < k; ++j) {
    a.v0.push_back(a.base.vertex(0, j));
    a.v1.push_back(a.base.vertex(1, j));
    a.e0.push_back(a.base.edge(0, j, 0, j + 1));
    a.e1.push_back(a.base.edge(1, j, 1, j + 1));
  }
  for (EdgeId e = 0; e < a.graph().edge_count(); ++e) {
    const Edge& ed = a.graph().edge(e);
    if ((ed.u < k) != (ed.v < k)) a.e2.push_back(e);
  }
  for (int j = 0; j < k; ++j) {
    a.triangles.push_back(a.base.triangle(0, 1, j));
    a.triangles.push_back(a.base.triangle(0, 0, j));
  }
  a.outer = a.base.level_cycle(0);
  a.inner = a.base.level_cycle(1);
  return a;
}

}  // namespace cdc
