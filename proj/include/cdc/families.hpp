#pragma once

#include <vector>

#include "cdc/cycles.hpp"
#include "cdc/embedding.hpp"
#include "cdc/graph.hpp"

namespace cdc {

Graph complete_graph(int n);
Graph cycle_graph(int n);
/// Outer 5-cycle 0..4, spokes i--i+5, inner pentagram.
Graph petersen_graph();
/// Circular ladder on n vertices: two n/2-cycles joined by rungs. n >= 6 even.
Graph prism_graph(int n);
inline Graph cube_graph() { return prism_graph(8); }
/// Cubic ladder closed by a diamond (K4 minus an edge) at each end; n = 8 + 2 * rungs.
/// n = 6 gives the triangular prism.
Graph ladder_graph(int n);
/// Join of C_{n-2} with two hub vertices n-2 and n-1. n >= 5.
Graph double_wheel(int n);
Graph icosahedron_graph();
Graph dodecahedron_graph();
Graph octahedron_graph();

/// Stacked triangulation on n >= 4 vertices: K4, then vertex i is placed in a face
/// determined by `pattern` (0 = newest face each time, 1 = spread over the original faces).
Graph stacked_triangulation(int n, int pattern = 0);

/// planar_embed, throwing if the graph is not planar.
PlaneEmbedding embed_or_throw(const Graph& g);

/// C_k x P_l plus one diagonal per square; vertex i*k + j sits on level i.
struct Theorem2Graph {
  int k = 0;
  int l = 0;
  Graph graph;
  PlaneEmbedding embedding;

  Vertex vertex(int level, int j) const { return level * k + ((j % k) + k) % k; }
  EdgeId edge(int level_a, int ja, int level_b, int jb) const;
  Cycle level_cycle(int level) const;
  /// Band b triangle with two vertices on level b (kind 0) or on level b+1 (kind 1), indexed by j.
  Cycle triangle(int band, int kind, int j) const;
  int face_total() const { return 2 * k * (l - 1) + 2; }
};
Theorem2Graph gen_theorem2_graph(int k, int l);

/// Antiprism on 2k vertices with the labelling used in the rare-cycle argument.
struct AntiprismLayout {
  int k = 0;
  Theorem2Graph base;  // l = 2
  std::vector<Vertex> v0, v1;
  std::vector<EdgeId> e0, e1, e2;  // outer k-gon, inner k-gon, cross edges
  std::vector<Cycle> triangles;    // T_1..T_n in cyclic order; odd positions meet the inner k-gon
  Cycle outer, inner;

  const Graph& graph() const { return base.graph; }
  const PlaneEmbedding& embedding() const { return base.embedding; }
};
AntiprismLayout gen_antiprism(int k);

}  // namespace cdc
