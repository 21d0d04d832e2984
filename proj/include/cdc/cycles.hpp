#pragma once

#include <compare>
#include <functional>
#include <span>
#include <vector>

#include "cdc/graph.hpp"

namespace cdc {

/// Edge-id set of a connected 2-regular subgraph, stored sorted.
class Cycle {
 public:
  Cycle() = default;
  // Throws StructuralError if the edges do not form a cycle of g.
  Cycle(const Graph& g, std::vector<EdgeId> edges);
  static Cycle from_sorted_unchecked(std::vector<EdgeId> sorted_edges);

  std::span<const EdgeId> edges() const { return edges_; }
  int length() const { return static_cast<int>(edges_.size()); }
  bool contains(EdgeId e) const;
  EdgeSet edge_set(int universe) const { return EdgeSet(universe, edges_); }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<EdgeId> edges_;
};

bool is_cycle(const Graph& g, std::span<const EdgeId> edges);
inline bool is_cycle(const Graph& g, const EdgeSet& s) { return is_cycle(g, s.ids()); }

/// Vertices of c in walk order, starting at the smaller endpoint of its lowest edge.
std::vector<Vertex> cycle_vertices(const Graph& g, const Cycle& c);
/// Edges of c in walk order matching cycle_vertices: edge i joins vertex i and i+1.
std::vector<EdgeId> cycle_walk(const Graph& g, const Cycle& c);

struct CycleCatalog {
  int edge_universe = 0;
  int min_len = 0;
  int max_len = 0;
  std::vector<Cycle> cycles;
};

/// All simple cycles with length in [min_len, max_len], sorted. Loops are ignored.
/// workers <= 0 uses the OpenMP default; 1 runs the serial path.
CycleCatalog enumerate_cycles(const Graph& g, int min_len, int max_len, int workers = 0);
CycleCatalog enumerate_cycles_serial(const Graph& g, int min_len, int max_len);
/// Defaults: [2 if g has parallel edges else 3, n].
CycleCatalog enumerate_cycles(const Graph& g, int workers = 0);

std::vector<Cycle> enumerate_hamiltonian(const Graph& g);

/// Length of a shortest cycle (2 with parallel edges); 0 for forests. Loops are ignored.
int girth(const Graph& g);

/// Calls visit for every cycle inside `allowed` that uses edge `through`. Stops early if visit returns false.
void for_each_cycle_through(const Graph& g, const EdgeSet& allowed, EdgeId through,
                            const std::function<bool(const Cycle&)>& visit);

/// Minimum-cardinality partition of the even edge set `s` into cycles (exact branch and bound).
std::vector<Cycle> min_cycle_decomposition(const Graph& g, const EdgeSet& s);
/// Throws InternalAssertion if |parts| > floor((host_order-1)/2).
void assert_lemma1_bound(std::span<const Cycle> parts, int host_order);

struct Suppression {
  Graph graph;
  std::vector<Vertex> vertex_origin;            // new vertex -> old vertex
  std::vector<std::vector<EdgeId>> provenance;  // new edge -> old edges it stands for
  EdgeId merged_edge = -1;
};

/// Removes degree-2 vertex v and joins its two neighbours by a new last edge.
/// A merge of two parallel edges would create a loop; that needs allow_loop.
Suppression suppress_degree2_vertex(const Graph& g, Vertex v, bool allow_loop = false);

/// Maps edges of a suppressed graph back to the original edge ids (sorted).
std::vector<EdgeId> lift_edges(const std::vector<std::vector<EdgeId>>& provenance, std::span<const EdgeId> edges);

/// Inserts a new vertex on edge e; the two halves are e (u..new) and a new last edge (new..v).
Graph subdivide_edge(const Graph& g, EdgeId e);

}  // namespace cdc
