#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdc {

using Vertex = int;
using EdgeId = int;

/// Thrown when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an object does not belong to the graph it is used with.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction step reached a state its argument says cannot happen.
class InternalAssertion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool is_loop() const { return u == v; }
};

/// Undirected multigraph with dense, stable edge ids (edge id = insertion index).
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::span<const std::pair<int, int>> endpoint_pairs,
        bool loops_allowed = false);

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool loops_allowed() const { return loops_allowed_; }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const { return edges_; }

  // A loop is listed twice in its vertex's incidence list.
  std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const;
  int min_degree() const;

  bool has_loops() const;
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }
  bool is_regular(int d) const;

  /// Lowest edge id joining u and v, or -1.
  EdgeId edge_between(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_between(u, v) >= 0; }

  std::vector<std::pair<int, int>> endpoint_pairs() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.loops_allowed_ == b.loops_allowed_ && a.vertex_count() == b.vertex_count() &&
           a.endpoint_pairs() == b.endpoint_pairs();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  bool loops_allowed_ = false;
};

Graph build_graph(int vertex_count, std::span<const std::pair<int, int>> endpoint_pairs,
                  bool loops_allowed = false);
Graph build_graph(int vertex_count, std::initializer_list<std::pair<int, int>> endpoint_pairs,
                  bool loops_allowed = false);

/// Set of edge ids over a fixed universe [0, universe).
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe);
  EdgeSet(int universe, std::span<const EdgeId> ids);
  EdgeSet(int universe, std::initializer_list<EdgeId> ids);

  int universe() const { return universe_; }
  bool contains(EdgeId e) const;
  void insert(EdgeId e);
  void erase(EdgeId e);
  void toggle(EdgeId e);
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<EdgeId> ids() const;

  EdgeSet& operator^=(const EdgeSet& other);
  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) = default;
  // Lexicographic on the sorted id lists.
  friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b);

 private:
  void check_same_universe(const EdgeSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);
EdgeSet all_edges(const Graph& g);

/// Degree of every vertex counting only edges in `s` (a loop counts twice).
std::vector<int> degrees_in(const Graph& g, const EdgeSet& s);
bool is_even(const Graph& g, const EdgeSet& s);

/// Spanning subgraph whose edges are those in `s`; new edge i is old edge `edge_origin[i]`.
struct EdgeSubgraph {
  Graph graph;
  std::vector<EdgeId> edge_origin;
};
EdgeSubgraph edge_subgraph(const Graph& g, const EdgeSet& s);

/// Graph with vertex set `keep` (in the given order) and all edges among them.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertex_origin;
  std::vector<EdgeId> edge_origin;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

bool is_connected(const Graph& g);
/// Connected components of the graph with `removed` vertices deleted; component id per vertex (-1 for removed).
std::vector<int> component_labels(const Graph& g, std::span<const char> removed, int* count = nullptr);
std::vector<EdgeId> bridges(const Graph& g);
bool has_bridge(const Graph& g);

/// True iff g has more than k vertices and no vertex cut of size < k. Exhaustive over small cuts.
bool vertex_connectivity_at_least(const Graph& g, int k);

}  // namespace cdc
