#include "cdc/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

namespace cdc {

Graph::Graph(int vertex_count, std::span<const std::pair<int, int>> endpoint_pairs,
             bool loops_allowed)
    : loops_allowed_(loops_allowed) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  incidence_.resize(static_cast<std::size_t>(vertex_count));
  edges_.reserve(endpoint_pairs.size());
  for (auto [u, v] : endpoint_pairs) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      std::ostringstream msg;
      msg << "endpoint out of range: (" << u << "," << v << ") with n=" << vertex_count;
      throw PreconditionError(msg.str());
    }
    if (u == v && !loops_allowed) {
      throw PreconditionError("loop at vertex " + std::to_string(u) + " but loops are not allowed");
    }
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    incidence_[static_cast<std::size_t>(u)].push_back(id);
    incidence_[static_cast<std::size_t>(v)].push_back(id);
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (vertex_count() == 0) return 0;
  int best = degree(0);
  for (Vertex v = 1; v < vertex_count(); ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Graph::has_parallel_edges() const {
  auto pairs = endpoint_pairs();
  for (auto& p : pairs) {
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
}

bool Graph::is_regular(int d) const {
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degree(v) != d) return false;
  }
  return true;
}

EdgeId Graph::edge_between(Vertex u, Vertex v) const {
  EdgeId best = -1;
  for (EdgeId e : incident(u)) {
    if (edges_[static_cast<std::size_t>(e)].other(u) == v && (best < 0 || e < best)) best = e;
  }
  return best;
}

std::vector<std::pair<int, int>> Graph::endpoint_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

Graph build_graph(int vertex_count, std::span<const std::pair<int, int>> endpoint_pairs,
                  bool loops_allowed) {
  return Graph(vertex_count, endpoint_pairs, loops_allowed);
}

Graph build_graph(int vertex_count, std::initializer_list<std::pair<int, int>> endpoint_pairs,
                  bool loops_allowed) {
  std::vector<std::pair<int, int>> pairs(endpoint_pairs);
  return Graph(vertex_count, pairs, loops_allowed);
}

// ---------------------------------------------------------------------------
// EdgeSet

EdgeSet::EdgeSet(int universe) : universe_(universe) {
  if (universe < 0) throw PreconditionError("negative edge universe");
  words_.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
}

EdgeSet::EdgeSet(int universe, std::span<const EdgeId> ids) : EdgeSet(universe) {
  for (EdgeId e : ids) insert(e);
}

EdgeSet::EdgeSet(int universe, std::initializer_list<EdgeId> ids) : EdgeSet(universe) {
  for (EdgeId e : ids) insert(e);
}

bool EdgeSet::contains(EdgeId e) const {
  if (e < 0 || e >= universe_) return false;
  return (words_[static_cast<std::size_t>(e / 64)] >> (e % 64)) & 1U;
}

void EdgeSet::insert(EdgeId e) {
  if (e < 0 || e >= universe_) throw StructuralError("edge id " + std::to_string(e) + " outside edge set universe");
  words_[static_cast<std::size_t>(e / 64)] |= std::uint64_t{1} << (e % 64);
}

void EdgeSet::erase(EdgeId e) {
  if (e < 0 || e >= universe_) return;
  words_[static_cast<std::size_t>(e / 64)] &= ~(std::uint64_t{1} << (e % 64));
}

void EdgeSet::toggle(EdgeId e) {
  if (e < 0 || e >= universe_) throw StructuralError("edge id " + std::to_string(e) + " outside edge set universe");
  words_[static_cast<std::size_t>(e / 64)] ^= std::uint64_t{1} << (e % 64);
}

int EdgeSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<EdgeId>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

void EdgeSet::check_same_universe(const EdgeSet& other) const {
  if (universe_ != other.universe_) {
    throw StructuralError("edge sets belong to different graphs (universe " + std::to_string(universe_) +
                          " vs " + std::to_string(other.universe_) + ")");
  }
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  const auto x = a.ids();
  const auto y = b.ids();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) { return a ^ b; }

EdgeSet all_edges(const Graph& g) {
  EdgeSet s(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) s.insert(e);
  return s;
}

std::vector<int> degrees_in(const Graph& g, const EdgeSet& s) {
  if (s.universe() != g.edge_count()) throw StructuralError("edge set does not belong to this graph");
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : s.ids()) {
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  return deg;
}

bool is_even(const Graph& g, const EdgeSet& s) {
  const auto deg = degrees_in(g, s);
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

EdgeSubgraph edge_subgraph(const Graph& g, const EdgeSet& s) {
  if (s.universe() != g.edge_count()) throw StructuralError("edge set does not belong to this graph");
  EdgeSubgraph out;
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId e : s.ids()) {
    pairs.emplace_back(g.edge(e).u, g.edge(e).v);
    out.edge_origin.push_back(e);
  }
  out.graph = Graph(g.vertex_count(), pairs, g.loops_allowed());
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  InducedSubgraph out;
  out.vertex_origin.assign(keep.begin(), keep.end());
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int a = index[static_cast<std::size_t>(g.edge(e).u)];
    const int b = index[static_cast<std::size_t>(g.edge(e).v)];
    if (a >= 0 && b >= 0) {
      pairs.emplace_back(a, b);
      out.edge_origin.push_back(e);
    }
  }
  out.graph = Graph(static_cast<int>(keep.size()), pairs, g.loops_allowed());
  return out;
}

std::vector<int> component_labels(const Graph& g, std::span<const char> removed, int* count) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    if (!removed.empty() && removed[static_cast<std::size_t>(s)]) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        const Vertex y = g.edge(e).other(x);
        if (label[static_cast<std::size_t>(y)] >= 0) continue;
        if (!removed.empty() && removed[static_cast<std::size_t>(y)]) continue;
        label[static_cast<std::size_t>(y)] = next;
        stack.push_back(y);
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return label;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  int count = 0;
  component_labels(g, {}, &count);
  return count == 1;
}

std::vector<EdgeId> bridges(const Graph& g) {
  // Iterative lowpoint computation keyed on edge ids, so parallel edges are never bridges.
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> out;
  int clock = 0;
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (order[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    order[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        const Vertex w = g.edge(e).other(f.v);
        if (order[static_cast<std::size_t>(w)] < 0) {
          order[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = clock++;
          stack.push_back({w, e, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], order[static_cast<std::size_t>(w)]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          const Vertex parent = stack.back().v;
          low[static_cast<std::size_t>(parent)] =
              std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done.v)]);
          if (low[static_cast<std::size_t>(done.v)] > order[static_cast<std::size_t>(parent)]) {
            out.push_back(done.via);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_bridge(const Graph& g) { return !bridges(g).empty(); }

bool vertex_connectivity_at_least(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k <= 0) return true;
  if (n <= k) return false;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  // Try every vertex set of size < k as a cut.
  std::function<bool(int, int)> any_cut = [&](int start, int remaining) -> bool {
    int count = 0;
    component_labels(g, removed, &count);
    if (count > 1) return true;
    if (remaining == 0) return false;
    for (Vertex v = start; v < n; ++v) {
      removed[static_cast<std::size_t>(v)] = 1;
      const bool found = any_cut(v + 1, remaining - 1);
      removed[static_cast<std::size_t>(v)] = 0;
      if (found) return true;
    }
    return false;
  };
  return !any_cut(0, k - 1);
}

}  // namespace cdc
