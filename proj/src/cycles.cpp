#include "cdc/cycles.hpp"

#include <algorithm>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cdc {

Cycle::Cycle(const Graph& g, std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (!is_cycle(g, edges_)) throw StructuralError("edge set is not a cycle of the graph");
}

Cycle Cycle::from_sorted_unchecked(std::vector<EdgeId> sorted_edges) {
  Cycle c;
  c.edges_ = std::move(sorted_edges);
  return c;
}

bool Cycle::contains(EdgeId e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool is_cycle(const Graph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) return false;
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::map<Vertex, std::vector<EdgeId>> at;
  for (EdgeId e : sorted) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) return false;
    at[ed.u].push_back(e);
    at[ed.v].push_back(e);
  }
  for (const auto& [v, inc] : at) {
    if (inc.size() != 2) return false;
  }
  // 2-regular; check that one walk visits every edge.
  const Vertex start = g.edge(sorted.front()).u;
  Vertex cur = start;
  EdgeId prev = -1;
  std::size_t steps = 0;
  do {
    const auto& inc = at[cur];
    const EdgeId next = inc[0] == prev ? inc[1] : inc[0];
    cur = g.edge(next).other(cur);
    prev = next;
    ++steps;
  } while (cur != start && steps <= sorted.size());
  return steps == sorted.size();
}

std::vector<EdgeId> cycle_walk(const Graph& g, const Cycle& c) {
  const auto edges = c.edges();
  std::map<Vertex, std::vector<EdgeId>> at;
  for (EdgeId e : edges) {
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  std::vector<EdgeId> walk;
  const EdgeId first = edges.front();
  Vertex cur = std::min(g.edge(first).u, g.edge(first).v);
  EdgeId prev = -1;
  EdgeId next = first;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    walk.push_back(next);
    cur = g.edge(next).other(cur);
    prev = next;
    const auto& inc = at[cur];
    next = inc[0] == prev ? inc[1] : inc[0];
  }
  return walk;
}

std::vector<Vertex> cycle_vertices(const Graph& g, const Cycle& c) {
  const auto walk = cycle_walk(g, c);
  std::vector<Vertex> verts;
  Vertex cur = std::min(g.edge(walk.front()).u, g.edge(walk.front()).v);
  for (EdgeId e : walk) {
    verts.push_back(cur);
    cur = g.edge(e).other(cur);
  }
  return verts;
}

namespace {

// Cycles whose minimum vertex is s, each reported once (first edge id < closing edge id).
void cycles_from_start(const Graph& g, Vertex s, int min_len, int max_len, std::vector<Cycle>& out) {
  const int n = g.vertex_count();
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> path;
  on_path[static_cast<std::size_t>(s)] = 1;
  auto dfs = [&](auto&& self, Vertex x) -> void {
    for (EdgeId e : g.incident(x)) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      if (!path.empty() && e == path.back()) continue;
      const Vertex y = ed.other(x);
      if (y == s) {
        if (path.empty()) continue;
        const int len = static_cast<int>(path.size()) + 1;
        if (len >= min_len && len <= max_len && path.front() < e) {
          std::vector<EdgeId> edges(path);
          edges.push_back(e);
          std::sort(edges.begin(), edges.end());
          out.push_back(Cycle::from_sorted_unchecked(std::move(edges)));
        }
        continue;
      }
      if (y < s || on_path[static_cast<std::size_t>(y)]) continue;
      if (static_cast<int>(path.size()) + 1 >= max_len) continue;
      on_path[static_cast<std::size_t>(y)] = 1;
      path.push_back(e);
      self(self, y);
      path.pop_back();
      on_path[static_cast<std::size_t>(y)] = 0;
    }
  };
  dfs(dfs, s);
}

CycleCatalog make_catalog(const Graph& g, int min_len, int max_len) {
  CycleCatalog cat;
  cat.edge_universe = g.edge_count();
  cat.min_len = min_len;
  cat.max_len = max_len;
  return cat;
}

}  // namespace

CycleCatalog enumerate_cycles_serial(const Graph& g, int min_len, int max_len) {
  CycleCatalog cat = make_catalog(g, min_len, max_len);
  for (Vertex s = 0; s < g.vertex_count(); ++s) cycles_from_start(g, s, min_len, max_len, cat.cycles);
  std::sort(cat.cycles.begin(), cat.cycles.end());
  return cat;
}

CycleCatalog enumerate_cycles(const Graph& g, int min_len, int max_len, int workers) {
  if (workers == 1) return enumerate_cycles_serial(g, min_len, max_len);
  CycleCatalog cat = make_catalog(g, min_len, max_len);
  const int n = g.vertex_count();
  std::vector<std::vector<Cycle>> buckets(static_cast<std::size_t>(n));
#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int s = 0; s < n; ++s) cycles_from_start(g, s, min_len, max_len, buckets[static_cast<std::size_t>(s)]);
  for (auto& b : buckets) {
    for (auto& c : b) cat.cycles.push_back(std::move(c));
  }
  std::sort(cat.cycles.begin(), cat.cycles.end());
  return cat;
}

CycleCatalog enumerate_cycles(const Graph& g, int workers) {
  return enumerate_cycles(g, g.has_parallel_edges() ? 2 : 3, std::max(g.vertex_count(), 2), workers);
}

std::vector<Cycle> enumerate_hamiltonian(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Cycle> out;
  if (n < 2) return out;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> path;
  on_path[0] = 1;
  auto dfs = [&](auto&& self, Vertex x) -> void {
    for (EdgeId e : g.incident(x)) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      if (!path.empty() && e == path.back()) continue;
      const Vertex y = ed.other(x);
      if (y == 0) {
        if (static_cast<int>(path.size()) == n - 1 && path.front() < e) {
          std::vector<EdgeId> edges(path);
          edges.push_back(e);
          std::sort(edges.begin(), edges.end());
          out.push_back(Cycle::from_sorted_unchecked(std::move(edges)));
        }
        continue;
      }
      if (on_path[static_cast<std::size_t>(y)]) continue;
      on_path[static_cast<std::size_t>(y)] = 1;
      path.push_back(e);
      self(self, y);
      path.pop_back();
      on_path[static_cast<std::size_t>(y)] = 0;
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

int girth(const Graph& g) {
  if (g.has_parallel_edges()) return 2;
  const int n = g.vertex_count();
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<EdgeId> via(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    via[static_cast<std::size_t>(s)] = -1;
    std::vector<Vertex> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex x = queue[qi];
      for (EdgeId e : g.incident(x)) {
        if (e == via[static_cast<std::size_t>(x)] || g.edge(e).is_loop()) continue;
        const Vertex y = g.edge(e).other(x);
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          via[static_cast<std::size_t>(y)] = e;
          queue.push_back(y);
        } else {
          const int len = dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

void for_each_cycle_through(const Graph& g, const EdgeSet& allowed, EdgeId through,
                            const std::function<bool(const Cycle&)>& visit) {
  const Edge& te = g.edge(through);
  if (te.is_loop() || !allowed.contains(through)) return;
  const Vertex target = te.u;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<EdgeId> path{through};
  on_path[static_cast<std::size_t>(te.u)] = 1;
  on_path[static_cast<std::size_t>(te.v)] = 1;
  bool stop = false;
  auto dfs = [&](auto&& self, Vertex x) -> void {
    for (EdgeId e : g.incident(x)) {
      if (stop) return;
      if (e == path.back() || !allowed.contains(e)) continue;
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      const Vertex y = ed.other(x);
      if (y == target) {
        if (e == through) continue;
        std::vector<EdgeId> edges(path);
        edges.push_back(e);
        std::sort(edges.begin(), edges.end());
        if (!visit(Cycle::from_sorted_unchecked(std::move(edges)))) stop = true;
        continue;
      }
      if (on_path[static_cast<std::size_t>(y)]) continue;
      on_path[static_cast<std::size_t>(y)] = 1;
      path.push_back(e);
      self(self, y);
      path.pop_back();
      on_path[static_cast<std::size_t>(y)] = 0;
    }
  };
  dfs(dfs, te.v);
}

namespace {

struct DecompositionSearch {
  const Graph& g;
  std::vector<Cycle> chosen;
  std::vector<Cycle> best;
  int limit = 0;

  int lower_bound(const EdgeSet& rest) const {
    if (rest.empty()) return 0;
    const auto deg = degrees_in(g, rest);
    int maxdeg = 0;
    int active = 0;
    for (int d : deg) {
      maxdeg = std::max(maxdeg, d);
      if (d > 0) ++active;
    }
    const int by_degree = (maxdeg + 1) / 2;
    const int by_length = (rest.size() + active - 1) / active;
    return std::max(by_degree, by_length);
  }

  bool run(EdgeSet& rest) {
    if (rest.empty()) {
      best = chosen;
      return true;
    }
    if (static_cast<int>(chosen.size()) + lower_bound(rest) > limit) return false;
    // Branch on an edge at a vertex of largest remaining degree.
    const auto deg = degrees_in(g, rest);
    Vertex pivot = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(pivot)]) pivot = v;
    }
    EdgeId branch = -1;
    for (EdgeId e : g.incident(pivot)) {
      if (rest.contains(e) && (branch < 0 || e < branch)) branch = e;
    }
    std::vector<Cycle> options;
    for_each_cycle_through(g, rest, branch, [&](const Cycle& c) {
      options.push_back(c);
      return true;
    });
    // Longer cycles first reach the bound faster.
    std::stable_sort(options.begin(), options.end(),
                     [](const Cycle& a, const Cycle& b) { return a.length() > b.length(); });
    for (const Cycle& c : options) {
      for (EdgeId e : c.edges()) rest.erase(e);
      chosen.push_back(c);
      const bool found = run(rest);
      chosen.pop_back();
      for (EdgeId e : c.edges()) rest.insert(e);
      if (found) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<Cycle> min_cycle_decomposition(const Graph& g, const EdgeSet& s) {
  if (s.universe() != g.edge_count()) throw StructuralError("edge set does not belong to this graph");
  if (s.empty()) return {};
  if (!is_even(g, s)) throw PreconditionError("min_cycle_decomposition needs an even edge set");
  for (EdgeId e : s.ids()) {
    if (g.edge(e).is_loop()) throw PreconditionError("min_cycle_decomposition does not accept loops");
  }
  DecompositionSearch search{g, {}, {}, 0};
  EdgeSet rest = s;
  for (search.limit = search.lower_bound(rest);; ++search.limit) {
    if (search.run(rest)) break;
  }
  std::sort(search.best.begin(), search.best.end());
  return search.best;
}

void assert_lemma1_bound(std::span<const Cycle> parts, int host_order) {
  const int bound = std::max(0, (host_order - 1) / 2);
  if (static_cast<int>(parts.size()) > bound) {
    throw InternalAssertion("cycle decomposition of size " + std::to_string(parts.size()) +
                            " exceeds floor((n-1)/2) = " + std::to_string(bound));
  }
}

Suppression suppress_degree2_vertex(const Graph& g, Vertex v, bool allow_loop) {
  if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
  if (g.degree(v) != 2) throw PreconditionError("suppressed vertex must have degree 2");
  const EdgeId e1 = g.incident(v)[0];
  const EdgeId e2 = g.incident(v)[1];
  if (e1 == e2) throw PreconditionError("cannot suppress a vertex carrying a loop");
  const Vertex a = g.edge(e1).other(v);
  const Vertex b = g.edge(e2).other(v);
  if (a == b && !allow_loop) throw PreconditionError("suppression would create a loop");

  Suppression out;
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (x == v) continue;
    index[static_cast<std::size_t>(x)] = static_cast<int>(out.vertex_origin.size());
    out.vertex_origin.push_back(x);
  }
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == e1 || e == e2) continue;
    pairs.emplace_back(index[static_cast<std::size_t>(g.edge(e).u)], index[static_cast<std::size_t>(g.edge(e).v)]);
    out.provenance.push_back({e});
  }
  pairs.emplace_back(index[static_cast<std::size_t>(a)], index[static_cast<std::size_t>(b)]);
  out.provenance.push_back({std::min(e1, e2), std::max(e1, e2)});
  out.merged_edge = static_cast<EdgeId>(pairs.size() - 1);
  out.graph = Graph(static_cast<int>(out.vertex_origin.size()), pairs, g.loops_allowed() || a == b);
  return out;
}

std::vector<EdgeId> lift_edges(const std::vector<std::vector<EdgeId>>& provenance, std::span<const EdgeId> edges) {
  std::vector<EdgeId> out;
  for (EdgeId e : edges) {
    const auto& src = provenance.at(static_cast<std::size_t>(e));
    out.insert(out.end(), src.begin(), src.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph subdivide_edge(const Graph& g, EdgeId e) {
  auto pairs = g.endpoint_pairs();
  const Vertex w = g.vertex_count();
  const auto [u, v] = pairs.at(static_cast<std::size_t>(e));
  pairs[static_cast<std::size_t>(e)] = {u, w};
  pairs.emplace_back(w, v);
  return Graph(w + 1, pairs, g.loops_allowed());
}

}  // namespace cdc
