#pragma once

// Brute-force reference implementations used only by the tests. Each is written from the
// definitions, without the library's algorithms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cdc/graph.hpp"
#include "cdc/graph_io.hpp"

namespace oracle {

using cdc::EdgeId;
using cdc::Graph;
using cdc::Vertex;

inline std::string data(const std::string& file) { return std::string(CDC_TEST_DATA) + "/" + file; }

inline bool connected_after_removal(const Graph& g, std::uint64_t removed_vertices, EdgeId removed_edge = -1) {
  const int n = g.vertex_count();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!(removed_vertices >> v & 1)) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      if (e == removed_edge) continue;
      const int w = g.edge(e).other(v);
      if ((removed_vertices >> w & 1) || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == alive;
}

inline std::vector<EdgeId> bridges(const Graph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!connected_after_removal(g, 0, e)) out.push_back(e);
  }
  return out;
}

// More than k vertices and no set of fewer than k vertices disconnects g.
inline bool k_connected(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (n <= k) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < k && !connected_after_removal(g, mask)) return false;
  }
  return true;
}

// Edge sets that are connected and 2-regular, by subset enumeration (m <= ~20).
inline std::vector<std::vector<EdgeId>> subset_cycles(const Graph& g) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  std::vector<std::vector<EdgeId>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<EdgeId> es;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1) {
        es.push_back(e);
        ++deg[static_cast<std::size_t>(g.edge(e).u)];
        ++deg[static_cast<std::size_t>(g.edge(e).v)];
      }
    }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 0 && d != 2; })) continue;
    // connected: walk from the first edge
    std::vector<int> comp(static_cast<std::size_t>(n));
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = find(comp[static_cast<std::size_t>(x)]); };
    for (EdgeId e : es) comp[static_cast<std::size_t>(find(g.edge(e).u))] = find(g.edge(e).v);
    const int root = find(g.edge(es[0]).u);
    bool one = true;
    for (EdgeId e : es) one = one && find(g.edge(e).u) == root;
    if (one) out.push_back(es);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// size -> (CDCs, true CDCs), deciding each cycle's multiplicity in catalog order.
inline std::map<int, std::pair<long long, long long>> census(const Graph& g, int max_size) {
  const auto cycles = subset_cycles(g);
  std::vector<int> cov(static_cast<std::size_t>(g.edge_count()), 0);
  int uncovered = 2 * g.edge_count();
  std::map<int, std::pair<long long, long long>> out;
  std::function<void(std::size_t, int, bool)> rec = [&](std::size_t i, int size, bool doubled) {
    if (size > max_size) return;
    if (uncovered == 0) {
      ++out[size].first;
      if (!doubled) ++out[size].second;
      return;
    }
    if (i == cycles.size()) return;
    for (int mult = 0; mult <= 2; ++mult) {
      bool fits = true;
      for (EdgeId e : cycles[i]) fits = fits && cov[static_cast<std::size_t>(e)] + mult <= 2;
      if (!fits) break;
      for (EdgeId e : cycles[i]) cov[static_cast<std::size_t>(e)] += mult;
      uncovered -= mult * static_cast<int>(cycles[i].size());
      rec(i + 1, size + mult, doubled || mult == 2);
      uncovered += mult * static_cast<int>(cycles[i].size());
      for (EdgeId e : cycles[i]) cov[static_cast<std::size_t>(e)] -= mult;
    }
  };
  rec(0, 0, false);
  return out;
}

// Genus 0 test by trying every rotation system: V - E + F = 2 for a connected graph.
inline bool planar_by_rotations(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));  // dart ids 2e+side
  for (EdgeId e = 0; e < m; ++e) {
    rot[static_cast<std::size_t>(g.edge(e).u)].push_back(2 * e);
    rot[static_cast<std::size_t>(g.edge(e).v)].push_back(2 * e + 1);
  }
  auto faces = [&] {
    std::vector<int> pos(static_cast<std::size_t>(2 * m));
    std::vector<int> owner(static_cast<std::size_t>(2 * m));
    for (int v = 0; v < n; ++v) {
      const auto& r = rot[static_cast<std::size_t>(v)];
      for (std::size_t i = 0; i < r.size(); ++i) {
        pos[static_cast<std::size_t>(r[i])] = static_cast<int>(i);
        owner[static_cast<std::size_t>(r[i])] = v;
      }
    }
    std::vector<char> used(static_cast<std::size_t>(2 * m), 0);
    int f = 0;
    for (int d = 0; d < 2 * m; ++d) {
      if (used[static_cast<std::size_t>(d)]) continue;
      ++f;
      int x = d;
      while (!used[static_cast<std::size_t>(x)]) {
        used[static_cast<std::size_t>(x)] = 1;
        const int twin = x ^ 1;
        const auto& r = rot[static_cast<std::size_t>(owner[static_cast<std::size_t>(twin)])];
        x = r[(static_cast<std::size_t>(pos[static_cast<std::size_t>(twin)]) + 1) % r.size()];
      }
    }
    return f;
  };
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return n - m + faces() == 2;
    auto& r = rot[static_cast<std::size_t>(v)];
    if (r.size() <= 2) return rec(v + 1);
    std::sort(r.begin() + 1, r.end());
    do {
      if (rec(v + 1)) return true;
    } while (std::next_permutation(r.begin() + 1, r.end()));
    return false;
  };
  return rec(0);
}

inline std::uint64_t partitions(int r, int largest) {
  if (r == 0) return 1;
  std::uint64_t total = 0;
  for (int part = std::min(r, largest); part >= 1; --part) total += partitions(r - part, part);
  return total;
}

// Fewest cycles partitioning the even edge set `s`, by trying every cycle through its lowest edge.
inline int min_decomposition(const Graph& g, std::vector<char> s, const std::vector<std::vector<EdgeId>>& cycles) {
  const auto first = std::find(s.begin(), s.end(), 1);
  if (first == s.end()) return 0;
  const EdgeId low = static_cast<EdgeId>(first - s.begin());
  int best = 1 << 20;
  for (const auto& c : cycles) {
    if (std::find(c.begin(), c.end(), low) == c.end()) continue;
    if (!std::all_of(c.begin(), c.end(), [&](EdgeId e) { return s[static_cast<std::size_t>(e)] == 1; })) continue;
    for (EdgeId e : c) s[static_cast<std::size_t>(e)] = 0;
    best = std::min(best, 1 + min_decomposition(g, s, cycles));
    for (EdgeId e : c) s[static_cast<std::size_t>(e)] = 1;
  }
  return best;
}

}  // namespace oracle
