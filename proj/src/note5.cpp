#include <algorithm>

#include "cdc/constructions.hpp"

namespace cdc {

namespace {

struct WorkEdge {
  Vertex u, v;
  bool on_h;
  std::vector<EdgeId> origin;
};

}  // namespace

std::array<EdgeSet, 3> hamiltonian_three_even_cover(const Graph& g, const Cycle& h) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n < 3) throw PreconditionError("hamiltonian_three_even_cover needs n >= 3");
  if (!is_cycle(g, h.edges()) || h.length() != n) throw PreconditionError("hamiltonian_three_even_cover: h is not Hamiltonian");

  std::vector<int> colour(static_cast<std::size_t>(m), 0);
  std::vector<WorkEdge> work;
  std::vector<char> alive;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      colour[static_cast<std::size_t>(e)] = 3;  // a loop is even on its own
      continue;
    }
    work.push_back({ed.u, ed.v, h.contains(e), {e}});
    alive.push_back(1);
  }
  auto add = [&](WorkEdge w) {
    if (w.u == w.v) {
      for (EdgeId e : w.origin) colour[static_cast<std::size_t>(e)] = 3;
      return;
    }
    work.push_back(std::move(w));
    alive.push_back(1);
  };
  auto incident = [&](Vertex x) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (alive[i] && (work[i].u == x || work[i].v == x)) out.push_back(i);
    }
    return out;
  };
  auto merged = [&](std::size_t a, std::size_t b, Vertex at, bool on_h) {
    WorkEdge w{work[a].u == at ? work[a].v : work[a].u, work[b].u == at ? work[b].v : work[b].u, on_h, work[a].origin};
    w.origin.insert(w.origin.end(), work[b].origin.begin(), work[b].origin.end());
    alive[a] = alive[b] = 0;
    return w;
  };

  // merge pairs of non-h edges at vertices of degree >= 4
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex x = 0; x < n && !changed; ++x) {
      const auto inc = incident(x);
      if (inc.size() < 4) continue;
      std::vector<std::size_t> off_h;
      for (std::size_t i : inc) {
        if (!work[i].on_h) off_h.push_back(i);
      }
      add(merged(off_h[0], off_h[1], x, false));
      changed = true;
    }
  }
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  bool any_cubic = false;
  for (Vertex x = 0; x < n; ++x) any_cubic = any_cubic || incident(x).size() == 3;
  if (any_cubic) {
    // suppress degree-2 vertices; both their edges lie on h
    for (Vertex x = 0; x < n; ++x) {
      const auto inc = incident(x);
      if (inc.size() != 2) continue;
      add(merged(inc[0], inc[1], x, true));
      gone[static_cast<std::size_t>(x)] = 1;
    }
  }

  std::vector<int> work_colour(work.size(), 0);
  if (!any_cubic) {
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (alive[i]) work_colour[i] = work[i].on_h ? 1 : 3;
    }
  } else {
    // cubic core: walk the reduced Hamiltonian cycle colouring 1, 2, 1, 2, ...
    Vertex start = 0;
    while (gone[static_cast<std::size_t>(start)]) ++start;
    Vertex at = start;
    std::size_t prev = work.size();
    int c = 1;
    do {
      std::size_t next = work.size();
      for (std::size_t i : incident(at)) {
        if (work[i].on_h && i != prev) next = i;
      }
      if (next == work.size() || work_colour[next] != 0) break;
      work_colour[next] = c;
      c = 3 - c;
      at = work[next].u == at ? work[next].v : work[next].u;
      prev = next;
    } while (at != start);
    if (c != 1) throw InternalAssertion("hamiltonian_three_even_cover: reduced cycle has odd length");
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (alive[i] && !work[i].on_h) work_colour[i] = 3;
      if (alive[i] && work_colour[i] == 0) throw InternalAssertion("hamiltonian_three_even_cover: uncoloured core edge");
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!alive[i]) continue;
    for (EdgeId e : work[i].origin) colour[static_cast<std::size_t>(e)] = work_colour[i];
  }

  std::array<EdgeSet, 3> out{EdgeSet(m), EdgeSet(m), EdgeSet(m)};
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (EdgeId e = 0; e < m; ++e) {
    for (int p = 0; p < 3; ++p) {
      const int c = colour[static_cast<std::size_t>(e)];
      if (c == pairs[p][0] || c == pairs[p][1]) out[static_cast<std::size_t>(p)].insert(e);
    }
  }
  for (const EdgeSet& s : out) {
    if (!is_even(g, s)) throw InternalAssertion("hamiltonian_three_even_cover: a colour-pair union is not even");
  }
  return out;
}

}  // namespace cdc
