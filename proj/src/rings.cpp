#include <algorithm>
#include <string>

#include "cdc/constructions.hpp"

namespace cdc {

namespace {

Cycle as_cycle(const Graph& g, const EdgeSet& s, const char* what) {
  if (!is_cycle(g, s)) throw InternalAssertion(std::string(what) + ": result is not a cycle");
  return Cycle(g, s.ids());
}

std::vector<Vertex> vertices_of(const Graph& g, const Cycle& c) {
  std::vector<Vertex> vs;
  for (EdgeId e : c.edges()) {
    vs.push_back(g.edge(e).u);
    vs.push_back(g.edge(e).v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<Vertex> common(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Cdc face_boundary_cdc(const PlaneEmbedding& e) {
  const Graph& g = e.graph();
  std::vector<Cycle> cycles;
  for (const FacialWalk& f : e.faces()) {
    if (!f.is_cycle) throw PreconditionError("face_boundary_cdc: some face boundary is not a cycle");
    cycles.emplace_back(g, f.edges());
  }
  return Cdc::from_cycles(g.edge_count(), cycles);
}

std::optional<RingStructure> find_ring(const PlaneEmbedding& e, int dual_vertex) {
  const Graph& g = e.graph();
  if (!g.is_regular(3)) throw PreconditionError("find_ring needs a cubic graph");
  if (dual_vertex < 0 || dual_vertex >= e.face_count()) throw PreconditionError("find_ring: no such face");
  const FacialWalk& centre = e.face(dual_vertex);
  if (!centre.is_cycle) return std::nullopt;
  const int k = centre.length();

  RingStructure r;
  r.kind = k % 2 == 0 ? RingKind::cycle_ring : RingKind::wheel_ring;
  r.centre_face = dual_vertex;
  r.boundary = Cycle(g, centre.edges());
  for (int j = 0; j < k; ++j) {
    const EdgeEnd d = centre.darts[static_cast<std::size_t>(j)];
    const int f = e.face_of_dart({d.edge, 1 - d.side});
    if (f == dual_vertex || !e.face(f).is_cycle) return std::nullopt;
    if (std::find(r.faces.begin(), r.faces.end(), f) != r.faces.end()) return std::nullopt;
    r.faces.push_back(f);
    r.cycles.emplace_back(g, e.face(f).edges());
  }
  for (int j = 0; j < k; ++j) {
    const EdgeEnd a = centre.darts[static_cast<std::size_t>(j)];
    const EdgeEnd b = centre.darts[static_cast<std::size_t>((j + 1) % k)];
    const Vertex w = e.vertex_of_end(b);
    EdgeId third = -1;
    for (EdgeId x : g.incident(w)) {
      if (x != a.edge && x != b.edge) third = x;
    }
    r.shared.push_back(third);
  }

  // ring invariants, checked on the primal side
  std::vector<std::vector<Vertex>> vs;
  for (const Cycle& c : r.cycles) vs.push_back(vertices_of(g, c));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      const auto both = common(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]);
      if (!consecutive) {
        if (!both.empty()) return std::nullopt;
        continue;
      }
      const int s = j == i + 1 ? i : j;  // shared[s] joins C^s and C^{s+1}
      const EdgeId x = r.shared[static_cast<std::size_t>(s)];
      const EdgeSet meet = r.cycles[static_cast<std::size_t>(i)].edge_set(g.edge_count()) &
                           r.cycles[static_cast<std::size_t>(j)].edge_set(g.edge_count());
      if (meet != EdgeSet(g.edge_count(), {x}) || both.size() != 2) return std::nullopt;
    }
  }
  EdgeSet rest(g.edge_count());
  for (const Cycle& c : r.cycles) rest |= c.edge_set(g.edge_count());
  for (EdgeId x : r.shared) rest.erase(x);
  const EdgeSet outer = rest ^ r.boundary.edge_set(g.edge_count());
  if ((rest & r.boundary.edge_set(g.edge_count())) != r.boundary.edge_set(g.edge_count()) || !is_cycle(g, outer)) {
    return std::nullopt;
  }
  if (!common(vertices_of(g, r.boundary), vertices_of(g, Cycle(g, outer.ids()))).empty()) return std::nullopt;
  return r;
}

std::array<Cycle, 2> cycle_ring_exchange(const Graph& g, const RingStructure& r) {
  const int k = static_cast<int>(r.cycles.size());
  if (r.kind != RingKind::cycle_ring || k % 2 != 0) throw PreconditionError("cycle_ring_exchange needs an even cycle ring");
  const int m = g.edge_count();
  EdgeSet d1 = r.boundary.edge_set(m);
  EdgeSet d2 = d1;
  for (int i = 0; i < k; ++i) (i % 2 == 0 ? d1 : d2) ^= r.cycles[static_cast<std::size_t>(i)].edge_set(m);
  std::array<Cycle, 2> out{as_cycle(g, d1, "cycle_ring_exchange"), as_cycle(g, d2, "cycle_ring_exchange")};
  if (out[0] == out[1]) throw InternalAssertion("cycle_ring_exchange: D1 == D2");
  return out;
}

std::array<Cycle, 3> wheel_ring_exchange(const Graph& g, const RingStructure& r, int chosen) {
  const int k = static_cast<int>(r.cycles.size());
  if (r.kind != RingKind::wheel_ring || k % 2 == 0) throw PreconditionError("wheel_ring_exchange needs a wheel ring");
  if (chosen < 0 || chosen >= k) throw PreconditionError("wheel_ring_exchange: chosen index out of range");
  const int m = g.edge_count();
  const EdgeSet b = r.boundary.edge_set(m);
  EdgeSet o1 = b ^ r.cycles[static_cast<std::size_t>(chosen)].edge_set(m);
  EdgeSet o2 = b;
  EdgeSet o3 = b;
  for (int off = 1; off < k; ++off) {
    (off % 2 == 1 ? o2 : o3) ^= r.cycles[static_cast<std::size_t>((chosen + off) % k)].edge_set(m);
  }
  std::array<Cycle, 3> out{as_cycle(g, o1, "wheel_ring_exchange"), as_cycle(g, o2, "wheel_ring_exchange"),
                           as_cycle(g, o3, "wheel_ring_exchange")};
  if (out[0] == out[1] || out[1] == out[2] || out[0] == out[2]) {
    throw InternalAssertion("wheel_ring_exchange: outputs not pairwise distinct");
  }
  return out;
}

Cdc apply_ring_exchange(const Graph& g, const Cdc& cover, const RingStructure& r, int chosen) {
  Cdc out = cover;
  for (const Cycle& c : r.cycles) out.remove(c);
  if (r.kind == RingKind::cycle_ring) {
    for (const Cycle& c : cycle_ring_exchange(g, r)) out.add(c);
  } else {
    out.remove(r.boundary);
    for (const Cycle& c : wheel_ring_exchange(g, r, chosen)) out.add(c);
  }
  if (!verify_cdc(g, out).ok) throw InternalAssertion("apply_ring_exchange: result is not a CDC");
  return out;
}

}  // namespace cdc
