#include <algorithm>
#include <optional>
#include <string>

#include "cdc/constructions.hpp"
#include "cdc/solver.hpp"

namespace cdc {

namespace {

int position_in_rotation(const std::vector<EdgeEnd>& rot, EdgeId e) {
  for (std::size_t i = 0; i < rot.size(); ++i) {
    if (rot[i].edge == e) return static_cast<int>(i);
  }
  return -1;
}

Vertex far_end(const Graph& g, const EdgeEnd& end) {
  const Edge& ed = g.edge(end.edge);
  return end.side == 0 ? ed.v : ed.u;
}

// Cycles of a minimum decomposition of `s`, checked against the small-decomposition bound.
std::vector<Cycle> decompose(const Graph& g, const EdgeSet& s, int host_order) {
  std::vector<Cycle> parts = min_cycle_decomposition(g, s);
  assert_lemma1_bound(parts, host_order);
  return parts;
}

// Face of the corner between rotation positions i and i+1 at v.
int corner_face(const PlaneEmbedding& e, Vertex v, int i) {
  const auto& rot = e.rotation(v);
  return e.face_of_dart(rot[static_cast<std::size_t>((i + 1) % static_cast<int>(rot.size()))]);
}

std::vector<Cycle> even_route(const PlaneEmbedding& e, const Cycle& h, int inner, int outer) {
  const Graph& g = e.graph();
  const int n = g.vertex_count();
  const auto colour = four_face_colouring(e, h, inner, outer);
  std::vector<Cycle> out{h};
  for (int j : {3, 4}) {
    for (const Cycle& c : decompose(g, even_subgraph_G1j(e, colour, j), n)) out.push_back(c);
  }
  return out;
}

std::vector<Cycle> degree4_route(const PlaneEmbedding& e, const Cycle& h, Vertex v, int i0) {
  const Graph& g = e.graph();
  const int n = g.vertex_count();
  // v0..v3 in rotation order from position i0; h uses v0 v v2
  const int f23 = corner_face(e, v, i0 + 2);
  const int f30 = corner_face(e, v, i0 + 3);
  const int f12 = corner_face(e, v, i0 + 1);
  const int f01 = corner_face(e, v, i0);
  const auto colour = four_face_colouring_anchored(e, h, f23, f12);
  if (colour[static_cast<std::size_t>(f30)] != 2 || colour[static_cast<std::size_t>(f01)] != 4) {
    throw InternalAssertion("degree-4 case: faces around v not coloured 1,2,3,4 as required");
  }
  const EdgeSet g13 = even_subgraph_G1j(e, colour, 3);
  const EdgeSet g14 = even_subgraph_G1j(e, colour, 4);

  // drop v from G13 and join v1 v3 directly
  const EdgeSubgraph sub = edge_subgraph(g, g13);
  if (sub.graph.degree(v) != 2) throw InternalAssertion("degree-4 case: v does not have degree 2 in G13");
  const Suppression sup = suppress_degree2_vertex(sub.graph, v);
  if (!sup.graph.is_simple()) throw InternalAssertion("degree-4 case: v1 v3 already adjacent");

  std::vector<Cycle> out{h};
  for (const Cycle& c : decompose(sup.graph, all_edges(sup.graph), n - 1)) {
    std::vector<EdgeId> ids;
    for (EdgeId x : lift_edges(sup.provenance, c.edges())) ids.push_back(sub.edge_origin[static_cast<std::size_t>(x)]);
    out.emplace_back(g, ids);
  }
  for (const Cycle& c : decompose(g, g14, n)) out.push_back(c);
  return out;
}

std::vector<Cycle> degree5_route(const PlaneEmbedding& e, const Cycle& h, Vertex v, int i0, std::vector<std::string>& trace) {
  const Graph& g = e.graph();
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const auto& rot = e.rotation(v);
  auto at = [&](int i) { return rot[static_cast<std::size_t>(((i0 + i) % 5 + 5) % 5)]; };
  const EdgeEnd r3 = at(3);
  const EdgeId vv3 = r3.edge;
  const Vertex v3 = far_end(g, r3);

  // G': vv3 doubled, the copy placed so the two copies bound a digon
  auto pairs = g.endpoint_pairs();
  pairs.emplace_back(v, v3);
  const Graph gd(n, pairs);
  const EdgeId copy = m;
  const EdgeEnd copy_at_v{copy, 0};
  const EdgeEnd copy_at_v3{copy, 1};
  const EdgeEnd orig_at_v3{vv3, 1 - r3.side};
  std::optional<PlaneEmbedding> ed;
  for (int after_v = 1; after_v >= 0 && !ed; --after_v) {
    for (int before_v3 = 1; before_v3 >= 0 && !ed; --before_v3) {
      auto rotation = e.rotations();
      auto& rv = rotation[static_cast<std::size_t>(v)];
      auto& rw = rotation[static_cast<std::size_t>(v3)];
      const int pv = position_in_rotation(rv, vv3);
      rv.insert(rv.begin() + pv + after_v, copy_at_v);
      const int pw = position_in_rotation(rw, orig_at_v3.edge);
      rw.insert(rw.begin() + pw + (before_v3 ? 0 : 1), copy_at_v3);
      try {
        PlaneEmbedding cand(gd, rotation);
        const auto [a, b] = cand.faces_of_edge(copy);
        const bool digon = cand.face(a).length() == 2 || cand.face(b).length() == 2;
        if (digon) ed = std::move(cand);
      } catch (const PreconditionError&) {
      }
    }
  }
  if (!ed) throw InternalAssertion("degree-5 case: could not place the duplicated edge");

  // anchor colours on the faces at vv0: the one towards v1 gets 1, the one towards v4 gets 3
  const int p0 = position_in_rotation(ed->rotation(v), at(0).edge);
  const int f01 = corner_face(*ed, v, p0);
  const int f40 = corner_face(*ed, v, p0 + static_cast<int>(ed->rotation(v).size()) - 1);
  const auto colour = four_face_colouring_anchored(*ed, h, f01, f40);
  const EdgeSet g13 = even_subgraph_G1j(*ed, colour, 3);
  const EdgeSet g14 = even_subgraph_G1j(*ed, colour, 4);
  if (!g13.contains(vv3) || !g13.contains(copy) || !g14.contains(vv3) || !g14.contains(copy)) {
    throw InternalAssertion("degree-5 case: the 2-cycle v v3 v is not in both G'13 and G'14");
  }
  if (degrees_in(gd, g13)[static_cast<std::size_t>(v)] != 4) {
    throw InternalAssertion("degree-5 case: v does not have degree 4 in G'13");
  }

  // S1: G'13 minus the 2-cycle, v suppressed
  EdgeSet g13b = g13;
  g13b.erase(vv3);
  g13b.erase(copy);
  const EdgeSubgraph sub13 = edge_subgraph(gd, g13b);
  const Suppression sup = suppress_degree2_vertex(sub13.graph, v);
  if (!sup.graph.is_simple()) throw InternalAssertion("degree-5 case: v1 v4 already adjacent in G''13");
  std::vector<Cycle> s1;
  for (const Cycle& c : decompose(sup.graph, all_edges(sup.graph), n - 1)) {
    std::vector<EdgeId> ids;
    for (EdgeId x : lift_edges(sup.provenance, c.edges())) ids.push_back(sub13.edge_origin[static_cast<std::size_t>(x)]);
    s1.emplace_back(g, ids);
  }

  // S2: G'14 with the copy subdivided
  const EdgeSubgraph sub14 = edge_subgraph(gd, g14);
  EdgeId copy_in_sub = -1;
  for (std::size_t i = 0; i < sub14.edge_origin.size(); ++i) {
    if (sub14.edge_origin[i] == copy) copy_in_sub = static_cast<EdgeId>(i);
  }
  const Graph g14s = subdivide_edge(sub14.graph, copy_in_sub);
  auto origin14 = [&](EdgeId x) {
    return x == g14s.edge_count() - 1 ? copy : sub14.edge_origin[static_cast<std::size_t>(x)];
  };
  std::vector<EdgeSet> s2;  // over G' ids
  bool digon_used = false;
  for (const Cycle& c : decompose(g14s, all_edges(g14s), n + 1)) {
    EdgeSet s(m + 1);
    for (EdgeId x : c.edges()) s.insert(origin14(x));
    if (s == EdgeSet(m + 1, {vv3, copy})) {
      digon_used = true;
      continue;
    }
    s2.push_back(s);
  }

  std::vector<Cycle> out = s1;
  for (const EdgeSet& s : s2) {
    std::vector<EdgeId> ids;
    for (EdgeId x : s.ids()) ids.push_back(x == copy ? vv3 : x);
    out.emplace_back(g, ids);
  }
  if (!digon_used) {
    trace.push_back("outcome-a");
    out.push_back(h);
    return out;
  }
  // h plus the chord vv3 splits into two cycles meeting in vv3
  trace.push_back("outcome-b");
  const std::vector<EdgeId> walk = cycle_walk(g, h);
  const std::vector<Vertex> order = cycle_vertices(g, h);
  const auto iv = static_cast<std::size_t>(std::find(order.begin(), order.end(), v) - order.begin());
  const auto iw = static_cast<std::size_t>(std::find(order.begin(), order.end(), v3) - order.begin());
  std::vector<EdgeId> c1{vv3}, c2{vv3};
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const bool between = std::min(iv, iw) <= i && i < std::max(iv, iw);
    (between ? c1 : c2).push_back(walk[i]);
  }
  out.emplace_back(g, c1);
  out.emplace_back(g, c2);
  return out;
}

}  // namespace

ConstructedCdc seyffarth_small_cdc(const PlaneEmbedding& e, const Cycle& h, Vertex v) {
  const Graph& g = e.graph();
  const int n = g.vertex_count();
  if (!g.is_simple()) throw PreconditionError("seyffarth_small_cdc needs a simple graph");
  if (v < 0 || v >= n) throw PreconditionError("seyffarth_small_cdc: vertex out of range");
  if (g.degree(v) != 4 && g.degree(v) != 5) throw PreconditionError("seyffarth_small_cdc: v must have degree 4 or 5");
  if (!is_cycle(g, h.edges()) || h.length() != n) throw PreconditionError("seyffarth_small_cdc: h is not Hamiltonian");
  if (!vertex_connectivity_at_least(g, 4)) throw PreconditionError("seyffarth_small_cdc needs a 4-connected graph");

  ConstructedCdc out;
  std::vector<Cycle> cycles;
  const auto& rot = e.rotation(v);
  const int d = static_cast<int>(rot.size());
  std::vector<int> hpos;
  for (int i = 0; i < d; ++i) {
    if (h.contains(rot[static_cast<std::size_t>(i)].edge)) hpos.push_back(i);
  }
  const int gap = (hpos[1] - hpos[0] + d) % d;
  const bool cofacial = gap == 1 || gap == d - 1;

  if (n % 2 == 0) {
    out.case_trace.push_back("even-order");
    cycles = even_route(e, h, 1, 3);
  } else if (!cofacial) {
    out.case_trace.push_back("odd-order");
    if (d == 4) {
      out.case_trace.push_back("degree-4");
      cycles = degree4_route(e, h, v, hpos[0]);
    } else {
      out.case_trace.push_back("degree-5");
      const int i0 = gap == 2 ? hpos[0] : hpos[1];
      cycles = degree5_route(e, h, v, i0, out.case_trace);
    }
  } else {
    out.case_trace.push_back("odd-order");
    out.case_trace.push_back("cofacial");
    for (int inner : {1, 2}) {
      for (int outer : {3, 4}) {
        if (!cycles.empty()) break;
        std::vector<Cycle> c = even_route(e, h, inner, outer);
        if (static_cast<int>(c.size()) <= n - 1) {
          out.case_trace.push_back("colouring-retry");
          cycles = std::move(c);
        }
      }
    }
    if (cycles.empty()) {
      out.case_trace.push_back("fallback-exact");
      SolverOptions opts;
      opts.forced = {h};
      const auto found = find_cdc(g, n - 1, false, opts);
      if (!found) throw InternalAssertion("seyffarth_small_cdc: no (n-1)-CDC containing h");
      cycles = found->cycles();
    }
  }
  out.cdc = Cdc::from_cycles(g.edge_count(), cycles);
  if (!verify_cdc(g, out.cdc).ok) throw InternalAssertion("seyffarth_small_cdc: result is not a CDC");
  if (out.cdc.size() > n - 1) throw InternalAssertion("seyffarth_small_cdc: size exceeds n-1");
  return out;
}

}  // namespace cdc
