#include "cdc/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace cdc {

std::vector<EdgeId> FacialWalk::edges() const {
  std::vector<EdgeId> out;
  out.reserve(darts.size());
  for (const auto& d : darts) out.push_back(d.edge);
  return out;
}

namespace {

int end_index(EdgeEnd d) { return 2 * d.edge + d.side; }

struct Traced {
  std::vector<FacialWalk> faces;
  std::vector<int> dart_face;
};

// Euler characteristic check per component with at least one edge.
bool genus_zero(const Graph& g, const Traced& t) {
  int comps = 0;
  const auto label = component_labels(g, {}, &comps);
  std::vector<int> nv(static_cast<std::size_t>(comps), 0), ne(nv), nf(nv);
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++nv[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
  for (const Edge& e : g.edges()) ++ne[static_cast<std::size_t>(label[static_cast<std::size_t>(e.u)])];
  for (const auto& f : t.faces) {
    const Edge& e = g.edge(f.darts.front().edge);
    ++nf[static_cast<std::size_t>(label[static_cast<std::size_t>(e.u)])];
  }
  for (int c = 0; c < comps; ++c) {
    const auto i = static_cast<std::size_t>(c);
    if (ne[i] == 0) continue;
    if (nv[i] - ne[i] + nf[i] != 2) return false;
  }
  return true;
}

bool walk_is_cycle(const Graph& g, const std::vector<EdgeEnd>& darts) {
  std::vector<EdgeId> edges;
  for (const auto& d : darts) edges.push_back(d.edge);
  return is_cycle(g, edges);
}

// Positions of each end inside its rotation; -1 marks a malformed rotation.
std::vector<int> end_positions(const Graph& g, const std::vector<std::vector<EdgeEnd>>& rotation, std::string* why) {
  std::vector<int> pos(static_cast<std::size_t>(2 * g.edge_count()), -1);
  if (static_cast<int>(rotation.size()) != g.vertex_count()) {
    if (why) *why = "rotation system has the wrong number of vertices";
    return {};
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = rotation[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const EdgeEnd d = rot[i];
      if (d.edge < 0 || d.edge >= g.edge_count() || (d.side != 0 && d.side != 1)) {
        if (why) *why = "rotation refers to a missing edge end";
        return {};
      }
      const Edge& ed = g.edge(d.edge);
      if ((d.side == 0 ? ed.u : ed.v) != v) {
        if (why) *why = "edge end listed at the wrong vertex";
        return {};
      }
      if (pos[static_cast<std::size_t>(end_index(d))] >= 0) {
        if (why) *why = "edge end listed twice";
        return {};
      }
      pos[static_cast<std::size_t>(end_index(d))] = static_cast<int>(i);
    }
  }
  if (std::find(pos.begin(), pos.end(), -1) != pos.end()) {
    if (why) *why = "edge end missing from rotation";
    return {};
  }
  return pos;
}

Traced trace(const Graph& g, const std::vector<std::vector<EdgeEnd>>& rotation, const std::vector<int>& pos) {
  Traced t;
  t.dart_face.assign(static_cast<std::size_t>(2 * g.edge_count()), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (int s = 0; s < 2; ++s) {
      EdgeEnd start{e, s};
      if (t.dart_face[static_cast<std::size_t>(end_index(start))] >= 0) continue;
      const int f = static_cast<int>(t.faces.size());
      FacialWalk walk;
      EdgeEnd d = start;
      do {
        t.dart_face[static_cast<std::size_t>(end_index(d))] = f;
        walk.darts.push_back(d);
        const EdgeEnd arrive{d.edge, 1 - d.side};
        const Edge& ed = g.edge(d.edge);
        const Vertex w = arrive.side == 0 ? ed.u : ed.v;
        const auto& rot = rotation[static_cast<std::size_t>(w)];
        const auto p = static_cast<std::size_t>(pos[static_cast<std::size_t>(end_index(arrive))]);
        d = rot[(p + 1) % rot.size()];
      } while (!(d == start));
      walk.is_cycle = walk_is_cycle(g, walk.darts);
      t.faces.push_back(std::move(walk));
    }
  }
  return t;
}

bool valid_rotation(const Graph& g, const std::vector<std::vector<EdgeEnd>>& rotation) {
  const auto pos = end_positions(g, rotation, nullptr);
  if (pos.empty() && g.edge_count() > 0) return false;
  if (static_cast<int>(rotation.size()) != g.vertex_count()) return false;
  return genus_zero(g, trace(g, rotation, pos));
}

}  // namespace

PlaneEmbedding::PlaneEmbedding(Graph g, std::vector<std::vector<EdgeEnd>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  std::string why;
  end_position_ = end_positions(graph_, rotation_, &why);
  if (!why.empty()) throw StructuralError(why);
  Traced t = trace(graph_, rotation_, end_position_);
  if (!genus_zero(graph_, t)) throw PreconditionError("rotation system is not genus zero (Euler check failed)");
  faces_ = std::move(t.faces);
  dart_face_ = std::move(t.dart_face);
}

EdgeSet PlaneEmbedding::face_edges(int f) const {
  EdgeSet s(graph_.edge_count());
  for (const auto& d : face(f).darts) s.insert(d.edge);
  return s;
}

EdgeEnd PlaneEmbedding::next_in_rotation(EdgeEnd end) const {
  const auto& rot = rotation(vertex_of_end(end));
  const auto p = static_cast<std::size_t>(end_position_[static_cast<std::size_t>(end_index(end))]);
  return rot[(p + 1) % rot.size()];
}

EdgeEnd PlaneEmbedding::prev_in_rotation(EdgeEnd end) const {
  const auto& rot = rotation(vertex_of_end(end));
  const auto p = static_cast<std::size_t>(end_position_[static_cast<std::size_t>(end_index(end))]);
  return rot[(p + rot.size() - 1) % rot.size()];
}

std::vector<FacialWalk> trace_faces(const PlaneEmbedding& e) {
  if (!is_connected(e.graph())) throw PreconditionError("trace_faces needs a connected embedding");
  if (has_bridge(e.graph())) throw PreconditionError("face tracing is undefined for embeddings with bridges");
  return e.faces();
}

InducedEmbedding induced_embedding(const PlaneEmbedding& e, std::span<const Vertex> keep) {
  InducedSubgraph sub = induced_subgraph(e.graph(), keep);
  std::vector<EdgeId> new_id(static_cast<std::size_t>(e.graph().edge_count()), -1);
  for (std::size_t i = 0; i < sub.edge_origin.size(); ++i) {
    new_id[static_cast<std::size_t>(sub.edge_origin[i])] = static_cast<EdgeId>(i);
  }
  std::vector<std::vector<EdgeEnd>> rotation(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (const EdgeEnd& end : e.rotation(keep[i])) {
      const EdgeId id = new_id[static_cast<std::size_t>(end.edge)];
      if (id >= 0) rotation[i].push_back({id, end.side});
    }
  }
  PlaneEmbedding emb(sub.graph, std::move(rotation));
  return {std::move(sub), std::move(emb)};
}

PlaneEmbedding mirror(const PlaneEmbedding& e) {
  auto rot = e.rotations();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return PlaneEmbedding(e.graph(), std::move(rot));
}

DualResult dual(const PlaneEmbedding& e) {
  const Graph& g = e.graph();
  if (!is_connected(g)) throw PreconditionError("dual needs a connected embedding");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(g.edge_count()));
  bool loops = false;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto [a, b] = e.faces_of_edge(id);
    loops = loops || a == b;
    pairs.emplace_back(a, b);
  }
  DualResult out;
  out.graph = Graph(e.face_count(), pairs, loops);
  std::vector<std::vector<EdgeEnd>> rot(static_cast<std::size_t>(e.face_count()));
  for (int f = 0; f < e.face_count(); ++f) {
    for (const auto& d : e.face(f).darts) rot[static_cast<std::size_t>(f)].push_back(d);
  }
  if (!valid_rotation(out.graph, rot)) {
    for (auto& r : rot) std::reverse(r.begin(), r.end());
  }
  out.embedding = PlaneEmbedding(out.graph, std::move(rot));
  out.edge_map.resize(static_cast<std::size_t>(g.edge_count()));
  std::iota(out.edge_map.begin(), out.edge_map.end(), 0);
  return out;
}

std::optional<PlaneEmbedding> planar_embed(const Graph& g) {
  using namespace boost;
  using BoostGraph =
      adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>, property<edge_index_t, int>>;
  const int n = g.vertex_count();

  // Embed the underlying simple graph, then put parallel edges and loops back.
  BoostGraph bg(static_cast<std::size_t>(n));
  std::vector<EdgeId> representative(static_cast<std::size_t>(g.edge_count()), -1);
  std::vector<EdgeId> simple_edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    const EdgeId rep = g.edge_between(ed.u, ed.v);
    representative[static_cast<std::size_t>(e)] = rep;
    if (rep == e) {
      add_edge(static_cast<std::size_t>(ed.u), static_cast<std::size_t>(ed.v),
               property<edge_index_t, int>(static_cast<int>(simple_edges.size())), bg);
      simple_edges.push_back(e);
    }
  }
  using BoostEdge = graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<BoostEdge>> boost_rot(static_cast<std::size_t>(n));
  const bool planar = boyer_myrvold_planarity_test(
      boyer_myrvold_params::graph = bg,
      boyer_myrvold_params::embedding = make_iterator_property_map(boost_rot.begin(), get(vertex_index, bg)));
  if (!planar) return std::nullopt;

  std::vector<std::vector<EdgeEnd>> rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& be : boost_rot[static_cast<std::size_t>(v)]) {
      const EdgeId e = simple_edges[static_cast<std::size_t>(get(edge_index, bg, be))];
      rot[static_cast<std::size_t>(v)].push_back({e, g.edge(e).u == v ? 0 : 1});
    }
  }
  // Insert the remaining edges one by one, keeping the rotation genus 0 on the edges placed so far.
  std::vector<EdgeId> placed = simple_edges;
  auto check = [&](const std::vector<std::vector<EdgeEnd>>& r, const std::vector<EdgeId>& edges_in) {
    // Restrict to placed edges by building a renumbered graph.
    std::vector<int> index(static_cast<std::size_t>(g.edge_count()), -1);
    std::vector<std::pair<int, int>> pairs;
    for (EdgeId e : edges_in) {
      index[static_cast<std::size_t>(e)] = static_cast<int>(pairs.size());
      pairs.emplace_back(g.edge(e).u, g.edge(e).v);
    }
    Graph sub(n, pairs, true);
    std::vector<std::vector<EdgeEnd>> rr(r.size());
    for (std::size_t v = 0; v < r.size(); ++v) {
      for (const auto& d : r[v]) rr[v].push_back({index[static_cast<std::size_t>(d.edge)], d.side});
    }
    return valid_rotation(sub, rr);
  };
  auto insert_at = [](std::vector<EdgeEnd>& r, EdgeEnd anchor, EdgeEnd item, bool after) {
    auto it = std::find(r.begin(), r.end(), anchor);
    if (after) ++it;
    r.insert(it, item);
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      auto& r = rot[static_cast<std::size_t>(ed.u)];
      r.push_back({e, 0});
      r.push_back({e, 1});
      placed.push_back(e);
      continue;
    }
    const EdgeId rep = representative[static_cast<std::size_t>(e)];
    if (rep == e) continue;
    const int rep_side_u = g.edge(rep).u == ed.u ? 0 : 1;
    const EdgeEnd rep_at_u{rep, rep_side_u};
    const EdgeEnd rep_at_v{rep, 1 - rep_side_u};
    placed.push_back(e);
    bool done = false;
    for (int combo = 0; combo < 4 && !done; ++combo) {
      auto trial = rot;
      insert_at(trial[static_cast<std::size_t>(ed.u)], rep_at_u, {e, 0}, (combo & 1) == 0);
      insert_at(trial[static_cast<std::size_t>(ed.v)], rep_at_v, {e, 1}, (combo & 2) != 0);
      if (check(trial, placed)) {
        rot = std::move(trial);
        done = true;
      }
    }
    if (!done) throw InternalAssertion("could not place a parallel edge in the plane embedding");
  }
  return PlaneEmbedding(g, std::move(rot));
}

std::pair<std::vector<int>, std::vector<int>> face_sides(const PlaneEmbedding& e, const Cycle& c) {
  const int f = e.face_count();
  std::vector<int> parent(static_cast<std::size_t>(f));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (EdgeId id = 0; id < e.graph().edge_count(); ++id) {
    if (c.contains(id)) continue;
    const auto [a, b] = e.faces_of_edge(id);
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
  std::pair<std::vector<int>, std::vector<int>> out;
  const int root = find(0);
  for (int x = 0; x < f; ++x) (find(x) == root ? out.first : out.second).push_back(x);
  std::vector<int> roots;
  for (int x : out.second) roots.push_back(find(x));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (out.second.empty() || roots.size() != 1) {
    throw InternalAssertion("cycle does not split the faces into exactly two sides");
  }
  return out;
}

namespace {

void check_hamiltonian(const PlaneEmbedding& e, const Cycle& h) {
  const Graph& g = e.graph();
  if (h.length() != g.vertex_count() || !is_cycle(g, h.edges())) {
    throw PreconditionError("h is not a Hamiltonian cycle of the embedded graph");
  }
  for (const auto& f : e.faces()) {
    if (!f.is_cycle) throw PreconditionError("four_face_colouring needs every face boundary to be a cycle");
  }
}

// Proper 2-colouring of the faces in `side` (adjacent across non-h edges), anchor gets colour a, others b.
void colour_side(const PlaneEmbedding& e, const Cycle& h, const std::vector<int>& side, int anchor, int a, int b,
                 std::vector<int>& colour) {
  std::vector<char> in_side(static_cast<std::size_t>(e.face_count()), 0);
  for (int f : side) in_side[static_cast<std::size_t>(f)] = 1;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(e.face_count()));
  for (EdgeId id = 0; id < e.graph().edge_count(); ++id) {
    if (h.contains(id)) continue;
    const auto [x, y] = e.faces_of_edge(id);
    if (!in_side[static_cast<std::size_t>(x)]) continue;
    adj[static_cast<std::size_t>(x)].push_back(y);
    adj[static_cast<std::size_t>(y)].push_back(x);
  }
  std::queue<int> q;
  colour[static_cast<std::size_t>(anchor)] = a;
  q.push(anchor);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    const int want = colour[static_cast<std::size_t>(x)] == a ? b : a;
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (colour[static_cast<std::size_t>(y)] == 0) {
        colour[static_cast<std::size_t>(y)] = want;
        q.push(y);
      } else if (colour[static_cast<std::size_t>(y)] != want) {
        throw InternalAssertion("faces on one side of the Hamiltonian cycle are not 2-colourable");
      }
    }
  }
  for (int f : side) {
    if (colour[static_cast<std::size_t>(f)] == 0) throw InternalAssertion("face side is not connected");
  }
}

}  // namespace

std::vector<int> four_face_colouring_anchored(const PlaneEmbedding& e, const Cycle& h, int colour1_face,
                                              int colour3_face) {
  check_hamiltonian(e, h);
  auto [first, second] = face_sides(e, h);
  const bool one_in_first = std::find(first.begin(), first.end(), colour1_face) != first.end();
  const auto& side1 = one_in_first ? first : second;
  const auto& side3 = one_in_first ? second : first;
  if (std::find(side3.begin(), side3.end(), colour3_face) == side3.end()) {
    throw PreconditionError("anchor faces must lie on opposite sides of h");
  }
  std::vector<int> colour(static_cast<std::size_t>(e.face_count()), 0);
  colour_side(e, h, side1, colour1_face, 1, 2, colour);
  colour_side(e, h, side3, colour3_face, 3, 4, colour);
  return colour;
}

std::vector<int> four_face_colouring(const PlaneEmbedding& e, const Cycle& h, int inner_choice, int outer_choice) {
  if (inner_choice != 1 && inner_choice != 2) throw PreconditionError("inner_choice must be 1 or 2");
  if (outer_choice != 3 && outer_choice != 4) throw PreconditionError("outer_choice must be 3 or 4");
  check_hamiltonian(e, h);
  const auto [inner, outer] = face_sides(e, h);
  std::vector<int> colour(static_cast<std::size_t>(e.face_count()), 0);
  colour_side(e, h, inner, 0, inner_choice, 3 - inner_choice, colour);
  colour_side(e, h, outer, outer.front(), outer_choice, 7 - outer_choice, colour);
  return colour;
}

EdgeSet even_subgraph_G1j(const PlaneEmbedding& e, const std::vector<int>& colouring, int j) {
  if (j < 2 || j > 4) throw PreconditionError("j must be 2, 3 or 4");
  if (static_cast<int>(colouring.size()) != e.face_count()) throw StructuralError("colouring does not match faces");
  EdgeSet out(e.graph().edge_count());
  auto in_pair = [&](int f) {
    const int c = colouring[static_cast<std::size_t>(f)];
    return c == 1 || c == j;
  };
  for (EdgeId id = 0; id < e.graph().edge_count(); ++id) {
    const auto [a, b] = e.faces_of_edge(id);
    if (in_pair(a) != in_pair(b)) out.insert(id);
  }
  return out;
}

}  // namespace cdc
