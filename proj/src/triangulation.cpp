#include <algorithm>
#include <string>

#include "cdc/constructions.hpp"
#include "cdc/solver.hpp"

namespace cdc {

namespace {

bool is_triangulation(const PlaneEmbedding& t) {
  for (const FacialWalk& f : t.faces()) {
    if (f.length() != 3 || !f.is_cycle) return false;
  }
  return t.graph().vertex_count() >= 4 && t.graph().is_simple();
}

bool separates(const Graph& t, Vertex a, Vertex b, Vertex c) {
  std::vector<char> removed(static_cast<std::size_t>(t.vertex_count()), 0);
  removed[static_cast<std::size_t>(a)] = removed[static_cast<std::size_t>(b)] = removed[static_cast<std::size_t>(c)] = 1;
  int count = 0;
  component_labels(t, removed, &count);
  return count >= 2;
}

// Breaks an even edge set that is one cycle or two into cycles.
std::vector<Cycle> split_even(const Graph& g, const EdgeSet& s) {
  if (s.empty()) throw InternalAssertion("merge_triangulation_cdcs: empty symmetric difference");
  std::vector<Cycle> parts = min_cycle_decomposition(g, s);
  if (parts.size() > 2) throw InternalAssertion("merge_triangulation_cdcs: symmetric difference needs more than two cycles");
  return parts;
}

struct MergeOutcome {
  Cdc cdc;
  std::string label;
};

MergeOutcome merge_impl(const Graph& target, const Cdc& c1, std::span<const EdgeId> map1, const Cdc& c2,
                        std::span<const EdgeId> map2, std::array<EdgeId, 3> marker) {
  const int m = target.edge_count();
  auto lift = [&](const Cdc& c, std::span<const EdgeId> map) {
    std::vector<EdgeSet> out;
    std::vector<char> hit(3, 0);
    for (const Cycle& cyc : c.cycles()) {
      EdgeSet s(m);
      for (EdgeId x : cyc.edges()) {
        if (x < 0 || static_cast<std::size_t>(x) >= map.size() || map[static_cast<std::size_t>(x)] < 0) {
          throw StructuralError("merge_triangulation_cdcs: edge map does not cover the cover's edges");
        }
        s.insert(map[static_cast<std::size_t>(x)]);
      }
      out.push_back(s);
    }
    for (EdgeId x : map) {
      for (int i = 0; i < 3; ++i) hit[static_cast<std::size_t>(i)] |= (x == marker[static_cast<std::size_t>(i)]);
    }
    if (std::count(hit.begin(), hit.end(), 1) != 3) throw StructuralError("merge_triangulation_cdcs: marker mismatch");
    return out;
  };
  std::vector<EdgeSet> l1 = lift(c1, map1);
  std::vector<EdgeSet> l2 = lift(c2, map2);
  const EdgeSet tri(m, std::span<const EdgeId>(marker));
  if (!is_cycle(target, tri)) throw StructuralError("merge_triangulation_cdcs: marker is not a triangle");

  auto finish = [&](std::vector<EdgeSet> sets, std::vector<Cycle> extra, std::string label) {
    std::vector<Cycle> cycles = std::move(extra);
    for (const EdgeSet& s : sets) {
      if (!is_cycle(target, s)) throw InternalAssertion("merge_triangulation_cdcs: lifted set is not a cycle");
      cycles.emplace_back(target, s.ids());
    }
    Cdc out = Cdc::from_cycles(m, cycles);
    if (!verify_cdc(target, out).ok) throw InternalAssertion("merge_triangulation_cdcs: result is not a CDC");
    return MergeOutcome{std::move(out), std::move(label)};
  };

  std::vector<EdgeSet> all = l1;
  all.insert(all.end(), l2.begin(), l2.end());
  if (std::count(all.begin(), all.end(), tri) >= 2) {
    for (int drop = 0; drop < 2; ++drop) all.erase(std::find(all.begin(), all.end(), tri));
    return finish(all, {}, "doubled-marker");
  }

  auto rest_without = [](const std::vector<EdgeSet>& l, std::vector<std::size_t> skip) {
    std::vector<EdgeSet> out;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (std::find(skip.begin(), skip.end(), i) == skip.end()) out.push_back(l[i]);
    }
    return out;
  };

  // Case 1: two cycles from different sides sharing two marker edges
  for (std::size_t i = 0; i < l1.size(); ++i) {
    for (std::size_t j = 0; j < l2.size(); ++j) {
      const EdgeSet meet = l1[i] & l2[j];
      if (meet.size() != 2) continue;
      EdgeSet g_only = tri;
      g_only ^= meet;
      for (std::size_t p = 0; p < l1.size(); ++p) {
        if (p == i) continue;
        for (std::size_t q = 0; q < l2.size(); ++q) {
          if (q == j || (l1[p] & l2[q]) != g_only) continue;
          std::vector<Cycle> extra = split_even(target, l1[i] ^ l2[j]);
          for (const Cycle& c : split_even(target, l1[p] ^ l2[q])) extra.push_back(c);
          std::vector<EdgeSet> rest = rest_without(l1, {i, p});
          for (const EdgeSet& s : rest_without(l2, {j, q})) rest.push_back(s);
          return finish(rest, extra, "two-edge-overlap");
        }
      }
      throw InternalAssertion("merge_triangulation_cdcs: no pair meeting in the third marker edge");
    }
  }

  // Case 2: pairwise distinct cycles through e, f, g on each side, matched edge by edge
  auto distinct_reps = [&](const std::vector<EdgeSet>& l) -> std::array<std::size_t, 3> {
    for (std::size_t a = 0; a < l.size(); ++a) {
      if (!l[a].contains(marker[0])) continue;
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (b == a || !l[b].contains(marker[1])) continue;
        for (std::size_t c = 0; c < l.size(); ++c) {
          if (c == a || c == b || !l[c].contains(marker[2])) continue;
          return {a, b, c};
        }
      }
    }
    throw InternalAssertion("merge_triangulation_cdcs: no distinct representatives for the marker edges");
  };
  const auto r1 = distinct_reps(l1);
  const auto r2 = distinct_reps(l2);
  std::vector<Cycle> extra;
  for (int t = 0; t < 3; ++t) {
    for (const Cycle& c : split_even(target, l1[r1[static_cast<std::size_t>(t)]] ^ l2[r2[static_cast<std::size_t>(t)]])) {
      extra.push_back(c);
    }
  }
  std::vector<EdgeSet> rest = rest_without(l1, {r1[0], r1[1], r1[2]});
  for (const EdgeSet& s : rest_without(l2, {r2[0], r2[1], r2[2]})) rest.push_back(s);
  return finish(rest, extra, "single-edge-overlaps");
}

ConstructedCdc from_pieces(const PlaneEmbedding& t, const std::function<Cdc(const Graph&)>& piece_cdc) {
  const auto tri = find_separating_triangle(t.graph());
  if (!tri) {
    Cdc c = piece_cdc(t.graph());
    if (!verify_cdc(t.graph(), c).ok) throw InternalAssertion("piece cover is not a CDC");
    return {std::move(c), {"piece"}};
  }
  const TriangleSplit split = split_along_triangle(t, *tri);
  const ConstructedCdc a = from_pieces(split.parts[0].embedding, piece_cdc);
  const ConstructedCdc b = from_pieces(split.parts[1].embedding, piece_cdc);
  MergeOutcome merged = merge_impl(t.graph(), a.cdc, split.parts[0].edge_origin, b.cdc, split.parts[1].edge_origin,
                                   split.triangle_edges);
  if (merged.cdc.size() > a.cdc.size() + b.cdc.size()) throw InternalAssertion("triangulation merge grew the cover");
  ConstructedCdc out{std::move(merged.cdc), {"merge:" + merged.label}};
  out.case_trace.insert(out.case_trace.end(), a.case_trace.begin(), a.case_trace.end());
  out.case_trace.insert(out.case_trace.end(), b.case_trace.begin(), b.case_trace.end());
  return out;
}

void decompose(const PlaneEmbedding& t, const std::vector<Vertex>& vorigin, const std::vector<EdgeId>& eorigin,
               DecompositionTree& tree) {
  const auto tri = find_separating_triangle(t.graph());
  if (!tri) {
    TriangulationPiece p;
    p.graph = t.graph();
    p.embedding = t;
    p.vertex_origin = vorigin;
    p.edge_origin = eorigin;
    p.is_k4 = t.graph().vertex_count() == 4;
    tree.pieces.push_back(std::move(p));
    return;
  }
  const TriangleSplit split = split_along_triangle(t, *tri);
  std::array<std::size_t, 2> first{};
  for (int side = 0; side < 2; ++side) {
    const TriangulationPiece& part = split.parts[static_cast<std::size_t>(side)];
    std::vector<Vertex> vo;
    std::vector<EdgeId> eo;
    for (Vertex v : part.vertex_origin) vo.push_back(vorigin[static_cast<std::size_t>(v)]);
    for (EdgeId e : part.edge_origin) eo.push_back(eorigin[static_cast<std::size_t>(e)]);
    first[static_cast<std::size_t>(side)] = tree.pieces.size();
    decompose(part.embedding, vo, eo, tree);
  }
  std::array<Vertex, 3> root_tri{};
  for (int i = 0; i < 3; ++i) root_tri[static_cast<std::size_t>(i)] = vorigin[static_cast<std::size_t>((*tri)[static_cast<std::size_t>(i)])];
  std::sort(root_tri.begin(), root_tri.end());
  // the marker is a face of exactly one piece on each side
  auto holder = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      const TriangulationPiece& p = tree.pieces[i];
      for (const FacialWalk& f : p.embedding.faces()) {
        std::array<Vertex, 3> vs{};
        for (int d = 0; d < 3; ++d) {
          vs[static_cast<std::size_t>(d)] =
              p.vertex_origin[static_cast<std::size_t>(p.embedding.vertex_of_end(f.darts[static_cast<std::size_t>(d)]))];
        }
        std::sort(vs.begin(), vs.end());
        if (vs == root_tri) return static_cast<int>(i);
      }
    }
    throw InternalAssertion("jackson_yu_tree: marker triangle lost");
  };
  tree.links.push_back({holder(first[0], first[1]), holder(first[1], tree.pieces.size()), root_tri});
}

}  // namespace

std::optional<std::array<Vertex, 3>> find_separating_triangle(const Graph& t) {
  const int n = t.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!t.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (t.adjacent(a, c) && t.adjacent(b, c) && separates(t, a, b, c)) return std::array<Vertex, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

TriangleSplit split_along_triangle(const PlaneEmbedding& t, std::array<Vertex, 3> triangle) {
  const Graph& g = t.graph();
  TriangleSplit s;
  s.triangle = triangle;
  for (int i = 0; i < 3; ++i) {
    const EdgeId e = g.edge_between(triangle[static_cast<std::size_t>(i)], triangle[static_cast<std::size_t>((i + 1) % 3)]);
    if (e < 0) throw PreconditionError("split_along_triangle: not a triangle");
    s.triangle_edges[static_cast<std::size_t>(i)] = e;
  }
  std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : triangle) removed[static_cast<std::size_t>(v)] = 1;
  int count = 0;
  const auto label = component_labels(g, removed, &count);
  if (count < 2) throw PreconditionError("split_along_triangle: triangle does not separate");
  if (count > 2) throw InternalAssertion("split_along_triangle: separating triangle leaves more than two components");
  for (int side = 0; side < 2; ++side) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (removed[static_cast<std::size_t>(v)] || label[static_cast<std::size_t>(v)] == side) keep.push_back(v);
    }
    InducedEmbedding ie = induced_embedding(t, keep);
    TriangulationPiece& p = s.parts[static_cast<std::size_t>(side)];
    p.graph = ie.sub.graph;
    p.embedding = std::move(ie.embedding);
    p.vertex_origin = std::move(ie.sub.vertex_origin);
    p.edge_origin = std::move(ie.sub.edge_origin);
    p.is_k4 = p.graph.vertex_count() == 4;
  }
  return s;
}

DecompositionTree jackson_yu_tree(const PlaneEmbedding& t) {
  if (!is_triangulation(t)) throw PreconditionError("jackson_yu_tree needs a simple plane triangulation");
  std::vector<Vertex> vo(static_cast<std::size_t>(t.graph().vertex_count()));
  std::vector<EdgeId> eo(static_cast<std::size_t>(t.graph().edge_count()));
  for (std::size_t i = 0; i < vo.size(); ++i) vo[i] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i < eo.size(); ++i) eo[i] = static_cast<EdgeId>(i);
  DecompositionTree tree;
  decompose(t, vo, eo, tree);
  return tree;
}

Cdc merge_triangulation_cdcs(const Graph& target, const Cdc& c1, std::span<const EdgeId> to_target1, const Cdc& c2,
                             std::span<const EdgeId> to_target2, std::array<EdgeId, 3> marker) {
  return merge_impl(target, c1, to_target1, c2, to_target2, marker).cdc;
}

ConstructedCdc triangulation_cdc_from_pieces(const PlaneEmbedding& t, const std::function<Cdc(const Graph&)>& piece_cdc) {
  if (!is_triangulation(t)) throw PreconditionError("triangulation_cdc_from_pieces needs a simple plane triangulation");
  return from_pieces(t, piece_cdc);
}

int theorem3_upper_bound(const PlaneEmbedding& t, int workers) {
  SolverOptions opts;
  opts.workers = workers;
  int total = 0;
  for (const TriangulationPiece& p : jackson_yu_tree(t).pieces) {
    const auto r = min_cdc(p.graph, false, opts);
    if (!r) throw InternalAssertion("triangulation piece without a CDC");
    total += r->size;
  }
  return total;
}

}  // namespace cdc
