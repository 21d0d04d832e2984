#include <doctest.h>

#include <algorithm>
#include <set>

#include "cdc/constructions.hpp"
#include "cdc/families.hpp"
#include "cdc/graph_io.hpp"
#include "cdc/solver.hpp"
#include "oracles.hpp"

using namespace cdc;

namespace {

// A list of distinct valid k-CDCs whose length is the number of k-CDCs is all of them.
bool is_every_k_cdc(const Graph& g, std::vector<Cdc> cs, int k) {
  for (const Cdc& c : cs) {
    if (!verify_cdc(g, c).ok || c.size() != k) return false;
  }
  std::sort(cs.begin(), cs.end());
  if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
  return static_cast<long long>(cs.size()) == count_cdcs(g, k, false);
}

bool contains_trace(const ConstructedCdc& c, const std::string& prefix) {
  for (const auto& t : c.case_trace) {
    if (t.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("antiprisms: the three (n+2)-CDCs are exactly the solver's") {
  for (int k = 3; k <= 5; ++k) {
    const AntiprismLayout a = gen_antiprism(k);
    const int n = 2 * k;
    auto three = antiprism_three_cdcs(k);
    REQUIRE(three.size() == 3);
    int true_count = 0;
    for (const Cdc& c : three) {
      CHECK(verify_cdc(a.graph(), c).ok);
      CHECK(c.size() == n + 2);
      true_count += c.is_true();
    }
    CHECK(true_count == 1);
    CHECK(three.front().is_true());
    CHECK(is_every_k_cdc(a.graph(), three, n + 2));
  }
}

TEST_CASE("antiprisms: every cycle crosses the middle band an even number of times") {
  for (int k = 4; k <= 7; ++k) {
    const AntiprismLayout a = gen_antiprism(k);
    const EdgeSet e2(a.graph().edge_count(), a.e2);
    int uncrossed = 0;
    for (const Cycle& c : enumerate_cycles(a.graph()).cycles) {
      const int cross = (c.edge_set(a.graph().edge_count()) & e2).size();
      CHECK(cross % 2 == 0);
      if (cross == 0) {
        ++uncrossed;
        CHECK(c.length() == k);
      }
      if (cross >= 4) CHECK(c.length() >= k + 1);
    }
    CHECK(uncrossed == 2);
  }
}

TEST_CASE("nested graphs: f-CDC enumeration matches the solver") {
  const std::vector<std::pair<int, int>> params{{3, 2}, {4, 2}, {3, 3}, {4, 3}};
  for (auto [k, l] : params) {
    const Theorem2Graph t = gen_theorem2_graph(k, l);
    const auto built = theorem2_enumerate_fcdcs(k, l);
    CHECK(static_cast<int>(built.size()) == l * (l + 1) / 2);
    int true_count = 0;
    for (const Cdc& c : built) {
      CHECK(verify_cdc(t.graph, c).ok);
      true_count += c.is_true();
    }
    CHECK(true_count == 1);
    CHECK(is_every_k_cdc(t.graph, built, t.face_total()));
    CHECK(count_cdcs(t.graph, t.face_total(), true) == 1);
  }
}

TEST_CASE("rings: invariants and exchanges preserve the double cover") {
  int cycle_rings = 0, wheel_rings = 0;
  for (int n : {8, 10, 12}) {
    for (const Graph& g : read_graph_file(oracle::data("cubic_planar_2conn_n" + std::to_string(n) + ".g6"))) {
      const PlaneEmbedding e = embed_or_throw(g);
      const Cdc faces = face_boundary_cdc(e);
      CHECK(faces.size() == e.face_count());
      for (int f = 0; f < e.face_count(); ++f) {
        const auto r = find_ring(e, f);
        if (!r) continue;
        const int k = static_cast<int>(r->cycles.size());
        CHECK(k == e.face(f).length());
        for (int i = 0; i < k; ++i) {
          const EdgeSet a = r->cycles[static_cast<std::size_t>(i)].edge_set(g.edge_count());
          const EdgeSet b = r->cycles[static_cast<std::size_t>((i + 1) % k)].edge_set(g.edge_count());
          CHECK((a & b) == EdgeSet(g.edge_count(), {r->shared[static_cast<std::size_t>(i)]}));
        }
        if (r->kind == RingKind::cycle_ring) {
          ++cycle_rings;
          const Cdc out = apply_ring_exchange(g, faces, *r);
          CHECK(out.size() == faces.size() - k + 2);
          CHECK(verify_cdc(g, out).ok);
        } else {
          ++wheel_rings;
          for (int chosen = 0; chosen < k; ++chosen) {
            const Cdc out = apply_ring_exchange(g, faces, *r, chosen);
            CHECK(out.size() == faces.size() - k - 1 + 3);
            CHECK(verify_cdc(g, out).ok);
          }
        }
      }
    }
  }
  CHECK(cycle_rings > 0);
  CHECK(wheel_rings > 0);
  const RingStructure none;
  CHECK_THROWS(cycle_ring_exchange(complete_graph(4), RingStructure{RingKind::cycle_ring, 0, {}, {}, {}, {}}));
  CHECK_THROWS_AS(wheel_ring_exchange(complete_graph(4), none), PreconditionError);
}

TEST_CASE("cubic plane graphs: half-size constructor on the corpus") {
  std::set<std::string> branches;
  for (int n = 6; n <= 12; n += 2) {
    for (const Graph& g : read_graph_file(oracle::data("cubic_planar_2conn_n" + std::to_string(n) + ".g6"))) {
      const ConstructedCdc r = cubic_planar_half_cdc(embed_or_throw(g));
      CHECK(verify_cdc(g, r.cdc).ok);
      CHECK(r.cdc.size() <= n / 2);
      CHECK(r.cdc.is_true());
      CHECK_FALSE(contains_trace(r, "fallback"));
      REQUIRE_FALSE(r.case_trace.empty());
      branches.insert(r.case_trace.front());
      if (n <= 8) CHECK(min_cdc(g, false)->size <= r.cdc.size());
    }
  }
  CHECK(branches.size() >= 3);
  CHECK_THROWS_AS(cubic_planar_half_cdc(embed_or_throw(complete_graph(4))), PreconditionError);
  CHECK_THROWS_AS(cubic_planar_half_cdc(embed_or_throw(octahedron_graph())), PreconditionError);
}

TEST_CASE("cubic joins: c(G = H) = c(G) + c(H) - 3") {
  const std::vector<Graph> small{complete_graph(4), prism_graph(6), cube_graph(), petersen_graph()};
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      const Graph& g = small[i];
      const Graph& h = small[j];
      const JoinResult jr = join_equiv(g, 0, h, 0);
      CHECK(jr.graph.vertex_count() == g.vertex_count() + h.vertex_count() - 2);
      CHECK(jr.graph.is_regular(3));
      const auto cg = min_cdc(g, false);
      const auto ch = min_cdc(h, false);
      const Cdc merged = join_cdc(jr, g, cg->witness, 0, h, ch->witness, 0);
      CHECK(verify_cdc(jr.graph, merged).ok);
      CHECK(merged.size() == cg->size + ch->size - 3);
      CHECK(min_cdc(jr.graph, false)->size == cg->size + ch->size - 3);
    }
  }
  CHECK(petersen_chain(2).vertex_count() == 18);
  CHECK(petersen_chain(3).vertex_count() == 26);
  CHECK(petersen_chain(3).is_regular(3));
}

TEST_CASE("triangulations: decomposition tree reglues to the original") {
  const Graph oct = octahedron_graph();
  const std::vector<Graph> ts{stacked_triangulation(7, 0), stacked_triangulation(9, 1), icosahedron_graph(),
                              double_wheel(8)};
  for (const Graph& t : ts) {
    const PlaneEmbedding e = embed_or_throw(t);
    const DecompositionTree tree = jackson_yu_tree(e);
    CHECK(tree.links.size() + 1 == tree.pieces.size());
    int vsum = 0, esum = 0;
    std::vector<int> edge_uses(static_cast<std::size_t>(t.edge_count()), 0);
    for (const TriangulationPiece& p : tree.pieces) {
      vsum += p.graph.vertex_count();
      esum += p.graph.edge_count();
      CHECK(p.is_k4 == (p.graph.vertex_count() == 4));
      CHECK((p.is_k4 || vertex_connectivity_at_least(p.graph, 4)));
      CHECK_FALSE(find_separating_triangle(p.graph).has_value());
      for (const FacialWalk& f : p.embedding.faces()) CHECK(f.length() == 3);
      for (std::size_t x = 0; x < p.edge_origin.size(); ++x) {
        ++edge_uses[static_cast<std::size_t>(p.edge_origin[x])];
        const Edge& pe = p.graph.edge(static_cast<EdgeId>(x));
        const Edge& te = t.edge(p.edge_origin[x]);
        CHECK(std::minmax(p.vertex_origin[static_cast<std::size_t>(pe.u)], p.vertex_origin[static_cast<std::size_t>(pe.v)]) ==
              std::minmax(te.u, te.v));
      }
    }
    const int links = static_cast<int>(tree.links.size());
    CHECK(vsum - 3 * links == t.vertex_count());
    CHECK(esum - 3 * links == t.edge_count());
    for (int u : edge_uses) CHECK(u >= 1);
  }
  CHECK(jackson_yu_tree(embed_or_throw(stacked_triangulation(7, 0))).pieces.size() == 4);
  CHECK(jackson_yu_tree(embed_or_throw(oct)).pieces.size() == 1);
}

TEST_CASE("triangulations: merges along one separating triangle") {
  for (const Graph& t : {stacked_triangulation(6, 0), stacked_triangulation(8, 1), stacked_triangulation(10, 0)}) {
    const PlaneEmbedding e = embed_or_throw(t);
    const auto tri = find_separating_triangle(t);
    REQUIRE(tri);
    const TriangleSplit split = split_along_triangle(e, *tri);
    CHECK(split.parts[0].graph.vertex_count() + split.parts[1].graph.vertex_count() == t.vertex_count() + 3);
    // pairs of small CDCs of the two sides, not only the minimum ones
    const auto sample = [](const Graph& g, int extra) {
      std::vector<Cdc> out;
      for_each_cdc(g, min_cdc(g, false)->size + extra, false, [&](const Cdc& c) {
        out.push_back(c);
        return out.size() < 20;
      });
      return out;
    };
    const auto all1 = sample(split.parts[0].graph, 1);
    const auto all2 = sample(split.parts[1].graph, 0);
    for (const Cdc& c1 : all1) {
      for (const Cdc& c2 : all2) {
        const Cdc m = merge_triangulation_cdcs(t, c1, split.parts[0].edge_origin, c2, split.parts[1].edge_origin,
                                               split.triangle_edges);
        CHECK(verify_cdc(t, m).ok);
        CHECK(m.size() <= c1.size() + c2.size());
      }
    }
    const ConstructedCdc glued =
        triangulation_cdc_from_pieces(e, [](const Graph& piece) { return min_cdc(piece, false)->witness; });
    CHECK(verify_cdc(t, glued.cdc).ok);
    CHECK(glued.cdc.size() <= theorem3_upper_bound(e));
    CHECK(min_cdc(t, false)->size <= theorem3_upper_bound(e));
  }
}

TEST_CASE("four-connected planar graphs: small CDC through a Hamiltonian cycle") {
  std::set<std::string> branches;
  for (int n = 6; n <= 8; ++n) {
    for (const Graph& g : read_graph_file(oracle::data("planar_4conn_n" + std::to_string(n) + ".g6"))) {
      const PlaneEmbedding e = embed_or_throw(g);
      for (const Cycle& h : enumerate_hamiltonian(g)) {
        for (Vertex v = 0; v < n; ++v) {
          if (g.degree(v) != 4 && g.degree(v) != 5) continue;
          const ConstructedCdc r = seyffarth_small_cdc(e, h, v);
          CHECK(verify_cdc(g, r.cdc).ok);
          CHECK(r.cdc.size() <= n - 1);
          CHECK_FALSE(contains_trace(r, "fallback"));
          branches.insert(r.case_trace.empty() ? "" : r.case_trace.front());
          if (r.cdc.multiplicity(h) > 0) continue;
          // otherwise two cycles meeting in one edge at v make up h
          bool pair = false;
          const auto cs = r.cdc.cycles();
          const EdgeSet hs = h.edge_set(g.edge_count());
          for (std::size_t i = 0; i < cs.size() && !pair; ++i) {
            for (std::size_t j = i + 1; j < cs.size() && !pair; ++j) {
              const EdgeSet a = cs[i].edge_set(g.edge_count());
              const EdgeSet b = cs[j].edge_set(g.edge_count());
              const auto meet = (a & b).ids();
              if (meet.size() != 1 || (a ^ b) != hs) continue;
              const Edge& x = g.edge(meet[0]);
              pair = x.u == v || x.v == v;
            }
          }
          CHECK(pair);
        }
      }
    }
  }
  CHECK(branches.size() >= 2);
  const Graph k5 = complete_graph(5);
  CHECK_THROWS_AS(seyffarth_small_cdc(embed_or_throw(octahedron_graph()), Cycle(k5, {0, 1, 3}), 0), std::exception);
}

TEST_CASE("Hamiltonian graphs: three even subgraphs double-cover the edges") {
  std::vector<std::pair<Graph, Cycle>> cases;
  const Graph k5 = complete_graph(5);
  cases.emplace_back(k5, enumerate_hamiltonian(k5).front());
  const Graph c7 = cycle_graph(7);
  cases.emplace_back(c7, Cycle(c7, {0, 1, 2, 3, 4, 5, 6}));
  for (const Graph& g : read_graph_file(oracle::data("planar_4conn_n9.g6"))) cases.emplace_back(g, enumerate_hamiltonian(g).back());
  // multigraph: 5-cycle with a doubled chord, a parallel cycle edge and a loop
  const Graph multi = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 2}, {1, 2}, {3, 3}}, true);
  cases.emplace_back(multi, Cycle(multi, {0, 1, 2, 3, 4}));
  cases.emplace_back(prism_graph(8), enumerate_hamiltonian(prism_graph(8)).front());
  for (const auto& [g, h] : cases) {
    const auto subs = hamiltonian_three_even_cover(g, h);
    std::vector<int> cover(static_cast<std::size_t>(g.edge_count()), 0);
    for (const EdgeSet& s : subs) {
      CHECK(is_even(g, s));
      for (EdgeId e : s.ids()) ++cover[static_cast<std::size_t>(e)];
    }
    for (int c : cover) CHECK(c == 2);
  }
  CHECK_THROWS_AS(hamiltonian_three_even_cover(petersen_graph(), enumerate_cycles(petersen_graph()).cycles.front()),
                  PreconditionError);
}
