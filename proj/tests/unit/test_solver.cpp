#include <doctest.h>

#include "cdc/families.hpp"
#include "cdc/graph_io.hpp"
#include "cdc/solver.hpp"
#include "oracles.hpp"

using namespace cdc;

namespace {

std::map<int, std::pair<long long, long long>> solver_census(const Graph& g, int max_size, int workers) {
  SolverOptions o;
  o.workers = workers;
  return cdc_census(g, max_size, o).counts;
}

}  // namespace

TEST_CASE("verify_cdc: coverage report") {
  const Graph k4 = complete_graph(4);
  const auto tri = enumerate_cycles(k4, 3, 3).cycles;
  REQUIRE(tri.size() == 4);
  const Cdc faces = Cdc::from_cycles(6, tri);
  CHECK(verify_cdc(k4, faces).ok);
  CHECK(faces.size() == 4);
  CHECK(faces.is_true());
  Cdc short_one = faces;
  short_one.remove(tri[0]);
  const CoverageReport r = verify_cdc(k4, short_one);
  CHECK_FALSE(r.ok);
  CHECK(r.under.size() == 3);
  Cdc doubled = faces;
  doubled.add(tri[1]);
  CHECK(doubled.multiplicity(tri[1]) == 2);
  CHECK_FALSE(doubled.is_true());
  CHECK(verify_cdc(k4, doubled).over.size() == 3);
  CHECK_THROWS_AS(short_one.remove(tri[0]), StructuralError);
}

TEST_CASE("cdc JSON round trip") {
  const Graph p = petersen_graph();
  const auto r = min_cdc(p, false);
  REQUIRE(r);
  const nlohmann::json j = cdc_to_json(r->witness);
  CHECK(j.at("size") == 5);
  CHECK(j.at("true") == true);
  CHECK(cdc_from_json(p, j) == r->witness);
  CHECK(cdc_to_json(r->witness, {"a", "b"}).at("case_trace").size() == 2);
}

TEST_CASE("solver: census equals the catalog-order oracle (frozen networkx values too)") {
  using Counts = std::map<int, std::pair<long long, long long>>;
  CHECK(solver_census(complete_graph(4), 8, 1) == Counts{{3, {1, 1}}, {4, {1, 1}}});
  CHECK(solver_census(prism_graph(6), 6, 2) == Counts{{3, {1, 1}}, {4, {2, 2}}, {5, {1, 1}}});
  CHECK(solver_census(octahedron_graph(), 8, 0) ==
        Counts{{4, {28, 22}}, {5, {734, 734}}, {6, {1088, 944}}, {7, {78, 46}}, {8, {3, 1}}});
  CHECK(solver_census(cube_graph(), 5, 1) == Counts{{4, {25, 25}}});
  int graphs = 0;
  for (const Graph& g : read_graph_file(oracle::data("bridgeless_n3to7.g6"))) {
    if (g.edge_count() > 11) continue;
    const int cap = g.vertex_count() + 2;
    CHECK(solver_census(g, cap, 1) == oracle::census(g, cap));
    ++graphs;
  }
  CHECK(graphs > 100);
}

TEST_CASE("solver: serial and parallel counts agree") {
  for (const Graph& g : {octahedron_graph(), cube_graph(), double_wheel(7), gen_antiprism(4).graph()}) {
    for (int k = 3; k <= g.vertex_count() + 2; ++k) {
      SolverOptions par;
      par.workers = 4;
      CHECK(count_cdcs(g, k, false, par) == count_cdcs_serial(g, k, false));
      CHECK(count_cdcs(g, k, true, par) == count_cdcs_serial(g, k, true));
    }
  }
}

TEST_CASE("solver: minimum CDCs") {
  CHECK(min_cdc(complete_graph(4), false)->size == 3);
  CHECK(min_cdc(petersen_graph(), false)->size == 5);
  CHECK(min_cdc(cube_graph(), false)->size == 4);
  CHECK(min_cdc(prism_graph(10), false)->size == 4);
  CHECK(min_cdc(complete_graph(5), false)->size == 4);
  const Graph triangle = cycle_graph(3);
  CHECK(min_cdc(triangle, false)->size == 2);
  CHECK_FALSE(min_cdc(triangle, true).has_value());  // a cycle only has its doubled self
  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(min_cdc(path, false).has_value());
  CHECK(count_cdcs(path, 2, false) == 0);
}

TEST_CASE("solver: witness is deterministic across worker counts") {
  for (const Graph& g : {petersen_graph(), octahedron_graph(), ladder_graph(10)}) {
    SolverOptions one, many;
    one.workers = 1;
    many.workers = 3;
    const auto a = min_cdc(g, false, one);
    const auto b = min_cdc(g, false, many);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->witness == b->witness);
    CHECK(verify_cdc(g, a->witness).ok);
    CHECK(enumerate_cdcs(g, a->size + 1, one) == enumerate_cdcs(g, a->size + 1, many));
  }
}

TEST_CASE("solver: min_cdc matches the oracle minimum on small graphs") {
  for (const Graph& g : read_graph_file(oracle::data("bridgeless_n3to7.g6"))) {
    if (g.edge_count() > 11) continue;
    const auto counts = oracle::census(g, g.edge_count());
    const auto r = min_cdc(g, false);
    REQUIRE(r);
    CHECK(r->size == counts.begin()->first);
    const auto t = min_cdc(g, true);
    int true_min = -1;
    for (const auto& [k, c] : counts) {
      if (c.second > 0) {
        true_min = k;
        break;
      }
    }
    CHECK((t ? t->size : -1) == true_min);
  }
}

TEST_CASE("solver: forced cycles and bounded search") {
  const Graph k5 = complete_graph(5);
  const Cycle ham = enumerate_hamiltonian(k5).front();
  SolverOptions o;
  o.forced = {ham};
  const auto found = find_cdc(k5, 4, false, o);
  REQUIRE(found);
  CHECK(found->multiplicity(ham) >= 1);
  CHECK(found->size() <= 4);
  CHECK(verify_cdc(k5, *found).ok);
  CHECK_FALSE(find_cdc(k5, 3, false).has_value());
  o.forced = {ham, ham, ham};
  CHECK_FALSE(find_cdc(k5, 10, false, o).has_value());
}

TEST_CASE("solver: restricted catalog") {
  const Graph k4 = complete_graph(4);
  const CycleCatalog tri = enumerate_cycles(k4, 3, 3);
  SolverOptions o;
  o.catalog = &tri;
  CHECK(min_cdc(k4, false, o)->size == 4);
  CHECK(count_cdcs(k4, 3, false, o) == 0);
}

TEST_CASE("solver: streaming enumeration stops on request and sees every CDC once") {
  const Graph o = octahedron_graph();
  long long seen = 0;
  for_each_cdc(o, 5, false, [&](const Cdc&) { return ++seen < 10; });
  CHECK(seen == 10);
  std::vector<Cdc> all;
  for_each_cdc(o, 5, false, [&](const Cdc& c) {
    all.push_back(c);
    return true;
  });
  CHECK(all.size() == 28 + 734);
  std::sort(all.begin(), all.end());
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all == enumerate_cdcs(o, 5));
}

TEST_CASE("solver: cubic CDCs are true") {
  for (const Graph& g : {complete_graph(4), prism_graph(6), cube_graph(), petersen_graph()}) {
    for_each_cdc(g, g.vertex_count() / 2 + 2, false, [&](const Cdc& c) {
      CHECK(c.is_true());
      return true;
    });
  }
}
