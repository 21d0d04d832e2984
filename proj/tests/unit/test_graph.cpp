#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cdc/families.hpp"
#include "cdc/graph.hpp"
#include "cdc/graph_io.hpp"
#include "oracles.hpp"

using namespace cdc;

TEST_CASE("graph: construction and degrees") {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {2, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 5);
  CHECK(g.degree(2) == 4);
  CHECK(g.max_degree() == 4);
  CHECK(g.min_degree() == 2);
  CHECK(g.has_parallel_edges());
  CHECK_FALSE(g.is_simple());
  CHECK(g.edge_between(3, 2) == 3);
  CHECK(g.edge_between(0, 3) == -1);
  CHECK_THROWS_AS(build_graph(2, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(build_graph(2, {{0, 2}}), PreconditionError);
  const Graph loop = build_graph(1, {{0, 0}}, true);
  CHECK(loop.degree(0) == 2);
  CHECK(loop.has_loops());
}

TEST_CASE("graph: edge sets") {
  EdgeSet a(70, {1, 5, 64});
  EdgeSet b(70, {5, 69});
  CHECK((a ^ b).ids() == std::vector<EdgeId>{1, 64, 69});
  CHECK((a & b).ids() == std::vector<EdgeId>{5});
  CHECK((a | b).size() == 4);
  a.toggle(1);
  CHECK_FALSE(a.contains(1));
  CHECK(EdgeSet(3, {0, 2}) < EdgeSet(3, {1}));
  CHECK_THROWS(a ^ EdgeSet(10));
}

TEST_CASE("graph: bridges and connectivity agree with removal oracles on the corpus") {
  int checked = 0;
  for (const Graph& g : read_graph_file(oracle::data("bridgeless_n3to7.g6"))) {
    CHECK(bridges(g) == oracle::bridges(g));
    for (int k = 1; k <= 4; ++k) CHECK(vertex_connectivity_at_least(g, k) == oracle::k_connected(g, k));
    ++checked;
  }
  CHECK(checked == 577);
  // a path has every edge as a bridge
  const Graph path = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(bridges(path).size() == 3);
  CHECK(has_bridge(path));
}

TEST_CASE("graph: connectivity counts on the corpus match networkx") {
  // frozen from tests/oracles/derive.py (networkx node_connectivity)
  int c2 = 0, c3 = 0, c4 = 0;
  for (const Graph& g : read_graph_file(oracle::data("bridgeless_n3to7.g6"))) {
    c2 += vertex_connectivity_at_least(g, 2);
    c3 += vertex_connectivity_at_least(g, 3);
    c4 += vertex_connectivity_at_least(g, 4);
  }
  CHECK(c2 == 538);
  CHECK(c3 == 157);
  CHECK(c4 == 30);
}

TEST_CASE("graph: subgraphs keep provenance") {
  const Graph k4 = complete_graph(4);
  const std::vector<Vertex> keep{3, 1, 2};
  const InducedSubgraph s = induced_subgraph(k4, keep);
  CHECK(s.graph.vertex_count() == 3);
  CHECK(s.graph.edge_count() == 3);
  for (EdgeId e = 0; e < 3; ++e) {
    const Edge& ne = s.graph.edge(e);
    const Edge& oe = k4.edge(s.edge_origin[static_cast<std::size_t>(e)]);
    CHECK(std::minmax(s.vertex_origin[static_cast<std::size_t>(ne.u)], s.vertex_origin[static_cast<std::size_t>(ne.v)]) ==
          std::minmax(oe.u, oe.v));
  }
  const EdgeSubgraph es = edge_subgraph(k4, EdgeSet(6, {0, 5}));
  CHECK(es.graph.vertex_count() == 4);
  CHECK(es.edge_origin == std::vector<EdgeId>{0, 5});
}

TEST_CASE("graph6: known strings") {
  // nauty / networkx encodings
  CHECK(to_graph6(petersen_graph()).size() == 9);
  const Graph p = from_graph6("IheA@GUAo");
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(p.is_regular(3));
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(from_graph6("C~").edge_count() == 6);
  CHECK(to_graph6(from_graph6("IheA@GUAo")) == "IheA@GUAo");
  CHECK(from_graph6(">>graph6<<C~").edge_count() == 6);
  CHECK_THROWS_AS(from_graph6("C"), FormatError);
  CHECK_THROWS_AS(from_graph6("C\x7f"), FormatError);
}

TEST_CASE("graph6: parsed edge order is (max endpoint, min endpoint)") {
  const Graph g = from_graph6("C~");
  const std::vector<std::pair<int, int>> expect{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(g.endpoint_pairs() == expect);
}

TEST_CASE("sparse6: known strings and multigraphs") {
  // from the nauty format description: n = 7, edges 0-1 0-2 1-2 5-6
  const Graph g = from_sparse6(":Fa@x^");
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 4);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(5, 6));
  CHECK(to_sparse6(complete_graph(4)) == ":CcKI");  // networkx
  const Graph multi = build_graph(3, {{0, 1}, {0, 1}, {1, 1}, {1, 2}, {2, 0}}, true);
  const Graph back = from_sparse6(to_sparse6(multi));
  CHECK(back.edge_count() == 5);
  CHECK(back.has_loops());
  CHECK(back.has_parallel_edges());
  CHECK(to_sparse6(back) == to_sparse6(multi));
  CHECK(parse_graph_line(to_graph_line(multi)).edge_count() == 5);
}

TEST_CASE("graph6: round trip over the corpus files") {
  for (const char* file : {"bridgeless_n3to7.g6", "cubic_planar_2conn_n14.g6", "planar_4conn_n9.g6"}) {
    std::ifstream in(oracle::data(file));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      CHECK(to_graph6(from_graph6(line)) == line);
      CHECK(from_sparse6(to_sparse6(from_graph6(line))) == from_graph6(line));
    }
  }
}

TEST_CASE("graph io: stream reader skips blank lines and reports line numbers") {
  std::istringstream in("C~\n\nBw\n");
  CHECK(read_graph_stream(in).size() == 2);
  std::istringstream bad("C~\n%%\n");
  CHECK_THROWS_WITH_AS(read_graph_stream(bad), doctest::Contains("line 2"), FormatError);
}
