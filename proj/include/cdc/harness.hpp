#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdc/bounds.hpp"
#include "cdc/graph.hpp"

namespace cdc {

/// c(G) - max(2m / circumference, max degree). nullopt when G has no CDC.
std::optional<Rational> defect(const Graph& g, int workers = 0);

/// Class labels are '-'-joined tokens: all, cubic, planar, bridgeless, simple, <k>conn.
/// Example: "cubic-planar-2conn". Throws PreconditionError on an unknown token.
bool in_class(const Graph& g, std::string_view label);

/// "n", "n+2", "n-1" or a plain integer.
int eval_size_expr(std::string_view expr, int n);

struct TableRow {
  std::string graph_class;
  int n = 0;
  std::string stat;
  std::string value;
  std::string witness;  // graph6/sparse6 of the first graph (input order) attaining value
};

/// Stats: max-mincdc, min-mincdc, max-mincdc-true, min-mincdc-true, max-defect, min-defect,
/// max-count, min-count (count of k-CDCs, k given by size_expr). One row per order n present,
/// ascending. Graphs outside the class, or with no CDC, are skipped.
std::vector<TableRow> fold_table(const std::vector<Graph>& graphs, const std::string& graph_class,
                                 const std::string& stat, const std::string& size_expr = "n", int workers = 0);

std::string table_csv(const std::vector<TableRow>& rows);

/// Reference counts by plain enumeration: the cycles whose lowest edge is e get their final
/// multiplicities when e is reached. size -> (count, true count) for sizes <= max_size.
std::map<int, std::pair<long long, long long>> reference_cdc_counts(const Graph& g, int max_size);

/// Two triangulations glued along a triangle of each: vertex ta[i] is identified with tb[i].
/// Both triangles must be faces for the result to be a triangulation.
Graph glue_along_triangle(const Graph& a, std::array<Vertex, 3> ta, const Graph& b, std::array<Vertex, 3> tb);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::string data_dir;
  int workers = 0;
  std::vector<int> only;  // empty: all ten
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);
std::string format_result(const CriterionResult& r);

}  // namespace cdc
