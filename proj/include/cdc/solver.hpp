#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cdc/cdc.hpp"
#include "cdc/cycles.hpp"
#include "cdc/graph.hpp"

namespace cdc {

struct SolverOptions {
  /// <= 0: OpenMP default thread count; 1: serial search.
  int workers = 0;
  /// Cycles that every returned cover must contain (each listed copy counts once).
  std::vector<Cycle> forced;
  /// Restricts the search to this catalog instead of all cycles of the graph.
  const CycleCatalog* catalog = nullptr;
};

struct MinCdcResult {
  int size = 0;
  Cdc witness;
};

/// Exact minimum (true) CDC. The witness is the first optimum in the solver's deterministic search order.
std::optional<MinCdcResult> min_cdc(const Graph& g, bool true_only, const SolverOptions& opts = {});

/// Number of CDCs (true CDCs) of size exactly k.
long long count_cdcs(const Graph& g, int k, bool true_only, const SolverOptions& opts = {});
long long count_cdcs_serial(const Graph& g, int k, bool true_only, const SolverOptions& opts = {});

/// Counts per size for every size <= max_size, plus c(G) and the least true size when within range.
CdcCensus cdc_census(const Graph& g, int max_size, const SolverOptions& opts = {});

/// All CDCs of size <= max_size in canonical order.
std::vector<Cdc> enumerate_cdcs(const Graph& g, int max_size, const SolverOptions& opts = {});
/// Streams every CDC of size <= max_size (serial search order). Stop by returning false.
void for_each_cdc(const Graph& g, int max_size, bool true_only, const std::function<bool(const Cdc&)>& visit,
                  const SolverOptions& opts = {});

/// Some CDC of size <= max_size containing opts.forced, or nullopt.
std::optional<Cdc> find_cdc(const Graph& g, int max_size, bool true_only, const SolverOptions& opts = {});

}  // namespace cdc
