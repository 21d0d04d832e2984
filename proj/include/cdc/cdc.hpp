#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdc/cycles.hpp"
#include "cdc/graph.hpp"

namespace cdc {

struct CdcEntry {
  Cycle cycle;
  int mult = 1;
  friend auto operator<=>(const CdcEntry&, const CdcEntry&) = default;
};

/// Multiset of cycles with multiplicities in {1,2}; entries kept sorted and merged.
class Cdc {
 public:
  Cdc() = default;
  explicit Cdc(int edge_universe) : universe_(edge_universe) {}
  Cdc(int edge_universe, std::vector<CdcEntry> entries);
  /// Each listed cycle counts once; repeats become multiplicity 2.
  static Cdc from_cycles(int edge_universe, const std::vector<Cycle>& cycles);

  int edge_universe() const { return universe_; }
  const std::vector<CdcEntry>& entries() const { return entries_; }
  int size() const;
  bool is_true() const;
  /// Multiplicity of c (0 if absent).
  int multiplicity(const Cycle& c) const;
  /// Cycles expanded by multiplicity, in canonical order.
  std::vector<Cycle> cycles() const;

  void add(const Cycle& c, int mult = 1);
  /// Removes one copy; throws StructuralError if c is absent.
  void remove(const Cycle& c);

  friend bool operator==(const Cdc&, const Cdc&) = default;
  friend bool operator<(const Cdc& a, const Cdc& b) { return a.entries_ < b.entries_; }

 private:
  void normalise();
  int universe_ = 0;
  std::vector<CdcEntry> entries_;
};

struct CoverageReport {
  bool ok = false;
  std::vector<int> coverage;  // per edge
  std::vector<EdgeId> under;  // covered fewer than twice
  std::vector<EdgeId> over;   // covered more than twice
};

/// Coverage check; throws StructuralError if some entry is not a cycle of g.
CoverageReport verify_cdc(const Graph& g, const Cdc& candidate);
bool is_cdc(const Graph& g, const Cdc& candidate);

struct CdcCensus {
  /// size k -> (number of k-CDCs, number of true k-CDCs)
  std::map<int, std::pair<long long, long long>> counts;
  std::optional<int> min_size;
  std::optional<int> min_true_size;
};

nlohmann::json cdc_to_json(const Cdc& c);
nlohmann::json cdc_to_json(const Cdc& c, const std::vector<std::string>& case_trace);
Cdc cdc_from_json(const Graph& g, const nlohmann::json& j);

}  // namespace cdc
