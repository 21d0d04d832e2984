#include "cdc/cdc.hpp"

#include <algorithm>

namespace cdc {

Cdc::Cdc(int edge_universe, std::vector<CdcEntry> entries) : universe_(edge_universe), entries_(std::move(entries)) {
  normalise();
}

Cdc Cdc::from_cycles(int edge_universe, const std::vector<Cycle>& cycles) {
  std::vector<CdcEntry> entries;
  entries.reserve(cycles.size());
  for (const auto& c : cycles) entries.push_back({c, 1});
  return Cdc(edge_universe, std::move(entries));
}

void Cdc::normalise() {
  std::sort(entries_.begin(), entries_.end(), [](const CdcEntry& a, const CdcEntry& b) { return a.cycle < b.cycle; });
  std::vector<CdcEntry> merged;
  for (auto& e : entries_) {
    if (e.mult <= 0) throw StructuralError("cycle multiplicity must be positive");
    if (!merged.empty() && merged.back().cycle == e.cycle) {
      merged.back().mult += e.mult;
    } else {
      merged.push_back(std::move(e));
    }
  }
  for (const auto& e : merged) {
    if (e.mult > 2) throw StructuralError("a cycle may appear at most twice in a cycle double cover");
    for (EdgeId id : e.cycle.edges()) {
      if (id < 0 || id >= universe_) throw StructuralError("cycle uses an edge outside the graph");
    }
  }
  entries_ = std::move(merged);
}

int Cdc::size() const {
  int s = 0;
  for (const auto& e : entries_) s += e.mult;
  return s;
}

bool Cdc::is_true() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CdcEntry& e) { return e.mult == 1; });
}

int Cdc::multiplicity(const Cycle& c) const {
  for (const auto& e : entries_) {
    if (e.cycle == c) return e.mult;
  }
  return 0;
}

std::vector<Cycle> Cdc::cycles() const {
  std::vector<Cycle> out;
  for (const auto& e : entries_) {
    for (int i = 0; i < e.mult; ++i) out.push_back(e.cycle);
  }
  return out;
}

void Cdc::add(const Cycle& c, int mult) {
  entries_.push_back({c, mult});
  normalise();
}

void Cdc::remove(const Cycle& c) {
  for (auto it = entries_.begin(); it != entries_.end(); ++it) {
    if (it->cycle == c) {
      if (--it->mult == 0) entries_.erase(it);
      return;
    }
  }
  throw StructuralError("cycle to remove is not in the cover");
}

CoverageReport verify_cdc(const Graph& g, const Cdc& candidate) {
  if (candidate.edge_universe() != g.edge_count()) throw StructuralError("cover belongs to a different graph");
  CoverageReport r;
  r.coverage.assign(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& e : candidate.entries()) {
    if (!is_cycle(g, e.cycle.edges())) throw StructuralError("cover entry is not a cycle of the graph");
    for (EdgeId id : e.cycle.edges()) r.coverage[static_cast<std::size_t>(id)] += e.mult;
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const int c = r.coverage[static_cast<std::size_t>(id)];
    if (c < 2) r.under.push_back(id);
    if (c > 2) r.over.push_back(id);
  }
  r.ok = r.under.empty() && r.over.empty();
  return r;
}

bool is_cdc(const Graph& g, const Cdc& candidate) { return verify_cdc(g, candidate).ok; }

nlohmann::json cdc_to_json(const Cdc& c) {
  nlohmann::json j;
  j["size"] = c.size();
  j["true"] = c.is_true();
  j["cycles"] = nlohmann::json::array();
  for (const auto& e : c.entries()) {
    nlohmann::json entry;
    entry["edges"] = std::vector<EdgeId>(e.cycle.edges().begin(), e.cycle.edges().end());
    entry["mult"] = e.mult;
    j["cycles"].push_back(entry);
  }
  return j;
}

nlohmann::json cdc_to_json(const Cdc& c, const std::vector<std::string>& case_trace) {
  auto j = cdc_to_json(c);
  j["case_trace"] = case_trace;
  return j;
}

Cdc cdc_from_json(const Graph& g, const nlohmann::json& j) {
  std::vector<CdcEntry> entries;
  for (const auto& item : j.at("cycles")) {
    auto edges = item.at("edges").get<std::vector<EdgeId>>();
    const int mult = item.value("mult", 1);
    entries.push_back({Cycle(g, std::move(edges)), mult});
  }
  return Cdc(g.edge_count(), std::move(entries));
}

}  // namespace cdc
