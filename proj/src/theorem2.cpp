#include <algorithm>
#include <string>

#include "cdc/constructions.hpp"
#include "cdc/families.hpp"

namespace cdc {

namespace {

void require_cdc(const Graph& g, const Cdc& c, const char* what) {
  if (!verify_cdc(g, c).ok) throw InternalAssertion(std::string(what) + ": result is not a CDC");
}

}  // namespace

std::vector<Cdc> antiprism_three_cdcs(int k) {
  const AntiprismLayout a = gen_antiprism(k);
  const Graph& g = a.graph();
  const int m = g.edge_count();
  const int n = 2 * k;

  std::vector<CdcEntry> all{{a.inner, 1}, {a.outer, 1}};
  std::vector<CdcEntry> odd{{a.outer, 2}};
  std::vector<CdcEntry> even{{a.inner, 2}};
  for (int i = 0; i < n; ++i) {
    const Cycle& t = a.triangles[static_cast<std::size_t>(i)];
    all.push_back({t, 1});
    // 1-based position i+1: odd positions carry an inner edge, so the outer cycle fills in
    ((i % 2 == 0) ? odd : even).push_back({t, 2});
  }
  std::vector<Cdc> out{Cdc(m, all), Cdc(m, odd), Cdc(m, even)};
  for (const Cdc& c : out) {
    require_cdc(g, c, "antiprism_three_cdcs");
    if (c.size() != n + 2) throw InternalAssertion("antiprism_three_cdcs: wrong size");
  }
  return out;
}

std::vector<Cdc> theorem2_enumerate_fcdcs(int k, int l) {
  const Theorem2Graph t = gen_theorem2_graph(k, l);
  const Graph& g = t.graph;
  const int m = g.edge_count();
  std::vector<Cdc> out;

  for (int c0 = 0; c0 < l; ++c0) {
    for (int c1 = c0; c1 < l; ++c1) {
      std::vector<int> cover(static_cast<std::size_t>(m), 0);
      std::vector<CdcEntry> entries;
      auto take = [&](const Cycle& c, int mult) {
        if (mult == 0) return;
        if (mult < 0 || mult > 2) throw InternalAssertion("theorem2_enumerate_fcdcs: forced multiplicity out of range");
        for (EdgeId e : c.edges()) cover[static_cast<std::size_t>(e)] += mult;
        entries.push_back({c, mult});
      };
      if (c0 == c1) {
        take(t.level_cycle(c0), 2);
      } else {
        take(t.level_cycle(c0), 1);
        take(t.level_cycle(c1), 1);
      }
      for (int b = 0; b + 1 < l; ++b) {
        for (int j = 0; j < k; ++j) {
          const int deficit = 2 - cover[static_cast<std::size_t>(t.edge(b, j, b, j + 1))];
          take(t.triangle(b, 0, j), deficit);
          take(t.triangle(b, 1, j), 2 - deficit);
        }
      }
      Cdc c(m, entries);
      require_cdc(g, c, "theorem2_enumerate_fcdcs");
      if (c.size() != t.face_total()) throw InternalAssertion("theorem2_enumerate_fcdcs: wrong size");
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cdc
