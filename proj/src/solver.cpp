#include "cdc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cdc {

namespace {

struct Problem {
  const Graph* g = nullptr;
  std::vector<Cycle> cycles;
  std::vector<std::vector<int>> through;  // edge -> indices of cycles using it, ascending
  std::vector<int> forced;                // cycle indices, one per forced copy
  std::vector<std::uint64_t> vmask;       // cycle -> vertex bitmask; empty when n > 64
  int words = 0;                          // 64-bit words per edge bitmask
  std::vector<std::uint64_t> emask;       // cycle c's edges at [c * words, (c + 1) * words)

  const std::uint64_t* edges_of(int c) const { return emask.data() + static_cast<std::size_t>(c) * static_cast<std::size_t>(words); }
  int max_len = 0;
  int min_len = INT_MAX;
  bool coverable = true;  // every edge lies on some cycle
};

int thread_count(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

// size_limit > 0 drops cycles too long to appear in any cover of at most that size.
Problem make_problem(const Graph& g, const SolverOptions& opts, int size_limit = 0) {
  Problem p;
  p.g = &g;
  int max_len = std::max(2, g.vertex_count());
  if (size_limit > 0) {
    const int shortest = girth(g);
    if (shortest > 0) max_len = std::min(max_len, 2 * g.edge_count() - (size_limit - 1) * shortest);
  }
  if (opts.catalog != nullptr) {
    if (opts.catalog->edge_universe != g.edge_count()) throw StructuralError("catalog belongs to a different graph");
    for (const auto& c : opts.catalog->cycles) {
      if (c.length() <= max_len) p.cycles.push_back(c);
    }
  } else if (max_len >= 2) {
    p.cycles = enumerate_cycles(g, 2, max_len, opts.workers).cycles;
  }
  for (const auto& c : opts.forced) {
    if (!is_cycle(g, c.edges())) throw StructuralError("forced cycle is not a cycle of the graph");
    p.cycles.push_back(c);
  }
  std::sort(p.cycles.begin(), p.cycles.end());
  p.cycles.erase(std::unique(p.cycles.begin(), p.cycles.end()), p.cycles.end());
  for (const auto& c : opts.forced) {
    p.forced.push_back(static_cast<int>(std::lower_bound(p.cycles.begin(), p.cycles.end(), c) - p.cycles.begin()));
  }
  p.through.assign(static_cast<std::size_t>(g.edge_count()), {});
  for (int c = 0; c < static_cast<int>(p.cycles.size()); ++c) {
    p.max_len = std::max(p.max_len, p.cycles[static_cast<std::size_t>(c)].length());
    p.min_len = std::min(p.min_len, p.cycles[static_cast<std::size_t>(c)].length());
    for (EdgeId e : p.cycles[static_cast<std::size_t>(c)].edges()) p.through[static_cast<std::size_t>(e)].push_back(c);
  }
  for (const auto& t : p.through) {
    if (t.empty()) p.coverable = false;
  }
  p.words = (g.edge_count() + 63) / 64;
  p.emask.assign(p.cycles.size() * static_cast<std::size_t>(p.words), 0);
  for (std::size_t c = 0; c < p.cycles.size(); ++c) {
    for (EdgeId e : p.cycles[c].edges()) {
      p.emask[c * static_cast<std::size_t>(p.words) + static_cast<std::size_t>(e / 64)] |= std::uint64_t{1} << (e % 64);
    }
  }
  if (g.vertex_count() <= 64) {
    for (const auto& c : p.cycles) {
      std::uint64_t mask = 0;
      for (EdgeId e : c.edges()) mask |= (std::uint64_t{1} << g.edge(e).u) | (std::uint64_t{1} << g.edge(e).v);
      p.vmask.push_back(mask);
    }
  }
  return p;
}

using Path = std::vector<std::pair<int, int>>;  // (cycle index, multiplicity)

class Search {
 public:
  Search(const Problem& p, bool true_only, int size_min, int size_max)
      : p_(p), true_only_(true_only), size_min_(size_min), size_max_(size_max) {
    const Graph& g = *p.g;
    const std::size_t m = static_cast<std::size_t>(g.edge_count());
    cov_.assign(m, 0);
    sat_.assign(static_cast<std::size_t>(p.words), 0);
    half_.assign(static_cast<std::size_t>(p.words), 0);
    mult_.assign(p.cycles.size(), 0);
    vdef_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
      vdef_[static_cast<std::size_t>(e.u)] += 2;
      vdef_[static_cast<std::size_t>(e.v)] += 2;
    }
    deficit_ = 2 * g.edge_count();
    update_tight();
  }

  // False if the forced cycles already overlap too much.
  bool apply_forced() {
    for (int c : p_.forced) {
      if (!can_add(c, 1)) return false;
      add(c, 1);
    }
    base_ = stack_.size();
    return true;
  }

  bool replay(const Path& path) {
    for (auto [c, mult] : path) {
      if (!can_add(c, mult)) return false;
      add(c, mult);
    }
    return true;
  }

  int size() const { return size_; }
  bool is_true() const { return doubles_ == 0; }
  Path path() const { return Path(stack_.begin() + static_cast<std::ptrdiff_t>(base_), stack_.end()); }
  const Path& full_stack() const { return stack_; }

  Cdc to_cdc() const {
    std::vector<CdcEntry> entries;
    for (auto [c, mult] : stack_) entries.push_back({p_.cycles[static_cast<std::size_t>(c)], mult});
    return Cdc(p_.g->edge_count(), std::move(entries));
  }

  void set_cancel(const std::atomic<int>* cancel_below, int task) {
    cancel_ = cancel_below;
    task_ = task;
  }

  int lower_bound() const {
    if (deficit_ == 0) return 0;
    int maxv = 0;
    for (int d : vdef_) maxv = std::max(maxv, d);
    return std::max((deficit_ + p_.max_len - 1) / p_.max_len, (maxv + 1) / 2);
  }

  // Visitor: bool leaf(Search&), void frontier(Search&). Returns false when the search was stopped.
  template <class Visitor>
  bool run(Visitor& vis, int depth_left) {
    if (cancel_ != nullptr && cancel_->load(std::memory_order_relaxed) < task_) return false;
    if (deficit_ == 0) {
      if (size_ >= size_min_ && size_ <= size_max_) return vis.leaf(*this);
      return true;
    }
    if (size_ + lower_bound() > size_max_) return true;
    if (size_ + deficit_ / p_.min_len < size_min_) return true;
    if (depth_left == 0) {
      vis.frontier(*this);
      return true;
    }
    const int e = pick_edge();
    if (e < 0) return true;
    const auto& options = p_.through[static_cast<std::size_t>(e)];
    const int next_depth = depth_left > 0 ? depth_left - 1 : -1;
    if (cov_[static_cast<std::size_t>(e)] == 1) {
      for (int c : options) {
        if (!can_add(c, 1)) continue;
        add(c, 1);
        const bool go = run(vis, next_depth);
        undo();
        if (!go) return false;
      }
      return true;
    }
    for (std::size_t i = 0; i < options.size(); ++i) {
      const int c = options[i];
      if (!can_add(c, 1)) continue;
      if (!true_only_ && can_add(c, 2)) {
        add(c, 2);
        const bool go = run(vis, next_depth);
        undo();
        if (!go) return false;
      }
      add(c, 1);
      for (std::size_t j = i + 1; j < options.size(); ++j) {
        const int c2 = options[j];
        if (!can_add(c2, 1)) continue;
        add(c2, 1);
        const bool go = run(vis, next_depth);
        undo();
        if (!go) {
          undo();
          return false;
        }
      }
      undo();
    }
    return true;
  }

 private:
  bool can_add(int c, int mult) const {
    const auto i = static_cast<std::size_t>(c);
    // Size accounting: the rest of the deficit must still fit between size_min and size_max.
    const int rest = deficit_ - mult * p_.cycles[i].length();
    const int after = size_ + mult;
    if (rest < 0) return false;
    if (after + (rest + p_.max_len - 1) / p_.max_len > size_max_) return false;
    if (after + rest / p_.min_len < size_min_) return false;
    if (mult_[i] + mult > 2) return false;
    if (true_only_ && mult_[i] + mult > 1) return false;
    // a vertex with slack below mult cannot afford another cycle that misses it
    if (!p_.vmask.empty() && (tight_[mult - 1] & ~p_.vmask[i]) != 0) return false;
    const std::uint64_t* em = p_.edges_of(c);
    for (std::size_t w = 0; w < sat_.size(); ++w) {
      const std::uint64_t used = mult == 1 ? sat_[w] : sat_[w] | half_[w];
      if (em[w] & used) return false;
    }
    return true;
  }

  bool meets_saturated(int c) const {
    const std::uint64_t* em = p_.edges_of(c);
    if (p_.words == 1) return (em[0] & sat_[0]) != 0;
    for (std::size_t w = 0; w < sat_.size(); ++w) {
      if (em[w] & sat_[w]) return true;
    }
    return false;
  }

  // tight_[j]: vertices whose remaining cycle budget exceeds what they still need by at most j.
  void update_tight() {
    tight_[0] = tight_[1] = 0;
    if (p_.vmask.empty() || size_max_ == INT_MAX) return;
    const int budget = size_max_ - size_;
    for (std::size_t v = 0; v < vdef_.size(); ++v) {
      const int slack = budget - vdef_[v] / 2;
      if (slack < 1) tight_[0] |= std::uint64_t{1} << v;
      if (slack < 2) tight_[1] |= std::uint64_t{1} << v;
    }
  }

  // Unsaturated edge with the fewest ways to finish it; -1 if some edge cannot be finished.
  int pick_edge() const {
    int best = -1;
    long long best_score = LLONG_MAX;
    for (std::size_t e = 0; e < cov_.size(); ++e) {
      if (cov_[e] == 2) continue;
      const bool single = cov_[e] == 1;
      const auto score_of = [&](long long l) { return single ? l : l * (l - 1) / 2 + (true_only_ ? 0 : l); };
      // live cycles through e, counted only while e can still beat the best edge so far
      long long l = 0;
      bool beaten = false;
      for (int c : p_.through[e]) {
        if (meets_saturated(c)) continue;
        if (score_of(++l) >= best_score) {
          beaten = true;
          break;
        }
      }
      if (beaten) continue;
      const long long score = score_of(l);
      if (score == 0) return -1;
      if (score < best_score) {
        best_score = score;
        best = static_cast<int>(e);
      }
    }
    return best;
  }

  void add(int c, int mult) {
    const auto& cyc = p_.cycles[static_cast<std::size_t>(c)];
    for (EdgeId f : cyc.edges()) {
      const auto fi = static_cast<std::size_t>(f);
      cov_[fi] += mult;
      const Edge& ed = p_.g->edge(f);
      vdef_[static_cast<std::size_t>(ed.u)] -= mult;
      vdef_[static_cast<std::size_t>(ed.v)] -= mult;
      const std::size_t w = fi / 64;
      const std::uint64_t bit = std::uint64_t{1} << (fi % 64);
      if (cov_[fi] == 1) {
        half_[w] |= bit;
      } else {
        half_[w] &= ~bit;
        sat_[w] |= bit;
      }
    }
    deficit_ -= mult * cyc.length();
    size_ += mult;
    const auto ci = static_cast<std::size_t>(c);
    if (mult_[ci] < 2 && mult_[ci] + mult == 2) ++doubles_;
    mult_[ci] += mult;
    stack_.emplace_back(c, mult);
    update_tight();
  }

  void undo() {
    const auto [c, mult] = stack_.back();
    stack_.pop_back();
    const auto ci = static_cast<std::size_t>(c);
    if (mult_[ci] == 2) --doubles_;
    mult_[ci] -= mult;
    const auto& cyc = p_.cycles[ci];
    for (EdgeId f : cyc.edges()) {
      const auto fi = static_cast<std::size_t>(f);
      const std::size_t w = fi / 64;
      const std::uint64_t bit = std::uint64_t{1} << (fi % 64);
      if (cov_[fi] == 2) {
        sat_[w] &= ~bit;
      }
      cov_[fi] -= mult;
      if (cov_[fi] == 1) {
        half_[w] |= bit;
      } else {
        half_[w] &= ~bit;
      }
      const Edge& ed = p_.g->edge(f);
      vdef_[static_cast<std::size_t>(ed.u)] += mult;
      vdef_[static_cast<std::size_t>(ed.v)] += mult;
    }
    deficit_ += mult * cyc.length();
    size_ -= mult;
    update_tight();
  }

  const Problem& p_;
  bool true_only_;
  int size_min_;
  int size_max_;
  std::vector<int> cov_, mult_, vdef_;
  std::vector<std::uint64_t> sat_, half_;  // edges covered twice / once
  std::uint64_t tight_[2] = {0, 0};
  int deficit_ = 0;
  int size_ = 0;
  int doubles_ = 0;
  Path stack_;
  std::size_t base_ = 0;
  const std::atomic<int>* cancel_ = nullptr;
  int task_ = 0;
};

struct FrontierVisitor {
  std::vector<Path> tasks;
  bool leaf(Search& s) {
    tasks.push_back(s.path());
    return true;
  }
  void frontier(Search& s) { tasks.push_back(s.path()); }
};

struct CountVisitor {
  std::vector<long long> all, tru;
  explicit CountVisitor(int max_size) : all(static_cast<std::size_t>(max_size + 1), 0), tru(all) {}
  bool leaf(Search& s) {
    ++all[static_cast<std::size_t>(s.size())];
    if (s.is_true()) ++tru[static_cast<std::size_t>(s.size())];
    return true;
  }
  void frontier(Search&) {}
};

struct CollectVisitor {
  std::vector<Cdc> out;
  bool leaf(Search& s) {
    out.push_back(s.to_cdc());
    return true;
  }
  void frontier(Search&) {}
};

struct FirstVisitor {
  std::optional<Cdc> found;
  std::atomic<int>* best_task = nullptr;
  int task = 0;
  bool leaf(Search& s) {
    found = s.to_cdc();
    if (best_task != nullptr) {
      int cur = best_task->load();
      while (task < cur && !best_task->compare_exchange_weak(cur, task)) {
      }
    }
    return false;
  }
  void frontier(Search&) {}
};

// Splits the search into ordered subtrees; running them in order reproduces the serial search order.
std::vector<Path> make_tasks(const Problem& p, bool true_only, int size_min, int size_max, int threads) {
  const std::size_t target = static_cast<std::size_t>(32 * threads);
  std::vector<Path> tasks;
  for (int depth = 1; depth <= 8; ++depth) {
    Search s(p, true_only, size_min, size_max);
    if (!s.apply_forced()) return {};
    FrontierVisitor fv;
    s.run(fv, depth);
    const bool grew = fv.tasks.size() > tasks.size();
    tasks = std::move(fv.tasks);
    if (tasks.size() >= target || !grew) break;
  }
  return tasks;
}

// Runs `make_visitor(task_index)` over every task; returns visitors in task order.
template <class Visitor, class MakeVisitor>
std::vector<Visitor> run_tasks(const Problem& p, bool true_only, int size_min, int size_max, int workers,
                               MakeVisitor make_visitor, std::atomic<int>* cancel = nullptr) {
  const int threads = thread_count(workers);
  std::vector<Visitor> visitors;
  if (threads <= 1) {
    visitors.push_back(make_visitor(0));
    Search s(p, true_only, size_min, size_max);
    if (s.apply_forced()) s.run(visitors.back(), -1);
    return visitors;
  }
  const auto tasks = make_tasks(p, true_only, size_min, size_max, threads);
  for (int t = 0; t < static_cast<int>(tasks.size()); ++t) visitors.push_back(make_visitor(t));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (int t = 0; t < static_cast<int>(tasks.size()); ++t) {
    if (cancel != nullptr && cancel->load() < t) continue;
    Search s(p, true_only, size_min, size_max);
    s.set_cancel(cancel, t);
    if (!s.apply_forced() || !s.replay(tasks[static_cast<std::size_t>(t)])) continue;
    s.run(visitors[static_cast<std::size_t>(t)], -1);
  }
  return visitors;
}

std::optional<Cdc> first_cdc(const Problem& p, bool true_only, int size_min, int size_max, int workers) {
  std::atomic<int> best{INT_MAX};
  auto visitors = run_tasks<FirstVisitor>(
      p, true_only, size_min, size_max, workers,
      [&](int t) {
        FirstVisitor v;
        v.best_task = &best;
        v.task = t;
        return v;
      },
      &best);
  for (auto& v : visitors) {
    if (v.found) return v.found;
  }
  return std::nullopt;
}

int initial_bound(const Problem& p) {
  Search s(p, false, 0, INT_MAX);
  if (!s.apply_forced()) return INT_MAX;
  return s.size() + s.lower_bound();
}

int size_cap(const Graph& g, const Problem& p) {
  if (p.cycles.empty()) return 0;
  return (2 * g.edge_count()) / p.min_len;
}

}  // namespace

std::optional<MinCdcResult> min_cdc(const Graph& g, bool true_only, const SolverOptions& opts) {
  if (g.edge_count() == 0) return MinCdcResult{0, Cdc(0)};
  const Problem p = make_problem(g, opts);
  if (!p.coverable) return std::nullopt;
  const int cap = size_cap(g, p) + static_cast<int>(p.forced.size());
  for (int k = initial_bound(p); k <= cap; ++k) {
    if (auto found = first_cdc(p, true_only, k, k, opts.workers)) return MinCdcResult{k, std::move(*found)};
  }
  return std::nullopt;
}

long long count_cdcs(const Graph& g, int k, bool true_only, const SolverOptions& opts) {
  if (k < 0) return 0;
  if (g.edge_count() == 0) return k == 0 ? 1 : 0;
  const Problem p = make_problem(g, opts, k);
  if (!p.coverable) return 0;
  auto visitors = run_tasks<CountVisitor>(p, true_only, k, k, opts.workers, [&](int) { return CountVisitor(k); });
  long long total = 0;
  for (const auto& v : visitors) total += true_only ? v.tru[static_cast<std::size_t>(k)] : v.all[static_cast<std::size_t>(k)];
  return total;
}

long long count_cdcs_serial(const Graph& g, int k, bool true_only, const SolverOptions& opts) {
  SolverOptions serial = opts;
  serial.workers = 1;
  return count_cdcs(g, k, true_only, serial);
}

CdcCensus cdc_census(const Graph& g, int max_size, const SolverOptions& opts) {
  CdcCensus census;
  if (g.edge_count() == 0) {
    census.counts[0] = {1, 1};
    census.min_size = 0;
    census.min_true_size = 0;
    return census;
  }
  const Problem p = make_problem(g, opts);
  if (!p.coverable || max_size < 0) return census;
  auto visitors = run_tasks<CountVisitor>(p, false, 0, max_size, opts.workers,
                                          [&](int) { return CountVisitor(max_size); });
  for (int k = 0; k <= max_size; ++k) {
    long long all = 0, tru = 0;
    for (const auto& v : visitors) {
      all += v.all[static_cast<std::size_t>(k)];
      tru += v.tru[static_cast<std::size_t>(k)];
    }
    if (all == 0) continue;
    census.counts[k] = {all, tru};
    if (!census.min_size) census.min_size = k;
    if (tru > 0 && !census.min_true_size) census.min_true_size = k;
  }
  return census;
}

std::vector<Cdc> enumerate_cdcs(const Graph& g, int max_size, const SolverOptions& opts) {
  if (g.edge_count() == 0) return {Cdc(0)};
  const Problem p = make_problem(g, opts);
  if (!p.coverable) return {};
  auto visitors = run_tasks<CollectVisitor>(p, false, 0, max_size, opts.workers, [](int) { return CollectVisitor{}; });
  std::vector<Cdc> out;
  for (auto& v : visitors) {
    for (auto& c : v.out) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_cdc(const Graph& g, int max_size, bool true_only, const std::function<bool(const Cdc&)>& visit,
                  const SolverOptions& opts) {
  struct StreamVisitor {
    const std::function<bool(const Cdc&)>* visit;
    bool leaf(Search& s) { return (*visit)(s.to_cdc()); }
    void frontier(Search&) {}
  };
  if (g.edge_count() == 0) {
    visit(Cdc(0));
    return;
  }
  const Problem p = make_problem(g, opts);
  if (!p.coverable) return;
  Search s(p, true_only, 0, max_size);
  if (!s.apply_forced()) return;
  StreamVisitor v{&visit};
  s.run(v, -1);
}

std::optional<Cdc> find_cdc(const Graph& g, int max_size, bool true_only, const SolverOptions& opts) {
  if (g.edge_count() == 0) return Cdc(0);
  const Problem p = make_problem(g, opts);
  if (!p.coverable) return std::nullopt;
  return first_cdc(p, true_only, 0, max_size, opts.workers);
}

}  // namespace cdc
