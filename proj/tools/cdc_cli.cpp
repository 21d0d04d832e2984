#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdc/constructions.hpp"
#include "cdc/families.hpp"
#include "cdc/graph_io.hpp"
#include "cdc/harness.hpp"
#include "cdc/solver.hpp"

using namespace cdc;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyParams {
  int k = 4;
  int l = 2;
  int n = 0;
  int t = 1;
  int pattern = 0;
};

struct Item {
  Graph graph;
  std::optional<PlaneEmbedding> embedding;
};

struct Job {
  std::string input;
  std::string graph6;
  std::string family;
  FamilyParams params;
  std::string out;
  int workers = 0;
  bool true_only = false;
};

Item make_family(const std::string& name, const FamilyParams& p) {
  auto need_n = [&](int fallback) { return p.n > 0 ? p.n : fallback; };
  Item it;
  if (name == "antiprism") {
    auto a = gen_antiprism(p.k);
    it.graph = a.graph();
    it.embedding = a.embedding();
  } else if (name == "theorem2" || name == "nested") {
    auto t = gen_theorem2_graph(p.k, p.l);
    it.graph = t.graph;
    it.embedding = t.embedding;
  } else if (name == "complete") {
    it.graph = complete_graph(need_n(4));
  } else if (name == "cycle") {
    it.graph = cycle_graph(need_n(3));
  } else if (name == "petersen") {
    it.graph = petersen_graph();
  } else if (name == "prism") {
    it.graph = prism_graph(need_n(6));
  } else if (name == "cube") {
    it.graph = cube_graph();
  } else if (name == "ladder") {
    it.graph = ladder_graph(need_n(8));
  } else if (name == "double-wheel") {
    it.graph = double_wheel(need_n(6));
  } else if (name == "octahedron") {
    it.graph = octahedron_graph();
  } else if (name == "icosahedron") {
    it.graph = icosahedron_graph();
  } else if (name == "dodecahedron") {
    it.graph = dodecahedron_graph();
  } else if (name == "stacked") {
    it.graph = stacked_triangulation(need_n(7), p.pattern);
  } else if (name == "petersen-chain") {
    it.graph = petersen_chain(p.t);
  } else {
    throw UsageError("unknown family '" + name + "'");
  }
  if (!it.embedding) it.embedding = planar_embed(it.graph);
  return it;
}

// Graph lines, each optionally followed by an embedding JSON line; the embedding's edge order wins.
std::vector<Item> read_items(std::istream& in) {
  std::vector<Item> items;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] == '{') {
      if (items.empty()) throw FormatError("embedding JSON before any graph line");
      PlaneEmbedding e = embedding_from_json(json::parse(line));
      items.back().graph = e.graph();
      items.back().embedding = std::move(e);
      continue;
    }
    items.push_back({parse_graph_line(line), std::nullopt});
  }
  return items;
}

std::vector<Item> load_inputs(const Job& job) {
  const int sources = !job.input.empty() + !job.graph6.empty() + !job.family.empty();
  if (sources != 1) throw UsageError("give exactly one of --input, --graph6, --family");
  if (!job.family.empty()) return {make_family(job.family, job.params)};
  if (!job.graph6.empty()) {
    std::istringstream in(job.graph6);
    return read_items(in);
  }
  if (job.input == "-") return read_items(std::cin);
  std::ifstream in(job.input);
  if (!in) throw UsageError("cannot open " + job.input);
  return read_items(in);
}

const PlaneEmbedding& embedding_of(Item& it) {
  if (!it.embedding) it.embedding = planar_embed(it.graph);
  if (!it.embedding) throw PreconditionError("graph is not planar");
  return *it.embedding;
}

json graph_fields(const Graph& g) {
  json j;
  j["graph6"] = to_graph_line(g);
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j;
}

json with_graph(const Graph& g, const json& body) {
  json j = graph_fields(g);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

json none_for(const Graph& g) {
  json j = graph_fields(g);
  j["result"] = "none";
  return j;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

SolverOptions solver_options(const Job& job) {
  SolverOptions s;
  s.workers = job.workers;
  return s;
}

void add_input_options(CLI::App* sub, Job& job, bool k_is_family_param = true) {
  sub->add_option("--input,-i", job.input, "graph6/sparse6 file ('-' for stdin)");
  sub->add_option("--graph6", job.graph6, "a single graph6/sparse6 string");
  sub->add_option("--family", job.family, "generate the input graph from a family");
  sub->add_option(k_is_family_param ? "--k" : "--family-k", job.params.k, "family parameter k");
  sub->add_option("--l", job.params.l, "family parameter l");
  sub->add_option("--n", job.params.n, "family order n");
  sub->add_option("--t", job.params.t, "petersen-chain length");
  sub->add_option("--pattern", job.params.pattern, "stacked triangulation pattern (0 or 1)");
  sub->add_option("--out,-o", job.out, "output file (default stdout)");
  sub->add_option("--workers,-w", job.workers, "worker threads (0: OpenMP default); CDC_WORKERS overrides");
}

Cycle pick_hamiltonian(const Graph& g, int index) {
  const auto hams = enumerate_hamiltonian(g);
  if (index < 0 || index >= static_cast<int>(hams.size())) {
    throw PreconditionError("no Hamiltonian cycle with index " + std::to_string(index));
  }
  return hams[static_cast<std::size_t>(index)];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle double cover toolkit"};
  app.require_subcommand(1);
  Job job;

  auto* gen = app.add_subcommand("gen", "generate a family member: graph line, then embedding JSON");
  std::string gen_family;
  gen->add_option("family", gen_family, "antiprism, theorem2, complete, cycle, petersen, prism, cube, ladder, "
                                        "double-wheel, octahedron, icosahedron, dodecahedron, stacked, petersen-chain")
      ->required();
  gen->add_option("--k", job.params.k, "family parameter k");
  gen->add_option("--l", job.params.l, "family parameter l");
  gen->add_option("--n", job.params.n, "family order n");
  gen->add_option("--t", job.params.t, "petersen-chain length");
  gen->add_option("--pattern", job.params.pattern, "stacked triangulation pattern");
  gen->add_option("--out,-o", job.out, "output file (default stdout)");
  bool gen_no_embedding = false;
  gen->add_flag("--no-embedding", gen_no_embedding, "omit the embedding JSON line");

  auto* mincdc = app.add_subcommand("mincdc", "minimum CDC of each input graph");
  add_input_options(mincdc, job);
  mincdc->add_flag("--true", job.true_only, "minimum true CDC");

  auto* count = app.add_subcommand("count", "number of k-CDCs of each input graph");
  add_input_options(count, job, false);
  std::string size_expr = "n";
  count->add_option("--k", size_expr, "k as an integer or n+c / n-c")->required();
  count->add_flag("--true", job.true_only, "count true CDCs only");

  auto* enumerate = app.add_subcommand("enumerate", "all CDCs up to a size, canonical order");
  add_input_options(enumerate, job);
  std::string max_expr = "n";
  enumerate->add_option("--max-size", max_expr, "largest size, integer or n+c / n-c")->required();
  enumerate->add_flag("--true", job.true_only, "true CDCs only");

  auto* construct = app.add_subcommand("construct", "run a constructor");
  add_input_options(construct, job);
  std::string which;
  construct->add_option("constructor", which,
                        "face, cubic-half, seyffarth, triangulation, three-even, antiprism-three, nested-fcdcs, join")
      ->required();
  int ham_index = 0;
  int vertex = -1;
  construct->add_option("--ham", ham_index, "index of the Hamiltonian cycle (enumeration order)");
  construct->add_option("--vertex", vertex, "vertex of degree 4 or 5 (seyffarth); default the first one");

  auto* verify = app.add_subcommand("verify", "check CDC JSON lines");
  add_input_options(verify, job);
  std::string cdc_file;
  verify->add_option("--cdc", cdc_file, "file of CDC JSON lines")->required();

  auto* table = app.add_subcommand("table", "fold a statistic over a graph file, CSV");
  add_input_options(table, job);
  std::string stat = "max-mincdc";
  std::string graph_class = "all";
  std::string table_k = "n";
  table->add_option("--stat", stat, "max-/min- of mincdc, mincdc-true, defect, count");
  table->add_option("--class", graph_class, "class filter, e.g. cubic-2conn, planar-4conn");
  table->add_option("--size", table_k, "k for the count statistic");

  auto* defect_cmd = app.add_subcommand("defect", "exact defect of each input graph");
  add_input_options(defect_cmd, job);

  auto* selfcheck = app.add_subcommand("selfcheck", "run the acceptance criteria");
  std::string data_dir = CDC_DEFAULT_DATA;
  std::vector<int> only;
  selfcheck->add_option("--data", data_dir, "directory with the graph6 corpus");
  selfcheck->add_option("--only", only, "criterion ids");
  selfcheck->add_option("--workers,-w", job.workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (const char* w = std::getenv("CDC_WORKERS")) job.workers = std::atoi(w);

  try {
    if (gen->parsed()) {
      Output out(job.out);
      const Item it = make_family(gen_family, job.params);
      out.os() << to_graph_line(it.graph) << '\n';
      if (!gen_no_embedding && it.embedding) out.os() << embedding_to_json(*it.embedding).dump() << '\n';
      return 0;
    }
    if (selfcheck->parsed()) {
      AcceptanceOptions opts;
      opts.data_dir = data_dir;
      opts.workers = job.workers;
      opts.only = only;
      opts.on_result = [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; };
      bool ok = true;
      for (const auto& r : run_acceptance(opts)) ok = ok && r.pass;
      return ok ? 0 : 1;
    }

    const bool have_input = !job.input.empty() || !job.graph6.empty() || !job.family.empty();
    auto items = verify->parsed() && !have_input ? std::vector<Item>{} : load_inputs(job);
    Output out(job.out);
    const SolverOptions so = solver_options(job);

    if (mincdc->parsed()) {
      for (const Item& it : items) {
        const auto r = min_cdc(it.graph, job.true_only, so);
        out.os() << (r ? with_graph(it.graph, cdc_to_json(r->witness)) : none_for(it.graph)).dump() << '\n';
      }
    } else if (count->parsed()) {
      for (const Item& it : items) {
        const int k = eval_size_expr(size_expr, it.graph.vertex_count());
        json j = graph_fields(it.graph);
        j["k"] = k;
        j["true_only"] = job.true_only;
        j["count"] = count_cdcs(it.graph, k, job.true_only, so);
        out.os() << j.dump() << '\n';
      }
    } else if (enumerate->parsed()) {
      for (const Item& it : items) {
        const int cap = eval_size_expr(max_expr, it.graph.vertex_count());
        for (const Cdc& c : enumerate_cdcs(it.graph, cap, so)) {
          if (job.true_only && !c.is_true()) continue;
          out.os() << with_graph(it.graph, cdc_to_json(c)).dump() << '\n';
        }
      }
    } else if (construct->parsed()) {
      if (which == "join") {
        if (items.size() != 2) throw UsageError("join needs exactly two input graphs");
        const Graph& g = items[0].graph;
        const Graph& h = items[1].graph;
        const JoinResult jr = join_equiv(g, 0, h, 0);
        const auto cg = min_cdc(g, false, so);
        const auto ch = min_cdc(h, false, so);
        if (!cg || !ch) throw PreconditionError("join: an input graph has no CDC");
        const Cdc c = join_cdc(jr, g, cg->witness, 0, h, ch->witness, 0);
        out.os() << with_graph(jr.graph, cdc_to_json(c, {"join"})).dump() << '\n';
        return 0;
      }
      if (which == "antiprism-three") {
        if (job.family != "antiprism") throw UsageError("antiprism-three needs --family antiprism --k K");
        for (const Cdc& c : antiprism_three_cdcs(job.params.k)) {
          out.os() << with_graph(items[0].graph, cdc_to_json(c, {"antiprism-three"})).dump() << '\n';
        }
        return 0;
      }
      if (which == "nested-fcdcs") {
        if (job.family != "theorem2" && job.family != "nested") {
          throw UsageError("nested-fcdcs needs --family nested --k K --l L");
        }
        for (const Cdc& c : theorem2_enumerate_fcdcs(job.params.k, job.params.l)) {
          out.os() << with_graph(items[0].graph, cdc_to_json(c, {"nested-fcdc"})).dump() << '\n';
        }
        return 0;
      }
      for (Item& it : items) {
        const Graph& g = it.graph;
        if (which == "face") {
          out.os() << with_graph(g, cdc_to_json(face_boundary_cdc(embedding_of(it)), {"face-boundaries"})).dump()
                   << '\n';
        } else if (which == "cubic-half") {
          const ConstructedCdc r = cubic_planar_half_cdc(embedding_of(it));
          out.os() << with_graph(g, cdc_to_json(r.cdc, r.case_trace)).dump() << '\n';
        } else if (which == "seyffarth") {
          Vertex v = vertex;
          for (Vertex x = 0; v < 0 && x < g.vertex_count(); ++x) {
            if (g.degree(x) == 4 || g.degree(x) == 5) v = x;
          }
          if (v < 0) throw PreconditionError("seyffarth: no vertex of degree 4 or 5");
          const ConstructedCdc r = seyffarth_small_cdc(embedding_of(it), pick_hamiltonian(g, ham_index), v);
          out.os() << with_graph(g, cdc_to_json(r.cdc, r.case_trace)).dump() << '\n';
        } else if (which == "triangulation") {
          const ConstructedCdc r = triangulation_cdc_from_pieces(
              embedding_of(it), [&](const Graph& piece) { return min_cdc(piece, false, so)->witness; });
          out.os() << with_graph(g, cdc_to_json(r.cdc, r.case_trace)).dump() << '\n';
        } else if (which == "three-even") {
          const auto subs = hamiltonian_three_even_cover(g, pick_hamiltonian(g, ham_index));
          json j = graph_fields(g);
          j["even_subgraphs"] = json::array();
          for (const EdgeSet& s : subs) j["even_subgraphs"].push_back(s.ids());
          out.os() << j.dump() << '\n';
        } else {
          throw UsageError("unknown constructor '" + which + "'");
        }
      }
    } else if (verify->parsed()) {
      std::ifstream in(cdc_file);
      if (!in) throw UsageError("cannot open " + cdc_file);
      std::string line;
      bool all_ok = true;
      std::size_t index = 0;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const json j = json::parse(line);
        json report;
        if (j.value("result", "") == "none") {
          report["ok"] = nullptr;
          report["result"] = "none";
          out.os() << report.dump() << '\n';
          ++index;
          continue;
        }
        // the line's own edge list fixes edge ids; otherwise the input graph in the same position
        Graph g;
        if (j.contains("edges") && j.contains("n")) {
          std::vector<std::pair<int, int>> pairs;
          for (const auto& e : j.at("edges")) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
          g = build_graph(j.at("n").get<int>(), pairs, true);
        } else {
          if (items.empty()) throw UsageError("CDC line without edges needs an input graph");
          g = items.at(std::min(index, items.size() - 1)).graph;
        }
        try {
          const Cdc c = cdc_from_json(g, j);
          const CoverageReport rep = verify_cdc(g, c);
          report["ok"] = rep.ok;
          report["size"] = c.size();
          report["under"] = rep.under;
          report["over"] = rep.over;
        } catch (const StructuralError& e) {
          report["ok"] = false;
          report["error"] = e.what();
        }
        all_ok = all_ok && report["ok"].get<bool>();
        out.os() << report.dump() << '\n';
        ++index;
      }
      return all_ok ? 0 : 1;
    } else if (table->parsed()) {
      std::vector<Graph> graphs;
      for (const Item& it : items) graphs.push_back(it.graph);
      out.os() << table_csv(fold_table(graphs, graph_class, stat, table_k, job.workers));
    } else if (defect_cmd->parsed()) {
      for (const Item& it : items) {
        const auto d = defect(it.graph, job.workers);
        json j = graph_fields(it.graph);
        if (d) {
          j["defect"] = d->to_string();
        } else {
          j["result"] = "none";
        }
        out.os() << j.dump() << '\n';
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
