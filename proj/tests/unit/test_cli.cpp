#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + CDC_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<nlohmann::json> json_lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("cdc_cli_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("cli: antiprism count example") {
  const Run r = run("count --family antiprism --family-k 4 --k n+2");
  REQUIRE(r.status == 0);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].at("count") == 3);
  CHECK(lines[0].at("n") == 8);
}

TEST_CASE("cli: gen writes a graph line and an embedding the other commands accept") {
  const Run g = run("gen antiprism --k 5");
  REQUIRE(g.status == 0);
  const std::string file = temp_file("gen.txt", g.out);
  const Run c = run("count --input " + file + " --k n+2 --true");
  REQUIRE(c.status == 0);
  CHECK(json_lines(c.out).at(0).at("count") == 1);
}

TEST_CASE("cli: table over the cubic n = 10 corpus") {
  const Run r = run("table --input " + oracle::data("cubic_2conn_n10.g6") + " --stat max-mincdc --class cubic-2conn");
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "class,n,stat,value,witness");
  CHECK(row.rfind("cubic-2conn,10,max-mincdc,5,", 0) == 0);
}

TEST_CASE("cli: output is identical for one and several workers") {
  const std::vector<std::string> cmds{
      "mincdc --input " + oracle::data("planar_4conn_n8.g6"),
      "enumerate --family octahedron --max-size 5",
      "count --input " + oracle::data("cubic_planar_2conn_n12.g6") + " --k 6",
      "construct cubic-half --input " + oracle::data("cubic_planar_2conn_n12.g6"),
      "table --input " + oracle::data("cubic_2conn_n10.g6") + " --stat min-mincdc",
  };
  for (const std::string& c : cmds) {
    const Run one = run(c, "CDC_WORKERS=1");
    const Run three = run(c, "CDC_WORKERS=3");
    CHECK(one.status == 0);
    CHECK(one.out == three.out);
    CHECK_FALSE(one.out.empty());
  }
}

TEST_CASE("cli: constructed and minimum CDCs verify") {
  const std::vector<std::string> cmds{
      "construct seyffarth --input " + oracle::data("planar_4conn_n9.g6") + " --ham 2",
      "construct triangulation --family stacked --n 9 --pattern 1",
      "construct antiprism-three --family antiprism --k 6",
      "construct nested-fcdcs --family nested --k 3 --l 3",
      "mincdc --family petersen",
  };
  for (const std::string& c : cmds) {
    const Run r = run(c);
    REQUIRE(r.status == 0);
    const std::string file = temp_file("verify.jsonl", r.out);
    const Run v = run("verify --cdc " + file);
    CHECK(v.status == 0);
    for (const auto& j : json_lines(v.out)) CHECK(j.at("ok") == true);
  }
}

TEST_CASE("cli: three even subgraphs cover every edge twice") {
  const Run r = run("construct three-even --family double-wheel --n 7");
  REQUIRE(r.status == 0);
  const auto j = json_lines(r.out).at(0);
  std::vector<int> cover(j.at("edges").size(), 0);
  REQUIRE(j.at("even_subgraphs").size() == 3);
  for (const auto& s : j.at("even_subgraphs")) {
    std::vector<int> deg(j.at("n").get<std::size_t>(), 0);
    for (int e : s) {
      ++cover[static_cast<std::size_t>(e)];
      for (int v : j.at("edges")[static_cast<std::size_t>(e)]) ++deg[static_cast<std::size_t>(v)];
    }
    for (int d : deg) CHECK(d % 2 == 0);
  }
  for (int c : cover) CHECK(c == 2);
}

TEST_CASE("cli: broken CDC fails verification") {
  Run r = run("mincdc --family complete --n 4");
  REQUIRE(r.status == 0);
  auto j = json_lines(r.out).at(0);
  j["cycles"].erase(j["cycles"].begin());
  const Run v = run("verify --cdc " + temp_file("bad.jsonl", j.dump() + "\n"));
  CHECK(v.status == 1);
  CHECK(json_lines(v.out).at(0).at("ok") == false);
}

TEST_CASE("cli: infeasible requests and usage errors") {
  const Run none = run("mincdc --graph6 Bg");  // a path has no cover
  CHECK(none.status == 0);
  CHECK(json_lines(none.out).at(0).at("result") == "none");
  CHECK(run("count --family antiprism --family-k 4").status == 2);
  CHECK(run("mincdc").status == 2);
  CHECK(run("nonsense").status == 2);
  CHECK(run("mincdc --family antiprism --k 4 --graph6 C~").status == 2);
  CHECK(run("mincdc --graph6 '%%%'").status == 1);
}
