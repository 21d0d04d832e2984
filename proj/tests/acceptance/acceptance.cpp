// One line per acceptance criterion. Arguments: optional criterion ids to run (default all).
#include <cstdlib>
#include <iostream>
#include <string>

#include "cdc/harness.hpp"

int main(int argc, char** argv) {
  cdc::AcceptanceOptions opts;
  opts.data_dir = CDC_TEST_DATA;
  if (const char* w = std::getenv("CDC_WORKERS")) opts.workers = std::atoi(w);
  for (int i = 1; i < argc; ++i) opts.only.push_back(std::stoi(argv[i]));
  opts.on_result = [](const cdc::CriterionResult& r) { std::cout << cdc::format_result(r) << std::endl; };
  bool ok = true;
  for (const auto& r : cdc::run_acceptance(opts)) ok = ok && r.pass;
  std::cout << (ok ? "all criteria pass" : "some criteria FAIL") << std::endl;
  return ok ? 0 : 1;
}
