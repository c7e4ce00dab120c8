// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <iostream>

#include "geodlab/lab/acceptance.hpp"

int main() {
  geodlab::lab::AcceptanceOptions options;
  options.on_result = [](const geodlab::lab::CriterionResult& r) {
    std::cout << geodlab::lab::format_result(r) << std::endl;
  };
  const auto results = geodlab::lab::run_acceptance(options);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
