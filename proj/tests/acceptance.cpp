// Runs the acceptance criteria and prints one line per criterion.
#include <cstdlib>
#include <iostream>

#include "qcenter/battery.hpp"

int main(int argc, char** argv) {
  qcenter::BatteryOptions opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
  opts.on_result = [](const qcenter::CriterionResult& c) { std::cout << qcenter::format_result(c) << std::endl; };
  auto results = qcenter::run_battery(opts);
  size_t failed = 0;
  for (const auto& c : results) failed += !c.pass;
  std::cout << results.size() - failed << "/" << results.size() << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}
