// Prints one line per acceptance criterion. `--only A4` runs a single one.
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "isocay/suites/suites.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> ids;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      ids.emplace_back(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--only A<n>]...\n";
      return 64;
    }
  }
  if (ids.empty()) ids = isocay::suites::criterion_ids();
  bool ok = true;
  for (const auto& id : ids) {
    const auto r = isocay::suites::run_criterion(id);
    std::cout << isocay::suites::format_result(r) << std::endl;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
