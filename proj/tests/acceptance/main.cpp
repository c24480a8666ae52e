#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "vhs/acceptance/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  bool ok = true;
  for (int id : ids.empty() ? vhs::acceptance_ids() : ids) {
    const auto r = vhs::run_criterion(id);
    std::cout << vhs::format_result(r) << std::endl;
    ok = ok && r.pass;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
