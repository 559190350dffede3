// One line per acceptance criterion; exit status 0 only if all pass.

#include "mink/verify.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>

int main(int argc, char** argv) {
  std::uint64_t seed = mink::kDefaultSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  bool all = true;
  for (const auto& c : mink::run_all_checks(seed)) {
    all = all && c.pass;
    std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << "  " << std::left
              << std::setw(27) << c.name << " residual " << std::setprecision(3) << c.residual << "  "
              << c.detail << "\n";
  }
  return all ? 0 : 1;
}
