// verification gate: runs every release check and prints one line per check
#include <cstring>
#include <iostream>

#include "hillspectra/acceptance.hpp"

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      quick = true;
    } else {
      std::cerr << "usage: acceptance [--quick]\n";
      return 2;
    }
  }
  auto summary = hillspectra::run_acceptance(std::cout, quick);
  return summary.all_pass ? 0 : 1;
}
