// Writes every catalog fixture as <dir>/<name>.json.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "maxstp/fixture_catalog.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return 2;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  for (const auto& [name, j] : maxstp::fixtures::catalog()) {
    std::ofstream out(dir / (name + ".json"), std::ios::binary);
    out << maxstp::dump(j);
  }
  return 0;
}
