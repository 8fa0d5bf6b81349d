#pragma once

// Command-line front end; fleshed out in stages.

#include <iostream>
#include <string>
#include <vector>

namespace nsurf {
namespace cli {

int run(const std::vector<std::string>& args);

inline int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

inline int run(const std::vector<std::string>& args) {
  (void)args;
  std::cerr << "nsurf: not yet wired\n";
  return 1;
}

}  // namespace cli
}  // namespace nsurf
