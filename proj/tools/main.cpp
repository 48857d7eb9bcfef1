#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  graphsep::CliResult res = graphsep::run_cli(args);
  if (!res.out.empty()) std::cout << res.out;
  if (!res.err.empty()) std::cerr << res.err;
  return res.code;
}
