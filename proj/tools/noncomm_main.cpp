#include <string>
#include <vector>

#include "noncomm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return noncomm::run_cli(args);
}
