#include <string>
#include <vector>

#include "disclab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return disclab::run_command(args);
}
