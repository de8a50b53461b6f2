#include <string>
#include <vector>

#include "congest/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return congest::run(args);
}
