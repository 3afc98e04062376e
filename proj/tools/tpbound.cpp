#include <string>
#include <vector>

#include "tpbound/cli.hpp"

int main(int argc, char** argv) {
  return tpbound::cli::main_entry(std::vector<std::string>(argv + 1, argv + argc));
}
