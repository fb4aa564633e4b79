#include <iostream>
#include <string>
#include <vector>

#include "curvegroup/report/cli.hpp"

int main(int argc, char** argv) {
  return curvegroup::report::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
