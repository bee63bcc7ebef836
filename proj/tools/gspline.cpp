#include <iostream>

#include "gspline/cli.hpp"

int main(int argc, char** argv) {
  return gspline::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
