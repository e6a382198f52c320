#include <iostream>
#include <string>
#include <vector>

#include "simidx/cli.hpp"

int main(int argc, char** argv)
{
  return simidx::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
