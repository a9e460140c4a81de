#include <iostream>

#include <ddisc/interface.hpp>

int main(int argc, char** argv) {
  return ddisc::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
