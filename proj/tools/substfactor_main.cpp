#include <iostream>
#include <string>
#include <vector>

#include "substfactor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return substfactor::cli::run(args, std::cout, std::cerr);
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return substfactor::cli::kResourceError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return substfactor::cli::kInternalError;
  }
}
