// main.cpp
// Thin shell around run_cli; everything testable lives in the library.

#include <iostream>

#include "xray/cli.hpp"

int main(int argc, char** argv) {
  return xray::run_cli(argc, argv, std::cout, std::cerr);
}
