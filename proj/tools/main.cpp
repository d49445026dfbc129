#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  auto parsed = orbitalg::cli::parse_command_line(argc, argv, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return orbitalg::cli::run(std::get<orbitalg::cli::RunConfig>(parsed), std::cout, std::cerr);
}
