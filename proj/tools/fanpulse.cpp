#include <iostream>

#include "fanpulse/commands.hpp"

int main(int argc, char** argv) { return fanpulse::run_cli(argc, argv, std::cout, std::cerr); }
