#include <iostream>

#include "sscorpus/cli.hpp"

int main(int argc, char** argv) { return sscorpus::cli::run(argc, argv, std::cout, std::cerr); }
