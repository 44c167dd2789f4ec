#include "g2cells/cli.hpp"

int main(int argc, char** argv) { return g2cells::cli::run(argc, argv, std::cout, std::cerr); }
