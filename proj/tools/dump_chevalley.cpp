#include "g2cells/chevalley_dump.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    if (argc > 2) {
        std::cerr << "usage: dump_chevalley [FILE]\n";
        return 2;
    }
    if (argc == 1) {
        std::cout << g2cells::chevalley_dump();
        return 0;
    }
    std::ofstream out(argv[1]);
    if (!out) {
        std::cerr << "cannot write " << argv[1] << "\n";
        return 1;
    }
    out << g2cells::chevalley_dump();
    return 0;
}
