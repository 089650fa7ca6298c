#include <iostream>

#include "maxpoly/cli.hpp"

int main(int argc, char** argv) {
    return maxpoly::cli::run_main(argc, argv, std::cout, std::cerr);
}
