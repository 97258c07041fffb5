#include <iostream>

#include "assoc/cli.hpp"

int main(int argc, char** argv) {
    return assoc::cli::run(argc, argv, std::cout, std::cerr);
}
