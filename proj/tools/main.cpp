#include <iostream>

#include "threefold/cli.hpp"

int main(int argc, char** argv) {
    return threefold::run_cli(argc, argv, std::cout, std::cerr);
}
