#include <iostream>

#include "charsum/cli.hpp"

int main(int argc, char** argv) {
    return charsum::run_cli(argc, argv, std::cout, std::cerr);
}
