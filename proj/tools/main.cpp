#include <iostream>

#include "elsurf/cli.hpp"

int main(int argc, char** argv) {
    return elsurf::run_command(argc, argv, std::cout, std::cerr);
}
