#include <iostream>

#include "elsurf/selftest.hpp"

int main() { return elsurf::run_acceptance(std::cout); }
