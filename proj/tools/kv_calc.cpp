#include <iostream>

#include "kv/cli.hpp"

int main(int argc, char** argv) { return kv::run(argc, argv, std::cout, std::cerr); }
