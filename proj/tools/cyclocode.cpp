#include "cyclocode/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return cyclocode::run_cli(argc, argv, std::cout, std::cerr);
}
