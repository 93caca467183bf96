#include <iostream>

#include "hankelforge/cli.hpp"

int main(int argc, char** argv) {
    return hankelforge::cli_main(argc, argv, std::cout, std::cerr);
}
