#include <iostream>

#include "curvasym/cli.hpp"

int main(int argc, char** argv) {
    return curvasym::cli_run(argc, argv, std::cout, std::cerr);
}
