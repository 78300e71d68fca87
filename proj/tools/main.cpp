#include <iostream>
#include <vector>

#include "lialg/workbench.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lialg::cli_run(args, std::cout, std::cerr);
}
