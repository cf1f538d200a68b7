#include <iostream>
#include <string>
#include <vector>

#include "mdade/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mdade::cli_run(args, std::cout, std::cerr);
}
