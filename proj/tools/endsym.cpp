#include <iostream>

#include "endsym/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return endsym::run_cli(args, std::cout, std::cerr);
}
