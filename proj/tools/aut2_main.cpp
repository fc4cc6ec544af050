#include <iostream>
#include <string>
#include <vector>

#include "aut2/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return aut2::run_cli(args, std::cout, std::cerr);
}
