#include <iostream>
#include <string>
#include <vector>

#include "bergetool/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return berge::cli::run(args, std::cout, std::cerr);
}
