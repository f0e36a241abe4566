#include <iostream>
#include <string>
#include <vector>

#include "parabolic/cli/app.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return parabolic::cli::run(args, std::cout, std::cerr);
}
