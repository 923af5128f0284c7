#include <iostream>
#include <string>
#include <vector>

#include "qdet/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const qdet::cli::Outcome r = qdet::cli::run(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
