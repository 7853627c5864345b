#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qil/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qil::run_cli(
        args,
        [] {
            std::stringstream ss;
            ss << std::cin.rdbuf();
            return ss.str();
        },
        std::cout, std::cerr);
}
