#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "specstat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    specstat::RunConfig cfg;
    try {
        cfg = specstat::parse_args(args);
    } catch (const specstat::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    try {
        return specstat::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
