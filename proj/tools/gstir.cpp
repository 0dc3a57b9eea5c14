#include "gstir/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return gstir::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
