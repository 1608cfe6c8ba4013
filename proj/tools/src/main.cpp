#include <iostream>

#include "plncsim/cli/commands.hpp"

int main(int argc, char** argv) {
    return plncsim::cli::run(argc, argv, std::cout, std::cerr);
}
