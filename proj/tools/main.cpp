#include <iostream>

#include "signspec/report.hpp"

int main(int argc, char** argv) {
    return signspec::run_cli(argc, argv, std::cout, std::cerr);
}
