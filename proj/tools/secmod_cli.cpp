#include "secmod/cli.hpp"

int main(int argc, char** argv) {
    return secmod::cli::run(argc, argv, std::cout, std::cerr);
}
