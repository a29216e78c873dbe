#include "hcara/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const char* serial_env = std::getenv("HCARA_NO_PARALLEL");
    const bool serial = serial_env != nullptr && std::string(serial_env) == "1";
    return hcara::cli::dispatch(args, std::cout, std::cerr, serial);
}
