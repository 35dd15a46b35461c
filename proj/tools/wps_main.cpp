#include <string>
#include <vector>

#include "wps/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wps::cli::run(args);
}
