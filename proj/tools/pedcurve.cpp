#include <iostream>
#include <string>
#include <vector>

#include "pedcurve/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    pedcurve::CommandOutcome outcome = pedcurve::run_command(args);
    std::cout << outcome.out;
    return outcome.exit_code;
}
