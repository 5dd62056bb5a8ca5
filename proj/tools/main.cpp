#include <iostream>

#include "quatring/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    quatring::command_result res = quatring::run_cli(args);
    std::cout << res.body.dump(2) << std::endl;
    return res.exit_code;
}
