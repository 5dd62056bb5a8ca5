#ifndef QUATRING_CLI_HPP_
#define QUATRING_CLI_HPP_

#include <string>
#include <vector>

#include "quatring/json_io.hpp"

namespace quatring {

/* exit codes: 0 = ok/true, 1 = no/false, 2 = usage error, 3 = computation
 * error; "no" is reserved for decision problems answering false */
struct command_result {
    int exit_code;
    json body;
};

command_result run_cli(const std::vector<std::string>& args);

}  // namespace quatring

#endif  // QUATRING_CLI_HPP_
