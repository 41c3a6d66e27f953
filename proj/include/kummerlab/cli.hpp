#pragma once

#include <string>
#include <vector>

namespace kummerlab {

struct CliResult {
    int exit_code = 0; // 0 success, 1 domain failure, 2 usage
    std::string out;
    std::string err;
};

/* The command-line front end as a function over argument vectors (program
 * name excluded); the binary in tools/ forwards to this. Identical
 * invocations produce byte-identical output. */
CliResult run_cli(const std::vector<std::string>& args);

} // namespace kummerlab
