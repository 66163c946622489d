#pragma once

// CLI front end, factored as a library function so the behavior (arguments,
// JSON documents, exit codes) is directly testable. The binary in tools/ is
// a thin wrapper around run_cli.
//
// Every command writes a single JSON document to `out`:
//   {"command": ..., "status": "pass" | "fail" | "value", "payload": ...}
// and a one-line timing diagnostic to `err` (kept off stdout so repeated runs
// are byte-identical). Exit codes: 0 pass/value, 1 fail, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

#include "skeinlab/json_io.hpp"

namespace skeinlab {

struct CommandResult {
    std::string command;
    std::string status;  // pass | fail | value
    Json payload;
    long long elapsed_ms = 0;
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skeinlab
