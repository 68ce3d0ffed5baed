#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ultralip {

// Runs one command line ("validate", "partition", ...) against the given
// streams; returns the process exit code (0 iff every verdict passes).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace ultralip
