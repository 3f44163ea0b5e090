#pragma once

#include <string>
#include <vector>

namespace flowlab::cli {

// Exit codes: 0 success, 2 config schema violation, 3 numerical failure.
int run(int argc, char** argv);
int run(const std::vector<std::string>& args);

} // namespace flowlab::cli
