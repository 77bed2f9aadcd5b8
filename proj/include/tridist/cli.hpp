#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tridist {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArgs = 1;
inline constexpr int kExitNotOptimal = 2;

/// Entry point of the `tridist` command line tool. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tridist
