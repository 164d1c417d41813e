#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inoue_cli {

// Exit codes: 0 success/accepted (classify: homeomorphic), 1 rejected or
// negative, 2 error, 3 unknown.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace inoue_cli
