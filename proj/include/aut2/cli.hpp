#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aut2 {

// The whole command-line surface, callable in-process. Returns the exit code:
// 0 success/tame, 2 usage or parse error, 3 wild, 4 not an automorphism,
// 5 undecided (overflow).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aut2
