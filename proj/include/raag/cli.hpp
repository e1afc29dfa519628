#ifndef RAAG_CLI_HPP
#define RAAG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace raag {

// Exit codes: 0 success, 1 usage/parse, 2 domain precondition,
// 3 budget exceeded or undecided at bound.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace raag

#endif
