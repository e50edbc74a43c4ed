#ifndef MISERE_CLI_HPP_
#define MISERE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace misere {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // distinguished, refuted, incomparable
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// Entry point of the misere tool. args excludes the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace misere

#endif  // MISERE_CLI_HPP_
