#ifndef WHEELCHECK_CLI_HPP
#define WHEELCHECK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wheelcheck::cli {

// Exit codes: 0 success (verdict produced), 1 precondition/usage errors,
// 2 theorem violation (with dump on stderr).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wheelcheck::cli

#endif
