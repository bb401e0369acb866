#ifndef SKORO_CLI_HPP
#define SKORO_CLI_HPP

#include <iosfwd>

namespace skoro {

// Exit codes: 0 success, 1 negative decision (decide command), 2 usage or
// input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skoro

#endif
