#ifndef SYZLAB_CLI_HPP
#define SYZLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace syzlab::cli {

/// Parses and executes one command line.  Exit codes: 0 success, 1 domain
/// error (e.g. a non-self-injective algebra), 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace syzlab::cli

#endif
