#ifndef BERKSKEL_CLI_HPP
#define BERKSKEL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace berkskel::cli {

enum ExitCode : int { Ok = 0, DomainFailure = 1, ParseFailure = 2 };

/// Runs one command line (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace berkskel::cli

#endif
