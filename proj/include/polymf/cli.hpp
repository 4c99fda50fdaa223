#ifndef POLYMF_CLI_HPP
#define POLYMF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polymf::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,  // verification failed, or the input is outside a method's domain
    kUsage = 2,    // bad arguments, unparsable expression, malformed file
};

/// Runs `polymf3 <verb> ...`; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polymf::cli

#endif  // POLYMF_CLI_HPP
