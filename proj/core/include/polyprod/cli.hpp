#ifndef POLYPROD_CLI_HPP
#define POLYPROD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polyprod::cli {

/// Executes one subcommand: a single JSON or CSV document on `out`,
/// diagnostics on `err`.  Exit status 0 on success, 2 on validation errors,
/// 3 on computational limits (sieve too small, caps, integer width).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace polyprod::cli

#endif
