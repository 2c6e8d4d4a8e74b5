#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmonoid {

  // Exit statuses of the command-line front end.
  inline constexpr int exit_true  = 0;  // success, or predicate holds
  inline constexpr int exit_false = 1;  // predicate fails
  inline constexpr int exit_usage = 2;  // parse or usage error

  // Runs one command; args excludes the program name.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace qmonoid
