// The gp command line tool.

#ifndef GRAPHPROD_CLI_HPP_
#define GRAPHPROD_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace graphprod {

  //! Exit codes of the command line tool.
  enum ExitCode : int {
    exit_ok       = 0,
    exit_negative = 1,
    exit_usage    = 2,
    exit_internal = 3
  };

  //! Runs the tool; args[0] is the program name.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace graphprod

#endif  // GRAPHPROD_CLI_HPP_
