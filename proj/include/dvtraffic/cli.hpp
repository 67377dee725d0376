#ifndef DVTRAFFIC_CLI_HPP
#define DVTRAFFIC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dvtraffic {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverError = 1;
inline constexpr int kExitBadArguments = 2;

/// `args` excludes the program name. Subcommands: riemann, bvp,
/// compare-schemes, cluster, layer, check-subchar, list, replay.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dvtraffic

#endif  // DVTRAFFIC_CLI_HPP
