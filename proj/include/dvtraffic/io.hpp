#ifndef DVTRAFFIC_IO_HPP
#define DVTRAFFIC_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dvtraffic/scenarios.hpp"

namespace dvtraffic {

/// Parsed profile CSV. `z` is empty when the file has no z column.
struct Profile {
  std::vector<double> x;
  std::vector<double> rho;
  std::vector<double> q;
  std::vector<double> z;
};

/// Header `x,rho,q[,z]`, one row per cell centre, 12 significant digits.
std::string profile_csv(const GridSolution& sol, bool with_z);
/// Throws DomainError on malformed input.
Profile parse_profile_csv(const std::string& text);

std::string manifest_json(const RunReport& report,
                          const std::vector<std::string>& outputs);
/// Recovers the run configuration from a manifest. Throws DomainError.
RunConfig parse_manifest(const std::string& text);

/// Stem shared by the CSV and manifest of one run.
std::string run_stem(const RunConfig& config);

/// Writes `<stem>.csv` and `<stem>.json` into `dir`; returns both paths.
std::vector<std::filesystem::path> write_run(const RunReport& report,
                                             const std::filesystem::path& dir);

std::string summary_line(const RunReport& report);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace dvtraffic

#endif  // DVTRAFFIC_IO_HPP
