#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace csgauge::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kDomainError = 2;
inline constexpr int kIoError = 3;
inline constexpr int kRootUnavailable = 4;
inline constexpr int kDiverged = 5;

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> artifacts;
  double wall_time_seconds = 0.0;
  std::string version;
};

/// Writes `contents` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

/// `<artifact>.manifest.json` next to the first artifact.
std::filesystem::path manifest_path_for(const std::filesystem::path& artifact);

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

/// Parses a frequency: a number, one of omega0 / omega1 / omega_bar, or
/// `<factor>*<name>` such as 0.8*omega1. Throws std::domain_error.
double parse_omega(const std::string& text, double p);

const char* version();

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace csgauge::cli
