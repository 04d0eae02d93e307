#include <fstream>
#include <stdexcept>

#include "csgauge/cli.hpp"
#include "csgauge/limit_problem.hpp"
#include "csgauge/cs_energy.hpp"
#include "json.hpp"

namespace csgauge::cli {

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file << contents;
  file.flush();
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

std::filesystem::path manifest_path_for(const std::filesystem::path& artifact) {
  return std::filesystem::path(artifact.string() + ".manifest.json");
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  nlohmann::json j;
  j["command"] = manifest.command;
  j["parameters"] = manifest.parameters;
  j["artifacts"] = manifest.artifacts;
  j["wall_time_seconds"] = manifest.wall_time_seconds;
  j["version"] = manifest.version;
  write_text_file(path, j.dump(2) + "\n");
}

double parse_omega(const std::string& text, double p) {
  double factor = 1.0;
  std::string name = text;
  if (const auto star = text.find('*'); star != std::string::npos) {
    try {
      std::size_t used = 0;
      factor = std::stod(text.substr(0, star), &used);
      if (used != star) throw std::invalid_argument("factor");
    } catch (const std::exception&) {
      throw std::domain_error("cannot parse frequency '" + text + "'");
    }
    name = text.substr(star + 1);
  }
  double value = 0.0;
  if (name == "omega0") {
    value = omega0(p);
  } else if (name == "omega1") {
    value = omega1(p);
  } else if (name == "omega_bar") {
    value = nonexistence_threshold(p);
  } else {
    try {
      std::size_t used = 0;
      value = std::stod(name, &used);
      if (used != name.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::domain_error("cannot parse frequency '" + text + "'");
    }
  }
  return factor * value;
}

const char* version() {
#ifdef CSGAUGE_VERSION
  return CSGAUGE_VERSION;
#else
  return "unknown";
#endif
}

}  // namespace csgauge::cli
