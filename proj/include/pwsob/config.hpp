#pragma once
// Run configuration shared by the command-line subcommands.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwsob/sobolev.hpp"
#include "pwsob/verifier.hpp"

namespace pwsob {

enum class OutputFormat { Json, Csv, Both };
OutputFormat parse_format(std::string_view text);
std::string to_string(OutputFormat f);

/// Environment variable naming the config file used when --config is absent.
inline constexpr const char* kConfigEnv = "PWSOB_CONFIG";

struct RunConfig {
  std::vector<std::string> groups{"cyclic:12", "s3", "circle:16", "su2:4"};
  int m = 3;
  double p_e = 2.0;
  /// Group spec -> "canonical", "zero", "file:PATH", or an inline JSON table.
  /// Groups without an entry use "canonical".
  std::map<std::string, std::string> gamma;
  std::vector<double> s_values{0.0, 0.5, 1.0, 2.0};
  std::vector<std::pair<double, double>> st_pairs{{1.0, 2.0}, {1.0, 3.0}, {0.5, 2.0}};
  std::vector<double> p_values{1.0, 4.0 / 3.0, 2.0, 4.0, kInfinity};
  std::size_t batch_size = 200;
  std::uint64_t seed = 20240601;
  std::size_t extra_samples = kDefaultExtraSamples;
  std::string amplitude = "gaussian";
  std::string out = "pwsob-out";
  OutputFormat format = OutputFormat::Both;
  /// Relative paths in the config (custom groups, weight files) resolve here.
  std::filesystem::path base_dir = ".";

  /// Unknown keys and malformed values raise ConfigError naming the field.
  static RunConfig from_json(std::string_view text, std::filesystem::path base_dir = ".");
  static RunConfig load(const std::filesystem::path& path);
  std::string to_json() const;

  /// Throws ConfigError describing the first violated rule.
  void validate() const;

  GroupDescriptor descriptor(const std::string& spec) const;
  GroupSpec make(const std::string& spec) const;
  WeightSequence weights(const std::string& spec, const DualWindow& window) const;
  std::string weight_label(const std::string& spec) const;

  SuiteConfig to_suite() const;
};

/// --config if given, else $PWSOB_CONFIG if set, else none (built-in defaults).
std::optional<std::filesystem::path> resolve_config_path(const std::optional<std::string>& flag);

/// Loads and validates; built-in defaults when `path` is empty.
RunConfig load_config(const std::optional<std::filesystem::path>& path);

}  // namespace pwsob
