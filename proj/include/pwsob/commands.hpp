#pragma once
// Subcommands of the pwsob tool. Each returns its process exit code.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pwsob/config.hpp"
#include "pwsob/fourier.hpp"

namespace pwsob {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

struct CommandIO {
  std::ostream& out;
  bool quiet = false;
};

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// A named scalar result: a norm of a coefficient file or a constant of a group.
struct ValueRecord {
  std::string name;
  double value = 0.0;
  std::string window;
  std::string params;
  std::string verdict;  // constants only
};

std::string records_to_json(const std::vector<ValueRecord>& records);
std::string records_to_csv(const std::vector<ValueRecord>& records);

/// s_p for every configured p, h_s for every configured s, quadrature L2 and sup.
std::vector<ValueRecord> compute_norms(const RunConfig& cfg, const FourierCoefficients& c);
/// C(gamma, s) with its summability verdict for every s, and the L^{alpha'}
/// constant for every (s, t), per configured group.
std::vector<ValueRecord> compute_constants(const RunConfig& cfg);

struct SpectraOptions {
  std::optional<std::string> group;  // default: first configured group
  /// "random", "constant", "character:LABEL", or "file:PATH".
  std::string source = "random";
};

/// Coefficients of the selected source on the selected group.
FourierCoefficients spectra_coefficients(const RunConfig& cfg, const SpectraOptions& opt);

/// Writes <out>/coefficients.json and prints its s_2 norm.
int cmd_spectra(const RunConfig& cfg, const SpectraOptions& opt, CommandIO io);
/// Writes <out>/norms.{json,csv}.
int cmd_norms(const RunConfig& cfg, const std::filesystem::path& coefficients, CommandIO io);
/// Writes <out>/constants.{json,csv}.
int cmd_constants(const RunConfig& cfg, CommandIO io);
/// Writes <out>/report.{json,csv}; exit code 1 when any record fails.
int cmd_verify(const RunConfig& cfg, bool tamper, CommandIO io);

}  // namespace pwsob
