#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pwsob/commands.hpp"
#include "pwsob/config.hpp"
#include "pwsob/error.hpp"

namespace {

struct Common {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<int> m;
  std::optional<std::size_t> batch_size;
  bool quiet = false;
};

pwsob::RunConfig effective_config(const Common& c) {
  pwsob::RunConfig cfg = pwsob::load_config(pwsob::resolve_config_path(c.config));
  if (c.seed) cfg.seed = *c.seed;
  if (c.out) cfg.out = *c.out;
  if (c.format) cfg.format = pwsob::parse_format(*c.format);
  if (c.m) cfg.m = *c.m;
  if (c.batch_size) cfg.batch_size = *c.batch_size;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier transforms, Sobolev norms and embedding checks on compact groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--config", common.config,
                 std::string("JSON run config (default: $") + pwsob::kConfigEnv + ", else built-in)");
  app.add_option("--seed", common.seed, "master seed");
  app.add_option("--out", common.out, "output directory");
  app.add_option("--format", common.format, "json, csv or both")->check(CLI::IsMember({"json", "csv", "both"}));
  app.add_option("--m", common.m, "dimension of E = C^m");
  app.add_option("--batch-size", common.batch_size, "random functions per group");
  app.add_flag("-q,--quiet", common.quiet, "no console output");

  pwsob::SpectraOptions spectra;
  std::string group;
  auto* sp = app.add_subcommand("spectra", "Fourier coefficients of a function");
  sp->add_option("--group", group, "group spec, e.g. su2:2 (default: first configured group)");
  sp->add_option("--source", spectra.source, "random, constant, character:LABEL or file:PATH")
      ->capture_default_str();

  std::string coefficients;
  auto* nm = app.add_subcommand("norms", "norms of a coefficient file");
  nm->add_option("coefficients", coefficients, "coefficient JSON file")->required();

  app.add_subcommand("constants", "embedding constants and summability verdicts");

  bool tamper = false;
  auto* vf = app.add_subcommand("verify", "run the inequality suite");
  vf->add_flag("--tamper", tamper, "halve every right-hand side (harness self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pwsob::kExitUsage;
  }

  try {
    const pwsob::RunConfig cfg = effective_config(common);
    const pwsob::CommandIO io{std::cout, common.quiet};
    if (*sp) {
      if (!group.empty()) spectra.group = group;
      return pwsob::cmd_spectra(cfg, spectra, io);
    }
    if (*nm) return pwsob::cmd_norms(cfg, coefficients, io);
    if (*vf) return pwsob::cmd_verify(cfg, tamper, io);
    return pwsob::cmd_constants(cfg, io);
  } catch (const pwsob::Error& e) {
    std::cerr << "pwsob: " << e.what() << "\n";
    return pwsob::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "pwsob: " << e.what() << "\n";
    return pwsob::kExitUsage;
  }
}
