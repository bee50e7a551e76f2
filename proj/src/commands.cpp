#include "pwsob/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "json.hpp"
#include "pwsob/error.hpp"
#include "pwsob/sobolev.hpp"
#include "pwsob/verifier.hpp"

namespace pwsob {

namespace fs = std::filesystem;

void write_file_atomic(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename into '" + path.string() + "': " + ec.message());
  }
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string real_params(const char* key, double v) { return std::string(key) + "=" + format_real(v); }

std::vector<std::complex<double>> sample_vector(int m) {
  // (1, 2i, -3, -4i, 5, ...)
  static const std::complex<double> turn[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<std::complex<double>> v(m);
  for (int k = 0; k < m; ++k) v[k] = static_cast<double>(k + 1) * turn[k % 4];
  return v;
}

void write_records(const RunConfig& cfg, const std::string& stem, const std::vector<ValueRecord>& records) {
  const fs::path dir(cfg.out);
  if (cfg.format != OutputFormat::Csv) write_file_atomic(dir / (stem + ".json"), records_to_json(records));
  if (cfg.format != OutputFormat::Json) write_file_atomic(dir / (stem + ".csv"), records_to_csv(records));
}

void print_records(const std::vector<ValueRecord>& records, CommandIO io) {
  if (io.quiet) return;
  for (const auto& r : records) {
    io.out << r.window << "  " << r.name << "(" << r.params << ") = " << format_real(r.value);
    if (!r.verdict.empty()) io.out << "  [" << r.verdict << "]";
    io.out << "\n";
  }
}

}  // namespace

std::string records_to_json(const std::vector<ValueRecord>& records) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    if (std::isfinite(r.value))
      j["value"] = r.value;
    else
      j["value"] = format_real(r.value);
    j["window"] = r.window;
    j["params"] = r.params;
    if (!r.verdict.empty()) j["verdict"] = r.verdict;
    doc.push_back(std::move(j));
  }
  return doc.dump(1) + "\n";
}

std::string records_to_csv(const std::vector<ValueRecord>& records) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::ostringstream out;
  out << "name,window,params,value,verdict\n";
  for (const auto& r : records)
    out << field(r.name) << ',' << field(r.window) << ',' << field(r.params) << ',' << format_real(r.value) << ','
        << field(r.verdict) << '\n';
  return out.str();
}

std::vector<ValueRecord> compute_norms(const RunConfig& cfg, const FourierCoefficients& c) {
  const GroupSpec& g = c.group();
  const std::string window = g.name();
  const WeightSequence gamma = cfg.weights(window, g.window());
  const std::string gl = "gamma=" + cfg.weight_label(window);
  std::vector<ValueRecord> out;
  for (double p : cfg.p_values) out.push_back({"s_p", s_p_norm(c, p), window, real_params("p", p), ""});
  for (double s : cfg.s_values)
    out.push_back({"h_s", h_s_norm(c, gamma, s), window, real_params("s", s) + "," + gl, ""});
  const SpectralFunction f(c);
  out.push_back({"l_p", l_p_norm(f, g, 2.0), window, "p=2", ""});
  const std::size_t extra = g.is_finite() ? 0 : cfg.extra_samples;
  out.push_back({"sup", sup_norm(f, g, extra), window, "extra_samples=" + std::to_string(extra), ""});
  return out;
}

std::vector<ValueRecord> compute_constants(const RunConfig& cfg) {
  std::vector<ValueRecord> out;
  for (const auto& spec : cfg.groups) {
    const GroupDescriptor desc = cfg.descriptor(spec);
    const DualWindow window = make_window(desc);
    const WeightSequence gamma = cfg.weights(spec, window);
    const std::string gl = "gamma=" + cfg.weight_label(spec);
    for (double s : cfg.s_values) {
      const EmbeddingConstant k = embedding_constant_C(gamma, s);
      out.push_back({"C", k.value, spec, real_params("s", s) + "," + gl, to_string(k.verdict)});
    }
    for (const auto& [s, t] : cfg.st_pairs) {
      const std::string params = real_params("s", s) + "," + real_params("t", t) + "," + gl;
      out.push_back({"lq_constant", lq_bound_constant(gamma, t, s), spec, params,
                     to_string(summability_check(gamma, t).verdict)});
    }
  }
  return out;
}

FourierCoefficients spectra_coefficients(const RunConfig& cfg, const SpectraOptions& opt) {
  if (opt.source.starts_with("file:")) {
    const std::string text = read_file(opt.source.substr(5));
    return opt.group ? coefficients_from_json(text, cfg.make(*opt.group)) : coefficients_from_json(text);
  }
  if (!opt.group && cfg.groups.empty()) throw ConfigError("spectra: no group given and none configured");
  const GroupSpec g = cfg.make(opt.group ? *opt.group : cfg.groups.front());

  if (opt.source == "random") {
    const auto c0 = random_band_limited(cfg.seed, g, cfg.m, AmplitudeLaw::parse(cfg.amplitude), cfg.p_e);
    return forward_transform(sample_on_nodes(SpectralFunction(c0), g), g);
  }
  const auto v = sample_vector(cfg.m);
  if (opt.source == "constant") {
    const auto f = SampledFunction::from_callable(g, cfg.m, [&](const GroupElement&) { return v; }, cfg.p_e);
    return forward_transform(f, g);
  }
  if (opt.source.starts_with("character:")) {
    const std::size_t irrep = g.window().index_of(opt.source.substr(10));
    const auto f = SampledFunction::from_callable(
        g, cfg.m,
        [&](const GroupElement& x) {
          const std::complex<double> chi = g.irrep_matrix(irrep, x).trace();
          std::vector<std::complex<double>> out(v.size());
          for (std::size_t k = 0; k < v.size(); ++k) out[k] = chi * v[k];
          return out;
        },
        cfg.p_e);
    return forward_transform(f, g);
  }
  throw ConfigError("unknown source '" + opt.source + "' (random, constant, character:LABEL, file:PATH)");
}

int cmd_spectra(const RunConfig& cfg, const SpectraOptions& opt, CommandIO io) {
  const FourierCoefficients c = spectra_coefficients(cfg, opt);
  const fs::path path = fs::path(cfg.out) / "coefficients.json";
  write_file_atomic(path, coefficients_to_json(c));
  if (!io.quiet) io.out << "wrote " << path.string() << "\ns_2 = " << format_real(s_p_norm(c, 2.0)) << "\n";
  return kExitPass;
}

int cmd_norms(const RunConfig& cfg, const fs::path& coefficients, CommandIO io) {
  const FourierCoefficients c = coefficients_from_json(read_file(coefficients));
  const auto records = compute_norms(cfg, c);
  write_records(cfg, "norms", records);
  print_records(records, io);
  return kExitPass;
}

int cmd_constants(const RunConfig& cfg, CommandIO io) {
  const auto records = compute_constants(cfg);
  write_records(cfg, "constants", records);
  print_records(records, io);
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, bool tamper, CommandIO io) {
  SuiteConfig suite = cfg.to_suite();
  if (tamper) suite.tamper_rhs_scale = 0.5;
  const VerificationReport rep = run_suite(suite);
  const fs::path dir(cfg.out);
  if (cfg.format != OutputFormat::Csv) write_file_atomic(dir / "report.json", report_to_json(rep));
  if (cfg.format != OutputFormat::Json) write_file_atomic(dir / "report.csv", report_to_csv(rep));
  if (!io.quiet) {
    for (const auto& [name, s] : rep.summary) {
      io.out << (s.failures == 0 ? "PASS " : "FAIL ") << name << ": " << s.count << " records, " << s.failures
             << " failures, min slack " << format_real(s.min_slack);
      if (s.sensitive_failures > 0) io.out << ", " << s.sensitive_failures << " hypothesis-sensitive";
      io.out << "\n";
    }
    io.out << (rep.all_pass ? "all inequalities hold" : "verification FAILED") << " (" << rep.records.size()
           << " records)\n";
  }
  return rep.all_pass ? kExitPass : kExitVerificationFailure;
}

}  // namespace pwsob
