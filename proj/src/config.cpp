#include "pwsob/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pwsob/error.hpp"

namespace pwsob {

namespace fs = std::filesystem;
using nlohmann::json;

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "both") return OutputFormat::Both;
  throw ConfigError("format must be json, csv or both, got '" + std::string(text) + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Both: return "both";
  }
  return "?";
}

namespace {

std::string read_text(const fs::path& path, const std::string& what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + what + " '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double real_field(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string() && (v == "inf" || v == "infinity")) return kInfinity;
  throw ConfigError(field + ": expected a number or \"inf\"");
}

json real_json(double x) { return std::isinf(x) ? json("inf") : json(x); }

template <class T>
T integer_field(const json& v, const std::string& field) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<long long>() < 0))
    throw ConfigError(field + ": expected a nonnegative integer");
  return v.get<T>();
}

std::string string_field(const json& v, const std::string& field) {
  if (!v.is_string()) throw ConfigError(field + ": expected a string");
  return v.get<std::string>();
}

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

}  // namespace

RunConfig RunConfig::from_json(std::string_view text, fs::path base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  RunConfig c;
  c.base_dir = std::move(base_dir);
  for (const auto& [key, v] : doc.items()) {
    if (key == "groups") {
      if (!v.is_array()) throw ConfigError("groups: expected an array of group specs");
      c.groups.clear();
      for (std::size_t i = 0; i < v.size(); ++i)
        c.groups.push_back(string_field(v[i], "groups[" + std::to_string(i) + "]"));
    } else if (key == "m") {
      c.m = integer_field<int>(v, "m");
    } else if (key == "p_E") {
      c.p_e = real_field(v, "p_E");
    } else if (key == "gamma") {
      if (!v.is_object()) throw ConfigError("gamma: expected an object keyed by group spec");
      for (const auto& [g, choice] : v.items()) {
        if (choice.is_string())
          c.gamma[g] = choice.get<std::string>();
        else if (choice.is_object())
          c.gamma[g] = choice.dump();
        else
          throw ConfigError("gamma[" + g + "]: expected \"canonical\", \"zero\", \"file:PATH\" or a table");
      }
    } else if (key == "s_values") {
      if (!v.is_array()) throw ConfigError("s_values: expected an array");
      c.s_values.clear();
      for (std::size_t i = 0; i < v.size(); ++i)
        c.s_values.push_back(real_field(v[i], "s_values[" + std::to_string(i) + "]"));
    } else if (key == "st_pairs") {
      if (!v.is_array()) throw ConfigError("st_pairs: expected an array of [s, t] pairs");
      c.st_pairs.clear();
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string f = "st_pairs[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != 2) throw ConfigError(f + ": expected [s, t]");
        c.st_pairs.emplace_back(real_field(v[i][0], f), real_field(v[i][1], f));
      }
    } else if (key == "p_values") {
      if (!v.is_array()) throw ConfigError("p_values: expected an array");
      c.p_values.clear();
      for (std::size_t i = 0; i < v.size(); ++i)
        c.p_values.push_back(real_field(v[i], "p_values[" + std::to_string(i) + "]"));
    } else if (key == "batch_size") {
      c.batch_size = integer_field<std::size_t>(v, "batch_size");
    } else if (key == "seed") {
      c.seed = integer_field<std::uint64_t>(v, "seed");
    } else if (key == "extra_samples") {
      c.extra_samples = integer_field<std::size_t>(v, "extra_samples");
    } else if (key == "amplitude") {
      c.amplitude = string_field(v, "amplitude");
    } else if (key == "out") {
      c.out = string_field(v, "out");
    } else if (key == "format") {
      c.format = parse_format(string_field(v, "format"));
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return c;
}

RunConfig RunConfig::load(const fs::path& path) {
  return from_json(read_text(path, "config file"), path.parent_path().empty() ? fs::path(".") : path.parent_path());
}

std::string RunConfig::to_json() const {
  nlohmann::ordered_json doc;
  doc["groups"] = groups;
  doc["m"] = m;
  doc["p_E"] = real_json(p_e);
  nlohmann::ordered_json g = nlohmann::ordered_json::object();
  for (const auto& [k, v] : gamma) {
    if (!v.empty() && v.front() == '{')
      g[k] = nlohmann::ordered_json::parse(v);
    else
      g[k] = v;
  }
  doc["gamma"] = g;
  doc["s_values"] = s_values;
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [s, t] : st_pairs) pairs.push_back({s, t});
  doc["st_pairs"] = pairs;
  auto ps = nlohmann::ordered_json::array();
  for (double p : p_values) ps.push_back(std::isinf(p) ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(p));
  doc["p_values"] = ps;
  doc["batch_size"] = batch_size;
  doc["seed"] = seed;
  doc["extra_samples"] = extra_samples;
  doc["amplitude"] = amplitude;
  doc["out"] = out;
  doc["format"] = to_string(format);
  return doc.dump(2) + "\n";
}

void RunConfig::validate() const {
  if (m < 1) throw ConfigError("m must be >= 1");
  if (!(p_e >= 1.0)) throw ConfigError("p_E must be >= 1 (or \"inf\")");
  if (batch_size < 1) throw ConfigError("batch_size must be >= 1");
  for (std::size_t i = 0; i < s_values.size(); ++i)
    if (!(s_values[i] >= 0.0) || std::isinf(s_values[i]))
      throw ConfigError("s_values[" + std::to_string(i) + "] must be finite and >= 0");
  for (std::size_t i = 0; i < st_pairs.size(); ++i) {
    const auto [s, t] = st_pairs[i];
    if (!(s > 0.0) || !(t > s) || std::isinf(t))
      throw ConfigError("st_pairs[" + std::to_string(i) + "]: need t > s > 0, got s = " + format_real(s) +
                        ", t = " + format_real(t));
  }
  for (std::size_t i = 0; i < p_values.size(); ++i)
    if (!(p_values[i] >= 1.0)) throw ConfigError("p_values[" + std::to_string(i) + "] must be >= 1");
  AmplitudeLaw::parse(amplitude);
  std::set<std::string> known;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    try {
      descriptor(groups[i]);
    } catch (const Error& e) {
      throw ConfigError("groups[" + std::to_string(i) + "]: " + e.what());
    }
    known.insert(groups[i]);
  }
  for (const auto& [g, choice] : gamma) {
    (void)choice;
    if (!known.count(g)) throw ConfigError("gamma: '" + g + "' is not one of the configured groups");
  }
}

GroupDescriptor RunConfig::descriptor(const std::string& spec) const {
  GroupDescriptor d = GroupDescriptor::parse(spec);
  if (d.kind == GroupKind::Custom) d.path = resolve(base_dir, d.path).string();
  return d;
}

GroupSpec RunConfig::make(const std::string& spec) const { return make_group(descriptor(spec)); }

std::string RunConfig::weight_label(const std::string& spec) const {
  const auto it = gamma.find(spec);
  if (it == gamma.end()) return "canonical";
  return !it->second.empty() && it->second.front() == '{' ? "table" : it->second;
}

WeightSequence RunConfig::weights(const std::string& spec, const DualWindow& window) const {
  const auto it = gamma.find(spec);
  const std::string choice = it == gamma.end() ? "canonical" : it->second;
  try {
    if (choice == "canonical") return WeightSequence::canonical(descriptor(spec), window);
    if (choice == "zero") return WeightSequence::zero(window);
    if (choice.starts_with("file:"))
      return WeightSequence::from_json(window, read_text(resolve(base_dir, choice.substr(5)), "weight file"));
    if (!choice.empty() && choice.front() == '{') return WeightSequence::from_json(window, choice);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError("gamma[" + spec + "]: " + e.what());
  }
  throw ConfigError("gamma[" + spec + "]: unknown choice '" + choice + "'");
}

SuiteConfig RunConfig::to_suite() const {
  SuiteConfig s;
  for (const auto& spec : groups) {
    GroupSpec g = make(spec);
    WeightSequence w = weights(spec, g.window());
    s.groups.push_back({std::move(g), std::move(w), weight_label(spec)});
  }
  s.m = m;
  s.p_e = p_e;
  s.s_values = s_values;
  s.st_pairs = st_pairs;
  s.batch_size = batch_size;
  s.seed = seed;
  s.extra_samples = extra_samples;
  s.amplitude = AmplitudeLaw::parse(amplitude);
  return s;
}

std::optional<fs::path> resolve_config_path(const std::optional<std::string>& flag) {
  if (flag) return fs::path(*flag);
  if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') return fs::path(env);
  return std::nullopt;
}

RunConfig load_config(const std::optional<fs::path>& path) {
  RunConfig c = path ? RunConfig::load(*path) : RunConfig{};
  c.validate();
  return c;
}

}  // namespace pwsob
