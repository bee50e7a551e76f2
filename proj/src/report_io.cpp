#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "pwsob/verifier.hpp"

namespace pwsob {

std::string format_real(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

namespace {

using ojson = nlohmann::ordered_json;

ojson real(double x) {
  if (std::isfinite(x)) return x;
  return format_real(x);
}

ojson record_json(const InequalityRecord& r) {
  ojson j;
  j["name"] = r.name;
  j["group"] = r.group;
  j["seed"] = r.seed;
  j["index"] = r.index;
  j["params"] = r.params;
  j["lhs"] = real(r.lhs);
  j["rhs"] = real(r.rhs);
  j["slack"] = real(r.slack);
  j["tol"] = real(r.tol);
  j["pass"] = r.pass;
  if (r.hypothesis_sensitive) j["hypothesis_sensitive"] = true;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  ojson doc;
  ojson& batch = doc["batch"];
  batch["groups"] = r.groups;
  batch["weights"] = r.weights;
  batch["m"] = r.m;
  batch["p_E"] = real(r.p_e);
  batch["batch_size"] = r.batch_size;
  batch["seed"] = r.seed;
  batch["s_values"] = r.s_values;
  ojson pairs = ojson::array();
  for (const auto& [s, t] : r.st_pairs) pairs.push_back({s, t});
  batch["st_pairs"] = pairs;
  batch["tampered"] = r.tampered;

  ojson& summary = doc["summary"];
  std::size_t failures = 0, sensitive = 0;
  ojson per = ojson::object();
  for (const auto& [name, s] : r.summary) {
    failures += s.failures;
    sensitive += s.sensitive_failures;
    per[name] = {{"count", s.count},
                 {"failures", s.failures},
                 {"hypothesis_sensitive_failures", s.sensitive_failures},
                 {"min_slack", real(s.min_slack)},
                 {"min_slack_group", s.min_slack_group},
                 {"min_slack_seed", s.min_slack_seed}};
  }
  summary["all_pass"] = r.all_pass;
  summary["records"] = r.records.size();
  summary["failures"] = failures;
  summary["hypothesis_sensitive_failures"] = sensitive;
  summary["inequalities"] = per;

  ojson records = ojson::array();
  for (const auto& rec : r.records) records.push_back(record_json(rec));
  doc["records"] = std::move(records);
  return doc.dump(1) + "\n";
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "name,group,seed,lhs,rhs,slack,tol,pass\n";
  for (const auto& rec : r.records) {
    out << csv_field(rec.name) << ',' << csv_field(rec.group) << ',' << rec.seed << ',' << format_real(rec.lhs) << ','
        << format_real(rec.rhs) << ',' << format_real(rec.slack) << ',' << format_real(rec.tol) << ','
        << (rec.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace pwsob
