#include "pwsob/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace pwsob {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kVectorSalt = 0x5643ULL;
constexpr std::uint64_t kPairSalt = 0x5041ULL;

std::string real_param(const char* key, double v) { return std::string(key) + "=" + format_real(v); }

std::string st_params(double s, double t) { return real_param("s", s) + "," + real_param("t", t); }

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

double real_norm(std::span<const double> v, double p) {
  if (std::isinf(p)) {
    double best = 0.0;
    for (double x : v) best = std::max(best, std::abs(x));
    return best;
  }
  double total = 0.0;
  for (double x : v) total += std::pow(std::abs(x), p);
  return std::pow(total, 1.0 / p);
}

double l_p_of(const FunctionSample& f, double p) { return l_p_norm(VectorFunction(f.nodes), f.nodes.group(), p); }

bool euclidean(const FunctionSample& f) { return f.nodes.p_e() == 2.0; }

}  // namespace

// ---------------------------------------------------------------- records

void refresh(InequalityRecord& r) {
  r.slack = r.rhs - r.lhs;
  r.pass = r.slack >= -r.tol;
}

InequalityRecord make_record_abs(std::string name, double lhs, double rhs, double tol) {
  InequalityRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  refresh(r);
  return r;
}

InequalityRecord make_record(std::string name, double lhs, double rhs, double rel) {
  return make_record_abs(std::move(name), lhs, rhs, rel * (1.0 + std::max(std::abs(lhs), std::abs(rhs))));
}

FunctionSample::FunctionSample(FourierCoefficients c)
    : coefficients(std::move(c)), nodes(sample_on_nodes(SpectralFunction(coefficients), coefficients.group())) {}

FunctionSample::FunctionSample(SampledFunction f)
    : coefficients(forward_transform(f, f.group())), nodes(std::move(f)) {}

// ---------------------------------------------------------------- checks

std::array<InequalityRecord, 2> check_vector_norm_comparison(std::span<const std::complex<double>> x,
                                                             double p, double q) {
  if (!(p >= 1.0) || !(q >= p)) throw std::invalid_argument("vector norm comparison: need 1 <= p <= q");
  const double np = e_norm(x, p);
  const double nq = e_norm(x, q);
  const double factor = std::pow(static_cast<double>(x.size()), inv(p) - inv(q));
  const double tol = kTolAlgebraic * (1.0 + np);
  std::array<InequalityRecord, 2> out{make_record_abs("vector_norm_comparison", nq, np, tol),
                                      make_record_abs("vector_norm_comparison", np, factor * nq, tol)};
  const std::string pq = real_param("p", p) + "," + real_param("q", q) + ",n=" + std::to_string(x.size());
  out[0].params = pq + ",side=lower";
  out[1].params = pq + ",side=upper";
  return out;
}

std::vector<InequalityRecord> check_block_comparison(const FourierCoefficients& c, double p, double q) {
  if (!(p >= 1.0) || !(q >= p)) throw std::invalid_argument("block comparison: need 1 <= p <= q");
  const auto& w = c.window();
  std::vector<InequalityRecord> out;
  out.reserve(w.size());
  std::vector<double> norms;
  for (std::size_t s = 0; s < w.size(); ++s) {
    const int d = w[s].dim;
    norms.clear();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) norms.push_back(e_norm(c.entry(s, i, j), c.p_e()));
    const double lhs = real_norm(norms, p);
    const double rhs = std::pow(static_cast<double>(d) * d, inv(p) - inv(q)) * real_norm(norms, q);
    auto r = make_record("block_comparison", lhs, rhs, kTolAlgebraic);
    r.params = "irrep=" + w[s].label + "," + real_param("p", p) + "," + real_param("q", q);
    out.push_back(std::move(r));
  }
  return out;
}

InequalityRecord check_monotone_embedding(const FourierCoefficients& c, const WeightSequence& gamma,
                                          double s, double t) {
  if (!(s >= 0.0) || !(t > s)) throw std::invalid_argument("monotone embedding: need t > s >= 0");
  auto r = make_record("monotone_embedding", h_s_norm(c, gamma, s), h_s_norm(c, gamma, t), kTolAlgebraic);
  r.params = st_params(s, t);
  return r;
}

InequalityRecord check_l2_embedding(const FunctionSample& f, const WeightSequence& gamma, double s) {
  auto r = make_record("l2_embedding", l_p_of(f, 2.0), h_s_norm(f.coefficients, gamma, s), kTolQuadrature);
  r.params = real_param("s", s);
  r.hypothesis_sensitive = !euclidean(f);
  return r;
}

InequalityRecord check_l2_embedding(const FourierCoefficients& c, const WeightSequence& gamma, double s) {
  return check_l2_embedding(FunctionSample(c), gamma, s);
}

InequalityRecord check_sup_embedding(const FunctionSample& f, const WeightSequence& gamma, double s,
                                     const SupSampler& sup) {
  const double constant = embedding_constant_C(gamma, s).value;
  auto r = make_record("sup_embedding", sup(f.nodes, f.coefficients),
                       constant * h_s_norm(f.coefficients, gamma, s), kTolQuadrature);
  r.params = real_param("s", s);
  return r;
}

InequalityRecord check_sup_embedding(const FourierCoefficients& c, const WeightSequence& gamma, double s) {
  const SupSampler sup(c.group(), kDefaultExtraSamples, kDefaultSupSeed);
  return check_sup_embedding(FunctionSample(c), gamma, s, sup);
}

InequalityRecord check_hausdorff_young(const FunctionSample& f, double alpha) {
  if (!(alpha > 1.0) || !(alpha < 2.0)) throw std::invalid_argument("Hausdorff-Young: need 1 < alpha < 2");
  const double conj = alpha / (alpha - 1.0);
  auto r = make_record("hausdorff_young", l_p_of(f, conj), s_p_norm(f.coefficients, alpha), kTolNonPolynomial);
  r.params = real_param("alpha", alpha);
  r.hypothesis_sensitive = !euclidean(f);
  return r;
}

InequalityRecord check_hausdorff_young(const FourierCoefficients& c, double alpha) {
  return check_hausdorff_young(FunctionSample(c), alpha);
}

std::array<InequalityRecord, 2> check_lq_embedding(const FunctionSample& f, const WeightSequence& gamma,
                                                   double s, double t) {
  const SobolevParams e = exponents(s, t);
  const double k = lq_bound_constant(gamma, t, s);
  const double hs = h_s_norm(f.coefficients, gamma, s);
  std::array<InequalityRecord, 2> out{
      make_record("lq_embedding", l_p_of(f, e.alpha_prime), k * hs, kTolNonPolynomial),
      make_record("lq_chain", s_p_norm(f.coefficients, e.alpha), k * hs, kTolQuadrature)};
  out[0].params = out[1].params = st_params(s, t);
  out[0].hypothesis_sensitive = !euclidean(f);
  return out;
}

std::array<InequalityRecord, 2> check_lq_embedding(const FourierCoefficients& c,
                                                   const WeightSequence& gamma, double s, double t) {
  return check_lq_embedding(FunctionSample(c), gamma, s, t);
}

InequalityRecord check_continuity_modulus(const GroupSpec& g, std::size_t irrep, const GroupElement& x,
                                          const GroupElement& a) {
  const CMatrix diff = g.irrep_matrix(irrep, x) - g.irrep_matrix(irrep, a);
  const double op = Eigen::JacobiSVD<CMatrix>(diff).singularValues()(0);
  auto r = make_record_abs("continuity_modulus", diff.cwiseAbs().maxCoeff(), op, kTolContinuity);
  r.params = "irrep=" + g.window()[irrep].label;
  return r;
}

std::vector<InequalityRecord> check_continuity_modulus(const GroupSpec& g, std::string_view label,
                                                       std::size_t pairs, std::uint64_t seed) {
  const std::size_t irrep = g.window().index_of(label);
  std::mt19937_64 rng(seed);
  std::vector<InequalityRecord> out;
  for (std::size_t k = 0; k < pairs; ++k) {
    const GroupElement x = g.random_element(rng);
    const GroupElement a = g.random_element(rng);
    auto r = check_continuity_modulus(g, irrep, x, a);
    r.group = g.name();
    r.seed = seed;
    r.index = k;
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- suite

std::uint64_t item_seed(std::uint64_t master, std::size_t group_index, std::size_t item) {
  return splitmix64(splitmix64(splitmix64(master) ^ group_index) ^ item);
}

namespace {

struct ExponentGrid {
  std::vector<std::pair<double, double>> monotone;
  std::vector<double> alphas;
  std::vector<std::pair<double, double>> block;
};

ExponentGrid exponent_grid(const SuiteConfig& cfg) {
  ExponentGrid e;
  std::vector<double> s = cfg.s_values;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) e.monotone.emplace_back(s[a], s[b]);
  for (const auto& st : cfg.st_pairs) {
    if (std::find(e.monotone.begin(), e.monotone.end(), st) == e.monotone.end()) e.monotone.push_back(st);
    const double alpha = exponents(st.first, st.second).alpha;
    if (std::find(e.alphas.begin(), e.alphas.end(), alpha) == e.alphas.end()) e.alphas.push_back(alpha);
  }
  e.block.emplace_back(1.0, 2.0);
  for (double a : e.alphas) e.block.emplace_back(a, 2.0);
  return e;
}

void stamp(InequalityRecord& r, const std::string& group, std::uint64_t seed, std::size_t index) {
  r.group = group;
  r.seed = seed;
  r.index = index;
}

void run_item(const SuiteConfig& cfg, const SuiteGroup& sg, const SupSampler& sup, const ExponentGrid& grid,
              std::uint64_t seed, std::size_t index, std::vector<InequalityRecord>& out) {
  const GroupSpec& g = sg.group;
  const std::string name = g.name();
  const std::size_t first = out.size();

  const FunctionSample f(sample_on_nodes(
      SpectralFunction(random_band_limited(seed, g, cfg.m, cfg.amplitude, cfg.p_e)), g));
  const auto& c = f.coefficients;

  {
    std::mt19937_64 rng(seed ^ kVectorSalt);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit;
    std::vector<std::complex<double>> x(1 + rng() % 16);
    for (auto& z : x) z = cfg.amplitude.scale * std::complex<double>(normal(rng), normal(rng));
    const double p = 1.0 + 3.0 * unit(rng);
    const double q = unit(rng) < 0.25 ? kInfinity : p + 3.0 * unit(rng);
    for (auto& r : check_vector_norm_comparison(x, p, q)) out.push_back(std::move(r));
  }
  for (const auto& [p, q] : grid.block)
    for (auto& r : check_block_comparison(c, p, q)) out.push_back(std::move(r));
  for (const auto& [s, t] : grid.monotone) out.push_back(check_monotone_embedding(c, sg.gamma, s, t));
  for (double s : cfg.s_values) {
    out.push_back(check_l2_embedding(f, sg.gamma, s));
    out.push_back(check_sup_embedding(f, sg.gamma, s, sup));
  }
  for (double alpha : grid.alphas) out.push_back(check_hausdorff_young(f, alpha));
  for (const auto& [s, t] : cfg.st_pairs)
    for (auto& r : check_lq_embedding(f, sg.gamma, s, t)) out.push_back(std::move(r));
  {
    std::mt19937_64 rng(seed ^ kPairSalt);
    const GroupElement x = g.random_element(rng);
    const GroupElement a = g.random_element(rng);
    for (std::size_t k = 0; k < g.window().size(); ++k) out.push_back(check_continuity_modulus(g, k, x, a));
  }

  for (std::size_t k = first; k < out.size(); ++k) stamp(out[k], name, seed, index);
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& cfg) {
  if (cfg.m < 1) throw std::invalid_argument("suite: m must be >= 1");
  if (cfg.batch_size < 1) throw std::invalid_argument("suite: batch size must be >= 1");
  for (double s : cfg.s_values)
    if (!(s >= 0.0)) throw std::invalid_argument("suite: every s must be >= 0");

  VerificationReport rep;
  rep.m = cfg.m;
  rep.p_e = cfg.p_e;
  rep.batch_size = cfg.batch_size;
  rep.seed = cfg.seed;
  rep.s_values = cfg.s_values;
  rep.st_pairs = cfg.st_pairs;
  rep.tampered = cfg.tamper_rhs_scale != 1.0;

  const ExponentGrid grid = exponent_grid(cfg);
  std::map<std::string, std::size_t> group_rank;
  for (std::size_t gi = 0; gi < cfg.groups.size(); ++gi) {
    const SuiteGroup& sg = cfg.groups[gi];
    if (!(sg.gamma.window() == sg.group.window()))
      throw std::invalid_argument("suite: weight sequence does not match the window of " + sg.group.name());
    rep.groups.push_back(sg.group.name());
    rep.weights.push_back(sg.gamma_label);
    group_rank.emplace(sg.group.name(), gi);
    const SupSampler sup(sg.group, sg.group.is_finite() ? 0 : cfg.extra_samples,
                         item_seed(cfg.seed, gi, static_cast<std::size_t>(-1)));
    for (std::size_t item = 0; item < cfg.batch_size; ++item)
      run_item(cfg, sg, sup, grid, item_seed(cfg.seed, gi, item), item, rep.records);
  }

  if (rep.tampered)
    for (auto& r : rep.records) {
      r.rhs *= cfg.tamper_rhs_scale;
      refresh(r);
    }

  std::stable_sort(rep.records.begin(), rep.records.end(), [&](const auto& a, const auto& b) {
    if (a.name != b.name) return a.name < b.name;
    const auto ga = group_rank.at(a.group), gb = group_rank.at(b.group);
    if (ga != gb) return ga < gb;
    return a.index < b.index;
  });

  for (const auto& r : rep.records) {
    auto [it, fresh] = rep.summary.try_emplace(r.name);
    InequalitySummary& s = it->second;
    if (fresh || r.slack < s.min_slack) {
      s.min_slack = r.slack;
      s.min_slack_group = r.group;
      s.min_slack_seed = r.seed;
    }
    ++s.count;
    if (!r.pass) {
      if (r.hypothesis_sensitive)
        ++s.sensitive_failures;
      else {
        ++s.failures;
        rep.all_pass = false;
      }
    }
  }
  return rep;
}

}  // namespace pwsob
