#include "pwsob/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "pwsob/error.hpp"

namespace pwsob {

// ---------------------------------------------------------------- weights

WeightSequence::WeightSequence(DualWindow w, std::vector<double> values)
    : window_(std::move(w)), values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!std::isfinite(values_[i]) || values_[i] < 0.0)
      throw Error("weight for irrep '" + window_[i].label + "' must be finite and >= 0");
}

WeightSequence WeightSequence::zero(const DualWindow& w) {
  return WeightSequence(w, std::vector<double>(w.size(), 0.0));
}

WeightSequence WeightSequence::canonical(const GroupDescriptor& d, const DualWindow& w) {
  std::vector<double> v(w.size(), 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double band = w[i].band;
    if (d.kind == GroupKind::Circle) v[i] = band;
    if (d.kind == GroupKind::Su2) v[i] = std::sqrt(band * (band + 1.0));
  }
  return WeightSequence(w, std::move(v));
}

WeightSequence WeightSequence::canonical(const GroupSpec& g) {
  return canonical(g.descriptor(), g.window());
}

WeightSequence WeightSequence::from_table(const DualWindow& w,
                                          const std::map<std::string, double>& table) {
  std::vector<double> v(w.size(), 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto it = table.find(w[i].label);
    if (it == table.end())
      throw Error("missing weight for irrep '" + w[i].label + "' of " + w.group_name());
    v[i] = it->second;
  }
  for (const auto& [label, value] : table)
    if (!w.find(label)) throw Error("weight given for label '" + label + "' outside the window");
  return WeightSequence(w, std::move(v));
}

WeightSequence WeightSequence::from_json(const DualWindow& w, std::string_view text) {
  std::map<std::string, double> table;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& [k, v] : doc.items()) table[k] = v.get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("weight table: ") + e.what());
  }
  return from_table(w, table);
}

// ---------------------------------------------------------------- norms

double h_s_norm(const FourierCoefficients& c, const WeightSequence& gamma, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("h_s_norm: s must be >= 0");
  const auto& w = c.window();
  if (!(gamma.window() == w)) throw Error("weight sequence does not cover the coefficient window");
  const std::vector<double> blocks = block_power_sums(c, 2.0);
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double weight = std::pow(1.0 + gamma[i] * gamma[i], s);
    total += w[i].dim * weight * blocks[i];
  }
  return std::sqrt(total);
}

namespace {

std::vector<double> node_norms(const SampledFunction& f) {
  std::vector<double> out(f.nodes());
  std::vector<std::complex<double>> v(f.m());
  for (std::size_t k = 0; k < f.nodes(); ++k) {
    for (int c = 0; c < f.m(); ++c) {
      const auto comp = f.component(c);
      v[c] = {comp.re[k], comp.im[k]};
    }
    out[k] = e_norm(v, f.p_e());
  }
  return out;
}

}  // namespace

double l_p_norm(const VectorFunction& f, const GroupSpec& g, double p) {
  if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("l_p_norm: p must be finite and >= 1");
  const SampledFunction samples = sample_on_nodes(f, g);
  const std::span<const double> w = g.quadrature().weights;
  if (p == 2.0 && samples.p_e() == 2.0) {
    double total = 0.0;
    for (int c = 0; c < samples.m(); ++c) total += kernels::weighted_sum_sq(w, samples.component(c));
    return std::sqrt(total);
  }
  std::vector<double> powers = node_norms(samples);
  for (double& v : powers) v = std::pow(v, p);
  return std::pow(kernels::weighted_sum(w, powers), 1.0 / p);
}

SupSampler::SupSampler(const GroupSpec& g, std::size_t extra_samples, std::uint64_t seed)
    : group_(g) {
  if (g.is_finite()) return;  // the nodes already enumerate G
  std::mt19937_64 rng(seed);
  std::vector<GroupElement> points;
  points.reserve(extra_samples);
  for (std::size_t k = 0; k < extra_samples; ++k) points.push_back(g.random_element(rng));
  extra_ = g.basis_at(points);
}

double SupSampler::operator()(const SampledFunction& nodes, const FourierCoefficients& c) const {
  double best = 0.0;
  for (double v : node_norms(nodes)) best = std::max(best, v);
  if (extra_.points() == 0) return best;
  const Synthesized syn = synthesize(c, extra_);
  std::vector<std::complex<double>> v(c.m());
  for (std::size_t p = 0; p < syn.points; ++p) {
    for (int k = 0; k < c.m(); ++k) v[k] = {syn.re[k * syn.points + p], syn.im[k * syn.points + p]};
    best = std::max(best, e_norm(v, c.p_e()));
  }
  return best;
}

double SupSampler::operator()(const VectorFunction& f) const {
  const SampledFunction nodes = sample_on_nodes(f, group_);
  if (const auto* spectral = std::get_if<SpectralFunction>(&f))
    return (*this)(nodes, spectral->coefficients());
  return (*this)(nodes, forward_transform(nodes, group_));
}

double sup_norm(const VectorFunction& f, const GroupSpec& g, std::size_t extra_samples,
                std::uint64_t seed) {
  return SupSampler(g, extra_samples, seed)(f);
}

// ---------------------------------------------------------------- constants

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PlausiblySummable: return "plausibly summable";
    case Verdict::Diverging: return "diverging";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

double weighted_dim_cubes(const WeightSequence& gamma, double s) {
  const auto& w = gamma.window();
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double d = w[i].dim;
    total += d * d * d * std::pow(1.0 + gamma[i] * gamma[i], -s);
  }
  return total;
}

}  // namespace

SummabilityReport summability_check(const WeightSequence& gamma, double s) {
  const auto& w = gamma.window();
  SummabilityReport r;
  for (const auto& irrep : w.irreps()) r.levels.push_back(irrep.band);
  std::sort(r.levels.begin(), r.levels.end());
  r.levels.erase(std::unique(r.levels.begin(), r.levels.end()), r.levels.end());
  r.level_terms.assign(r.levels.size(), 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto pos = std::lower_bound(r.levels.begin(), r.levels.end(), w[i].band) - r.levels.begin();
    const double d = w[i].dim;
    r.level_terms[pos] += d * d * d * std::pow(1.0 + gamma[i] * gamma[i], -s);
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < r.level_terms.size(); ++k) {
    acc += r.level_terms[k];
    r.partial_sums.push_back(acc);
    if (k > 0) r.ratios.push_back(r.level_terms[k] / r.level_terms[k - 1]);
  }

  if (w.complete()) {
    r.verdict = Verdict::PlausiblySummable;
    r.note = "window is the whole (finite) dual; the series is a finite sum";
    return r;
  }
  std::vector<std::size_t> positive;
  for (std::size_t k = 0; k < r.levels.size(); ++k)
    if (r.levels[k] > 0.0) positive.push_back(k);
  if (positive.size() < 2) {
    r.verdict = Verdict::Undetermined;
    r.note = "fewer than two nonzero band levels in the window";
    return r;
  }
  const std::size_t a = positive[positive.size() - 2];
  const std::size_t b = positive.back();
  r.tail_exponent = std::log(r.level_terms[b] / r.level_terms[a]) / std::log(r.levels[b] / r.levels[a]);
  // Terms ~ band^e with e < -1 decay fast enough for a convergent tail.
  r.verdict = r.tail_exponent < -1.0 ? Verdict::PlausiblySummable : Verdict::Diverging;
  r.note = "tail terms scale like band^" + std::to_string(r.tail_exponent);
  return r;
}

EmbeddingConstant embedding_constant_C(const WeightSequence& gamma, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("embedding_constant_C: s must be >= 0");
  return {std::sqrt(weighted_dim_cubes(gamma, s)), summability_check(gamma, s).verdict};
}

SobolevParams exponents(double s, double t) {
  if (!(s > 0.0) || !(t > s)) throw std::invalid_argument("exponents: need t > s > 0");
  SobolevParams p{s, t, 2.0 * t / (s + t), 2.0 * t / (t - s)};
  if (std::abs(1.0 / p.alpha + 1.0 / p.alpha_prime - 1.0) > 1e-12)
    throw std::logic_error("exponents: conjugacy check failed");
  return p;
}

double lq_bound_constant(const WeightSequence& gamma, double t, double s) {
  if (!(s > 0.0) || !(t > s)) throw std::invalid_argument("lq_bound_constant: need t > s > 0");
  return std::pow(weighted_dim_cubes(gamma, t), s / (2.0 * t));
}

}  // namespace pwsob
