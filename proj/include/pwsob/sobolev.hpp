#pragma once
// Weighted spectral (Bessel-potential) norms, Lebesgue and sup norms on G,
// and the constants of the embedding inequalities.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pwsob/fourier.hpp"
#include "pwsob/group.hpp"

namespace pwsob {

/// gamma(sigma) >= 0 for every irrep of a window.
class WeightSequence {
 public:
  static WeightSequence zero(const DualWindow& w);
  /// |n| on the circle, sqrt(l(l+1)) on SU(2), zero on finite groups.
  static WeightSequence canonical(const GroupDescriptor& d, const DualWindow& w);
  static WeightSequence canonical(const GroupSpec& g);
  /// Every window label must be present; extra labels are rejected.
  static WeightSequence from_table(const DualWindow& w, const std::map<std::string, double>& table);
  /// JSON object {label: value}.
  static WeightSequence from_json(const DualWindow& w, std::string_view text);

  const DualWindow& window() const { return window_; }
  double operator[](std::size_t irrep) const { return values_[irrep]; }
  std::span<const double> values() const { return values_; }

 private:
  WeightSequence(DualWindow w, std::vector<double> values);

  DualWindow window_;
  std::vector<double> values_;
};

/// (sum_sigma d_sigma (1 + gamma^2)^s sum_{ij} ||C_sigma[i][j]||_E^2)^{1/2}
double h_s_norm(const FourierCoefficients& c, const WeightSequence& gamma, double s);

/// (sum_k w_k ||f(x_k)||_E^p)^{1/p} on the quadrature nodes, finite p >= 1.
double l_p_norm(const VectorFunction& f, const GroupSpec& g, double p);

/// Max of ||f(x)||_E over the nodes plus a fixed set of extra pseudorandom
/// points. A lower bound on the true supremum; exact on finite groups.
class SupSampler {
 public:
  SupSampler(const GroupSpec& g, std::size_t extra_samples, std::uint64_t seed);
  double operator()(const VectorFunction& f) const;
  /// Same, with the node samples and coefficients already at hand.
  double operator()(const SampledFunction& nodes, const FourierCoefficients& c) const;

 private:
  GroupSpec group_;
  SampleBasis extra_;
};

inline constexpr std::size_t kDefaultExtraSamples = 1000;
inline constexpr std::uint64_t kDefaultSupSeed = 0x9e3779b97f4a7c15ULL;

double sup_norm(const VectorFunction& f, const GroupSpec& g,
                std::size_t extra_samples = kDefaultExtraSamples,
                std::uint64_t seed = kDefaultSupSeed);

enum class Verdict { PlausiblySummable, Diverging, Undetermined };
std::string to_string(Verdict v);

struct SummabilityReport {
  std::vector<double> levels;        // distinct band values, ascending
  std::vector<double> level_terms;   // sum of d^3 (1 + gamma^2)^{-s} per level
  std::vector<double> partial_sums;  // cumulative over levels
  std::vector<double> ratios;        // level_terms[k] / level_terms[k-1]
  double tail_exponent = 0.0;        // log-log slope between the last two positive levels
  Verdict verdict = Verdict::Undetermined;
  std::string note;
};

/// Heuristic look at sum_sigma d^3 (1 + gamma^2)^{-s}: terms decaying faster
/// than 1/band count as plausibly summable. Never claims a proof.
SummabilityReport summability_check(const WeightSequence& gamma, double s);

struct EmbeddingConstant {
  double value = 0.0;
  Verdict verdict = Verdict::Undetermined;
};

/// (sum_sigma d_sigma^3 (1 + gamma^2)^{-s})^{1/2} over the window.
EmbeddingConstant embedding_constant_C(const WeightSequence& gamma, double s);

struct SobolevParams {
  double s = 0.0;
  double t = 0.0;
  double alpha = 0.0;        // 2t / (s + t)
  double alpha_prime = 0.0;  // 2t / (t - s)
};

/// Requires t > s > 0.
SobolevParams exponents(double s, double t);

/// (sum_sigma d_sigma^3 (1 + gamma^2)^{-t})^{s / 2t}; requires t > s > 0.
double lq_bound_constant(const WeightSequence& gamma, double t, double s);

}  // namespace pwsob
