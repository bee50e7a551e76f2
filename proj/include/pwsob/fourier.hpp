#pragma once
// Vector-valued Fourier transform on a compact group, E = C^m.
//
// For each irrep sigma the coefficient block is C_sigma[i][j] in E, the value
// of the sesquilinear transform on the basis pair (e_j, e_i):
//   C_sigma[i][j] = integral conj(u^sigma_{i,j}(x)) f(x) dx
//   f(x)          = sum_sigma d_sigma sum_{i,j} C_sigma[i][j] u^sigma_{i,j}(x)

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pwsob/group.hpp"

namespace pwsob {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// l^p norm of a vector in C^m, p in [1, inf].
double e_norm(std::span<const std::complex<double>> v, double p);

class FourierCoefficients {
 public:
  /// All-zero coefficients over the window of g.
  FourierCoefficients(GroupSpec g, int m, double p_e = 2.0);

  const GroupSpec& group() const { return group_; }
  const DualWindow& window() const { return group_.window(); }
  int m() const { return m_; }
  double p_e() const { return p_e_; }

  /// The E-vector C_sigma[i][j] (zero-based).
  std::span<std::complex<double>> entry(std::size_t irrep, int i, int j);
  std::span<const std::complex<double>> entry(std::size_t irrep, int i, int j) const;
  /// The E-vector stored in coefficient slot `slot` (see DualWindow::offset).
  std::span<std::complex<double>> slot(std::size_t slot);
  std::span<const std::complex<double>> slot(std::size_t slot) const;

  std::span<const std::complex<double>> data() const { return data_; }
  std::span<std::complex<double>> data() { return data_; }

  bool block_is_zero(std::size_t irrep) const;

  FourierCoefficients& operator+=(const FourierCoefficients& other);
  FourierCoefficients& operator*=(std::complex<double> a);

 private:
  GroupSpec group_;
  int m_;
  double p_e_;
  std::vector<std::complex<double>> data_;  // [slot][component]
};

FourierCoefficients operator+(FourierCoefficients a, const FourierCoefficients& b);
FourierCoefficients operator*(std::complex<double> a, FourierCoefficients c);

/// E-valued function sampled on the quadrature nodes of its group.
/// Storage is split-complex and component-major: component c occupies
/// [c * nodes, (c + 1) * nodes).
class SampledFunction {
 public:
  SampledFunction(GroupSpec g, int m, double p_e = 2.0);

  static SampledFunction from_callable(
      GroupSpec g, int m, const std::function<std::vector<std::complex<double>>(const GroupElement&)>& f,
      double p_e = 2.0);

  const GroupSpec& group() const { return group_; }
  int m() const { return m_; }
  double p_e() const { return p_e_; }
  std::size_t nodes() const { return nodes_; }

  kernels::CSpan component(int c) const;
  kernels::CSpanMut component(int c);
  std::vector<std::complex<double>> value(std::size_t node) const;
  void set_value(std::size_t node, std::span<const std::complex<double>> v);

 private:
  GroupSpec group_;
  int m_;
  double p_e_;
  std::size_t nodes_;
  std::vector<double> re_;
  std::vector<double> im_;
};

/// Band-limited function given by its coefficients; evaluable anywhere.
class SpectralFunction {
 public:
  explicit SpectralFunction(FourierCoefficients c) : coefficients_(std::move(c)) {}

  const FourierCoefficients& coefficients() const { return coefficients_; }
  int m() const { return coefficients_.m(); }
  double p_e() const { return coefficients_.p_e(); }
  std::vector<std::complex<double>> evaluate(const GroupElement& x) const;

 private:
  FourierCoefficients coefficients_;
};

using VectorFunction = std::variant<SampledFunction, SpectralFunction>;

/// Values of sum_sigma d_sigma sum_{ij} C_sigma[i][j] u_{ij} at the points of
/// `basis`, split-complex component-major (m * points each).
struct Synthesized {
  std::size_t points = 0;
  std::vector<double> re;
  std::vector<double> im;
};
Synthesized synthesize(const FourierCoefficients& c, const SampleBasis& basis);

/// Samples a function on the quadrature nodes of g (synthesizing if spectral).
SampledFunction sample_on_nodes(const VectorFunction& f, const GroupSpec& g);

FourierCoefficients forward_transform(const VectorFunction& f, const GroupSpec& g);
SpectralFunction inverse_transform(const FourierCoefficients& c, const GroupSpec& g);

/// Per irrep: sum_{ij} ||C_sigma[i][j]||_E^p for finite p, the max entry norm for p = inf.
std::vector<double> block_power_sums(const FourierCoefficients& c, double p);

/// (sum_sigma d_sigma sum_{ij} ||C_sigma[i][j]||_E^p)^{1/p}; p = inf gives the
/// unweighted max entry norm.
double s_p_norm(const FourierCoefficients& c, double p);

struct AmplitudeLaw {
  enum class Kind { Gaussian, Zero, Decay };
  Kind kind = Kind::Gaussian;
  double rate = 0.0;   // Decay: block scale (1 + band)^(-rate)
  double scale = 1.0;  // overall multiplier

  /// "gaussian", "zero", or "decay:<rate>".
  static AmplitudeLaw parse(std::string_view text);
  std::string to_string() const;
};

/// Entries with independent N(0,1) real and imaginary parts per component,
/// shaped by the amplitude law. Deterministic in the seed.
FourierCoefficients random_band_limited(std::uint64_t seed, const GroupSpec& g, int m,
                                        AmplitudeLaw law = {}, double p_e = 2.0);

/// Coefficient JSON: {window: {group, labels}, m, p_E, blocks: {label: [i][j][m] of [re, im]}}.
/// All-zero blocks are omitted on write and read back as zero.
std::string coefficients_to_json(const FourierCoefficients& c);
FourierCoefficients coefficients_from_json(std::string_view text);
/// Same, reusing an already constructed group whose window must match.
FourierCoefficients coefficients_from_json(std::string_view text, const GroupSpec& g);

}  // namespace pwsob
