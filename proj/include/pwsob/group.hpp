#pragma once
// Compact groups with a truncated unitary dual and a Haar quadrature rule.
//
// Matrix coefficients use the standard coordinate basis of each irrep and the
// inner product <a, b> = sum_k a_k conj(b_k), so
//   u^sigma_{i,j}(x) = <sigma(x) e_i, e_j> = sigma(x)(j, i).
// All indices in this API are zero-based.

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "pwsob/kernels.hpp"

namespace pwsob {

using CMatrix = Eigen::MatrixXcd;

struct FiniteElement {
  int index = 0;
  friend bool operator==(const FiniteElement&, const FiniteElement&) = default;
};

/// Angle in [0, 2 pi).
struct CircleElement {
  double angle = 0.0;
};

/// ZYZ Euler angles: alpha in [0, 2 pi), beta in [0, pi], gamma in [0, 4 pi).
struct Su2Element {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

using GroupElement = std::variant<FiniteElement, CircleElement, Su2Element>;

/// The 2x2 matrix [[a, b], [-conj(b), conj(a)]] of an SU(2) element.
Eigen::Matrix2cd su2_matrix(const Su2Element& g);
/// Inverse of su2_matrix; input must be special unitary.
Su2Element su2_from_matrix(const Eigen::Matrix2cd& u);

enum class GroupKind { Cyclic, S3, Circle, Su2, Custom };

/// Parsed group specification, e.g. "cyclic:12", "s3", "circle:16",
/// "su2:4", "su2:3/2:half", "custom:path/to/group.json".
struct GroupDescriptor {
  GroupKind kind = GroupKind::Cyclic;
  int order = 1;               // cyclic
  int circle_band = 0;         // circle: max |n|
  int su2_two_l = 0;           // su2: 2 * max l
  bool half_integers = false;  // su2
  std::string path;            // custom

  static GroupDescriptor parse(std::string_view text);
  std::string to_string() const;
};

struct IrrepInfo {
  std::string label;
  int dim = 1;
  double band = 0.0;  // group-specific ordering parameter (|n|, l, ...)
};

/// Ordered finite subset of the unitary dual.
class DualWindow {
 public:
  DualWindow() = default;
  DualWindow(std::string group_name, std::vector<IrrepInfo> irreps, double band_limit,
             bool complete);

  const std::string& group_name() const { return group_name_; }
  std::size_t size() const { return irreps_.size(); }
  const IrrepInfo& operator[](std::size_t i) const { return irreps_[i]; }
  std::span<const IrrepInfo> irreps() const { return irreps_; }
  double band_limit() const { return band_limit_; }
  /// True when the window is the entire dual (finite groups).
  bool complete() const { return complete_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws pwsob::Error naming the label when absent.
  std::size_t index_of(std::string_view label) const;

  /// First coefficient slot of irrep i; its block occupies dim^2 slots,
  /// entry (row, col) at offset(i) + row * dim + col.
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  std::size_t coefficient_count() const { return offsets_.back(); }
  std::vector<std::string> labels() const;

  friend bool operator==(const DualWindow& a, const DualWindow& b);

 private:
  std::string group_name_;
  std::vector<IrrepInfo> irreps_;
  std::vector<std::size_t> offsets_{0};
  double band_limit_ = 0.0;
  bool complete_ = false;
};

struct QuadratureRule {
  std::vector<GroupElement> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

/// Values of every matrix coefficient of a window at a list of points.
/// Column c (one per coefficient slot) is contiguous over points.
class SampleBasis {
 public:
  SampleBasis() = default;
  SampleBasis(std::size_t points, std::size_t coefficients);

  std::size_t points() const { return points_; }
  std::size_t coefficients() const { return coefficients_; }
  kernels::CSpan column(std::size_t coef) const;
  kernels::CSpanMut column(std::size_t coef);
  std::complex<double> at(std::size_t point, std::size_t coef) const;

 private:
  std::size_t points_ = 0;
  std::size_t coefficients_ = 0;
  std::vector<double> re_;
  std::vector<double> im_;
};

class GroupModel;

struct GroupOptions {
  bool run_selftest = true;
};

/// Immutable bundle: window, quadrature, irrep evaluators, and the matrix
/// coefficients tabulated on the quadrature nodes. Cheap to copy.
class GroupSpec {
 public:
  const GroupDescriptor& descriptor() const;
  std::string name() const { return descriptor().to_string(); }
  const DualWindow& window() const;
  const QuadratureRule& quadrature() const;
  const SampleBasis& node_basis() const;
  bool is_finite() const;

  CMatrix irrep_matrix(std::size_t irrep, const GroupElement& x) const;
  CMatrix irrep_matrix(std::string_view label, const GroupElement& x) const;
  /// u^sigma_{i,j}(x) with zero-based i, j.
  std::complex<double> matrix_coefficient(std::string_view label, int i, int j,
                                          const GroupElement& x) const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement random_element(std::mt19937_64& rng) const;

  SampleBasis basis_at(std::span<const GroupElement> points) const;

  /// Tabulates the node basis; does not run the orthogonality self-test.
  GroupSpec(std::shared_ptr<const GroupModel> model, GroupDescriptor desc);

 private:
  struct State;
  std::shared_ptr<const State> state_;
};

GroupSpec make_group(const GroupDescriptor& desc, GroupOptions options = {});
GroupSpec make_group(std::string_view spec, GroupOptions options = {});
/// Custom finite group from the JSON document text (see custom_group.cpp for
/// the schema); validated before use.
GroupSpec make_custom_group_from_json(std::string_view json_text, std::string display_path,
                                      GroupOptions options = {});

/// Window only, without quadrature; cheap even for large bands.
DualWindow make_window(const GroupDescriptor& desc);

struct OrthogonalityReport {
  double max_deviation = 0.0;
  std::size_t pairs_checked = 0;
  bool subsampled = false;
  bool pass = false;
};

inline constexpr double kOrthogonalityTolerance = 1e-9;

/// Quadrature of u^sigma_{ij} conj(u^tau_{kl}) against delta / d_sigma over
/// the window. Large windows check all diagonal pairs plus a seeded random
/// subsample of off-diagonal pairs.
OrthogonalityReport orthogonality_selftest(const GroupSpec& g,
                                           double tolerance = kOrthogonalityTolerance);

}  // namespace pwsob
