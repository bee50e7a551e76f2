#include <algorithm>
#include <cmath>
#include <numbers>

#include "group_model.hpp"
#include "pwsob/error.hpp"
#include "pwsob/quadrature.hpp"
#include "pwsob/wigner.hpp"

namespace pwsob {

namespace {
constexpr double kPi = std::numbers::pi;

double wrap(double a, double period) {
  double r = std::fmod(a, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}
}  // namespace

Eigen::Matrix2cd su2_matrix(const Su2Element& g) {
  const double c = std::cos(0.5 * g.beta);
  const double s = std::sin(0.5 * g.beta);
  const std::complex<double> a = std::polar(c, -0.5 * (g.alpha + g.gamma));
  const std::complex<double> b = -std::polar(s, -0.5 * (g.alpha - g.gamma));
  Eigen::Matrix2cd m;
  m << a, b, -std::conj(b), std::conj(a);
  return m;
}

Su2Element su2_from_matrix(const Eigen::Matrix2cd& u) {
  const std::complex<double> a = u(0, 0);
  const std::complex<double> b = u(0, 1);
  const double abs_a = std::abs(a);
  const double abs_b = std::abs(b);
  Su2Element g;
  g.beta = 2.0 * std::atan2(abs_b, abs_a);
  // a = |a| e^{-i(alpha+gamma)/2}, -b = |b| e^{-i(alpha-gamma)/2}
  const double sum = abs_a > 1e-300 ? -2.0 * std::arg(a) : 0.0;
  const double diff = abs_b > 1e-300 ? -2.0 * std::arg(-b) : 0.0;
  double alpha = 0.5 * (sum + diff);
  double gamma = 0.5 * (sum - diff);
  // Shifting alpha by 2 pi negates the matrix; compensate on gamma.
  const double turns = std::floor(alpha / (2.0 * kPi));
  alpha -= turns * 2.0 * kPi;
  if (static_cast<long long>(turns) % 2 != 0) gamma += 2.0 * kPi;
  g.alpha = wrap(alpha, 2.0 * kPi);
  g.gamma = wrap(gamma, 4.0 * kPi);
  return g;
}

namespace {

// Irreps D^l for l = 0, 1, ..., L (or 0, 1/2, 1, ... with half_integers).
// Quadrature: uniform alpha (4L+2 points), uniform gamma over [0, 2pi) with
// 4L+2 points or over [0, 4pi) with 8L+2 points when half-integers are on,
// and 2L+1 Gauss-Legendre nodes in cos(beta).
class Su2Model final : public GroupModel {
 public:
  Su2Model(int two_l, bool half) : two_l_(two_l), half_(half) {}

  DualWindow window() const override {
    std::vector<IrrepInfo> irreps;
    const int step = half_ ? 1 : 2;
    for (int tj = 0; tj <= two_l_; tj += step) {
      const std::string label = tj % 2 == 0 ? std::to_string(tj / 2) : std::to_string(tj) + "/2";
      irreps.push_back({label, tj + 1, 0.5 * tj});
    }
    GroupDescriptor d;
    d.kind = GroupKind::Su2;
    d.su2_two_l = two_l_;
    d.half_integers = half_;
    return DualWindow(d.to_string(), std::move(irreps), 0.5 * two_l_, false);
  }

  QuadratureRule quadrature() const override {
    const int n_alpha = 2 * two_l_ + 2;
    const int n_gamma = half_ ? 4 * two_l_ + 2 : 2 * two_l_ + 2;
    const double gamma_period = half_ ? 4.0 * kPi : 2.0 * kPi;
    const GaussLegendre gl = gauss_legendre(two_l_ + 1);
    QuadratureRule q;
    const double base = 1.0 / (static_cast<double>(n_alpha) * n_gamma);
    for (int ia = 0; ia < n_alpha; ++ia) {
      const double alpha = 2.0 * kPi * ia / n_alpha;
      for (std::size_t ib = 0; ib < gl.nodes.size(); ++ib) {
        const double beta = std::acos(gl.nodes[ib]);
        for (int ig = 0; ig < n_gamma; ++ig) {
          q.nodes.emplace_back(Su2Element{alpha, beta, gamma_period * ig / n_gamma});
          q.weights.push_back(base * 0.5 * gl.weights[ib]);
        }
      }
    }
    return q;
  }

  CMatrix irrep(std::size_t index, const GroupElement& x) const override {
    const Su2Element& g = as_su2(x);
    const int tj = half_ ? static_cast<int>(index) : 2 * static_cast<int>(index);
    if (tj > two_l_) throw Error("su2 irrep index out of range");
    return wigner_big_d(tj, g.alpha, g.beta, g.gamma);
  }

  GroupElement identity() const override { return Su2Element{}; }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    Su2Element g = su2_from_matrix(su2_matrix(as_su2(a)) * su2_matrix(as_su2(b)));
    // integer-spin irreps do not see gamma -> gamma + 2 pi
    if (!half_) g.gamma = wrap(g.gamma, 2.0 * kPi);
    return g;
  }

  GroupElement random(std::mt19937_64& rng) const override {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Su2Element g;
    g.alpha = 2.0 * kPi * unit(rng);
    g.beta = std::acos(std::clamp(2.0 * unit(rng) - 1.0, -1.0, 1.0));
    g.gamma = (half_ ? 4.0 : 2.0) * kPi * unit(rng);
    return g;
  }

  bool finite() const override { return false; }

 private:
  int two_l_;
  bool half_;
};

}  // namespace

std::shared_ptr<const GroupModel> make_su2_model(int two_l, bool half_integers) {
  if (two_l < 0) throw ConfigError("band limit must be >= 0");
  if (!half_integers && two_l % 2 != 0)
    throw ConfigError("half-integer su2 band requires half-integer irreps");
  return std::make_shared<Su2Model>(two_l, half_integers);
}

}  // namespace pwsob
