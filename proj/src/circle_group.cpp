#include <cmath>
#include <numbers>

#include "group_model.hpp"
#include "pwsob/error.hpp"

namespace pwsob {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Characters e^{i n x}, n = -band..band; uniform grid of 4*band+1 nodes, exact
// for trigonometric polynomials of degree <= 2*band.
class CircleModel final : public GroupModel {
 public:
  explicit CircleModel(int band) : band_(band) {}

  DualWindow window() const override {
    std::vector<IrrepInfo> irreps;
    for (int n = -band_; n <= band_; ++n)
      irreps.push_back({std::to_string(n), 1, static_cast<double>(std::abs(n))});
    return DualWindow("circle:" + std::to_string(band_), std::move(irreps), band_, false);
  }

  QuadratureRule quadrature() const override {
    const int m = 4 * band_ + 1;
    QuadratureRule q;
    for (int k = 0; k < m; ++k) {
      q.nodes.emplace_back(CircleElement{kTwoPi * k / m});
      q.weights.push_back(1.0 / m);
    }
    return q;
  }

  CMatrix irrep(std::size_t index, const GroupElement& x) const override {
    const int n = static_cast<int>(index) - band_;
    CMatrix m(1, 1);
    m(0, 0) = std::polar(1.0, n * as_circle(x));
    return m;
  }

  GroupElement identity() const override { return CircleElement{0.0}; }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    return CircleElement{wrap_angle(as_circle(a) + as_circle(b))};
  }

  GroupElement random(std::mt19937_64& rng) const override {
    return CircleElement{std::uniform_real_distribution<double>(0.0, kTwoPi)(rng)};
  }

  bool finite() const override { return false; }

 private:
  int band_;
};

}  // namespace

std::shared_ptr<const GroupModel> make_circle_model(int band) {
  if (band < 0) throw ConfigError("band limit must be >= 0");
  return std::make_shared<CircleModel>(band);
}

}  // namespace pwsob
