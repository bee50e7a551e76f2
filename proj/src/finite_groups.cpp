#include <array>
#include <cmath>
#include <numbers>

#include "group_model.hpp"
#include "pwsob/error.hpp"

namespace pwsob {
namespace {

class CyclicModel final : public GroupModel {
 public:
  explicit CyclicModel(int n) : n_(n) {}

  DualWindow window() const override {
    std::vector<IrrepInfo> irreps;
    for (int k = 0; k < n_; ++k) irreps.push_back({std::to_string(k), 1, static_cast<double>(k)});
    return DualWindow("cyclic:" + std::to_string(n_), std::move(irreps), n_ - 1, true);
  }

  QuadratureRule quadrature() const override {
    QuadratureRule q;
    for (int x = 0; x < n_; ++x) {
      q.nodes.emplace_back(FiniteElement{x});
      q.weights.push_back(1.0 / n_);
    }
    return q;
  }

  CMatrix irrep(std::size_t k, const GroupElement& x) const override {
    const int xi = as_finite(x, n_).index;
    // reduce k*x mod n first so the phase argument stays small
    const long long kx = (static_cast<long long>(k) * xi) % n_;
    CMatrix m(1, 1);
    m(0, 0) = character(kx);
    return m;
  }

  GroupElement identity() const override { return FiniteElement{0}; }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    return FiniteElement{(as_finite(a, n_).index + as_finite(b, n_).index) % n_};
  }

  GroupElement random(std::mt19937_64& rng) const override {
    return FiniteElement{std::uniform_int_distribution<int>(0, n_ - 1)(rng)};
  }

  bool finite() const override { return true; }

 private:
  // exp(2 pi i r / n), exact at the quarter turns
  std::complex<double> character(long long r) const {
    if ((4 * r) % n_ == 0) {
      switch ((4 * r / n_) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
      }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / n_);
  }

  int n_;
};

class TableModel final : public GroupModel {
 public:
  TableModel(std::string name, std::vector<std::vector<int>> table,
             std::vector<FiniteIrrepTable> irreps)
      : name_(std::move(name)), table_(std::move(table)), irreps_(std::move(irreps)) {
    const int n = order();
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw Error(name_ + ": multiplication table has no identity element");
  }

  DualWindow window() const override {
    std::vector<IrrepInfo> infos;
    std::size_t dim_sq = 0;
    for (const auto& r : irreps_) {
      infos.push_back(r.info);
      dim_sq += static_cast<std::size_t>(r.info.dim) * r.info.dim;
    }
    return DualWindow(name_, std::move(infos), 0.0, dim_sq == static_cast<std::size_t>(order()));
  }

  QuadratureRule quadrature() const override {
    QuadratureRule q;
    for (int x = 0; x < order(); ++x) {
      q.nodes.emplace_back(FiniteElement{x});
      q.weights.push_back(1.0 / order());
    }
    return q;
  }

  CMatrix irrep(std::size_t index, const GroupElement& x) const override {
    return irreps_.at(index).matrices[as_finite(x, order()).index];
  }

  GroupElement identity() const override { return FiniteElement{identity_}; }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    return FiniteElement{table_[as_finite(a, order()).index][as_finite(b, order()).index]};
  }

  GroupElement random(std::mt19937_64& rng) const override {
    return FiniteElement{std::uniform_int_distribution<int>(0, order() - 1)(rng)};
  }

  bool finite() const override { return true; }

 private:
  int order() const { return static_cast<int>(table_.size()); }

  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<FiniteIrrepTable> irreps_;
  int identity_ = 0;
};

}  // namespace

std::shared_ptr<const GroupModel> make_cyclic_model(int n) {
  if (n < 1) throw ConfigError("cyclic order must be >= 1");
  return std::make_shared<CyclicModel>(n);
}

std::shared_ptr<const GroupModel> make_table_model(std::string name,
                                                   std::vector<std::vector<int>> mult_table,
                                                   std::vector<FiniteIrrepTable> irreps) {
  return std::make_shared<TableModel>(std::move(name), std::move(mult_table), std::move(irreps));
}

std::shared_ptr<const GroupModel> make_s3_model() {
  // Elements are permutations p of {0,1,2} (p[i] is the image of i),
  // composed as (a*b)(i) = a(b(i)). Element 0 is the identity.
  using Perm = std::array<int, 3>;
  const std::array<Perm, 6> elems{{
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1},
  }};
  auto index_of = [&](const Perm& p) {
    for (int k = 0; k < 6; ++k)
      if (elems[k] == p) return k;
    return -1;
  };

  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Perm c{};
      for (int i = 0; i < 3; ++i) c[i] = elems[a][elems[b][i]];
      table[a][b] = index_of(c);
    }

  // Standard rep: permutation matrices restricted to the plane orthogonal to
  // (1,1,1), in the orthonormal basis (1,-1,0)/sqrt2, (1,1,-2)/sqrt6.
  Eigen::Matrix<double, 3, 2> basis;
  basis << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),
      -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),
      0.0, -2.0 / std::sqrt(6.0);

  FiniteIrrepTable triv{{"triv", 1, 0.0}, {}};
  FiniteIrrepTable sign{{"sign", 1, 1.0}, {}};
  FiniteIrrepTable std_rep{{"std", 2, 2.0}, {}};
  for (const Perm& p : elems) {
    Eigen::Matrix3d perm = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 3; ++i) perm(p[i], i) = 1.0;
    triv.matrices.push_back(CMatrix::Identity(1, 1));
    CMatrix s(1, 1);
    s(0, 0) = perm.determinant();
    sign.matrices.push_back(s);
    const Eigen::Matrix2d r = basis.transpose() * perm * basis;
    std_rep.matrices.push_back(r.cast<std::complex<double>>());
  }
  return make_table_model("s3", std::move(table), {triv, sign, std_rep});
}

}  // namespace pwsob
