#pragma once
// Internal interface implemented by each concrete group.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pwsob/group.hpp"

namespace pwsob {

class GroupModel {
 public:
  virtual ~GroupModel() = default;

  virtual DualWindow window() const = 0;
  virtual QuadratureRule quadrature() const = 0;
  virtual CMatrix irrep(std::size_t index, const GroupElement& x) const = 0;
  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement random(std::mt19937_64& rng) const = 0;
  virtual bool finite() const = 0;
};

std::shared_ptr<const GroupModel> make_cyclic_model(int n);
std::shared_ptr<const GroupModel> make_s3_model();
std::shared_ptr<const GroupModel> make_circle_model(int band);
std::shared_ptr<const GroupModel> make_su2_model(int two_l, bool half_integers);

/// Finite group given by a multiplication table and explicit irrep matrices
/// (one per element, indexed like the table).
struct FiniteIrrepTable {
  IrrepInfo info;
  std::vector<CMatrix> matrices;
};

std::shared_ptr<const GroupModel> make_table_model(std::string name,
                                                   std::vector<std::vector<int>> mult_table,
                                                   std::vector<FiniteIrrepTable> irreps);

// Element accessors that reject the wrong element kind.
const FiniteElement& as_finite(const GroupElement& x, int order);
double as_circle(const GroupElement& x);
const Su2Element& as_su2(const GroupElement& x);

}  // namespace pwsob
