#pragma once
// Independent reference computations used only by the tests.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

/// exp(-i beta J_y) in the |j m> basis ordered m = j..-j (Condon-Shortley).
inline Eigen::MatrixXd small_d_by_exponential(int two_j, double beta) {
  const int dim = two_j + 1;
  // J_+ |m> = sqrt((j - m)(j + m + 1)) |m + 1>; row r <-> m = j - r.
  Eigen::MatrixXd jplus = Eigen::MatrixXd::Zero(dim, dim);
  const double j = 0.5 * two_j;
  for (int c = 1; c < dim; ++c) {
    const double m = j - c;
    jplus(c - 1, c) = std::sqrt((j - m) * (j + m + 1.0));
  }
  // -i beta J_y = -(beta / 2)(J_+ - J_-), a real antisymmetric matrix.
  const Eigen::MatrixXd gen = -0.5 * beta * (jplus - jplus.transpose());
  return gen.exp();
}

inline Eigen::MatrixXcd big_d_by_exponential(int two_j, double a, double b, double g) {
  const Eigen::MatrixXd d = small_d_by_exponential(two_j, b);
  const int dim = two_j + 1;
  Eigen::MatrixXcd out(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      const double mp = 0.5 * two_j - r;
      const double m = 0.5 * two_j - c;
      out(r, c) = std::exp(std::complex<double>(0.0, -mp * a)) * d(r, c) *
                  std::exp(std::complex<double>(0.0, -m * g));
    }
  return out;
}

/// Direct sum sum_sigma d^3 (1 + gamma^2)^(-s) from explicit lists.
inline double dim_cube_sum(const std::vector<int>& dims, const std::vector<double>& gammas, double s) {
  double total = 0.0;
  for (std::size_t k = 0; k < dims.size(); ++k)
    total += std::pow(static_cast<double>(dims[k]), 3) / std::pow(1.0 + gammas[k] * gammas[k], s);
  return total;
}

}  // namespace oracle
