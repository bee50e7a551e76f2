#pragma once

#include <Eigen/Dense>

namespace pwsob {

/// Wigner small-d matrix d^j(beta) for j = two_j / 2, Condon-Shortley phase.
/// Rows and columns are ordered m = j, j-1, ..., -j.
Eigen::MatrixXd wigner_small_d(int two_j, double beta);

/// Full D^j(alpha, beta, gamma) with entries
/// exp(-i m' alpha) d^j_{m' m}(beta) exp(-i m gamma), same ordering as above.
Eigen::MatrixXcd wigner_big_d(int two_j, double alpha, double beta, double gamma);

}  // namespace pwsob
