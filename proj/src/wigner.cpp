#include "pwsob/wigner.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace pwsob {

Eigen::MatrixXd wigner_small_d(int two_j, double beta) {
  if (two_j < 0) throw std::invalid_argument("wigner_small_d: negative j");
  const int dim = two_j + 1;
  std::vector<double> fact(two_j + 2, 1.0);
  for (int k = 1; k < static_cast<int>(fact.size()); ++k) fact[k] = fact[k - 1] * k;

  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  Eigen::MatrixXd d(dim, dim);
  // Work with doubled quantum numbers so half-integers stay integral:
  // j + m' = (two_j + two_mp) / 2 etc.
  for (int r = 0; r < dim; ++r) {
    const int jpmp = two_j - r;  // j + m'
    const int jmmp = r;          // j - m'
    for (int col = 0; col < dim; ++col) {
      const int jpm = two_j - col;  // j + m
      const int jmm = col;          // j - m
      const int m_minus_mp = r - col;  // m - m'
      const double pre = std::sqrt(fact[jpmp] * fact[jmmp] * fact[jpm] * fact[jmm]);
      const int kmin = std::max(0, m_minus_mp);
      const int kmax = std::min(jpm, jmmp);
      double sum = 0.0;
      for (int k = kmin; k <= kmax; ++k) {
        const double denom =
            fact[jpm - k] * fact[k] * fact[jmmp - k] * fact[k - m_minus_mp];
        const int cos_pow = two_j - 2 * k + m_minus_mp;
        const int sin_pow = 2 * k - m_minus_mp;
        const double term = std::pow(c, cos_pow) * std::pow(s, sin_pow) / denom;
        sum += ((k - m_minus_mp) % 2 == 0) ? term : -term;
      }
      d(r, col) = pre * sum;
    }
  }
  return d;
}

Eigen::MatrixXcd wigner_big_d(int two_j, double alpha, double beta, double gamma) {
  const Eigen::MatrixXd d = wigner_small_d(two_j, beta);
  const int dim = two_j + 1;
  Eigen::MatrixXcd out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const double mp = 0.5 * (two_j - 2 * r);
    const std::complex<double> left = std::polar(1.0, -mp * alpha);
    for (int col = 0; col < dim; ++col) {
      const double m = 0.5 * (two_j - 2 * col);
      out(r, col) = left * d(r, col) * std::polar(1.0, -m * gamma);
    }
  }
  return out;
}

}  // namespace pwsob
