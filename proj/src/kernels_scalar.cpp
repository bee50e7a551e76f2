#include "pwsob/kernels.hpp"

namespace pwsob::kernels::scalar {

std::complex<double> weighted_cdot_conj(std::span<const double> w, CSpan a, CSpan b) {
  double sr = 0.0;
  double si = 0.0;
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double wr = w[k] * a.re[k];
    const double wi = w[k] * a.im[k];
    sr += wr * b.re[k] + wi * b.im[k];
    si += wr * b.im[k] - wi * b.re[k];
  }
  return {sr, si};
}

void caxpy(std::complex<double> alpha, CSpan x, CSpanMut y) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  const std::size_t n = x.size();
  for (std::size_t k = 0; k < n; ++k) {
    y.re[k] += ar * x.re[k] - ai * x.im[k];
    y.im[k] += ar * x.im[k] + ai * x.re[k];
  }
}

double weighted_sum_sq(std::span<const double> w, CSpan z) {
  double s = 0.0;
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) s += w[k] * (z.re[k] * z.re[k] + z.im[k] * z.im[k]);
  return s;
}

double weighted_sum(std::span<const double> w, std::span<const double> v) {
  double s = 0.0;
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) s += w[k] * v[k];
  return s;
}

}  // namespace pwsob::kernels::scalar
