// Compiled with -mavx2 -mfma. Only reached after avx2_supported() returned true.
#include <immintrin.h>

#include "pwsob/kernels.hpp"

namespace pwsob::kernels::avx2 {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

std::complex<double> weighted_cdot_conj(std::span<const double> w, CSpan a, CSpan b) {
  const std::size_t n = w.size();
  __m256d sr = _mm256_setzero_pd();
  __m256d si = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d wk = _mm256_loadu_pd(w.data() + k);
    const __m256d wr = _mm256_mul_pd(wk, _mm256_loadu_pd(a.re.data() + k));
    const __m256d wi = _mm256_mul_pd(wk, _mm256_loadu_pd(a.im.data() + k));
    const __m256d br = _mm256_loadu_pd(b.re.data() + k);
    const __m256d bi = _mm256_loadu_pd(b.im.data() + k);
    sr = _mm256_fmadd_pd(wr, br, sr);
    sr = _mm256_fmadd_pd(wi, bi, sr);
    si = _mm256_fmadd_pd(wr, bi, si);
    si = _mm256_fnmadd_pd(wi, br, si);
  }
  double rr = hsum(sr);
  double ri = hsum(si);
  for (; k < n; ++k) {
    const double wr = w[k] * a.re[k];
    const double wi = w[k] * a.im[k];
    rr += wr * b.re[k] + wi * b.im[k];
    ri += wr * b.im[k] - wi * b.re[k];
  }
  return {rr, ri};
}

void caxpy(std::complex<double> alpha, CSpan x, CSpanMut y) {
  const std::size_t n = x.size();
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d xr = _mm256_loadu_pd(x.re.data() + k);
    const __m256d xi = _mm256_loadu_pd(x.im.data() + k);
    __m256d yr = _mm256_loadu_pd(y.re.data() + k);
    __m256d yi = _mm256_loadu_pd(y.im.data() + k);
    yr = _mm256_fmadd_pd(ar, xr, yr);
    yr = _mm256_fnmadd_pd(ai, xi, yr);
    yi = _mm256_fmadd_pd(ar, xi, yi);
    yi = _mm256_fmadd_pd(ai, xr, yi);
    _mm256_storeu_pd(y.re.data() + k, yr);
    _mm256_storeu_pd(y.im.data() + k, yi);
  }
  for (; k < n; ++k) {
    y.re[k] += alpha.real() * x.re[k] - alpha.imag() * x.im[k];
    y.im[k] += alpha.real() * x.im[k] + alpha.imag() * x.re[k];
  }
}

double weighted_sum_sq(std::span<const double> w, CSpan z) {
  const std::size_t n = w.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d zr = _mm256_loadu_pd(z.re.data() + k);
    const __m256d zi = _mm256_loadu_pd(z.im.data() + k);
    const __m256d mag = _mm256_fmadd_pd(zi, zi, _mm256_mul_pd(zr, zr));
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w.data() + k), mag, acc);
  }
  double s = hsum(acc);
  for (; k < n; ++k) s += w[k] * (z.re[k] * z.re[k] + z.im[k] * z.im[k]);
  return s;
}

double weighted_sum(std::span<const double> w, std::span<const double> v) {
  const std::size_t n = w.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w.data() + k), _mm256_loadu_pd(v.data() + k), acc);
  double s = hsum(acc);
  for (; k < n; ++k) s += w[k] * v[k];
  return s;
}

}  // namespace pwsob::kernels::avx2
