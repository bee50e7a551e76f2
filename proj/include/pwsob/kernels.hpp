#pragma once
// Inner-loop kernels for quadrature sums over sampled data.
//
// Complex arrays are passed split (real and imaginary parts in separate
// contiguous buffers). Every kernel has a scalar reference implementation and
// an AVX2/FMA variant; the public entry points dispatch on the active backend,
// which is chosen once at startup from the CPU features and can be forced with
// the PWSOB_SIMD environment variable ("scalar" or "avx2").

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace pwsob::kernels {

enum class Backend { Scalar, Avx2 };

/// Split-complex read-only view.
struct CSpan {
  std::span<const double> re;
  std::span<const double> im;
  std::size_t size() const { return re.size(); }
};

/// Split-complex mutable view.
struct CSpanMut {
  std::span<double> re;
  std::span<double> im;
  std::size_t size() const { return re.size(); }
};

bool avx2_supported();
Backend active_backend();
/// Throws std::invalid_argument when asking for AVX2 on a CPU without it.
void set_backend(Backend b);
std::string_view backend_name(Backend b);

/// sum_k w_k * conj(a_k) * b_k
std::complex<double> weighted_cdot_conj(std::span<const double> w, CSpan a, CSpan b);
/// y += alpha * x
void caxpy(std::complex<double> alpha, CSpan x, CSpanMut y);
/// sum_k w_k * |z_k|^2
double weighted_sum_sq(std::span<const double> w, CSpan z);
/// sum_k w_k * v_k
double weighted_sum(std::span<const double> w, std::span<const double> v);

namespace scalar {
std::complex<double> weighted_cdot_conj(std::span<const double> w, CSpan a, CSpan b);
void caxpy(std::complex<double> alpha, CSpan x, CSpanMut y);
double weighted_sum_sq(std::span<const double> w, CSpan z);
double weighted_sum(std::span<const double> w, std::span<const double> v);
}  // namespace scalar

namespace avx2 {
std::complex<double> weighted_cdot_conj(std::span<const double> w, CSpan a, CSpan b);
void caxpy(std::complex<double> alpha, CSpan x, CSpanMut y);
double weighted_sum_sq(std::span<const double> w, CSpan z);
double weighted_sum(std::span<const double> w, std::span<const double> v);
}  // namespace avx2

}  // namespace pwsob::kernels
