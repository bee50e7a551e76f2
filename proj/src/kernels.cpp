#include "pwsob/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pwsob::kernels {
namespace {

struct Table {
  Backend backend;
  std::complex<double> (*cdot)(std::span<const double>, CSpan, CSpan);
  void (*axpy)(std::complex<double>, CSpan, CSpanMut);
  double (*sum_sq)(std::span<const double>, CSpan);
  double (*sum)(std::span<const double>, std::span<const double>);
};

constexpr Table kScalar{Backend::Scalar, scalar::weighted_cdot_conj, scalar::caxpy,
                        scalar::weighted_sum_sq, scalar::weighted_sum};

#if defined(PWSOB_HAVE_AVX2_TU)
constexpr Table kAvx2{Backend::Avx2, avx2::weighted_cdot_conj, avx2::caxpy,
                      avx2::weighted_sum_sq, avx2::weighted_sum};
#endif

const Table* initial_table() {
  const char* env = std::getenv("PWSOB_SIMD");
  if (env != nullptr && std::string(env) == "scalar") return &kScalar;
#if defined(PWSOB_HAVE_AVX2_TU)
  if (avx2_supported()) return &kAvx2;
#endif
  return &kScalar;
}

const Table*& table() {
  static const Table* t = initial_table();
  return t;
}

}  // namespace

bool avx2_supported() {
#if defined(PWSOB_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Backend active_backend() { return table()->backend; }

void set_backend(Backend b) {
  if (b == Backend::Scalar) {
    table() = &kScalar;
    return;
  }
#if defined(PWSOB_HAVE_AVX2_TU)
  if (avx2_supported()) {
    table() = &kAvx2;
    return;
  }
#endif
  throw std::invalid_argument("AVX2 backend requested but not supported on this CPU");
}

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

std::complex<double> weighted_cdot_conj(std::span<const double> w, CSpan a, CSpan b) {
  return table()->cdot(w, a, b);
}

void caxpy(std::complex<double> alpha, CSpan x, CSpanMut y) { table()->axpy(alpha, x, y); }

double weighted_sum_sq(std::span<const double> w, CSpan z) { return table()->sum_sq(w, z); }

double weighted_sum(std::span<const double> w, std::span<const double> v) {
  return table()->sum(w, v);
}

}  // namespace pwsob::kernels
