#include "pwsob/fourier.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "pwsob/error.hpp"

namespace pwsob {

double e_norm(std::span<const std::complex<double>> v, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("E-norm exponent must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
  }
  double s = 0.0;
  for (const auto& z : v) s += std::pow(std::abs(z), p);
  return std::pow(s, 1.0 / p);
}

// ---------------------------------------------------------------- coefficients

FourierCoefficients::FourierCoefficients(GroupSpec g, int m, double p_e)
    : group_(std::move(g)), m_(m), p_e_(p_e) {
  if (m < 1) throw std::invalid_argument("E dimension m must be >= 1");
  if (!(p_e >= 1.0)) throw std::invalid_argument("p_E must be >= 1");
  data_.assign(window().coefficient_count() * static_cast<std::size_t>(m), 0.0);
}

std::span<std::complex<double>> FourierCoefficients::slot(std::size_t s) {
  return std::span(data_).subspan(s * m_, m_);
}

std::span<const std::complex<double>> FourierCoefficients::slot(std::size_t s) const {
  return std::span(data_).subspan(s * m_, m_);
}

std::span<std::complex<double>> FourierCoefficients::entry(std::size_t irrep, int i, int j) {
  const int d = window()[irrep].dim;
  if (i < 0 || j < 0 || i >= d || j >= d) throw std::out_of_range("coefficient index out of range");
  return slot(window().offset(irrep) + static_cast<std::size_t>(i * d + j));
}

std::span<const std::complex<double>> FourierCoefficients::entry(std::size_t irrep, int i,
                                                                 int j) const {
  const int d = window()[irrep].dim;
  if (i < 0 || j < 0 || i >= d || j >= d) throw std::out_of_range("coefficient index out of range");
  return slot(window().offset(irrep) + static_cast<std::size_t>(i * d + j));
}

bool FourierCoefficients::block_is_zero(std::size_t irrep) const {
  const std::size_t d = window()[irrep].dim;
  const std::size_t begin = window().offset(irrep) * m_;
  for (std::size_t k = begin; k < begin + d * d * m_; ++k)
    if (data_[k] != 0.0) return false;
  return true;
}

FourierCoefficients& FourierCoefficients::operator+=(const FourierCoefficients& other) {
  if (!(window() == other.window()) || m_ != other.m_)
    throw Error("cannot add coefficients over different windows");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

FourierCoefficients& FourierCoefficients::operator*=(std::complex<double> a) {
  for (auto& z : data_) z *= a;
  return *this;
}

FourierCoefficients operator+(FourierCoefficients a, const FourierCoefficients& b) {
  a += b;
  return a;
}

FourierCoefficients operator*(std::complex<double> a, FourierCoefficients c) {
  c *= a;
  return c;
}

// ---------------------------------------------------------------- sampled

SampledFunction::SampledFunction(GroupSpec g, int m, double p_e)
    : group_(std::move(g)), m_(m), p_e_(p_e), nodes_(group_.quadrature().size()) {
  if (m < 1) throw std::invalid_argument("E dimension m must be >= 1");
  if (!(p_e >= 1.0)) throw std::invalid_argument("p_E must be >= 1");
  re_.assign(nodes_ * m, 0.0);
  im_.assign(nodes_ * m, 0.0);
}

SampledFunction SampledFunction::from_callable(
    GroupSpec g, int m,
    const std::function<std::vector<std::complex<double>>(const GroupElement&)>& f, double p_e) {
  SampledFunction out(std::move(g), m, p_e);
  const auto& nodes = out.group().quadrature().nodes;
  for (std::size_t k = 0; k < nodes.size(); ++k) out.set_value(k, f(nodes[k]));
  return out;
}

kernels::CSpan SampledFunction::component(int c) const {
  return {std::span<const double>(re_).subspan(c * nodes_, nodes_),
          std::span<const double>(im_).subspan(c * nodes_, nodes_)};
}

kernels::CSpanMut SampledFunction::component(int c) {
  return {std::span<double>(re_).subspan(c * nodes_, nodes_),
          std::span<double>(im_).subspan(c * nodes_, nodes_)};
}

std::vector<std::complex<double>> SampledFunction::value(std::size_t node) const {
  std::vector<std::complex<double>> v(m_);
  for (int c = 0; c < m_; ++c) v[c] = {re_[c * nodes_ + node], im_[c * nodes_ + node]};
  return v;
}

void SampledFunction::set_value(std::size_t node, std::span<const std::complex<double>> v) {
  if (static_cast<int>(v.size()) != m_) throw Error("value has wrong E dimension");
  for (int c = 0; c < m_; ++c) {
    re_[c * nodes_ + node] = v[c].real();
    im_[c * nodes_ + node] = v[c].imag();
  }
}

// ---------------------------------------------------------------- spectral

std::vector<std::complex<double>> SpectralFunction::evaluate(const GroupElement& x) const {
  const auto& c = coefficients_;
  const auto& w = c.window();
  std::vector<std::complex<double>> out(c.m(), 0.0);
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (c.block_is_zero(s)) continue;
    const CMatrix mat = c.group().irrep_matrix(s, x);
    const int d = w[s].dim;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const std::complex<double> u = static_cast<double>(d) * mat(j, i);
        const auto e = c.entry(s, i, j);
        for (int k = 0; k < c.m(); ++k) out[k] += e[k] * u;
      }
  }
  return out;
}

Synthesized synthesize(const FourierCoefficients& c, const SampleBasis& basis) {
  const auto& w = c.window();
  if (basis.coefficients() != w.coefficient_count())
    throw Error("sample basis does not match the coefficient window");
  Synthesized out;
  out.points = basis.points();
  out.re.assign(out.points * c.m(), 0.0);
  out.im.assign(out.points * c.m(), 0.0);
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (c.block_is_zero(s)) continue;
    const double d = w[s].dim;
    const std::size_t slots = static_cast<std::size_t>(w[s].dim) * w[s].dim;
    for (std::size_t k = 0; k < slots; ++k) {
      const std::size_t slot = w.offset(s) + k;
      const auto e = c.slot(slot);
      for (int comp = 0; comp < c.m(); ++comp) {
        if (e[comp] == 0.0) continue;
        kernels::CSpanMut y{std::span(out.re).subspan(comp * out.points, out.points),
                            std::span(out.im).subspan(comp * out.points, out.points)};
        kernels::caxpy(d * e[comp], basis.column(slot), y);
      }
    }
  }
  return out;
}

SampledFunction sample_on_nodes(const VectorFunction& f, const GroupSpec& g) {
  if (const auto* sampled = std::get_if<SampledFunction>(&f)) {
    if (!(sampled->group().window() == g.window()) || sampled->nodes() != g.quadrature().size())
      throw Error("sampled function does not live on the quadrature nodes of " + g.name());
    return *sampled;
  }
  const auto& spectral = std::get<SpectralFunction>(f);
  if (!(spectral.coefficients().window() == g.window()))
    throw Error("window mismatch between coefficients and group " + g.name());
  const Synthesized syn = synthesize(spectral.coefficients(), g.node_basis());
  SampledFunction out(g, spectral.m(), spectral.p_e());
  for (int comp = 0; comp < spectral.m(); ++comp) {
    auto dst = out.component(comp);
    std::copy_n(syn.re.begin() + comp * syn.points, syn.points, dst.re.begin());
    std::copy_n(syn.im.begin() + comp * syn.points, syn.points, dst.im.begin());
  }
  return out;
}

FourierCoefficients forward_transform(const VectorFunction& f, const GroupSpec& g) {
  const SampledFunction samples = sample_on_nodes(f, g);
  FourierCoefficients c(g, samples.m(), samples.p_e());
  const auto& basis = g.node_basis();
  const std::span<const double> w = g.quadrature().weights;
  for (std::size_t slot = 0; slot < c.window().coefficient_count(); ++slot) {
    auto e = c.slot(slot);
    for (int comp = 0; comp < samples.m(); ++comp)
      e[comp] = kernels::weighted_cdot_conj(w, basis.column(slot), samples.component(comp));
  }
  return c;
}

SpectralFunction inverse_transform(const FourierCoefficients& c, const GroupSpec& g) {
  if (!(c.window() == g.window()))
    throw Error("window mismatch: coefficients over " + c.window().group_name() +
                ", group " + g.name());
  return SpectralFunction(c);
}

std::vector<double> block_power_sums(const FourierCoefficients& c, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("block_power_sums: p must be >= 1");
  const auto& w = c.window();
  const bool squares = p == 2.0 && c.p_e() == 2.0;
  std::vector<double> sums(w.size(), 0.0);
  for (std::size_t s = 0; s < w.size(); ++s) {
    const std::size_t slots = static_cast<std::size_t>(w[s].dim) * w[s].dim;
    double acc = 0.0;
    for (std::size_t k = 0; k < slots; ++k) {
      const auto e = c.slot(w.offset(s) + k);
      if (squares) {
        for (const auto& z : e) acc += std::norm(z);
      } else if (std::isinf(p)) {
        acc = std::max(acc, e_norm(e, c.p_e()));
      } else {
        acc += std::pow(e_norm(e, c.p_e()), p);
      }
    }
    sums[s] = acc;
  }
  return sums;
}

double s_p_norm(const FourierCoefficients& c, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("s_p_norm: p must be >= 1");
  const auto& w = c.window();
  const std::vector<double> blocks = block_power_sums(c, p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (double b : blocks) m = std::max(m, b);
    return m;
  }
  double total = 0.0;
  for (std::size_t s = 0; s < w.size(); ++s) total += w[s].dim * blocks[s];
  return p == 2.0 ? std::sqrt(total) : std::pow(total, 1.0 / p);
}

// ---------------------------------------------------------------- random

AmplitudeLaw AmplitudeLaw::parse(std::string_view text) {
  AmplitudeLaw law;
  if (text == "gaussian") return law;
  if (text == "zero") {
    law.kind = Kind::Zero;
    return law;
  }
  if (text.starts_with("decay:")) {
    law.kind = Kind::Decay;
    try {
      law.rate = std::stod(std::string(text.substr(6)));
    } catch (const std::exception&) {
      throw ConfigError("invalid decay rate in amplitude law '" + std::string(text) + "'");
    }
    return law;
  }
  throw ConfigError("unknown amplitude law '" + std::string(text) + "'");
}

std::string AmplitudeLaw::to_string() const {
  switch (kind) {
    case Kind::Gaussian: return "gaussian";
    case Kind::Zero: return "zero";
    case Kind::Decay: return "decay:" + std::to_string(rate);
  }
  return "?";
}

FourierCoefficients random_band_limited(std::uint64_t seed, const GroupSpec& g, int m,
                                        AmplitudeLaw law, double p_e) {
  FourierCoefficients c(g, m, p_e);
  if (law.kind == AmplitudeLaw::Kind::Zero) return c;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto& w = g.window();
  for (std::size_t s = 0; s < w.size(); ++s) {
    double factor = law.scale;
    if (law.kind == AmplitudeLaw::Kind::Decay) factor *= std::pow(1.0 + w[s].band, -law.rate);
    const std::size_t slots = static_cast<std::size_t>(w[s].dim) * w[s].dim;
    for (std::size_t k = 0; k < slots; ++k)
      for (auto& z : c.slot(w.offset(s) + k)) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = {factor * re, factor * im};
      }
  }
  return c;
}

}  // namespace pwsob
