#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "group_model.hpp"
#include "pwsob/error.hpp"

namespace pwsob {

// ---------------------------------------------------------------- descriptor

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ConfigError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

// "3", "3/2", "1.5" -> twice the value, which must be an integer.
int parse_twice(std::string_view s) {
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    if (s.substr(slash + 1) != "2") throw ConfigError("su2 band must be k or k/2: '" + std::string(s) + "'");
    return parse_int(s.substr(0, slash), "su2 band");
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ConfigError("invalid su2 band: '" + std::string(s) + "'");
  const double twice = 2.0 * v;
  if (std::abs(twice - std::round(twice)) > 1e-12)
    throw ConfigError("su2 band must be a multiple of 1/2: '" + std::string(s) + "'");
  return static_cast<int>(std::lround(twice));
}

std::vector<std::string_view> split_colon(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  GroupDescriptor d;
  if (text.starts_with("custom:")) {
    d.kind = GroupKind::Custom;
    d.path = std::string(text.substr(7));
    if (d.path.empty()) throw ConfigError("custom group needs a file path");
    return d;
  }
  const auto parts = split_colon(text);
  const std::string_view kind = parts[0];
  if (kind == "cyclic" || kind == "z") {
    if (parts.size() != 2) throw ConfigError("expected cyclic:N, got '" + std::string(text) + "'");
    d.kind = GroupKind::Cyclic;
    d.order = parse_int(parts[1], "cyclic order");
    if (d.order < 1) throw ConfigError("cyclic order must be >= 1");
  } else if (kind == "s3") {
    if (parts.size() != 1) throw ConfigError("s3 takes no parameters");
    d.kind = GroupKind::S3;
  } else if (kind == "circle") {
    if (parts.size() != 2) throw ConfigError("expected circle:N, got '" + std::string(text) + "'");
    d.kind = GroupKind::Circle;
    d.circle_band = parse_int(parts[1], "circle band");
    if (d.circle_band < 0) throw ConfigError("band limit must be >= 0");
  } else if (kind == "su2") {
    if (parts.size() < 2 || parts.size() > 3)
      throw ConfigError("expected su2:L or su2:L:half, got '" + std::string(text) + "'");
    d.kind = GroupKind::Su2;
    d.su2_two_l = parse_twice(parts[1]);
    if (d.su2_two_l < 0) throw ConfigError("band limit must be >= 0");
    if (parts.size() == 3) {
      if (parts[2] != "half") throw ConfigError("unknown su2 flag '" + std::string(parts[2]) + "'");
      d.half_integers = true;
    }
    if (!d.half_integers && d.su2_two_l % 2 != 0)
      throw ConfigError("half-integer su2 band requires the ':half' flag");
  } else {
    throw ConfigError("unsupported group kind '" + std::string(kind) + "'");
  }
  return d;
}

std::string GroupDescriptor::to_string() const {
  switch (kind) {
    case GroupKind::Cyclic:
      return "cyclic:" + std::to_string(order);
    case GroupKind::S3:
      return "s3";
    case GroupKind::Circle:
      return "circle:" + std::to_string(circle_band);
    case GroupKind::Su2: {
      std::string band = su2_two_l % 2 == 0 ? std::to_string(su2_two_l / 2)
                                            : std::to_string(su2_two_l) + "/2";
      return "su2:" + band + (half_integers ? ":half" : "");
    }
    case GroupKind::Custom:
      return "custom:" + path;
  }
  return "?";
}

// ---------------------------------------------------------------- window

DualWindow::DualWindow(std::string group_name, std::vector<IrrepInfo> irreps, double band_limit,
                       bool complete)
    : group_name_(std::move(group_name)),
      irreps_(std::move(irreps)),
      band_limit_(band_limit),
      complete_(complete) {
  offsets_.reserve(irreps_.size() + 1);
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    if (irreps_[i].dim < 1) throw Error("irrep '" + irreps_[i].label + "' has dimension < 1");
    for (std::size_t j = 0; j < i; ++j)
      if (irreps_[j].label == irreps_[i].label)
        throw Error("duplicate irrep label '" + irreps_[i].label + "'");
    offsets_.push_back(offsets_.back() + static_cast<std::size_t>(irreps_[i].dim) * irreps_[i].dim);
  }
}

std::optional<std::size_t> DualWindow::find(std::string_view label) const {
  for (std::size_t i = 0; i < irreps_.size(); ++i)
    if (irreps_[i].label == label) return i;
  return std::nullopt;
}

std::size_t DualWindow::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error("unknown irrep label '" + std::string(label) + "' for group " + group_name_);
}

std::vector<std::string> DualWindow::labels() const {
  std::vector<std::string> out;
  out.reserve(irreps_.size());
  for (const auto& r : irreps_) out.push_back(r.label);
  return out;
}

bool operator==(const DualWindow& a, const DualWindow& b) {
  if (a.group_name_ != b.group_name_ || a.irreps_.size() != b.irreps_.size()) return false;
  for (std::size_t i = 0; i < a.irreps_.size(); ++i)
    if (a.irreps_[i].label != b.irreps_[i].label || a.irreps_[i].dim != b.irreps_[i].dim)
      return false;
  return true;
}

// ---------------------------------------------------------------- basis

SampleBasis::SampleBasis(std::size_t points, std::size_t coefficients)
    : points_(points),
      coefficients_(coefficients),
      re_(points * coefficients, 0.0),
      im_(points * coefficients, 0.0) {}

kernels::CSpan SampleBasis::column(std::size_t coef) const {
  return {std::span<const double>(re_).subspan(coef * points_, points_),
          std::span<const double>(im_).subspan(coef * points_, points_)};
}

kernels::CSpanMut SampleBasis::column(std::size_t coef) {
  return {std::span<double>(re_).subspan(coef * points_, points_),
          std::span<double>(im_).subspan(coef * points_, points_)};
}

std::complex<double> SampleBasis::at(std::size_t point, std::size_t coef) const {
  return {re_[coef * points_ + point], im_[coef * points_ + point]};
}

// ---------------------------------------------------------------- element helpers

const FiniteElement& as_finite(const GroupElement& x, int order) {
  const auto* e = std::get_if<FiniteElement>(&x);
  if (e == nullptr) throw Error("expected a finite-group element");
  if (e->index < 0 || e->index >= order)
    throw Error("finite-group element index " + std::to_string(e->index) + " out of range");
  return *e;
}

double as_circle(const GroupElement& x) {
  const auto* e = std::get_if<CircleElement>(&x);
  if (e == nullptr) throw Error("expected a circle element");
  return e->angle;
}

const Su2Element& as_su2(const GroupElement& x) {
  const auto* e = std::get_if<Su2Element>(&x);
  if (e == nullptr) throw Error("expected an SU(2) element");
  return *e;
}

// ---------------------------------------------------------------- GroupSpec

struct GroupSpec::State {
  GroupDescriptor descriptor;
  std::shared_ptr<const GroupModel> model;
  DualWindow window;
  QuadratureRule quadrature;
  SampleBasis node_basis;
};

namespace {

SampleBasis tabulate(const GroupModel& model, const DualWindow& window,
                     std::span<const GroupElement> points) {
  SampleBasis basis(points.size(), window.coefficient_count());
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t s = 0; s < window.size(); ++s) {
      const CMatrix m = model.irrep(s, points[p]);
      const int d = window[s].dim;
      const std::size_t off = window.offset(s);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          auto col = basis.column(off + static_cast<std::size_t>(i * d + j));
          col.re[p] = m(j, i).real();
          col.im[p] = m(j, i).imag();
        }
      }
    }
  }
  return basis;
}

}  // namespace

GroupSpec::GroupSpec(std::shared_ptr<const GroupModel> model, GroupDescriptor desc) {
  auto st = std::make_shared<State>();
  st->descriptor = std::move(desc);
  st->window = model->window();
  st->quadrature = model->quadrature();
  st->node_basis = tabulate(*model, st->window, st->quadrature.nodes);
  st->model = std::move(model);
  state_ = std::move(st);
}

const GroupDescriptor& GroupSpec::descriptor() const { return state_->descriptor; }
const DualWindow& GroupSpec::window() const { return state_->window; }
const QuadratureRule& GroupSpec::quadrature() const { return state_->quadrature; }
const SampleBasis& GroupSpec::node_basis() const { return state_->node_basis; }
bool GroupSpec::is_finite() const { return state_->model->finite(); }

CMatrix GroupSpec::irrep_matrix(std::size_t irrep, const GroupElement& x) const {
  if (irrep >= window().size()) throw Error("irrep index out of range");
  return state_->model->irrep(irrep, x);
}

CMatrix GroupSpec::irrep_matrix(std::string_view label, const GroupElement& x) const {
  return state_->model->irrep(window().index_of(label), x);
}

std::complex<double> GroupSpec::matrix_coefficient(std::string_view label, int i, int j,
                                                   const GroupElement& x) const {
  const std::size_t s = window().index_of(label);
  const int d = window()[s].dim;
  if (i < 0 || j < 0 || i >= d || j >= d)
    throw Error("matrix coefficient index (" + std::to_string(i) + ", " + std::to_string(j) +
                ") out of range for irrep '" + std::string(label) + "' of dimension " +
                std::to_string(d));
  return state_->model->irrep(s, x)(j, i);
}

GroupElement GroupSpec::identity() const { return state_->model->identity(); }

GroupElement GroupSpec::multiply(const GroupElement& a, const GroupElement& b) const {
  return state_->model->multiply(a, b);
}

GroupElement GroupSpec::random_element(std::mt19937_64& rng) const {
  return state_->model->random(rng);
}

SampleBasis GroupSpec::basis_at(std::span<const GroupElement> points) const {
  return tabulate(*state_->model, window(), points);
}

// ---------------------------------------------------------------- factories

namespace {

std::shared_ptr<const GroupModel> model_for(const GroupDescriptor& d) {
  switch (d.kind) {
    case GroupKind::Cyclic:
      return make_cyclic_model(d.order);
    case GroupKind::S3:
      return make_s3_model();
    case GroupKind::Circle:
      return make_circle_model(d.circle_band);
    case GroupKind::Su2:
      return make_su2_model(d.su2_two_l, d.half_integers);
    case GroupKind::Custom:
      break;
  }
  throw Error("no built-in model for " + d.to_string());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GroupSpec make_group(const GroupDescriptor& desc, GroupOptions options) {
  if (desc.kind == GroupKind::Custom)
    return make_custom_group_from_json(read_file(desc.path), desc.path, options);
  GroupSpec g(model_for(desc), desc);
  if (options.run_selftest) {
    const auto report = orthogonality_selftest(g);
    if (!report.pass)
      throw Error("orthogonality self-test failed for " + desc.to_string() +
                  ": max deviation " + std::to_string(report.max_deviation));
  }
  return g;
}

GroupSpec make_group(std::string_view spec, GroupOptions options) {
  return make_group(GroupDescriptor::parse(spec), options);
}

DualWindow make_window(const GroupDescriptor& desc) {
  if (desc.kind == GroupKind::Custom) return make_group(desc, {.run_selftest = false}).window();
  return model_for(desc)->window();
}

// ---------------------------------------------------------------- self-test

OrthogonalityReport orthogonality_selftest(const GroupSpec& g, double tolerance) {
  const auto& window = g.window();
  const auto& basis = g.node_basis();
  const std::span<const double> w = g.quadrature().weights;
  const std::size_t nc = window.coefficient_count();

  std::vector<double> inv_dim(nc);
  for (std::size_t s = 0; s < window.size(); ++s) {
    const std::size_t d = window[s].dim;
    for (std::size_t k = 0; k < d * d; ++k) inv_dim[window.offset(s) + k] = 1.0 / window[s].dim;
  }

  auto deviation = [&](std::size_t a, std::size_t b) {
    // sum_k w_k u_a(x_k) conj(u_b(x_k))
    const std::complex<double> v = kernels::weighted_cdot_conj(w, basis.column(b), basis.column(a));
    const double expected = a == b ? inv_dim[a] : 0.0;
    return std::abs(v - expected);
  };

  OrthogonalityReport report;
  constexpr double kFullBudget = 5e8;  // multiply-adds
  const double full_cost = 0.5 * static_cast<double>(nc) * (nc + 1) * basis.points();
  if (full_cost <= kFullBudget) {
    for (std::size_t a = 0; a < nc; ++a)
      for (std::size_t b = a; b < nc; ++b) {
        report.max_deviation = std::max(report.max_deviation, deviation(a, b));
        ++report.pairs_checked;
      }
  } else {
    report.subsampled = true;
    for (std::size_t a = 0; a < nc; ++a) {
      report.max_deviation = std::max(report.max_deviation, deviation(a, a));
      ++report.pairs_checked;
    }
    const auto budget = static_cast<std::size_t>(kFullBudget / std::max<std::size_t>(1, basis.points()));
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<std::size_t> pick(0, nc - 1);
    for (std::size_t k = 0; k < budget; ++k) {
      const std::size_t a = pick(rng);
      const std::size_t b = pick(rng);
      report.max_deviation = std::max(report.max_deviation, deviation(a, b));
      ++report.pairs_checked;
    }
  }
  report.pass = report.max_deviation <= tolerance;
  return report;
}

}  // namespace pwsob
