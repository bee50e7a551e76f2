#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "pwsob/error.hpp"
#include "pwsob/sobolev.hpp"

using namespace pwsob;
using cd = std::complex<double>;

namespace {

WeightSequence z2_weights(double g1) {
  const auto w = make_window(GroupDescriptor::parse("cyclic:2"));
  return WeightSequence::from_table(w, {{"0", 0.0}, {"1", g1}});
}

}  // namespace

TEST_CASE("weight sequences") {
  const auto circle = make_group("circle:2");
  const auto gc = WeightSequence::canonical(circle);
  CHECK(gc[circle.window().index_of("-2")] == 2.0);
  CHECK(gc[circle.window().index_of("1")] == 1.0);
  const auto su2 = make_window(GroupDescriptor::parse("su2:2:half"));
  const auto gs = WeightSequence::canonical(GroupDescriptor::parse("su2:2:half"), su2);
  CHECK(gs[su2.index_of("1/2")] == doctest::Approx(std::sqrt(0.75)));
  CHECK(gs[su2.index_of("2")] == doctest::Approx(std::sqrt(6.0)));
  const auto w = make_window(GroupDescriptor::parse("cyclic:3"));
  CHECK_THROWS_WITH_AS(WeightSequence::from_table(w, {{"0", 0.0}, {"1", 1.0}}),
                       doctest::Contains("'2'"), Error);
  CHECK_THROWS_AS(WeightSequence::from_table(w, {{"0", 0.0}, {"1", 1.0}, {"2", 1.0}, {"7", 1.0}}), Error);
  CHECK_THROWS_AS(WeightSequence::from_table(w, {{"0", 0.0}, {"1", -1.0}, {"2", 1.0}}), Error);
  CHECK(WeightSequence::from_json(w, R"({"0":0,"1":0.5,"2":2})")[1] == 0.5);
  CHECK_THROWS_AS(WeightSequence::from_json(w, R"({"0":"x"})"), Error);
}

TEST_CASE("h_s_norm examples") {
  const std::vector<cd> v{cd(3.0, 0.0), cd(0.0, 4.0)};
  SUBCASE("trivial block only") {
    const auto g = make_group("su2:2");
    FourierCoefficients c(g, 2);
    std::copy(v.begin(), v.end(), c.entry(0, 0, 0).begin());
    const auto gamma = WeightSequence::canonical(g);
    for (double s : {0.0, 0.5, 1.0, 7.0}) CHECK(h_s_norm(c, gamma, s) == doctest::Approx(5.0).epsilon(1e-15));
  }
  SUBCASE("Z4 chi_1 block with gamma 1, s = 2") {
    const auto g = make_group("cyclic:4");
    FourierCoefficients c(g, 2);
    std::copy(v.begin(), v.end(), c.entry(1, 0, 0).begin());
    const auto gamma = WeightSequence::from_table(g.window(), {{"0", 0}, {"1", 1}, {"2", 0}, {"3", 0}});
    CHECK(h_s_norm(c, gamma, 2.0) == doctest::Approx(10.0).epsilon(1e-15));
  }
  SUBCASE("s = 0 is s_2 exactly") {
    for (const char* spec : {"circle:5", "su2:3", "s3"}) {
      const auto g = make_group(spec);
      const auto c = random_band_limited(4, g, 3);
      CHECK(h_s_norm(c, WeightSequence::canonical(g), 0.0) == s_p_norm(c, 2.0));
    }
  }
  SUBCASE("errors") {
    const auto g = make_group("cyclic:4");
    FourierCoefficients c(g, 1);
    CHECK_THROWS_AS(h_s_norm(c, WeightSequence::zero(g.window()), -0.5), std::invalid_argument);
    CHECK_THROWS_AS(h_s_norm(c, z2_weights(1.0), 1.0), Error);
  }
}

TEST_CASE("h_s_norm properties") {
  for (const char* spec : {"circle:8", "su2:3", "cyclic:6"}) {
    CAPTURE(spec);
    const auto g = make_group(spec);
    const auto gamma = WeightSequence::canonical(g);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto c = random_band_limited(seed, g, 2);
      const std::vector<double> grid{0.0, 0.25, 0.5, 1.0, 2.0, 3.5};
      for (std::size_t a = 0; a < grid.size(); ++a)
        for (std::size_t b = a + 1; b < grid.size(); ++b)
          CHECK(h_s_norm(c, gamma, grid[a]) <= h_s_norm(c, gamma, grid[b]) + 1e-12);
      const cd scale(-1.5, 2.0);  // |scale| = 2.5
      const double base = h_s_norm(c, gamma, 1.5);
      CHECK(std::abs(h_s_norm(scale * c, gamma, 1.5) - 2.5 * base) <= 1e-12 * 2.5 * base);
    }
  }
}

TEST_CASE("l_p_norm and sup_norm examples") {
  const std::vector<cd> v{cd(1.0, 1.0), cd(-2.0, 0.0)};  // ||v|| = sqrt(6)
  for (const char* spec : {"cyclic:5", "circle:3", "su2:2"}) {
    CAPTURE(spec);
    const auto g = make_group(spec);
    const auto f = SampledFunction::from_callable(g, 2, [&](const GroupElement&) { return v; });
    for (double p : {1.0, 1.5, 2.0, 4.0, 9.0}) CHECK(l_p_norm(f, g, p) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-13));
    CHECK(sup_norm(f, g) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    FourierCoefficients c(g, 2);
    std::copy(v.begin(), v.end(), c.entry(0, 0, 0).begin());
    CHECK(sup_norm(SpectralFunction(c), g) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  }
  SUBCASE("circle e^{ix}, p = 2") {
    const auto g = make_group("circle:1");
    FourierCoefficients c(g, 1);
    c.entry(g.window().index_of("1"), 0, 0)[0] = 1.0;
    CHECK(l_p_norm(SpectralFunction(c), g, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(l_p_norm(SpectralFunction(c), g, 0.9), std::invalid_argument);
  }
  SUBCASE("Plancherel oracle for random functions") {
    const auto g = make_group("su2:3");
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto c = random_band_limited(seed, g, 3);
      const double s2 = s_p_norm(c, 2.0);
      CHECK(std::abs(l_p_norm(SpectralFunction(c), g, 2.0) - s2) <= 1e-9 * (1.0 + s2));
    }
  }
  SUBCASE("Z_n sup is exact") {
    const auto g = make_group("cyclic:7");
    const auto f = SampledFunction::from_callable(g, 1, [](const GroupElement& x) {
      return std::vector<cd>{cd(std::get<FiniteElement>(x).index == 4 ? 9.0 : 1.0, 0.0)};
    });
    CHECK(sup_norm(f, g) == 9.0);
  }
  SUBCASE("circle 1 + e^{ix} against a dense grid") {
    const auto g = make_group("circle:1");
    FourierCoefficients c(g, 1);
    c.entry(g.window().index_of("0"), 0, 0)[0] = 1.0;
    c.entry(g.window().index_of("1"), 0, 0)[0] = 1.0;
    double dense = 0.0;
    const int n = 1 << 20;
    for (int k = 0; k < n; ++k)
      dense = std::max(dense, std::abs(1.0 + std::exp(cd(0.0, 2.0 * std::numbers::pi * k / n))));
    const double reported = sup_norm(SpectralFunction(c), g);
    CHECK(reported <= dense + 1e-12);
    CHECK(reported >= dense - 1e-3);
    CHECK(reported >= 2.0 - 1e-3);
    CHECK(reported <= 2.0 + 1e-15);
  }
  SUBCASE("sampler overloads agree and are deterministic") {
    const auto g = make_group("su2:2");
    const auto c = random_band_limited(8, g, 2);
    const auto nodes = sample_on_nodes(SpectralFunction(c), g);
    const SupSampler sampler(g, 500, 42);
    CHECK(sampler(nodes, c) == doctest::Approx(sampler(SpectralFunction(c))).epsilon(1e-13));
    CHECK(sup_norm(SpectralFunction(c), g) == sup_norm(SpectralFunction(c), g));
    CHECK(sup_norm(SpectralFunction(c), g, 0) <= sup_norm(SpectralFunction(c), g, 2000));
  }
}

TEST_CASE("embedding constants against direct sums") {
  SUBCASE("Z2, gamma == 0") {
    const double oracle = std::sqrt(oracle::dim_cube_sum({1, 1}, {0.0, 0.0}, 1.0));
    CHECK(oracle == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    for (double s : {0.0, 1.0, 5.0}) {
      const auto c = embedding_constant_C(z2_weights(0.0), s);
      CHECK(std::abs(c.value - oracle) <= 1e-12);
      CHECK(c.verdict == Verdict::PlausiblySummable);
    }
  }
  SUBCASE("Z2, gamma = (0, 1), s = 1") {
    const double oracle = std::sqrt(oracle::dim_cube_sum({1, 1}, {0.0, 1.0}, 1.0));
    CHECK(std::abs(oracle - 1.224744871391589) <= 1e-12);
    CHECK(std::abs(embedding_constant_C(z2_weights(1.0), 1.0).value - oracle) <= 1e-12);
  }
  SUBCASE("su2 l in {0, 1}, canonical gamma, s = 2") {
    const auto desc = GroupDescriptor::parse("su2:1");
    const auto w = make_window(desc);
    const double oracle = std::sqrt(oracle::dim_cube_sum({1, 3}, {0.0, std::sqrt(2.0)}, 2.0));
    CHECK(std::abs(oracle - 2.0) <= 1e-12);
    CHECK(std::abs(embedding_constant_C(WeightSequence::canonical(desc, w), 2.0).value - oracle) <= 1e-12);
  }
  SUBCASE("lq constant, Z2, gamma = (0, 1), t = 2, s = 1") {
    const double oracle = std::pow(oracle::dim_cube_sum({1, 1}, {0.0, 1.0}, 2.0), 1.0 / 4.0);
    CHECK(std::abs(oracle - 1.0573712634405641) <= 1e-12);
    CHECK(std::abs(lq_bound_constant(z2_weights(1.0), 2.0, 1.0) - oracle) <= 1e-12);
  }
  SUBCASE("lq constant on the trivial window is 1") {
    const auto w = make_window(GroupDescriptor::parse("cyclic:1"));
    CHECK(lq_bound_constant(WeightSequence::zero(w), 3.0, 1.0) == 1.0);
  }
  SUBCASE("lq constant equals C(gamma, t)^{s/t}") {
    const auto desc = GroupDescriptor::parse("su2:5:half");
    const auto gamma = WeightSequence::canonical(desc, make_window(desc));
    for (auto [s, t] : {std::pair{1.0, 2.0}, {1.0, 3.0}, {0.5, 2.0}}) {
      const double viaC = std::pow(embedding_constant_C(gamma, t).value, s / t);
      CHECK(std::abs(lq_bound_constant(gamma, t, s) - viaC) <= 1e-12 * viaC);
    }
    CHECK_THROWS_AS(lq_bound_constant(gamma, 1.0, 1.0), std::invalid_argument);
  }
  SUBCASE("C is nonincreasing in s") {
    const auto desc = GroupDescriptor::parse("circle:30");
    const auto gamma = WeightSequence::canonical(desc, make_window(desc));
    double prev = embedding_constant_C(gamma, 0.0).value;
    for (double s = 0.25; s <= 4.0; s += 0.25) {
      const double cur = embedding_constant_C(gamma, s).value;
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("summability heuristic on su2 up to l = 20") {
  const auto desc = GroupDescriptor::parse("su2:20");
  const auto w = make_window(desc);
  const auto canonical = WeightSequence::canonical(desc, w);

  const auto flat = summability_check(WeightSequence::zero(w), 3.0);
  CHECK(flat.verdict == Verdict::Diverging);
  CHECK(flat.level_terms.back() == doctest::Approx(41.0 * 41.0 * 41.0));

  // (2l+1)^3 / (1 + l(l+1))^s ~ 8 l^{3 - 2s}
  const auto constant_order = summability_check(canonical, 1.5);
  CHECK(constant_order.verdict == Verdict::Diverging);
  CHECK(constant_order.level_terms.back() == doctest::Approx(8.0).epsilon(0.02));
  CHECK(constant_order.ratios.back() == doctest::Approx(1.0).epsilon(0.01));

  CHECK(summability_check(canonical, 2.0).verdict == Verdict::Diverging);  // harmonic tail

  for (double s : {3.0, 4.0}) {
    const auto r = summability_check(canonical, s);
    CHECK(r.verdict == Verdict::PlausiblySummable);
    CHECK(r.tail_exponent == doctest::Approx(3.0 - 2.0 * s).epsilon(0.05));
    for (std::size_t k = 0; k < r.levels.size(); ++k) {
      const double l = r.levels[k];
      CHECK(r.level_terms[k] == doctest::Approx(oracle::dim_cube_sum({int(2 * l + 1)}, {std::sqrt(l * (l + 1))}, s)));
    }
  }
  CHECK(to_string(Verdict::PlausiblySummable) == "plausibly summable");

  const auto tiny = make_window(GroupDescriptor::parse("su2:1"));
  CHECK(summability_check(WeightSequence::zero(tiny), 1.0).verdict == Verdict::Undetermined);
}

TEST_CASE("exponents") {
  const auto a = exponents(1.0, 2.0);
  CHECK(a.alpha_prime == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(a.alpha == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  const auto b = exponents(1.0, 3.0);
  CHECK(b.alpha_prime == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(b.alpha == doctest::Approx(1.5).epsilon(1e-15));
  for (auto [s, t] : {std::pair{0.5, 2.0}, {0.1, 0.2}, {3.0, 100.0}}) {
    const auto p = exponents(s, t);
    CHECK(std::abs(1.0 / p.alpha + 1.0 / p.alpha_prime - 1.0) <= 1e-12);
    CHECK(p.alpha > 1.0);
    CHECK(p.alpha < 2.0);
    CHECK(p.alpha_prime > 2.0);
    // exponent bookkeeping of the L^{alpha'} argument: s alpha / (2 - alpha) = t
    CHECK(s * p.alpha / (2.0 - p.alpha) == doctest::Approx(t).epsilon(1e-12));
  }
  CHECK_THROWS_AS(exponents(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(exponents(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(exponents(0.0, 1.0), std::invalid_argument);
}
