#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pwsob/error.hpp"
#include "json.hpp"
#include "pwsob/group.hpp"
#include "group_model.hpp"

using namespace pwsob;
using cd = std::complex<double>;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double spectral_norm(const CMatrix& m) {
  return Eigen::JacobiSVD<CMatrix>(m).singularValues()(0);
}

constexpr const char* kQ8 = R"({
  "order": 8,
  "mult_table": [[0,1,2,3,4,5,6,7],[1,0,3,2,5,4,7,6],[2,3,1,0,6,7,5,4],[3,2,0,1,7,6,4,5],
                 [4,5,7,6,1,0,2,3],[5,4,6,7,0,1,3,2],[6,7,4,5,3,2,1,0],[7,6,5,4,2,3,0,1]],
  "irreps": []
})";

}  // namespace

TEST_CASE("make_group: window and quadrature shapes") {
  SUBCASE("cyclic(4)") {
    const auto g = make_group("cyclic:4");
    REQUIRE(g.window().size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(g.window()[k].label == std::to_string(k));
      CHECK(g.window()[k].dim == 1);
    }
    REQUIRE(g.quadrature().size() == 4);
    for (double w : g.quadrature().weights) CHECK(w == 0.25);
    CHECK(g.window().complete());
  }
  SUBCASE("circle(2)") {
    const auto g = make_group("circle:2");
    CHECK(g.window().labels() == std::vector<std::string>{"-2", "-1", "0", "1", "2"});
    CHECK(g.quadrature().size() >= 9);
  }
  SUBCASE("su2(1), integers only") {
    const auto g = make_group("su2:1");
    REQUIRE(g.window().size() == 2);
    CHECK(g.window()[0].label == "0");
    CHECK(g.window()[0].dim == 1);
    CHECK(g.window()[1].label == "1");
    CHECK(g.window()[1].dim == 3);
  }
  SUBCASE("su2 with half-integers") {
    const auto g = make_group("su2:3/2:half");
    CHECK(g.window().labels() == std::vector<std::string>{"0", "1/2", "1", "3/2"});
    CHECK(g.name() == "su2:3/2:half");
  }
  SUBCASE("s3") {
    const auto g = make_group("s3");
    CHECK(g.window().labels() == std::vector<std::string>{"triv", "sign", "std"});
    CHECK(g.window()[2].dim == 2);
    CHECK(g.quadrature().size() == 6);
  }
}

TEST_CASE("quadrature weights are a probability measure") {
  for (const char* spec : {"cyclic:12", "s3", "circle:16", "su2:4", "su2:5/2:half"}) {
    const auto g = make_group(spec);
    double s = 0.0;
    for (double w : g.quadrature().weights) {
      CHECK(w >= 0.0);
      s += w;
    }
    CAPTURE(spec);
    CHECK(std::abs(s - 1.0) <= 1e-12);
  }
}

TEST_CASE("make_group errors") {
  CHECK_THROWS_AS(make_group("torus:3"), ConfigError);
  CHECK_THROWS_AS(make_group("circle:-1"), ConfigError);
  CHECK_THROWS_AS(make_group("su2:-1"), ConfigError);
  CHECK_THROWS_AS(make_group("su2:1/2"), ConfigError);  // half band needs the flag
  CHECK_THROWS_AS(make_group("cyclic:0"), ConfigError);
  CHECK_THROWS_AS(make_group("cyclic:x"), ConfigError);
}

TEST_CASE("irrep_matrix examples") {
  const auto z4 = make_group("cyclic:4");
  CHECK(z4.irrep_matrix("0", FiniteElement{3})(0, 0) == cd(1.0, 0.0));
  CHECK(z4.irrep_matrix("1", FiniteElement{1})(0, 0) == cd(0.0, 1.0));

  const auto su2 = make_group("su2:1:half");
  const Su2Element g{0.7, 2.1, 5.0};
  CHECK(max_abs(su2.irrep_matrix("0", g) - CMatrix::Identity(1, 1)) == 0.0);
  CHECK(max_abs(su2.irrep_matrix("1/2", g) - CMatrix(su2_matrix(g))) < 1e-15);

  CHECK_THROWS_AS(z4.irrep_matrix("7", FiniteElement{0}), Error);
  CHECK_THROWS_AS(z4.irrep_matrix("1", CircleElement{0.0}), Error);
}

TEST_CASE("matrix_coefficient examples") {
  SUBCASE("identity element gives delta") {
    for (const char* spec : {"s3", "su2:2", "circle:3"}) {
      const auto g = make_group(spec);
      for (const auto& irrep : g.window().irreps())
        for (int i = 0; i < irrep.dim; ++i)
          for (int j = 0; j < irrep.dim; ++j)
            CHECK(std::abs(g.matrix_coefficient(irrep.label, i, j, g.identity()) -
                           (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
  }
  SUBCASE("circle character") {
    const auto g = make_group("circle:2");
    for (double x : {0.0, 0.5, 2.0, 6.0})
      CHECK(std::abs(g.matrix_coefficient("1", 0, 0, CircleElement{x}) - std::polar(1.0, x)) < 1e-15);
  }
  SUBCASE("su2 D^1 against the generator exponential") {
    const auto g = make_group("su2:2");
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
      const auto x = g.random_element(rng);
      const auto& e = std::get<Su2Element>(x);
      const auto ref = oracle::big_d_by_exponential(2, e.alpha, e.beta, e.gamma);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(std::abs(g.matrix_coefficient("1", i, j, x) - ref(j, i)) < 1e-12);
    }
  }
  SUBCASE("index out of range") {
    const auto g = make_group("s3");
    CHECK_THROWS_AS(g.matrix_coefficient("std", 2, 0, FiniteElement{0}), Error);
    CHECK_THROWS_AS(g.matrix_coefficient("sign", 0, 1, FiniteElement{0}), Error);
  }
}

TEST_CASE("irreps are unitary homomorphisms with bounded coefficients") {
  for (const char* spec : {"cyclic:12", "s3", "circle:16", "su2:4", "su2:5/2:half"}) {
    CAPTURE(spec);
    const auto g = make_group(spec);
    std::mt19937_64 rng(2024);
    double unit_dev = 0.0, hom_dev = 0.0, coef_max = 0.0, id_dev = 0.0, cont_slack = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const auto x = g.random_element(rng);
      const auto y = g.random_element(rng);
      const auto xy = g.multiply(x, y);
      for (std::size_t s = 0; s < g.window().size(); ++s) {
        const CMatrix mx = g.irrep_matrix(s, x);
        const CMatrix my = g.irrep_matrix(s, y);
        const CMatrix eye = CMatrix::Identity(mx.rows(), mx.cols());
        unit_dev = std::max(unit_dev, max_abs(mx * mx.adjoint() - eye));
        hom_dev = std::max(hom_dev, max_abs(g.irrep_matrix(s, xy) - mx * my));
        coef_max = std::max(coef_max, mx.cwiseAbs().maxCoeff());
        if (k == 0) id_dev = std::max(id_dev, max_abs(g.irrep_matrix(s, g.identity()) - eye));
        // |u_ij(x) - u_ij(y)| <= ||sigma(x) - sigma(y)||_op
        const double op = spectral_norm(mx - my);
        cont_slack = std::max(cont_slack, (mx - my).cwiseAbs().maxCoeff() - op);
      }
    }
    CHECK(unit_dev <= 1e-10);
    CHECK(hom_dev <= 1e-9);
    CHECK(id_dev <= 1e-12);
    CHECK(coef_max <= 1.0 + 1e-12);
    CHECK(cont_slack <= 1e-10);
  }
}

TEST_CASE("orthogonality self-test") {
  SUBCASE("Z4 exact") {
    const auto r = orthogonality_selftest(make_group("cyclic:4"));
    CHECK(r.pass);
    CHECK(r.max_deviation <= 1e-15);
    CHECK(r.pairs_checked == 10);
  }
  SUBCASE("circle(2) with 9 nodes") {
    const auto g = make_group("circle:2");
    const auto r = orthogonality_selftest(g);
    CHECK(r.max_deviation <= 1e-12);
    // independent trigonometric-sum oracle on the same grid
    const std::size_t m = g.quadrature().size();
    double worst = 0.0;
    for (int n1 = -2; n1 <= 2; ++n1)
      for (int n2 = -2; n2 <= 2; ++n2) {
        cd acc = 0.0;
        for (std::size_t k = 0; k < m; ++k)
          acc += std::exp(cd(0.0, (n1 - n2) * 2.0 * std::numbers::pi * k / m)) / double(m);
        worst = std::max(worst, std::abs(acc - (n1 == n2 ? 1.0 : 0.0)));
      }
    CHECK(worst <= 1e-12);
  }
  SUBCASE("su2(2) Gauss-Legendre grid") {
    const auto r = orthogonality_selftest(make_group("su2:2"));
    CHECK(r.pass);
    CHECK(r.max_deviation <= 1e-9);
    CHECK_FALSE(r.subsampled);
  }
  SUBCASE("su2 half-integer windows separate integer and half-integer spins") {
    const auto r = orthogonality_selftest(make_group("su2:2:half"));
    CHECK(r.pass);
  }
  SUBCASE("an under-resolved rule is caught") {
    // circle:3 irreps on a 6-point grid: frequency difference 6 aliases to 0.
    class Coarse final : public GroupModel {
     public:
      DualWindow window() const override { return inner_->window(); }
      QuadratureRule quadrature() const override {
        QuadratureRule q;
        for (int k = 0; k < 6; ++k) {
          q.nodes.emplace_back(CircleElement{2.0 * std::numbers::pi * k / 6});
          q.weights.push_back(1.0 / 6);
        }
        return q;
      }
      CMatrix irrep(std::size_t i, const GroupElement& x) const override { return inner_->irrep(i, x); }
      GroupElement identity() const override { return inner_->identity(); }
      GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
        return inner_->multiply(a, b);
      }
      GroupElement random(std::mt19937_64& rng) const override { return inner_->random(rng); }
      bool finite() const override { return false; }

     private:
      std::shared_ptr<const GroupModel> inner_ = make_circle_model(3);
    };
    const GroupSpec g(std::make_shared<Coarse>(), GroupDescriptor::parse("circle:3"));
    const auto r = orthogonality_selftest(g);
    CHECK_FALSE(r.pass);
    CHECK(r.max_deviation == doctest::Approx(1.0));
  }
}

TEST_CASE("custom finite groups") {
  // Quaternion group Q8: 1, -1, i, -i, j, -j, k, -k.
  auto q8_irreps = []() {
    nlohmann::json doc = nlohmann::json::parse(kQ8);
    const std::vector<int> a{1, 1, 1, 1, -1, -1, -1, -1};   // kernel <i>
    const std::vector<int> b{1, 1, -1, -1, 1, 1, -1, -1};   // kernel <j>
    auto one_dim = [](const std::string& label, const std::vector<int>& v) {
      nlohmann::json r{{"label", label}, {"dim", 1}, {"matrices", nlohmann::json::array()}};
      for (int x : v) r["matrices"].push_back({{{double(x), 0.0}}});
      return r;
    };
    std::vector<int> c(8);
    for (int k = 0; k < 8; ++k) c[k] = a[k] * b[k];
    doc["irreps"].push_back(one_dim("triv", std::vector<int>(8, 1)));
    doc["irreps"].push_back(one_dim("a", a));
    doc["irreps"].push_back(one_dim("b", b));
    doc["irreps"].push_back(one_dim("c", c));
    // 2-dim: 1 -> I, i -> diag(i,-i), j -> [[0,1],[-1,0]], k = ij -> [[0,i],[i,0]]
    using M = std::vector<std::vector<std::vector<double>>>;
    const M one{{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}};
    const M ii{{{0, 1}, {0, 0}}, {{0, 0}, {0, -1}}};
    const M jj{{{0, 0}, {1, 0}}, {{-1, 0}, {0, 0}}};
    const M kk{{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    auto neg = [](M m) {
      for (auto& row : m)
        for (auto& z : row)
          for (auto& v : z) v = -v;
      return m;
    };
    nlohmann::json two{{"label", "2d"}, {"dim", 2}, {"matrices", nlohmann::json::array()}};
    for (const M& m : {one, neg(one), ii, neg(ii), jj, neg(jj), kk, neg(kk)}) two["matrices"].push_back(m);
    doc["irreps"].push_back(two);
    return doc;
  };

  SUBCASE("valid Q8 loads and passes orthogonality") {
    const auto g = make_custom_group_from_json(q8_irreps().dump(), "q8.json");
    CHECK(g.window().size() == 5);
    CHECK(g.window().complete());
    CHECK(orthogonality_selftest(g).pass);
    CHECK(g.name() == "custom:q8.json");
  }
  SUBCASE("non-unitary matrix is rejected with irrep and index") {
    auto doc = q8_irreps();
    doc["irreps"][4]["matrices"][3][0][0] = {2.0, 0.0};
    try {
      make_custom_group_from_json(doc.dump(), "bad.json");
      FAIL("expected an error");
    } catch (const Error& e) {
      const std::string msg = e.what();
      CHECK(msg.find("'2d'") != std::string::npos);
      CHECK(msg.find("element 3") != std::string::npos);
    }
  }
  SUBCASE("non-homomorphism is rejected") {
    auto doc = q8_irreps();
    doc["irreps"][1]["matrices"][2] = {{{-1.0, 0.0}}};
    CHECK_THROWS_WITH_AS(make_custom_group_from_json(doc.dump(), "bad.json"),
                         doctest::Contains("irrep 'a'"), Error);
  }
  SUBCASE("duplicated irrep fails orthogonality") {
    auto doc = q8_irreps();
    auto dup = doc["irreps"][1];
    dup["label"] = "a-again";
    doc["irreps"].push_back(dup);
    CHECK_THROWS_WITH_AS(make_custom_group_from_json(doc.dump(), "bad.json"),
                         doctest::Contains("not orthogonal"), Error);
  }
  SUBCASE("missing trivial irrep") {
    auto doc = q8_irreps();
    doc["irreps"].erase(0);
    CHECK_THROWS_AS(make_custom_group_from_json(doc.dump(), "bad.json"), Error);
  }
  SUBCASE("broken table") {
    auto doc = q8_irreps();
    doc["mult_table"][0][0] = 9;
    CHECK_THROWS_AS(make_custom_group_from_json(doc.dump(), "bad.json"), Error);
  }
}
