// Custom finite groups from JSON:
//   { "order": n,
//     "mult_table": [[...n ints...], ...n rows...],        // row a, column b -> a*b
//     "irreps": [ { "label": "...", "dim": d,
//                   "matrices": [ [[ [re,im], ...d ], ...d rows ], ...n ] } ] }
// Matrices are listed in element order. Every failure names the irrep and the
// offending element index.
#include "json.hpp"
#include <random>

#include "group_model.hpp"
#include "pwsob/error.hpp"

namespace pwsob {
namespace {

using json = nlohmann::json;

constexpr double kUnitarityTol = 1e-10;
constexpr double kHomomorphismTol = 1e-9;
constexpr double kIdentityTol = 1e-12;

CMatrix parse_matrix(const json& rows, int dim, const std::string& label, int element) {
  auto fail = [&](const std::string& why) {
    return Error("irrep '" + label + "' element " + std::to_string(element) + ": " + why);
  };
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw fail("matrix must have " + std::to_string(dim) + " rows");
  CMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw fail("row " + std::to_string(r) + " must have " + std::to_string(dim) + " entries");
    for (int c = 0; c < dim; ++c) {
      const json& z = row[c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw fail("entry (" + std::to_string(r) + "," + std::to_string(c) + ") must be [re, im]");
      m(r, c) = {z[0].get<double>(), z[1].get<double>()};
    }
  }
  return m;
}

void validate_table(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n, false);
    std::vector<bool> col_seen(n, false);
    for (int b = 0; b < n; ++b) {
      if (t[a][b] < 0 || t[a][b] >= n)
        throw Error("mult_table[" + std::to_string(a) + "][" + std::to_string(b) + "] out of range");
      row_seen[t[a][b]] = true;
      col_seen[t[b][a]] = true;
    }
    for (int k = 0; k < n; ++k)
      if (!row_seen[k] || !col_seen[k])
        throw Error("mult_table row/column " + std::to_string(a) + " is not a permutation");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw Error("mult_table is not associative at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
}

void validate_irrep(const FiniteIrrepTable& r, const std::vector<std::vector<int>>& t, int identity) {
  const int n = static_cast<int>(t.size());
  const int d = r.info.dim;
  const CMatrix eye = CMatrix::Identity(d, d);
  for (int x = 0; x < n; ++x) {
    const double dev = (r.matrices[x] * r.matrices[x].adjoint() - eye).cwiseAbs().maxCoeff();
    if (dev > kUnitarityTol)
      throw Error("irrep '" + r.info.label + "' element " + std::to_string(x) +
                  ": matrix is not unitary (deviation " + std::to_string(dev) + ")");
  }
  if ((r.matrices[identity] - eye).cwiseAbs().maxCoeff() > kIdentityTol)
    throw Error("irrep '" + r.info.label + "' element " + std::to_string(identity) +
                ": identity does not map to I");

  auto check_pair = [&](int a, int b) {
    const double dev =
        (r.matrices[t[a][b]] - r.matrices[a] * r.matrices[b]).cwiseAbs().maxCoeff();
    if (dev > kHomomorphismTol)
      throw Error("irrep '" + r.info.label + "' elements (" + std::to_string(a) + ", " +
                  std::to_string(b) + "): homomorphism property fails (deviation " +
                  std::to_string(dev) + ")");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) check_pair(a, b);
  } else {
    std::mt19937_64 rng(0xC0FFEEULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 4096; ++k) check_pair(pick(rng), pick(rng));
  }
}

// Schur orthogonality between every pair of irreps, exact uniform average.
void validate_orthogonality(const std::vector<FiniteIrrepTable>& irreps, int n) {
  for (std::size_t s = 0; s < irreps.size(); ++s) {
    for (std::size_t u = s; u < irreps.size(); ++u) {
      const int ds = irreps[s].info.dim;
      const int du = irreps[u].info.dim;
      double worst = 0.0;
      for (int i = 0; i < ds; ++i)
        for (int j = 0; j < ds; ++j)
          for (int k = 0; k < du; ++k)
            for (int l = 0; l < du; ++l) {
              std::complex<double> acc = 0.0;
              for (int x = 0; x < n; ++x)
                acc += irreps[s].matrices[x](j, i) * std::conj(irreps[u].matrices[x](l, k));
              acc /= static_cast<double>(n);
              const double expected = (s == u && i == k && j == l) ? 1.0 / ds : 0.0;
              worst = std::max(worst, std::abs(acc - expected));
            }
      if (worst > kOrthogonalityTolerance) {
        const std::string what = s == u ? "irrep '" + irreps[s].info.label + "' is reducible"
                                        : "irreps '" + irreps[s].info.label + "' and '" +
                                              irreps[u].info.label + "' are not orthogonal";
        throw Error(what + " (Schur deviation " + std::to_string(worst) + ")");
      }
    }
  }
}

}  // namespace

GroupSpec make_custom_group_from_json(std::string_view json_text, std::string display_path,
                                      GroupOptions options) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error("custom group '" + display_path + "': " + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("mult_table") ||
      !doc.contains("irreps"))
    throw Error("custom group '" + display_path + "' needs fields order, mult_table, irreps");

  const int n = doc["order"].get<int>();
  if (n < 1) throw Error("custom group order must be >= 1");
  const json& jt = doc["mult_table"];
  if (!jt.is_array() || static_cast<int>(jt.size()) != n)
    throw Error("mult_table must have " + std::to_string(n) + " rows");
  std::vector<std::vector<int>> table(n);
  for (int a = 0; a < n; ++a) {
    if (!jt[a].is_array() || static_cast<int>(jt[a].size()) != n)
      throw Error("mult_table row " + std::to_string(a) + " must have " + std::to_string(n) + " entries");
    table[a] = jt[a].get<std::vector<int>>();
  }
  validate_table(table);

  std::vector<FiniteIrrepTable> irreps;
  std::size_t idx = 0;
  for (const json& jr : doc["irreps"]) {
    FiniteIrrepTable r;
    r.info.label = jr.value("label", std::to_string(idx));
    r.info.dim = jr.value("dim", 0);
    r.info.band = static_cast<double>(idx);
    if (r.info.dim < 1) throw Error("irrep '" + r.info.label + "': dim must be >= 1");
    const json& mats = jr.at("matrices");
    if (!mats.is_array() || static_cast<int>(mats.size()) != n)
      throw Error("irrep '" + r.info.label + "': expected " + std::to_string(n) + " matrices");
    for (int x = 0; x < n; ++x) r.matrices.push_back(parse_matrix(mats[x], r.info.dim, r.info.label, x));
    irreps.push_back(std::move(r));
    ++idx;
  }
  if (irreps.empty()) throw Error("custom group '" + display_path + "' lists no irreps");

  auto model = make_table_model("custom:" + display_path, table, irreps);
  const int identity = std::get<FiniteElement>(model->identity()).index;
  bool has_trivial = false;
  for (const auto& r : irreps) {
    validate_irrep(r, table, identity);
    bool trivial = r.info.dim == 1;
    for (int x = 0; x < n && trivial; ++x) trivial = std::abs(r.matrices[x](0, 0) - 1.0) <= kIdentityTol;
    has_trivial = has_trivial || trivial;
  }
  if (!has_trivial) throw Error("custom group '" + display_path + "' must include the trivial irrep");
  validate_orthogonality(irreps, n);

  GroupDescriptor desc;
  desc.kind = GroupKind::Custom;
  desc.path = std::move(display_path);
  GroupSpec g(std::move(model), desc);
  if (options.run_selftest) {
    const auto report = orthogonality_selftest(g);
    if (!report.pass) throw Error("orthogonality self-test failed for " + desc.to_string());
  }
  return g;
}

}  // namespace pwsob
