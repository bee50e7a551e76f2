#include <cmath>

#include "json.hpp"
#include "pwsob/error.hpp"
#include "pwsob/fourier.hpp"

namespace pwsob {
namespace {

using ojson = nlohmann::ordered_json;

ojson p_to_json(double p) { return std::isinf(p) ? ojson("inf") : ojson(p); }

double p_from_json(const ojson& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfinity;
    throw Error("p_E must be a number or \"inf\"");
  }
  return j.get<double>();
}

ojson parse_doc(std::string_view text) {
  try {
    return ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw Error(std::string("coefficient file: ") + e.what());
  }
}

FourierCoefficients fill(const ojson& doc, const GroupSpec& g) {
  const ojson& win = doc.at("window");
  const auto labels = win.at("labels").get<std::vector<std::string>>();
  if (labels != g.window().labels())
    throw Error("coefficient file window does not match the band of " + g.name());
  FourierCoefficients c(g, doc.at("m").get<int>(), p_from_json(doc.at("p_E")));
  const auto& w = g.window();
  for (const auto& [label, block] : doc.at("blocks").items()) {
    const auto s = w.find(label);
    if (!s) throw Error("block '" + label + "' is outside the window of " + g.name());
    const int d = w[*s].dim;
    if (!block.is_array() || static_cast<int>(block.size()) != d)
      throw Error("block '" + label + "' must have " + std::to_string(d) + " rows");
    for (int i = 0; i < d; ++i) {
      if (!block[i].is_array() || static_cast<int>(block[i].size()) != d)
        throw Error("block '" + label + "' row " + std::to_string(i) + " must have " +
                    std::to_string(d) + " entries");
      for (int j = 0; j < d; ++j) {
        const ojson& vec = block[i][j];
        if (!vec.is_array() || static_cast<int>(vec.size()) != c.m())
          throw Error("block '" + label + "' entry (" + std::to_string(i) + "," +
                      std::to_string(j) + ") must have m = " + std::to_string(c.m()) + " values");
        auto e = c.entry(*s, i, j);
        for (int k = 0; k < c.m(); ++k) e[k] = {vec[k].at(0).get<double>(), vec[k].at(1).get<double>()};
      }
    }
  }
  return c;
}

}  // namespace

std::string coefficients_to_json(const FourierCoefficients& c) {
  const auto& w = c.window();
  ojson doc;
  doc["window"] = {{"group", c.group().name()}, {"labels", w.labels()}};
  doc["m"] = c.m();
  doc["p_E"] = p_to_json(c.p_e());
  ojson blocks = ojson::object();
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (c.block_is_zero(s)) continue;
    const int d = w[s].dim;
    ojson rows = ojson::array();
    for (int i = 0; i < d; ++i) {
      ojson row = ojson::array();
      for (int j = 0; j < d; ++j) {
        ojson vec = ojson::array();
        for (const auto& z : c.entry(s, i, j)) vec.push_back({z.real(), z.imag()});
        row.push_back(std::move(vec));
      }
      rows.push_back(std::move(row));
    }
    blocks[w[s].label] = std::move(rows);
  }
  doc["blocks"] = std::move(blocks);
  return doc.dump(1) + "\n";
}

FourierCoefficients coefficients_from_json(std::string_view text) {
  const ojson doc = parse_doc(text);
  try {
    const auto group = doc.at("window").at("group").get<std::string>();
    return fill(doc, make_group(group));
  } catch (const ojson::exception& e) {
    throw Error(std::string("coefficient file: ") + e.what());
  }
}

FourierCoefficients coefficients_from_json(std::string_view text, const GroupSpec& g) {
  const ojson doc = parse_doc(text);
  try {
    const auto group = doc.at("window").at("group").get<std::string>();
    if (group != g.name())
      throw Error("coefficient file belongs to group " + group + ", expected " + g.name());
    return fill(doc, g);
  } catch (const ojson::exception& e) {
    throw Error(std::string("coefficient file: ") + e.what());
  }
}

}  // namespace pwsob
