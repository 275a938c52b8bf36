#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bmoll/bijections.hpp"
#include "bmoll/boros_moll.hpp"
#include "bmoll/meixner.hpp"
#include "bmoll/polynomial.hpp"
#include "bmoll/rational.hpp"
#include "bmoll/reluctant.hpp"
#include "bmoll/weights.hpp"

// JSON schemas: rationals as "p/q" strings (q omitted when 1), polynomials
// as degree-ascending coefficient-string arrays, sets as sorted integer
// arrays, maps as arrays of [from, to] pairs, permutations one-line,
// colorings as arrays of color names.

namespace bmoll {

inline void to_json(nlohmann::json& j, const Rational& r) { j = r.to_string(); }

inline void from_json(const nlohmann::json& j, Rational& r) {
  r = Rational::from_string(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const Poly& p) {
  j = nlohmann::json::array();
  for (const auto& c : p.coefficients()) j.push_back(c.to_string());
}

inline void from_json(const nlohmann::json& j, Poly& p) {
  std::vector<Rational> coeffs;
  for (const auto& item : j) coeffs.push_back(Rational::from_string(item.get<std::string>()));
  p = Poly(std::move(coeffs));
}

namespace detail {

inline nlohmann::json map_to_pairs(const std::map<int, int>& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [from, to] : f) j.push_back(nlohmann::json::array({from, to}));
  return j;
}

inline std::map<int, int> pairs_to_map(const nlohmann::json& j) {
  std::map<int, int> f;
  for (const auto& pair : j) f[pair.at(0).get<int>()] = pair.at(1).get<int>();
  return f;
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const CoeffTable& t) {
  j = nlohmann::json{{"m", t.m}, {"d", nlohmann::json::array()}};
  for (const auto& c : t.d) j["d"].push_back(c.to_string());
}

inline void from_json(const nlohmann::json& j, CoeffTable& t) {
  t.m = j.at("m").get<int>();
  t.d.clear();
  for (const auto& item : j.at("d")) t.d.push_back(Rational::from_string(item.get<std::string>()));
}

inline void to_json(nlohmann::json& j, const ReluctantFunction& rf) {
  j = nlohmann::json{{"A", rf.A}, {"B", rf.B}, {"f", detail::map_to_pairs(rf.f)}};
}

inline void from_json(const nlohmann::json& j, ReluctantFunction& rf) {
  rf.A = j.at("A").get<std::vector<int>>();
  rf.B = j.at("B").get<std::vector<int>>();
  rf.f = detail::pairs_to_map(j.at("f"));
}

// The ordering conventions are stated explicitly rather than left implicit
// in the array order.
inline void to_json(nlohmann::json& j, const DigraphDecomposition& d) {
  j = nlohmann::json{{"cycles", d.cycles},
                     {"paths", d.paths},
                     {"cycle_start", "min_first"},
                     {"cycle_order", "decreasing_min"},
                     {"path_order", "increasing_terminal"}};
}

inline void to_json(nlohmann::json& j, const CanonicalWord& w) {
  j = nlohmann::json{{"word", w.word}, {"A", w.A}, {"B", w.B}};
}

inline void from_json(const nlohmann::json& j, CanonicalWord& w) {
  w.word = j.at("word").get<std::vector<int>>();
  w.A = j.at("A").get<std::vector<int>>();
  w.B = j.at("B").get<std::vector<int>>();
}

inline void to_json(nlohmann::json& j, const MeixnerEndofunction& x) {
  nlohmann::json piB = nlohmann::json::array();
  for (int b : x.B) piB.push_back(x.piB.at(b));
  j = nlohmann::json{
      {"A", x.A}, {"B", x.B}, {"piA", detail::map_to_pairs(x.piA)}, {"piB", piB}};
}

inline void from_json(const nlohmann::json& j, MeixnerEndofunction& x) {
  x.A = j.at("A").get<std::vector<int>>();
  x.B = j.at("B").get<std::vector<int>>();
  x.piA = detail::pairs_to_map(j.at("piA"));
  x.piB.clear();
  const auto& images = j.at("piB");
  for (std::size_t i = 0; i < x.B.size(); ++i) x.piB[x.B[i]] = images.at(i).get<int>();
}

inline void to_json(nlohmann::json& j, const MeixnerBiEndofunction& x) {
  nlohmann::json piB = nlohmann::json::array();
  for (int b : x.B) piB.push_back(x.piB.at(b));
  nlohmann::json piC = nlohmann::json::array();
  for (int c : x.C) piC.push_back(x.piC.at(c));
  j = nlohmann::json{{"A", x.A},     {"B", x.B},   {"C", x.C},
                     {"piA", detail::map_to_pairs(x.piA)}, {"piB", piB}, {"piC", piC}};
}

inline void from_json(const nlohmann::json& j, MeixnerBiEndofunction& x) {
  x.A = j.at("A").get<std::vector<int>>();
  x.B = j.at("B").get<std::vector<int>>();
  x.C = j.at("C").get<std::vector<int>>();
  x.piA = detail::pairs_to_map(j.at("piA"));
  x.piB.clear();
  const auto& imagesB = j.at("piB");
  for (std::size_t i = 0; i < x.B.size(); ++i) x.piB[x.B[i]] = imagesB.at(i).get<int>();
  x.piC.clear();
  const auto& imagesC = j.at("piC");
  for (std::size_t i = 0; i < x.C.size(); ++i) x.piC[x.C[i]] = imagesC.at(i).get<int>();
}

inline Color color_from_name(const std::string& name) {
  if (name == "white") return Color::white;
  if (name == "black") return Color::black;
  if (name == "red") return Color::red;
  throw std::invalid_argument("unknown color \"" + name + "\"");
}

inline void to_json(nlohmann::json& j, const ColoredPermutation& p) {
  nlohmann::json coloring = nlohmann::json::array();
  for (Color c : p.coloring) coloring.push_back(color_name(c));
  j = nlohmann::json{
      {"m", p.m}, {"colors", p.colors}, {"coloring", coloring}, {"sigma", p.sigma}};
}

inline void from_json(const nlohmann::json& j, ColoredPermutation& p) {
  p.m = j.at("m").get<int>();
  p.colors = j.at("colors").get<int>();
  p.coloring.clear();
  for (const auto& name : j.at("coloring")) {
    p.coloring.push_back(color_from_name(name.get<std::string>()));
  }
  p.sigma = j.at("sigma").get<std::vector<int>>();
}

inline void to_json(nlohmann::json& j, const TraceRecord& r) {
  j = nlohmann::json{{"cycle_min", r.cycle_min},
                     {"broken_from", r.broken_from},
                     {"broken_to", r.broken_to},
                     {"path", r.path}};
}

inline void to_json(nlohmann::json& j, const IdentityReport& rep) {
  j = nlohmann::json{{"m", rep.m},
                     {"double_sum", rep.double_sum_form},
                     {"single_sum", rep.single_sum_form},
                     {"weighted_lhs", rep.weighted_lhs},
                     {"weighted_rhs", rep.weighted_rhs},
                     {"brute_bi", nullptr},
                     {"brute_endo", nullptr},
                     {"all_equal", rep.all_equal}};
  if (rep.brute_bi) j["brute_bi"] = *rep.brute_bi;
  if (rep.brute_endo) j["brute_endo"] = *rep.brute_endo;
}

}  // namespace bmoll
