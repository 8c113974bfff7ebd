#pragma once

#include <nlohmann/json.hpp>

#include "nilorbit/canonical.hpp"
#include "nilorbit/counting.hpp"
#include "nilorbit/indicator.hpp"
#include "nilorbit/invariants.hpp"
#include "nilorbit/mat.hpp"
#include "nilorbit/reduced_poly.hpp"

namespace nilorbit {

// Matrices serialize as row-major arrays of canonical element codes; the
// field spec travels separately.

inline nlohmann::json mat2_to_json(const Field& F, const Mat2& A) {
  nlohmann::json j = nlohmann::json::array();
  for (const Fe& x : A.a) j.push_back(F.encode(x));
  return j;
}

inline Mat2 mat2_from_json(const Field& F, const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("matrix JSON must be a 4-entry array");
  return Mat2{{F.decode(j[0].get<long>()), F.decode(j[1].get<long>()),
               F.decode(j[2].get<long>()), F.decode(j[3].get<long>())}};
}

inline nlohmann::json tuple_to_json(const Field& F, const NilTuple& T) {
  nlohmann::json j = nlohmann::json::array();
  for (const Mat2& A : T.mats) j.push_back(mat2_to_json(F, A));
  return j;
}

inline NilTuple tuple_from_json(const Field& F, const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("tuple JSON must be a nonempty array");
  std::vector<Mat2> mats;
  mats.reserve(j.size());
  for (const auto& e : j) mats.push_back(mat2_from_json(F, e));
  return make_nil_tuple(F, std::move(mats));
}

inline std::string form_tag_name(FormTag t) {
  switch (t) {
    case FormTag::zero: return "zero";
    case FormTag::line: return "line";
    case FormTag::split: return "split";
  }
  return "zero";
}

inline nlohmann::json form_to_json(const Field& F, const CanonicalForm& c) {
  nlohmann::json j;
  j["tag"] = form_tag_name(c.tag);
  j["m"] = c.m;
  nlohmann::json alphas = nlohmann::json::array();
  for (const Fe& a : c.alphas) alphas.push_back(F.encode(a));
  j["alphas"] = std::move(alphas);
  if (c.pivot)
    j["pivot"] = F.encode(*c.pivot);
  else
    j["pivot"] = nullptr;
  nlohmann::json tail = nlohmann::json::array();
  for (const Mat2& D : c.tail) tail.push_back(mat2_to_json(F, D));
  j["tail"] = std::move(tail);
  return j;
}

inline nlohmann::json poly_to_json(const ReducedPoly& p) {
  nlohmann::json j;
  j["n"] = p.nvars();
  j["q"] = p.field().q();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exps, c] : p.terms()) {  // map order = sorted exponent vectors
    nlohmann::json t;
    t["exps"] = exps;
    t["coeff"] = p.field().encode(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline nlohmann::json census_to_json(const OrbitCensus& c) {
  nlohmann::json j;
  j["field"] = c.field_spec;
  j["n"] = c.n;
  j["m"] = c.m;
  j["count"] = c.count.str();
  j["method"] = c.method;
  if (!c.algorithm.empty()) j["algorithm"] = c.algorithm;
  return j;
}

}  // namespace nilorbit
