#include "coxdesc/serialize.hpp"

#include "coxdesc/errors.hpp"

namespace coxdesc {

Json to_json(const AlgebraElement& a) {
  Json j = Json::object();
  for (const auto& [L, c] : a.terms()) j[L.to_string()] = to_string(c);
  return j;
}

Json to_json(const QPolynomial& p) {
  Json j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(to_string(c));
  return j;
}

Json to_json(const RationalMatrix& m) {
  Json j = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    j.push_back(std::move(r));
  }
  return j;
}

Json to_json(const SubalgebraReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["type"] = r.type;
  j["J"] = r.J.to_string();
  j["dim"] = r.dim;
  j["minimal_poly"] = to_json(r.minimal_poly);
  j["native"] = r.has_native_basis;
  Json basis = Json::array();
  for (const auto& L : r.native_basis) basis.push_back(L.to_string());
  j["native_basis"] = std::move(basis);
  j["integral"] = r.all_integer;
  j["change_of_basis"] = to_json(r.change_of_basis);
  return j;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["anchor"] = c.anchor;
  j["ok"] = c.ok;
  j["expected"] = c.expected;
  j["actual"] = c.actual;
  return j;
}

Json chain_to_json(const ChainElement& e) {
  Json j = Json::object();
  for (const auto& [l, c] : e) j[std::to_string(l)] = to_string(c);
  return j;
}

AlgebraElement algebra_element_from_json(const Json& j, int rank) {
  if (!j.is_object()) throw InvalidArgument("algebra element must be a JSON object");
  AlgebraElement a;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw InvalidArgument("coefficient of " + key + " must be a string");
    a.add(SubsetMask::parse(key, rank), parse_rational(value.get<std::string>()));
  }
  return a;
}

}  // namespace coxdesc
