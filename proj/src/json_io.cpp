#include "samejulia/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "samejulia/errors.hpp"

namespace samejulia::json_io {

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const Poly& p) {
  json out = json::array();
  for (const Complex& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

json to_json(const AffineMap& L) { return {{"A", to_json(L.A)}, {"B", to_json(L.B)}}; }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError("complex numbers must be [re, im] pairs of numbers");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) throw InputError("complex number is not finite");
  return {re, im};
}

Poly poly_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("a polynomial must be a non-empty array of [re, im] pairs");
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const json& c : j) coeffs.push_back(complex_from_json(c));
  return Poly(std::move(coeffs));
}

Poly load_poly(std::string_view arg) {
  std::string text;
  if (!arg.empty() && arg.front() == '[') {
    text = std::string(arg);
  } else {
    std::ifstream in{std::string(arg)};
    if (!in) throw InputError("cannot open polynomial file '" + std::string(arg) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
  return poly_from_json(j);
}

json to_json(const Centering& c) { return {{"centered", to_json(c.centered)}, {"map", to_json(c.map)}}; }

json to_json(const SymmetryGroup& s) {
  if (!s.finite()) return {{"kind", "full-circle"}};
  return {{"kind", "cyclic"}, {"order", s.order}, {"generator", to_json(s.generator)}};
}

json to_json(const HatData& h) {
  return {{"r", h.r}, {"l", h.l}, {"f0", to_json(h.f0)}, {"hat", to_json(h.hat)}};
}

json to_json(const BoettcherSeries& b) {
  json coeffs = json::array();
  for (const Complex& c : b.b) coeffs.push_back(to_json(c));
  return {{"b", coeffs}, {"order", b.order()}, {"leading", to_json(b.leading)}, {"degree", b.degree}};
}

json to_json(const GreenValue& g) {
  return {{"value", g.value},
          {"escaped", g.escaped},
          {"boundary_uncertain", g.boundary_uncertain},
          {"iterations", g.iterations}};
}

json to_json(const RootSearch& r) {
  switch (r.status) {
    case RootSearch::Status::Found:
      return {{"status", "found"}, {"root", to_json(*r.root)}, {"branch", r.branch},
              {"branches_tried", r.branches_tried}};
    case RootSearch::Status::NotFound:
      return {{"status", "not-found"}, {"branches_tried", r.branches_tried}};
    case RootSearch::Status::Impossible:
      return {{"status", "impossible"}};
  }
  return {};
}

json to_json(const DecompositionResult& d) {
  return {{"root", to_json(d.root)},         {"epsilon", to_json(d.epsilon)},
          {"q", d.q},                        {"minimal", d.minimal},
          {"epsilon_power", d.epsilon_power}, {"branch", d.branch}};
}

json to_json(const Classification& c) {
  json out = {{"kind", std::string(kind_name(c.kind))}, {"centering", to_json(c.centering)}};
  if (c.conjugacy) {
    out["conjugacy"] = to_json(*c.conjugacy);
    out["sign_or_sigma"] = to_json(c.sign_or_sigma);
  }
  if (c.kind == Classification::Kind::Circle) out["circle_radius"] = c.circle_radius;
  if (c.decomposition) {
    out["decomposition"] = to_json(*c.decomposition);
    out["minimal"] = c.decomposition->minimal;
  } else {
    out["minimal"] = "not-applicable";
  }
  return out;
}

json to_json(const SameJuliaVerdict& v) {
  json out = {{"same", v.same}, {"reason", std::string(reason_name(v.reason))}};
  if (v.witness_sigma) out["witness_sigma"] = to_json(*v.witness_sigma);
  return out;
}

}  // namespace samejulia::json_io
