#include "fcalc/serialize.hpp"

#include <stdexcept>

namespace fcalc {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("JSON object lacks field '") + key + "'");
  return j.at(key);
}

void require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a JSON array");
}

}  // namespace

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const ParamPoly& p) {
  Json out = Json::array();
  for (const auto& [d, c] : p.terms()) {
    Json powers = Json::object();
    for (const auto& [name, power] : d) powers[name] = power;
    out.push_back({{"coeff", to_json(c)}, {"powers", powers}});
  }
  return out;
}

Json to_json(const Exponent& e) {
  Json linear = Json::object();
  for (const auto& [name, m] : e.linear()) linear[name] = m;
  return {{"constant", to_json(e.constant())}, {"linear", linear}};
}

Json to_json(const Monomial& m) {
  Json out = Json::array();
  for (const auto& [g, e] : m.factors()) out.push_back({{"gen", g}, {"exp", to_json(e)}});
  return out;
}

Json to_json(const Element& a) {
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) terms.push_back({{"coeff", to_json(c)}, {"monomial", to_json(m)}});
  return {{"terms", terms}};
}

Json to_json(const YSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

Json to_json(const UPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"coeffs", coeffs}};
}

Json to_json(const FdbElement& a) {
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) {
    Json mono = Json::array();
    for (const auto& [v, e] : m)
      mono.push_back({{"var", v.kind == FdbVar::Kind::Y ? "y" : "x"}, {"index", v.index}, {"exp", e}});
    terms.push_back({{"coeff", to_json(c)}, {"monomial", mono}});
  }
  return {{"terms", terms}};
}

Json to_json(const UmbralTable& t) {
  Json b = Json::array();
  for (const auto& v : t.b.values()) b.push_back(to_json(v));
  Json images = Json::array();
  for (const auto& p : t.images) images.push_back(to_json(p));
  return {{"B", b}, {"images", images}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a string \"p/q\" or an integer");
  return parse_rational(j.get<std::string>());
}

ParamPoly param_poly_from_json(const Json& j) {
  require_array(j, "ParamPoly");
  ParamPoly out;
  for (const auto& t : j) {
    ParamDegree d;
    for (const auto& [name, power] : field(t, "powers").items()) {
      if (!power.is_number_unsigned() && !(power.is_number_integer() && power.get<long>() >= 0))
        throw std::invalid_argument("parameter powers must be nonnegative integers");
      d.emplace_back(name, power.get<std::uint32_t>());
    }
    out += ParamPoly::term(std::move(d), rational_from_json(field(t, "coeff")));
  }
  return out;
}

Exponent exponent_from_json(const Json& j) {
  Exponent e(rational_from_json(field(j, "constant")));
  for (const auto& [name, m] : field(j, "linear").items()) {
    if (!m.is_number_integer()) throw std::invalid_argument("exponent coefficients must be integers");
    e += Exponent::param(name, m.get<std::int64_t>());
  }
  return e;
}

Monomial monomial_from_json(const Json& j) {
  require_array(j, "monomial");
  Monomial m;
  for (const auto& f : j) {
    const Json& g = field(f, "gen");
    if (!g.is_number_integer()) throw std::invalid_argument("generator index must be an integer");
    m = m * Monomial::generator(g.get<int>(), exponent_from_json(field(f, "exp")));
  }
  return m;
}

Element element_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  require_array(terms, "terms");
  Element out;
  for (const auto& t : terms)
    out.add_term(monomial_from_json(field(t, "monomial")), param_poly_from_json(field(t, "coeff")));
  return out;
}

YSeries yseries_from_json(const Json& j) {
  const Json& coeffs = field(j, "coeffs");
  require_array(coeffs, "coeffs");
  std::vector<Element> out;
  for (const auto& c : coeffs) out.push_back(element_from_json(c));
  if (out.empty()) throw std::invalid_argument("series needs at least one coefficient");
  const Json& order = field(j, "order");
  if (!order.is_number_integer() || order.get<long>() + 1 != static_cast<long>(out.size()))
    throw std::invalid_argument("series order does not match its coefficient count");
  return YSeries(std::move(out));
}

UPoly upoly_from_json(const Json& j) {
  const Json& coeffs = field(j, "coeffs");
  require_array(coeffs, "coeffs");
  std::vector<Rational> out;
  for (const auto& c : coeffs) out.push_back(rational_from_json(c));
  return UPoly(std::move(out));
}

}  // namespace fcalc
