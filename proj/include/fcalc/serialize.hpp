#pragma once

// JSON encoding used by the CLI's --format json output. The layout is
// documented in docs/output.schema.json. Decoders throw
// std::invalid_argument on malformed input and always return canonical values.

#include "fcalc/element.hpp"
#include "fcalc/faa_di_bruno.hpp"
#include "fcalc/upoly.hpp"
#include "fcalc/yseries.hpp"

#include <json.hpp>

namespace fcalc {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const ParamPoly& p);
Json to_json(const Exponent& e);
Json to_json(const Monomial& m);
Json to_json(const Element& a);
Json to_json(const YSeries& s);
Json to_json(const UPoly& p);
Json to_json(const FdbElement& a);
Json to_json(const UmbralTable& t);

Rational rational_from_json(const Json& j);
ParamPoly param_poly_from_json(const Json& j);
Exponent exponent_from_json(const Json& j);
Monomial monomial_from_json(const Json& j);
Element element_from_json(const Json& j);
YSeries yseries_from_json(const Json& j);
UPoly upoly_from_json(const Json& j);

}  // namespace fcalc
