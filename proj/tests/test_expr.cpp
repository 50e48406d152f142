#include "fcalc/expr.hpp"
#include "fcalc/sampling.hpp"
#include "fcalc/serialize.hpp"
#include "support.hpp"

#include <random>

using namespace fcalc;

namespace {

SourcePos error_pos(std::string_view input) {
  try {
    parse_element(input);
  } catch (const ParseError& e) {
    return e.pos();
  }
  return {0, 0};
}

std::string error_detail(std::string_view input) {
  try {
    parse_element(input);
  } catch (const ParseError& e) {
    return e.detail();
  }
  return {};
}

}  // namespace

TEST_CASE("grammar") {
  CHECK(parse_element("x") == x_());
  CHECK(parse_element("log(x)^r") == log_(P("r")));
  CHECK(parse_element("log(log(x))") == gen(2));
  CHECK(parse_element("exp(exp(x))") == gen(-2));
  CHECK(parse_element("l_3(x)") == gen(3));
  CHECK(parse_element("l_-2(x)") == gen(-2));
  CHECK(parse_element("l_2(x)^(r-1)") == gen(2, P("r") - Exponent(1)));
  CHECK(parse_element("log(exp(x))") == x_());
  CHECK(parse_element("x^-1") == x_(-1));
  CHECK(parse_element("2^3*x") == x_() * 8L);
  CHECK(parse_element("x^2^2") == x_(4));
  CHECK(parse_element("-x^2") == -x_(2));
  CHECK(parse_element("1 - 2*3") == Element(-5L));
  CHECK(parse_element("x/2") == x_() * Q(1, 2));
  CHECK(parse_element("1/x") == x_(-1));
  CHECK(parse_element("(x + 1)^2") == x_(2) + x_() * 2L + Element(1L));
  CHECK(parse_element("x^(r - 1/2)") == x_(P("r") - Exponent(Q(1, 2))));
  CHECK(parse_element("x^(2*r + s)*r") == x_(P("r") + P("r") + P("s")) * PP("r"));
  CHECK(parse_element("x^r*x^s") == x_(P("r") + P("s")));
  CHECK(to_fdb_element(parse("y_2*x_1^2 + y_1*x_2")) == fdb_D_power_y0(2));
}

TEST_CASE("parse errors carry line and column") {
  const SourcePos p = error_pos("x^^2");
  CHECK(p.line == 1);
  CHECK(p.column == 3);
  const SourcePos q = error_pos("x +\n  * 2");
  CHECK(q.line == 2);
  CHECK(q.column == 3);
  CHECK(error_pos("(x + 1").column == 7);
  CHECK(error_pos("x $ 1").column == 3);
  CHECK(error_detail("foo(x)").find("unknown identifier") != std::string::npos);
  CHECK(error_detail("y + x").find("reserved") != std::string::npos);
  CHECK(error_detail("x^(r*s)").size() > 0);
  CHECK(error_detail("1/(x + 1)").size() > 0);
  CHECK(error_detail("log(2)").size() > 0);
  CHECK_THROWS_AS(parse_element(""), ParseError);
}

TEST_CASE("printed elements parse back") {
  std::mt19937_64 rng(4242);
  ElementShape shape;
  shape.params = {"r", "s"};
  shape.max_terms = 3;
  for (int i = 0; i < 1000; ++i) {
    const Element a = random_element(rng, shape);
    const std::string text = to_text(a);
    INFO(text);
    CHECK(parse_element(text) == a);
  }
}

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(77);
  ElementShape shape;
  shape.params = {"r", "s"};
  for (int i = 0; i < 200; ++i) {
    const Element a = random_element(rng, shape);
    CHECK(element_from_json(Json::parse(to_json(a).dump())) == a);
    const Exponent e = random_exponent(rng, shape);
    CHECK(exponent_from_json(to_json(e)) == e);
    const UPoly p = random_upoly(rng, 5);
    CHECK(upoly_from_json(to_json(p)) == p);
  }
  const YSeries s = series({x_(P("r")), log_() * Q(-1, 3), Element()});
  CHECK(yseries_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"terms": 3})")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), std::invalid_argument);
}
