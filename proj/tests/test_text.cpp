#include <doctest.h>

#include <sstream>

#include "cofin/errors.hpp"
#include "cofin/generate.hpp"
#include "cofin/text.hpp"

using namespace cofin;

TEST_CASE("rationals") {
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("-6/4") == Rat(-3, 2));
  CHECK(parse_rational(" 0/5 ") == Rat(0));
  CHECK(format(Rat(-3, 2)) == "-3/2");
  CHECK(format(Rat(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1 2"), ParseError);
}

TEST_CASE("maps and sets") {
  CHECK(parse_pl("aff(2,-1)") == PLHomeo::affine(Rat(2), Rat(-1)));
  PLHomeo f = parse_pl("pl(1;(0,0);2)");
  CHECK(f(Rat(3)) == Rat(6));
  CHECK(f(Rat(-3)) == Rat(-3));
  CHECK(format(f) == "pl(1;(0,0);2)");
  // redundant knots collapse
  CHECK(format(parse_pl("pl(1;(0,0),(1,1);1)")) == "aff(1,0)");
  CHECK(format(parse_pl("pl(2;(1,2);2)")) == "aff(2,0)");
  CHECK_THROWS_AS(parse_pl("aff(0,1)"), MonotonicityViolation);
  CHECK_THROWS_AS(parse_pl("pl(1;(0,0),(1,-1);1)"), MonotonicityViolation);

  CHECK(parse_set("{3,-1,1/2}") == CofinSet{-1, Rat(1, 2), 3});
  CHECK(format(parse_set("{ 3 , -1 }")) == "{-1,3}");
  CHECK(format(CofinSet{}) == "{}");
  CHECK_THROWS_AS(parse_set("{1,1}"), ParseError);
  CHECK_THROWS_AS(parse_set("{1,}"), ParseError);
}

TEST_CASE("elements") {
  CHECK(format(PHom()) == "phom(aff(1,0);{})");
  PHom a = parse_element("phom(pl(1;(0,0);2);{0})");
  CHECK(format(a) == "phom(pl(1;(0,0);2);{0})");
  PHom b = parse_element("phom(aff(1,1);{0})");
  CHECK(format(b * b) == "phom(aff(1,2);{-1,0})");
  CHECK(parse_element(" phom ( aff ( 1 , 1 ) ; { 0 } ) ") == b);
  CHECK_THROWS_AS(parse_element("phom(aff(0,1);{})"), MonotonicityViolation);
  CHECK_THROWS_AS(parse_element("phom(aff(1,0);{})x"), ParseError);
  CHECK_THROWS_AS(parse_element("phom(aff(1,0))"), ParseError);

  std::ostringstream os;
  os << b;
  CHECK(os.str() == "phom(aff(1,1);{0})");
}

TEST_CASE("pairs") {
  GSPair p = parse_pair("pair(aff(1,1);{1})");
  CHECK(p == GSPair{PLHomeo::affine(Rat(1), Rat(1)), CofinSet{1}});
  CHECK(format(p * p) == "pair(aff(1,2);{1,2})");
}

TEST_CASE("error positions") {
  try {
    parse_element("phom(aff(1,0);{1,?})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 17);
  }
  try {
    parse_rational("7/0");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 0);
  }
}

TEST_CASE("random round trip") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Generator gen(seed, {});
    PHom a = gen.element();
    std::string text = format(a);
    CHECK(parse_element(text) == a);
    CHECK(format(parse_element(text)) == text);
    CHECK(parse_pl(format(a.extension())) == a.extension());
  }
}
