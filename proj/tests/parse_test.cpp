#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forcealg/parse.hpp"
#include "test_support.hpp"

using namespace forcealg;
using forcealg::testsupport::Rng;

namespace {
RingPtr forcing_b() { return PolyRing::make(FieldSpec::rationals(), {"x", "y", "T1", "T2"}, 2); }
}  // namespace

TEST_CASE("grammar cases") {
  RingPtr b = forcing_b();
  Polynomial h = parse_polynomial("x^2*T1 + y^2*T2 + x*y", b);
  CHECK(h.term_count() == 3);
  CHECK(h.total_degree() == 3);

  CHECK(parse_polynomial("0", b).is_zero());
  CHECK(parse_polynomial("2x^2y", b) ==
        parse_polynomial("2 * x^2 * y", b));  // implicit multiplication
  CHECK(parse_polynomial("-x + y", b) == parse_polynomial("y - x", b));
  CHECK(parse_polynomial("1/2x", b) == parse_polynomial("x", b).scaled(
                                           Scalar::fraction(FieldSpec::rationals(), 1, 2)));
  CHECK(parse_polynomial("x2", PolyRing::make(FieldSpec::rationals(), {"x2"})).term_count() == 1);
  CHECK_THROWS_AS(parse_polynomial("x - - 1", b), ParseError);  // signs don't stack
}

TEST_CASE("coefficients reduce into the declared field") {
  RingPtr f7 = PolyRing::make(FieldSpec::gf(7), {"x"});
  CHECK(parse_polynomial("10x", f7) == parse_polynomial("3x", f7));
  CHECK(parse_polynomial("7x", f7).is_zero());
  CHECK(parse_polynomial("1/3", f7) == parse_polynomial("5", f7));
  CHECK_THROWS_AS(parse_polynomial("1/7", f7), ParseError);
  // arbitrary-precision literal
  RingPtr q = PolyRing::make(FieldSpec::rationals(), {"x"});
  CHECK(parse_polynomial("123456789012345678901234567890", q).constant_coefficient() ==
        Scalar::of_mpz(FieldSpec::rationals(), mpz_class("123456789012345678901234567890")));
}

TEST_CASE("syntax errors carry a position") {
  RingPtr b = forcing_b();
  CHECK_THROWS_AS(parse_polynomial("x + + ", b), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", b), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^", b), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2*", b), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x 2", b), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x$y", b), ParseError);
  try {
    parse_polynomial("x + w", b);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(std::string(e.what()).find("unknown variable 'w'") != std::string::npos);
  }
}

TEST_CASE("reserved generated names are rejected") {
  RingPtr b = forcing_b();
  CHECK_THROWS_AS(parse_polynomial("__z", b), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x + 2__t", b), ParseError);
}

TEST_CASE("format then parse is the identity on canonical forms") {
  for (FieldSpec k : {FieldSpec::rationals(), FieldSpec::gf(13)}) {
    RingPtr r = PolyRing::make(k, {"x", "y", "T1"});
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
      Polynomial f = testsupport::random_polynomial(rng, r, 6, 5);
      CHECK(parse_polynomial(f.to_string(), r) == f);
    }
  }
}

TEST_CASE("parse then format canonicalizes") {
  RingPtr r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  CHECK(format_polynomial(parse_polynomial("y + x + x", r)) == "2*x + y");
  CHECK(parse_polynomial("x*x*x", r).to_string() == "x^3");
  CHECK(parse_polynomial("x - x", r).to_string() == "0");
}
