#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <thread>

#include "forcealg/groebner.hpp"
#include "forcealg/parse.hpp"
#include "test_support.hpp"

using namespace forcealg;
using forcealg::testsupport::Rng;

namespace {

Polynomial p(const RingPtr& r, const char* text) { return parse_polynomial(text, r); }

struct CapGuard {
  std::int64_t saved = groebner_degree_cap();
  ~CapGuard() { set_groebner_degree_cap(saved); }
};

}  // namespace

TEST_CASE("normal form examples") {
  RingPtr r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  MonomialOrder lex = MonomialOrder::lex();

  std::vector<Polynomial> g1 = {p(r, "x")};
  CHECK(normal_form(p(r, "x^2+y"), g1, lex) == p(r, "y"));

  Polynomial g = p(r, "x^2*y - 3x + 1");
  std::vector<Polynomial> g2 = {g};
  CHECK(normal_form(g, g2, lex).is_zero());

  RingPtr b = PolyRing::make(FieldSpec::rationals(), {"x", "y", "T1"}, 2);
  std::vector<Polynomial> g3 = {p(b, "x^2")};
  CHECK(normal_form(p(b, "x^2*T1"), g3, MonomialOrder::grevlex()).is_zero());

  CHECK(normal_form(p(r, "x+y"), {}, lex) == p(r, "x+y"));
}

TEST_CASE("s-polynomial examples") {
  RingPtr r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  MonomialOrder lex = MonomialOrder::lex();

  CHECK(s_polynomial(p(r, "x^2"), p(r, "x*y"), lex).is_zero());
  Polynomial f = p(r, "x^3 - 2x*y + 1");
  CHECK(s_polynomial(f, f, lex).is_zero());
  CHECK(s_polynomial(p(r, "x-y"), p(r, "x+y"), lex) == p(r, "-2y"));
  CHECK_THROWS_AS(s_polynomial(Polynomial::zero(r), f, lex), std::invalid_argument);
}

TEST_CASE("buchberger on the linear examples") {
  RingPtr r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  GroebnerBasis gb =
      buchberger(r, std::vector<Polynomial>{p(r, "x-y"), p(r, "x+y")}, MonomialOrder::lex());
  REQUIRE(gb.elements.size() == 2);
  CHECK(gb.elements[0] == p(r, "x"));
  CHECK(gb.elements[1] == p(r, "y"));

  RingPtr f2 = PolyRing::make(FieldSpec::gf(2), {"x", "y"});
  GroebnerBasis gb2 =
      buchberger(f2, std::vector<Polynomial>{p(f2, "x-y"), p(f2, "x+y")}, MonomialOrder::lex());
  REQUIRE(gb2.elements.size() == 1);
  CHECK(gb2.elements[0] == p(f2, "x+y"));

  RingPtr b = PolyRing::make(FieldSpec::rationals(), {"x", "y", "T1", "T2"}, 2);
  Polynomial h = p(b, "x^2*T1 + y^2*T2 + x*y");
  GroebnerBasis gb3 = buchberger(b, std::vector<Polynomial>{h}, MonomialOrder::grevlex());
  REQUIRE(gb3.elements.size() == 1);
  CHECK(gb3.elements[0] == h);

  CHECK(buchberger(r, std::vector<Polynomial>{}, MonomialOrder::lex()).is_zero());
  CHECK(buchberger(r, std::vector<Polynomial>{Polynomial::zero(r)}, MonomialOrder::lex()).is_zero());
}

TEST_CASE("reduced bases match independently computed references") {
  auto expect_basis = [](const RingPtr& r, std::vector<const char*> gens,
                         const MonomialOrder& order, std::vector<const char*> expected) {
    std::vector<Polynomial> gs;
    for (const char* g : gens) gs.push_back(parse_polynomial(g, r));
    GroebnerBasis gb = buchberger(r, gs, order);
    REQUIRE(gb.elements.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(gb.elements[i] == parse_polynomial(expected[i], r));
  };

  RingPtr r2 = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  expect_basis(r2, {"x^2 + y^2 - 1", "x - y"}, MonomialOrder::grevlex(),
               {"y^2 - 1/2", "x - y"});
  expect_basis(r2, {"x^2 + y^2 - 1", "x - y"}, MonomialOrder::lex(),
               {"x - y", "y^2 - 1/2"});
  expect_basis(r2, {"x^2*y - 1", "x*y^2 - x"}, MonomialOrder::grevlex(),
               {"x^2 - y", "y^2 - 1"});

  RingPtr r3 = PolyRing::make(FieldSpec::rationals(), {"x", "y", "z"});
  expect_basis(r3, {"x*y - z", "y*z - x", "z*x - y"}, MonomialOrder::grevlex(),
               {"z^3 - z", "x^2 - z^2", "x*y - z", "y^2 - z^2", "x*z - y", "y*z - x"});
  expect_basis(r3, {"x*y - z", "y*z - x", "z*x - y"}, MonomialOrder::lex(),
               {"x - y*z", "y^2 - z^2", "y*z^2 - y", "z^3 - z"});

  RingPtr f7 = PolyRing::make(FieldSpec::gf(7), {"x", "y"});
  expect_basis(f7, {"3x^2 + y", "2y^2 - x"}, MonomialOrder::grevlex(),
               {"x^2 + 5y", "y^2 + 3x"});
}

TEST_CASE("every produced basis passes the fixed-point check and contains its input") {
  Rng rng(101);
  for (FieldSpec k : {FieldSpec::rationals(), FieldSpec::gf(7)}) {
    RingPtr r = PolyRing::make(k, {"x", "y", "z"});
    for (MonomialOrder order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> gens;
        int n = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < n; ++i)
          gens.push_back(testsupport::random_polynomial(rng, r, 3, 3, true));
        GroebnerBasis gb = buchberger(r, gens, order);
        CHECK(is_groebner_basis(gb));
        for (const Polynomial& g : gens)
          CHECK(normal_form(g, gb.elements, order).is_zero());
      }
    }
  }
}

TEST_CASE("reduced bases are invariant under permutation, rescaling, augmentation") {
  Rng rng(10001);
  RingPtr r = PolyRing::make(FieldSpec::rationals(), {"x", "y", "z"});
  MonomialOrder order = MonomialOrder::grevlex();
  int trials = 0;
  while (trials < 100) {
    std::vector<Polynomial> gens;
    int n = 2 + static_cast<int>(rng() % 3);  // up to 4 generators
    for (int i = 0; i < n; ++i)
      gens.push_back(testsupport::random_polynomial(rng, r, 3, 4, true));
    GroebnerBasis reference = buchberger(r, gens, order);

    std::vector<Polynomial> mutated = gens;
    std::shuffle(mutated.begin(), mutated.end(), rng);
    for (Polynomial& g : mutated)
      g = g.scaled(testsupport::random_scalar(rng, r->field(), true));
    // redundant element: a random combination of the originals
    Polynomial extra = Polynomial::zero(r);
    for (const Polynomial& g : gens)
      extra = extra + g * testsupport::random_polynomial(rng, r, 2, 1);
    mutated.push_back(extra);

    GroebnerBasis again = buchberger(r, mutated, order);
    REQUIRE(again.elements.size() == reference.elements.size());
    for (std::size_t i = 0; i < reference.elements.size(); ++i)
      CHECK(again.elements[i] == reference.elements[i]);
    ++trials;
  }
}

TEST_CASE("reduced basis shape: monic, inter-reduced, sorted") {
  RingPtr r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  GroebnerBasis gb = buchberger(
      r, std::vector<Polynomial>{p(r, "3x^2 + y"), p(r, "2y^2 - x"), p(r, "x^2*y")},
      MonomialOrder::grevlex());
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    const Polynomial& g = gb.elements[i];
    CHECK(g.leading_term(gb.order).coeff.is_one());
    for (std::size_t j = 0; j < gb.elements.size(); ++j) {
      if (i == j) continue;
      const Monomial& lm = gb.elements[j].leading_term(gb.order).mono;
      for (const Term& t : g.terms()) CHECK_FALSE(lm.divides(t.mono));
    }
    if (i + 1 < gb.elements.size())
      CHECK(gb.order.greater(g.leading_term(gb.order).mono,
                             gb.elements[i + 1].leading_term(gb.order).mono));
  }
}

TEST_CASE("unit ideal collapses to the basis {1}") {
  RingPtr r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  GroebnerBasis gb =
      buchberger(r, std::vector<Polynomial>{p(r, "x"), p(r, "x+1")}, MonomialOrder::grevlex());
  CHECK(gb.is_unit());
}

TEST_CASE("concurrent runs over shared immutable inputs agree") {
  RingPtr r = PolyRing::make(FieldSpec::rationals(), {"x", "y", "z"});
  std::vector<Polynomial> gens = {parse_polynomial("x*y - z", r), parse_polynomial("y*z - x", r),
                                  parse_polynomial("z*x - y", r)};
  GroebnerBasis reference = buchberger(r, gens, MonomialOrder::grevlex());
  std::vector<std::thread> workers;
  std::vector<GroebnerBasis> results(8, reference);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] { results[t] = buchberger(r, gens, MonomialOrder::grevlex()); });
  for (auto& w : workers) w.join();
  for (const GroebnerBasis& gb : results) CHECK(gb.elements == reference.elements);
}

TEST_CASE("degree cap aborts cleanly and is configurable") {
  CapGuard guard;
  RingPtr r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  std::vector<Polynomial> gens{p(r, "x^5 - y"), p(r, "x^4*y - 1")};
  set_groebner_degree_cap(3);  // the first s-pair already needs degree 6
  CHECK_THROWS_AS(buchberger(r, gens, MonomialOrder::grevlex()), DegreeCapExceeded);
  set_groebner_degree_cap(60);
  GroebnerBasis gb = buchberger(r, gens, MonomialOrder::grevlex());
  CHECK(is_groebner_basis(gb));
}
