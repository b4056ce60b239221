#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forcealg/forcing.hpp"
#include "forcealg/parse.hpp"
#include "test_support.hpp"

using namespace forcealg;
using forcealg::testsupport::Rng;

namespace {

RingPtr base_xy(FieldSpec k = FieldSpec::rationals()) { return PolyRing::make(k, {"x", "y"}); }

Polynomial p(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

ForcingData data_xy(std::vector<const char*> fs_text, const char* f_text,
                    FieldSpec k = FieldSpec::rationals()) {
  RingPtr r = base_xy(k);
  std::vector<Polynomial> fs;
  for (const char* t : fs_text) fs.push_back(p(r, t));
  return ForcingData::make(r, std::move(fs), p(r, f_text));
}

ForcingData headline() { return data_xy({"x^2", "y^2"}, "x*y"); }

Point origin(const ForcingData& d) {
  Point pt;
  for (const auto& v : d.base->vars()) pt.insert_or_assign(v, Scalar::zero(d.base->field()));
  return pt;
}

Point point_of(const ForcingData& d, std::vector<long long> coords) {
  Point pt;
  std::size_t i = 0;
  for (const auto& v : d.base->vars())
    pt.insert_or_assign(v, Scalar::of_int(d.base->field(), coords[i++]));
  return pt;
}

}  // namespace

TEST_CASE("forcing equation assembly") {
  ForcingData d = headline();
  Polynomial h = forcing_equation(d);
  CHECK(h.to_string() == "x^2*T1 + y^2*T2 + x*y");
  CHECK(h.ring()->block_split() == std::size_t{2});

  ForcingData trivial = data_xy({}, "x*y");
  CHECK(forcing_equation(trivial).to_string() == "x*y");

  ForcingData zero = data_xy({"0", "0"}, "0");
  CHECK(forcing_equation(zero).is_zero());
}

TEST_CASE("data and derivative ideals, generator by generator") {
  ForcingData d = headline();
  Ideal i = data_ideal(d);
  REQUIRE(i.gens().size() == 3);
  CHECK(i.gens()[0] == p(d.base, "x*y"));
  CHECK(i.gens()[1] == p(d.base, "x^2"));
  CHECK(i.gens()[2] == p(d.base, "y^2"));

  Ideal dd = derivative_ideal(d);
  REQUIRE(dd.gens().size() == 4);
  CHECK(dd.gens()[0] == p(d.base, "2x"));
  CHECK(dd.gens()[1] == p(d.base, "2y"));
  CHECK(dd.gens()[2] == p(d.base, "y"));
  CHECK(dd.gens()[3] == p(d.base, "x"));
  CHECK(dd.groebner().elements == std::vector<Polynomial>{p(d.base, "x"), p(d.base, "y")});

  // the exponent-box family (x^a, y^b; x^c y^d) at (3, 4, 2, 2)
  ForcingData e = data_xy({"x^3", "y^4"}, "x^2*y^2");
  Ideal de = derivative_ideal(e);
  REQUIRE(de.gens().size() == 4);
  CHECK(de.gens()[0] == p(e.base, "3x^2"));
  CHECK(de.gens()[1] == p(e.base, "4y^3"));
  CHECK(de.gens()[2] == p(e.base, "2x*y^2"));
  CHECK(de.gens()[3] == p(e.base, "2x^2*y"));

  ForcingData consts = data_xy({"2", "3"}, "5");
  CHECK(derivative_ideal(consts).gens().empty());
}

TEST_CASE("jacobian ideal uses the chain-rule generators") {
  ForcingData d = headline();
  Ideal j = jacobian_ideal(d);
  RingPtr b = j.ring();
  REQUIRE(j.gens().size() == 5);
  CHECK(j.gens()[0] == p(b, "x*y"));
  CHECK(j.gens()[1] == p(b, "x^2"));
  CHECK(j.gens()[2] == p(b, "y^2"));
  CHECK(j.gens()[3] == p(b, "2x*T1 + y"));
  CHECK(j.gens()[4] == p(b, "2y*T2 + x"));

  ForcingData zero = data_xy({"0"}, "0");
  CHECK(jacobian_ideal(zero).gens().empty());

  // exponent-box family at (3, 4, 2, 2)
  ForcingData e = data_xy({"x^3", "y^4"}, "x^2*y^2");
  Ideal je = jacobian_ideal(e);
  RingPtr be = je.ring();
  REQUIRE(je.gens().size() == 5);
  CHECK(je.gens()[0] == p(be, "x^2*y^2"));
  CHECK(je.gens()[1] == p(be, "x^3"));
  CHECK(je.gens()[2] == p(be, "y^4"));
  CHECK(je.gens()[3] == p(be, "3x^2*T1 + 2x*y^2"));
  CHECK(je.gens()[4] == p(be, "4y^3*T2 + 2x^2*y"));
}

TEST_CASE("integrity criterion") {
  CriterionReport unit = is_domain(data_xy({"x", "y"}, "1"));
  CHECK(unit.verdict == Verdict::Yes);
  CHECK(unit.branch == "I = R");
  CHECK(unit.witness("codim_I")->is_unit());

  CriterionReport head = is_domain(headline());
  CHECK(head.verdict == Verdict::Yes);
  CHECK(*head.witness("codim_I") == Codim::of(2));

  CriterionReport no = is_domain(data_xy({"x", "x"}, "x"));
  CHECK(no.verdict == Verdict::No);
  CHECK(*no.witness("codim_I") == Codim::of(1));

  CHECK(is_domain(data_xy({"0", "0"}, "x")).verdict == Verdict::Degenerate);
  CHECK(is_domain(data_xy({"0"}, "0")).verdict == Verdict::Yes);  // A = B
}

TEST_CASE("irreducibility criterion is one-directional") {
  CHECK(is_irreducible(data_xy({"x", "y"}, "0")).verdict == Verdict::ProvenYes);
  CHECK(is_irreducible(data_xy({"x"}, "0")).verdict == Verdict::Inconclusive);
  CHECK(is_irreducible(headline()).verdict == Verdict::ProvenYes);
  CHECK(is_irreducible(data_xy({"0", "0"}, "3")).verdict == Verdict::Degenerate);
}

TEST_CASE("normality criterion on the named instances") {
  CriterionReport head = is_normal(headline());
  CHECK(head.verdict == Verdict::No);
  CHECK(head.branch == "(b) fails");
  CHECK(*head.witness("codim_I") == Codim::of(2));
  CHECK(*head.witness("codim_I_plus_D") == Codim::of(2));

  Rng rng(43);
  for (int i = 0; i < 10; ++i) {
    int b = static_cast<int>(rng() % 4), c = static_cast<int>(rng() % 4),
        d = static_cast<int>(rng() % 4);
    ForcingData exp = data_xy({"x", ("y^" + std::to_string(b)).c_str()}, "x");
    exp.f = p(exp.base, "x^" + std::to_string(c) + "*y^" + std::to_string(d));
    CHECK(is_normal(exp).verdict == Verdict::Yes);  // first coefficient x makes D a unit ideal
  }

  CriterionReport quadric = is_normal(data_xy({"x", "y"}, "0"));
  CHECK(quadric.verdict == Verdict::Yes);
  CHECK(*quadric.witness("codim_I") == Codim::of(2));
  CHECK(quadric.witness("codim_I_plus_D")->is_unit());

  CHECK(is_normal(data_xy({"0", "0"}, "0")).branch == "zero equation: A = B");
}

TEST_CASE("homogeneous data decide the normal-ring property") {
  // n = 0: A = R/(f)
  CriterionReport cusp_like = is_normal(data_xy({}, "x^2"));
  CHECK(cusp_like.verdict == Verdict::No);
  CHECK(cusp_like.branch == "homogeneous: (b) fails");

  CriterionReport line = is_normal(data_xy({}, "x"));
  CHECK(line.verdict == Verdict::Yes);
  CHECK(line.branch == "homogeneous: normal ring");

  // all f_i = 0 with n > 0 behaves the same way
  CriterionReport padded = is_normal(data_xy({"0", "0"}, "x"));
  CHECK(padded.verdict == Verdict::Yes);
  CHECK(padded.branch == "homogeneous: normal ring");
}

TEST_CASE("characteristic-p data carry a collapse warning") {
  ForcingData d = data_xy({"x^5", "y"}, "x", FieldSpec::gf(5));
  CriterionReport r = is_normal(d);
  REQUIRE(!r.notes.empty());
  CHECK(r.notes[0].find("characteristic 5") != std::string::npos);
  CHECK(is_normal(data_xy({"x^4", "y"}, "x", FieldSpec::gf(5))).notes.empty());
}

TEST_CASE("normal domains are domains: clause (a) is shared") {
  Rng rng(47);
  RingPtr r = base_xy();
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> fs;
    int n = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < n; ++i) {
      Polynomial m = Polynomial::term(r, testsupport::random_monomial(rng, 2, 3),
                                      Scalar::one(r->field()));
      fs.push_back(m);
    }
    Polynomial f = Polynomial::term(r, testsupport::random_monomial(rng, 2, 3),
                                    Scalar::one(r->field()));
    ForcingData d = ForcingData::make(r, fs, f);
    if (d.homogeneous()) continue;
    if (is_normal(d).verdict == Verdict::Yes) CHECK(is_domain(d).verdict == Verdict::Yes);
  }
}

TEST_CASE("clause (b) agrees with the singular-locus codimension in B") {
  Rng rng(53);
  RingPtr r = base_xy();
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    std::vector<Polynomial> fs;
    int n = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < n; ++i) fs.push_back(testsupport::random_polynomial(rng, r, 2, 3));
    Polynomial f = testsupport::random_polynomial(rng, r, 2, 3);
    ForcingData d = ForcingData::make(r, fs, f);
    if (forcing_equation(d).is_zero()) continue;

    CriterionReport nr = is_normal(d);
    const Codim* ci = nr.witness("codim_I");
    bool clause_a = ci && ci->at_least(2);
    // the equivalence with the ambient singular locus needs clause (a)
    // (or homogeneous data, where J = (I+D)B unconditionally)
    if (!clause_a && !d.homogeneous()) continue;

    bool clause_b = nr.witness("codim_I_plus_D")->greater_than(2);
    Codim cj = codimension(jacobian_ideal(d));
    CHECK(clause_b == cj.at_least(3));
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("surjectivity of the forcing morphism") {
  CHECK(is_surjective(data_xy({"x", "y"}, "x+y")));
  CHECK(is_surjective(data_xy({"x^2"}, "x")));
  CHECK_FALSE(is_surjective(data_xy({"y"}, "x")));
}

TEST_CASE("membership in the data ideal implies surjectivity") {
  Rng rng(59);
  RingPtr r = base_xy();
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> fs = {testsupport::random_polynomial(rng, r, 2, 2, true),
                                  testsupport::random_polynomial(rng, r, 2, 2, true)};
    Polynomial f = testsupport::random_polynomial(rng, r, 2, 2);
    ForcingData d = ForcingData::make(r, fs, f);
    if (membership(f, Ideal(r, fs))) CHECK(is_surjective(d));
  }
}

TEST_CASE("fibers over rational points") {
  ForcingData quadric = data_xy({"x", "y"}, "0");
  FiberDescription f0 = fiber(quadric, origin(quadric));
  CHECK(f0.status == FiberDescription::Status::AffineSpace);
  CHECK(f0.dim == 2);
  CHECK(f0.rank == 0);

  FiberDescription f1 = fiber(quadric, point_of(quadric, {1, 0}));
  CHECK(f1.dim == 1);
  CHECK(f1.rank == 1);

  ForcingData unit = data_xy({"x", "y"}, "1");
  FiberDescription f2 = fiber(unit, origin(unit));
  CHECK(f2.status == FiberDescription::Status::Empty);
  CHECK(f2.residue_point.back().is_one());

  CHECK_THROWS_AS(fiber(quadric, Point{}), std::invalid_argument);
}

TEST_CASE("fiber dimension matches an independent linear solve") {
  Rng rng(61);
  RingPtr r = base_xy();
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polynomial> fs;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) fs.push_back(testsupport::random_polynomial(rng, r, 2, 2));
    Polynomial f = testsupport::random_polynomial(rng, r, 2, 2);
    ForcingData d = ForcingData::make(r, fs, f);
    Point pt;
    for (const auto& v : r->vars())
      pt.insert_or_assign(v, testsupport::random_scalar(rng, r->field()));

    std::vector<Scalar> row;
    for (const Polynomial& g : fs) row.push_back(g.evaluate(pt));
    row.push_back(-f.evaluate(pt));
    auto oracle = testsupport::gaussian_solve({row}, fs.size());

    FiberDescription fb = fiber(d, pt);
    if (!oracle.consistent) {
      CHECK(fb.status == FiberDescription::Status::Empty);
    } else {
      CHECK(fb.status == FiberDescription::Status::AffineSpace);
      CHECK(fb.dim == static_cast<std::int64_t>(n) - oracle.rank);
      CHECK(fb.rank == oracle.rank);
    }
  }
}

TEST_CASE("completely singular fibers") {
  ForcingData head = headline();
  CHECK(fiber_completely_singular(head, origin(head)));
  CHECK_FALSE(fiber_completely_singular(head, point_of(head, {1, 1})));

  ForcingData quadric = data_xy({"x", "y"}, "0");
  CHECK_FALSE(fiber_completely_singular(quadric, origin(quadric)));

  ForcingData unit = data_xy({"x", "y"}, "1");
  CHECK_THROWS_AS(fiber_completely_singular(unit, origin(unit)), std::invalid_argument);
}

TEST_CASE("horizontal component strips the content of the equation") {
  ForcingData shared = data_xy({"x", "x"}, "x");
  Ideal h = horizontal_component(shared);
  REQUIRE(h.gens().size() == 1);
  CHECK(h.gens()[0] == p(h.ring(), "T1 + T2 + 1"));

  ForcingData head = headline();
  CHECK(horizontal_component(head).gens()[0] == forcing_equation(head));

  ForcingData trivial = data_xy({}, "x*y");
  CHECK(horizontal_component(trivial).gens()[0].to_string() == "x*y");

  CHECK_THROWS_AS(horizontal_component(data_xy({"0"}, "0")), std::invalid_argument);
}

TEST_CASE("the exponent box matches the seven-case closed form") {
  RingPtr r = base_xy();
  Polynomial x = Polynomial::variable(r, "x");
  Polynomial y = Polynomial::variable(r, "y");
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d) {
          ForcingData data = ForcingData::make(r, {x.pow(a), y.pow(b)}, x.pow(c) * y.pow(d));
          bool expected = a == 0 || a == 1 || b == 0 || b == 1 || (c == 0 && d == 0) ||
                          (c == 1 && d == 0) || (c == 0 && d == 1);
          CHECK((is_normal(data).verdict == Verdict::Yes) == expected);
        }
}

TEST_CASE("t-variable bookkeeping is validated") {
  RingPtr r = base_xy();
  CHECK_THROWS_AS(ForcingData::make(r, {p(r, "x")}, p(r, "y"), {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(ForcingData::make(r, {p(r, "x")}, p(r, "y"), {"__z"}), std::invalid_argument);
  CHECK_THROWS_AS(ForcingData::make(r, {p(r, "x")}, p(r, "y"), {"T1", "T2"}),
                  std::invalid_argument);
}
