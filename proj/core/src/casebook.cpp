#include "forcealg/casebook.hpp"

#include "forcealg/parse.hpp"

namespace forcealg {

namespace {

bool seven_case_rule(int a, int b, int c, int d) {
  return a == 0 || a == 1 || b == 0 || b == 1 || (c == 0 && d == 0) || (c == 1 && d == 0) ||
         (c == 0 && d == 1);
}

Polynomial pp(const RingPtr& r, const char* text) { return parse_polynomial(text, r); }

}  // namespace

CaseResult normality_grid(int a_max, int b_max, int c_max, int d_max) {
  CaseResult out;
  out.name = "normality-grid";
  RingPtr base = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  Polynomial x = Polynomial::variable(base, "x");
  Polynomial y = Polynomial::variable(base, "y");

  std::int64_t instances = 0, agreements = 0;
  for (int a = 0; a <= a_max; ++a)
    for (int b = 0; b <= b_max; ++b)
      for (int c = 0; c <= c_max; ++c)
        for (int d = 0; d <= d_max; ++d) {
          ForcingData data = ForcingData::make(
              base, {x.pow(a), y.pow(b)}, x.pow(c) * y.pow(d), {"T1", "T2"});
          bool by_criterion = is_normal(data).verdict == Verdict::Yes;
          bool by_rule = seven_case_rule(a, b, c, d);
          bool by_unit = ideal_sum(data_ideal(data), derivative_ideal(data)).is_unit();
          ++instances;
          if (by_criterion == by_rule && by_rule == by_unit) {
            ++agreements;
          } else {
            std::string label = "a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                                ",c=" + std::to_string(c) + ",d=" + std::to_string(d);
            std::string got = std::string("criterion=") + (by_criterion ? "normal" : "not normal") +
                              ",rule=" + (by_rule ? "normal" : "not normal") +
                              ",I+D=R_test=" + (by_unit ? "normal" : "not normal");
            out.add(label, std::string("agree"), got);
          }
        }
  out.add("instances", instances, instances);
  out.add("agreements", instances, agreements);
  out.finalize();
  return out;
}

CaseResult verify_decomposition(const Ideal& h, const std::vector<Ideal>& candidates) {
  if (candidates.empty()) throw std::invalid_argument("no candidate components");
  for (const Ideal& p : candidates) require_same_ring(*h.ring(), *p.ring());

  CaseResult out;
  out.name = "decomposition";
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool contained = true;
    for (const Polynomial& g : h.gens())
      contained = contained && membership(g, candidates[i]);
    out.add("H subset of P" + std::to_string(i + 1), true, contained);
  }

  Ideal meet = candidates[0];
  for (std::size_t i = 1; i < candidates.size(); ++i) meet = intersection(meet, candidates[i]);
  out.add("rad(H) = rad(P1 ∩ ... ∩ P" + std::to_string(candidates.size()) + ")", true,
          equal_up_to_radical(h, meet));

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Codim c = codimension(candidates[i]);
    out.add("codim(P" + std::to_string(i + 1) + ")", c.to_string(), c.to_string());
  }
  out.notes.push_back("primality of the candidate components is assumed, not verified");
  out.finalize();
  return out;
}

ForcingMatrix enlightening_matrix(const FieldSpec& k) {
  RingPtr base = PolyRing::make(k, {"x", "y"});
  Polynomial x = Polynomial::variable(base, "x");
  Polynomial y = Polynomial::variable(base, "y");
  Polynomial zero = Polynomial::zero(base);
  return ForcingMatrix::make(base, {{x, y}, {y, x}}, {zero, zero}, {"T1", "T2"});
}

std::vector<Ideal> enlightening_minimal_primes(const FieldSpec& k) {
  RingPtr b = matrix_forcing_ring(enlightening_matrix(k));
  return {
      Ideal(b, {pp(b, "T1"), pp(b, "T2")}),
      Ideal(b, {pp(b, "x"), pp(b, "y")}),
      Ideal(b, {pp(b, "x-y"), pp(b, "T1+T2")}),
      Ideal(b, {pp(b, "x+y"), pp(b, "T1-T2")}),
  };
}

CaseResult verify_enlightening_decomposition() {
  ForcingMatrix m = enlightening_matrix();
  Ideal h = forcing_ideal(m);
  CaseResult out = verify_decomposition(h, enlightening_minimal_primes());
  out.name = "enlightening-decomposition";

  for (CaseSubcheck& check : out.subchecks)
    if (check.label.rfind("codim(P", 0) == 0) check.expected = std::string("2");

  out.add("codim(H)", std::string("2"), codimension(h).to_string());
  out.add("regular sequence", std::string("Yes"),
          std::string(to_string(is_regular_sequence(m).verdict)));

  Ideal fit_ideal = fitting_ideal(m, 2);
  const GroebnerBasis& fit = fit_ideal.groebner();
  std::string basis_text;
  for (const Polynomial& g : fit.elements) {
    if (!basis_text.empty()) basis_text += "; ";
    basis_text += g.to_string();
  }
  out.add("reduced basis of I_2", std::string("x^2 - y^2"), basis_text);
  out.finalize();
  return out;
}

CaseResult verify_enlightening_singular_locus(const FieldSpec& k) {
  CaseResult out;
  out.name = "enlightening-singular-locus";
  RingPtr b = PolyRing::make(k, {"x", "y", "T1", "T2"}, 2);

  // 2x2 minors of the Jacobian [[T1,T2,x,y],[T2,T1,y,x]] of (h1,h2),
  // together with h1, h2 themselves
  Ideal j0(b, {
                  pp(b, "T1^2-T2^2"),
                  pp(b, "x^2-y^2"),
                  pp(b, "y*T1-x*T2"),
                  pp(b, "x*T1-y*T2"),
                  pp(b, "x*T1+y*T2"),
                  pp(b, "y*T1+x*T2"),
              });
  std::int64_t expected = (k.characteristic() == 2) ? 2 : 3;
  if (k.characteristic() == 2)
    out.notes.push_back("characteristic 2 degenerates x^2-y^2 = (x+y)^2; "
                        "the expected value comes from an independent computation");
  out.notes.push_back("J0 is the ideal of 2x2 minors of the Jacobian [[T1,T2,x,y],[T2,T1,y,x]] "
                      "of (h1, h2), together with h1 and h2");
  Codim c = codimension(j0);
  out.add("codim_J0", expected, c.is_unit() ? CheckValue(std::string("unit")) : CheckValue(c.value()));
  out.finalize();
  return out;
}

CaseResult verify_normalization_example() {
  CaseResult out;
  out.name = "normalization-presentation";
  RingPtr c = PolyRing::make(FieldSpec::rationals(), {"X", "Y", "T", "S", "U"});
  std::vector<Polynomial> gens = {pp(c, "Y*U-X*T"), pp(c, "X*U+Y*S+X"), pp(c, "U^2+U+T*S")};
  Ideal p(c, gens);

  Codim cp = codimension(p);
  out.add("codim(P)", std::int64_t{2}, cp.is_unit() ? CheckValue(std::string("unit")) : CheckValue(cp.value()));

  out.add("forcing equation maps into P", true, membership(pp(c, "X^2*T+Y^2*S+X*Y"), p));

  // 2x2 minors of the Jacobian of P's generators; 2 = codim(P)
  std::vector<Polynomial> minor_gens = gens;
  for (std::size_t r1 = 0; r1 < gens.size(); ++r1)
    for (std::size_t r2 = r1 + 1; r2 < gens.size(); ++r2)
      for (std::size_t c1 = 0; c1 < c->nvars(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < c->nvars(); ++c2) {
          Polynomial det = gens[r1].derivative(c1) * gens[r2].derivative(c2) -
                           gens[r1].derivative(c2) * gens[r2].derivative(c1);
          if (!det.is_zero()) minor_gens.push_back(det);
        }
  out.add("Jacobian minors + P = unit ideal", true, Ideal(c, minor_gens).is_unit());

  out.add("integral equation lies in P", true, membership(pp(c, "U^2+U+T*S"), p));

  out.notes.push_back("minor size 2 equals codim(P); pure codimension of the complete "
                      "intersection is assumed for the singular-locus reading");
  out.finalize();
  return out;
}

}  // namespace forcealg
