#include "forcealg/forcing.hpp"

#include <algorithm>
#include <stdexcept>

namespace forcealg {

namespace {

bool reserved_name(const std::string& v) { return v == "__z" || v == "__t"; }

/// In characteristic p, a datum with an exponent divisible by p loses that
/// term under differentiation; the derivative ideal can collapse.
bool char_p_collapse_possible(const ForcingData& d) {
  std::uint64_t p = d.base->field().characteristic();
  if (p == 0) return false;
  auto affected = [p](const Polynomial& g) {
    for (const Term& t : g.terms())
      for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
        std::int64_t e = t.mono.exponent(i);
        if (e > 0 && e % static_cast<std::int64_t>(p) == 0) return true;
      }
    return false;
  };
  if (affected(d.f)) return true;
  return std::any_of(d.fs.begin(), d.fs.end(), affected);
}

}  // namespace

ForcingData ForcingData::make(RingPtr base, std::vector<Polynomial> fs, Polynomial f,
                              std::vector<std::string> t_names) {
  for (const Polynomial& g : fs) require_same_ring(*base, *g.ring());
  require_same_ring(*base, *f.ring());
  if (t_names.empty()) {
    for (std::size_t i = 0; i < fs.size(); ++i) t_names.push_back("T" + std::to_string(i + 1));
  }
  if (t_names.size() != fs.size())
    throw std::invalid_argument("need one T variable per coefficient polynomial");
  for (std::size_t i = 0; i < t_names.size(); ++i) {
    const std::string& t = t_names[i];
    if (reserved_name(t)) throw std::invalid_argument("reserved variable name '" + t + "'");
    if (base->var_index(t))
      throw std::invalid_argument("forcing variable '" + t + "' collides with a base variable");
    for (std::size_t j = i + 1; j < t_names.size(); ++j)
      if (t == t_names[j]) throw std::invalid_argument("duplicate forcing variable '" + t + "'");
  }
  for (const auto& v : base->vars())
    if (reserved_name(v)) throw std::invalid_argument("reserved variable name '" + v + "'");
  return ForcingData{std::move(base), std::move(fs), std::move(f), std::move(t_names)};
}

bool ForcingData::homogeneous() const {
  return std::all_of(fs.begin(), fs.end(), [](const Polynomial& g) { return g.is_zero(); });
}

RingPtr forcing_ring(const ForcingData& d) {
  std::vector<std::string> vars = d.base->vars();
  vars.insert(vars.end(), d.t_names.begin(), d.t_names.end());
  return PolyRing::make(d.base->field(), std::move(vars), d.base->nvars());
}

Polynomial forcing_equation(const ForcingData& d) {
  RingPtr b = forcing_ring(d);
  Polynomial h = d.f.embed_into(b);
  for (std::size_t i = 0; i < d.n(); ++i)
    h = h + d.fs[i].embed_into(b) * Polynomial::variable(b, d.t_names[i]);
  return h;
}

Ideal data_ideal(const ForcingData& d) {
  std::vector<Polynomial> gens;
  gens.push_back(d.f);
  gens.insert(gens.end(), d.fs.begin(), d.fs.end());
  return Ideal(d.base, std::move(gens));
}

Ideal derivative_ideal(const ForcingData& d) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : d.fs)
    for (std::size_t j = 0; j < d.base->nvars(); ++j) {
      Polynomial dg = g.derivative(j);
      if (!dg.is_zero()) gens.push_back(dg);
    }
  for (std::size_t j = 0; j < d.base->nvars(); ++j) {
    Polynomial df = d.f.derivative(j);
    if (!df.is_zero()) gens.push_back(df);
  }
  return Ideal(d.base, std::move(gens));
}

Ideal jacobian_ideal(const ForcingData& d) {
  RingPtr b = forcing_ring(d);
  std::vector<Polynomial> gens;
  gens.push_back(d.f.embed_into(b));
  for (const Polynomial& g : d.fs) gens.push_back(g.embed_into(b));
  for (std::size_t j = 0; j < d.base->nvars(); ++j) {
    // ∂h/∂x_j = Σ_i (∂f_i/∂x_j) T_i + ∂f/∂x_j
    Polynomial row = d.f.derivative(j).embed_into(b);
    for (std::size_t i = 0; i < d.n(); ++i)
      row = row + d.fs[i].derivative(j).embed_into(b) * Polynomial::variable(b, d.t_names[i]);
    if (!row.is_zero()) gens.push_back(row);
  }
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  return Ideal(b, std::move(gens));
}

CriterionReport is_domain(const ForcingData& d) {
  CriterionReport r;
  if (d.homogeneous()) {
    if (d.f.is_zero()) {
      r.verdict = Verdict::Yes;
      r.branch = "zero equation: A = B";
      r.notes.push_back("trivial datum; the forcing algebra is the polynomial ring B");
      return r;
    }
    r.verdict = Verdict::Degenerate;
    r.branch = "all f_i zero";
    r.notes.push_back("integrity criterion requires some f_i != 0; A = (R/(f))[T_1..T_n]");
    return r;
  }
  Codim c = codimension(data_ideal(d));
  r.witnesses.emplace_back("codim_I", c);
  if (c.is_unit()) {
    r.verdict = Verdict::Yes;
    r.branch = "I = R";
  } else if (c.value() >= 2) {
    r.verdict = Verdict::Yes;
    r.branch = "codim(I) >= 2";
  } else {
    r.verdict = Verdict::No;
    r.branch = "codim(I) <= 1";
    r.notes.push_back("the forcing equation acquires a non-unit factor from the base ring");
  }
  return r;
}

CriterionReport is_irreducible(const ForcingData& d) {
  CriterionReport r;
  Polynomial h = forcing_equation(d);
  if (h.is_zero()) {
    r.verdict = Verdict::ProvenYes;
    r.branch = "zero equation: A = B";
    return r;
  }
  if (h.is_constant()) {
    r.verdict = Verdict::Degenerate;
    r.branch = "unit equation: A = 0";
    r.notes.push_back("the forcing equation is a nonzero constant; Spec A is empty");
    return r;
  }
  Codim c = codimension(data_ideal(d));
  r.witnesses.emplace_back("codim_I", c);
  if (c.is_unit()) {
    r.verdict = Verdict::ProvenYes;
    r.branch = "I = R (no vertical components)";
  } else if (c.value() >= 2) {
    r.verdict = Verdict::ProvenYes;
    r.branch = "codim(I) >= 2";
  } else {
    r.verdict = Verdict::Inconclusive;
    r.branch = "codim(I) <= 1";
    r.notes.push_back("the codimension condition is sufficient, not necessary");
  }
  return r;
}

CriterionReport is_normal(const ForcingData& d) {
  CriterionReport r;
  if (char_p_collapse_possible(d))
    r.notes.push_back("characteristic " + std::to_string(d.base->field().characteristic()) +
                      ": some exponent is divisible by p, derivative ideals may collapse");

  Polynomial h = forcing_equation(d);
  if (h.is_zero()) {
    r.verdict = Verdict::Yes;
    r.branch = "zero equation: A = B";
    return r;
  }

  Ideal i = data_ideal(d);
  Codim ci = codimension(i);
  Codim cid = codimension(ideal_sum(i, derivative_ideal(d)));
  r.witnesses.emplace_back("codim_I", ci);
  r.witnesses.emplace_back("codim_I_plus_D", cid);
  bool a = ci.at_least(2);
  bool b = cid.greater_than(2);

  if (d.homogeneous()) {
    r.verdict = b ? Verdict::Yes : Verdict::No;
    r.branch = b ? "homogeneous: normal ring" : "homogeneous: (b) fails";
    r.notes.push_back("with all f_i = 0 clause (b) decides normality of A as a ring, "
                      "possibly a product of normal domains rather than a domain");
    return r;
  }

  if (a && b) {
    r.verdict = Verdict::Yes;
    r.branch = "(a) and (b) hold";
  } else if (!a && b) {
    r.verdict = Verdict::No;
    r.branch = "(a) fails";
  } else if (a && !b) {
    r.verdict = Verdict::No;
    r.branch = "(b) fails";
  } else {
    r.verdict = Verdict::No;
    r.branch = "(a) and (b) fail";
  }
  return r;
}

bool is_surjective(const ForcingData& d) {
  return radical_membership(d.f, Ideal(d.base, d.fs));
}

FiberDescription fiber(const ForcingData& d, const Point& point) {
  FiberDescription out;
  std::vector<Scalar> coeffs;
  coeffs.reserve(d.n() + 1);
  for (const Polynomial& g : d.fs) coeffs.push_back(g.evaluate(point));
  Scalar f_val = d.f.evaluate(point);
  coeffs.push_back(f_val);
  out.residue_point = coeffs;

  bool any_nonzero = false;
  for (std::size_t i = 0; i < d.n(); ++i) any_nonzero = any_nonzero || !coeffs[i].is_zero();
  out.rank = any_nonzero ? 1 : 0;
  if (!any_nonzero && !f_val.is_zero()) {
    out.status = FiberDescription::Status::Empty;
    out.dim = -1;
  } else {
    out.status = FiberDescription::Status::AffineSpace;
    out.dim = static_cast<std::int64_t>(d.n()) - out.rank;
  }
  return out;
}

bool fiber_completely_singular(const ForcingData& d, const Point& point) {
  FiberDescription fb = fiber(d, point);
  if (fb.status == FiberDescription::Status::Empty)
    throw std::invalid_argument("fiber over the point is empty");
  Ideal id = ideal_sum(data_ideal(d), derivative_ideal(d));
  for (const Polynomial& g : id.gens())
    if (!g.evaluate(point).is_zero()) return false;
  return true;
}

Ideal horizontal_component(const ForcingData& d) {
  Polynomial h = forcing_equation(d);
  if (h.is_zero()) throw std::invalid_argument("horizontal component of the zero equation");
  RingPtr b = h.ring();
  if (d.n() == 0) return Ideal(b, {h});
  Polynomial content = content_wrt_block(h, d.base->nvars());
  auto primitive = try_exact_divide(h, content);
  if (!primitive) throw std::logic_error("content does not divide the forcing equation");
  return Ideal(b, {*primitive});
}

}  // namespace forcealg
