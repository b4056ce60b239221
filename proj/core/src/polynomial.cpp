#include "forcealg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace forcealg {

namespace {

const MonomialOrder kCanonical = MonomialOrder::grevlex();

}  // namespace

Polynomial Polynomial::zero(RingPtr r) { return Polynomial(std::move(r), {}); }

Polynomial Polynomial::constant(RingPtr r, Scalar c) {
  if (!(c.field() == r->field())) throw std::invalid_argument("scalar field does not match ring");
  if (c.is_zero()) return zero(std::move(r));
  std::size_t n = r->nvars();
  return Polynomial(std::move(r), {Term{Monomial::one(n), std::move(c)}});
}

Polynomial Polynomial::constant(RingPtr r, long long n) {
  Scalar c = Scalar::of_int(r->field(), n);
  return constant(std::move(r), std::move(c));
}

Polynomial Polynomial::variable(RingPtr r, std::size_t index) {
  if (index >= r->nvars()) throw std::invalid_argument("variable index out of range");
  std::vector<std::int64_t> e(r->nvars(), 0);
  e[index] = 1;
  Scalar one = Scalar::one(r->field());
  return Polynomial(std::move(r), {Term{Monomial(std::move(e)), std::move(one)}});
}

Polynomial Polynomial::variable(RingPtr r, std::string_view name) {
  auto idx = r->var_index(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(r), *idx);
}

Polynomial Polynomial::term(RingPtr r, Monomial m, Scalar c) {
  return from_terms(std::move(r), {Term{std::move(m), std::move(c)}});
}

Polynomial Polynomial::from_terms(RingPtr r, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.mono.nvars() != r->nvars()) throw std::invalid_argument("term arity does not match ring");
    if (!(t.coeff.field() == r->field())) throw std::invalid_argument("scalar field does not match ring");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return kCanonical.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return Polynomial(std::move(r), std::move(out));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Scalar Polynomial::constant_coefficient() const {
  for (const Term& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return Scalar::zero(ring_->field());
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  std::vector<Term> ts = a.terms_;
  ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial::from_terms(a.ring_, std::move(ts));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) ts.push_back(Term{t.mono, -t.coeff});
  return Polynomial(ring_, std::move(ts));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  std::vector<Term> ts;
  ts.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& ta : a.terms_)
    for (const Term& tb : b.terms_)
      ts.push_back(Term{ta.mono.times(tb.mono), ta.coeff * tb.coeff});
  return Polynomial::from_terms(a.ring_, std::move(ts));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (!(c.field() == ring_->field())) throw std::invalid_argument("scalar field does not match ring");
  if (c.is_zero()) return zero(ring_);
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) ts.push_back(Term{t.mono, t.coeff * c});
  return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_->same(*b.ring_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw std::invalid_argument("variable index out of range");
  std::vector<Term> ts;
  for (const Term& t : terms_) {
    std::int64_t e = t.mono.exponent(var);
    if (e == 0) continue;
    Scalar c = t.coeff * Scalar::of_int(ring_->field(), e);
    if (c.is_zero()) continue;  // characteristic divides the exponent
    std::vector<std::int64_t> exps = t.mono.exponents();
    exps[var] = e - 1;
    ts.push_back(Term{Monomial(std::move(exps)), std::move(c)});
  }
  return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::derivative(std::string_view var) const {
  auto idx = ring_->var_index(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  return derivative(*idx);
}

Scalar Polynomial::evaluate(const std::map<std::string, Scalar>& point) const {
  for (const auto& v : ring_->vars())
    if (!point.count(v)) throw std::invalid_argument("missing assignment for variable '" + v + "'");
  Polynomial r = substitute(point);
  return r.constant_coefficient();
}

Polynomial Polynomial::substitute(const std::map<std::string, Scalar>& point) const {
  std::vector<std::optional<Scalar>> assign(ring_->nvars());
  for (const auto& [name, value] : point) {
    auto idx = ring_->var_index(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
    if (!(value.field() == ring_->field()))
      throw std::invalid_argument("scalar field does not match ring");
    assign[*idx] = value;
  }
  std::vector<Term> ts;
  for (const Term& t : terms_) {
    Scalar c = t.coeff;
    std::vector<std::int64_t> exps = t.mono.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (!assign[i] || exps[i] == 0) continue;
      Scalar v = *assign[i];
      for (std::int64_t e = 0; e < exps[i]; ++e) c *= v;
      exps[i] = 0;
    }
    ts.push_back(Term{Monomial(std::move(exps)), std::move(c)});
  }
  return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::substitute_polys(const std::map<std::string, Polynomial>& subs) const {
  std::vector<const Polynomial*> target(ring_->nvars(), nullptr);
  for (const auto& [name, poly] : subs) {
    auto idx = ring_->var_index(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
    require_same_ring(*ring_, *poly.ring());
    target[*idx] = &poly;
  }
  Polynomial acc = zero(ring_);
  for (const Term& t : terms_) {
    std::vector<std::int64_t> exps = t.mono.exponents();
    Polynomial factor = constant(ring_, 1);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (target[i] && exps[i] > 0) {
        factor = factor * target[i]->pow(static_cast<std::uint64_t>(exps[i]));
        exps[i] = 0;
      }
    }
    Polynomial rest = term(ring_, Monomial(std::move(exps)), t.coeff);
    acc = acc + rest * factor;
  }
  return acc;
}

Polynomial Polynomial::embed_into(const RingPtr& target) const {
  if (!(target->field() == ring_->field()))
    throw std::invalid_argument("field mismatch between rings");
  std::vector<std::optional<std::size_t>> map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) map[i] = target->var_index(ring_->var_name(i));
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<std::int64_t> exps(target->nvars(), 0);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      std::int64_t e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!map[i])
        throw std::invalid_argument("variable '" + ring_->var_name(i) + "' not present in " +
                                    target->describe());
      exps[*map[i]] = e;
    }
    ts.push_back(Term{Monomial(std::move(exps)), t.coeff});
  }
  return from_terms(target, std::move(ts));
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (const Term& t : terms_)
    if (order.greater(t.mono, best->mono)) best = &t;
  return *best;
}

Polynomial Polynomial::make_monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  const Scalar& lc = leading_term(order).coeff;
  if (lc.is_one()) return *this;
  return scaled(lc.inverse());
}

std::vector<Term> Polynomial::terms_sorted(const MonomialOrder& order) const {
  std::vector<Term> ts = terms_;
  std::sort(ts.begin(), ts.end(),
            [&order](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return ts;
}

Scalar Polynomial::coeff_of(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coeff;
  return Scalar::zero(ring_->field());
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    std::string mag = negative ? c.substr(1) : c;

    std::string mono;
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      std::int64_t e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->var_name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }

    std::string body;
    if (mono.empty())
      body = mag;
    else if (mag == "1")
      body = mono;
    else
      body = mag + "*" + mono;

    if (k == 0)
      out += negative ? "-" + body : body;
    else
      out += negative ? " - " + body : " + " + body;
  }
  return out;
}

std::optional<Polynomial> try_exact_divide(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring(), *b.ring());
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const MonomialOrder order = MonomialOrder::grevlex();
  const Term& lead = b.leading_term(order);

  auto cmp = [&order](const Monomial& x, const Monomial& y) { return order.greater(x, y); };
  std::map<Monomial, Scalar, decltype(cmp)> rem(cmp);
  for (const Term& t : a.terms()) rem.emplace(t.mono, t.coeff);

  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    Monomial q = it->first.divided_by(lead.mono);
    Scalar c = it->second / lead.coeff;
    quotient.push_back(Term{q, c});
    for (const Term& t : b.terms()) {
      Monomial m = t.mono.times(q);
      Scalar delta = t.coeff * c;
      auto jt = rem.find(m);
      if (jt == rem.end()) {
        rem.emplace(std::move(m), -delta);
      } else {
        jt->second -= delta;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
  }
  return Polynomial::from_terms(a.ring(), std::move(quotient));
}

}  // namespace forcealg
