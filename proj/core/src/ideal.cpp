#include "forcealg/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace forcealg {

namespace {

const char* kRabinowitschVar = "__z";
const char* kIntersectionVar = "__t";

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : s_(std::make_shared<State>()) {
  for (const Polynomial& g : gens) require_same_ring(*ring, *g.ring());
  s_->ring = std::move(ring);
  s_->gens = std::move(gens);
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const& {
  std::lock_guard<std::mutex> lock(s_->mu);
  auto it = s_->cache.find(order);
  if (it == s_->cache.end()) {
    auto gb = std::make_unique<const GroebnerBasis>(buchberger(s_->ring, s_->gens, order));
    it = s_->cache.emplace(order, std::move(gb)).first;
  }
  return *it->second;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal extend_to_ring(const Ideal& i, const RingPtr& target) {
  std::vector<Polynomial> gens;
  gens.reserve(i.gens().size());
  for (const Polynomial& g : i.gens()) gens.push_back(g.embed_into(target));
  return Ideal(target, std::move(gens));
}

bool membership(const Polynomial& f, const Ideal& i) {
  require_same_ring(*f.ring(), *i.ring());
  const GroebnerBasis& gb = i.groebner();
  return normal_form(f, gb.elements, gb.order).is_zero();
}

bool in_square_ideal(const Polynomial& f) {
  Ideal square(f.ring(), {f * f});
  return membership(f, square);
}

bool radical_membership(const Polynomial& f, const Ideal& i) {
  require_same_ring(*f.ring(), *i.ring());
  RingPtr ext = extended_ring_front(*i.ring(), {kRabinowitschVar});
  std::vector<Polynomial> gens;
  gens.reserve(i.gens().size() + 1);
  for (const Polynomial& g : i.gens()) gens.push_back(g.embed_into(ext));
  Polynomial z = Polynomial::variable(ext, kRabinowitschVar);
  gens.push_back(Polynomial::constant(ext, 1) - z * f.embed_into(ext));
  return buchberger(ext, gens, MonomialOrder::grevlex()).is_unit();
}

Ideal elimination(const Ideal& i, const std::vector<std::string>& drop_vars) {
  if (drop_vars.empty()) return i;
  for (const auto& v : drop_vars)
    if (!i.ring()->var_index(v))
      throw std::invalid_argument("unknown variable '" + v + "'");

  RingPtr work = permuted_ring_front(*i.ring(), drop_vars);
  std::vector<Polynomial> gens;
  gens.reserve(i.gens().size());
  for (const Polynomial& g : i.gens()) gens.push_back(g.embed_into(work));
  GroebnerBasis gb = buchberger(work, gens, MonomialOrder::block_elim(drop_vars.size()));

  RingPtr sub = ring_without(*i.ring(), drop_vars);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.elements) {
    bool free_of_block = true;
    for (const Term& t : g.terms())
      for (std::size_t k = 0; k < drop_vars.size() && free_of_block; ++k)
        if (t.mono.exponent(k) > 0) free_of_block = false;
    if (free_of_block) kept.push_back(g.embed_into(sub));
  }
  return Ideal(sub, std::move(kept));
}

Ideal intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  RingPtr ext = extended_ring_front(*a.ring(), {kIntersectionVar});
  Polynomial t = Polynomial::variable(ext, kIntersectionVar);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  gens.reserve(a.gens().size() + b.gens().size());
  for (const Polynomial& g : a.gens()) gens.push_back(t * g.embed_into(ext));
  for (const Polynomial& g : b.gens()) gens.push_back(one_minus_t * g.embed_into(ext));
  Ideal mixed(ext, std::move(gens));
  Ideal eliminated = elimination(mixed, {kIntersectionVar});
  // the contracted ring equals the original; rebuild on the callers' ring object
  std::vector<Polynomial> back;
  back.reserve(eliminated.gens().size());
  for (const Polynomial& g : eliminated.gens()) back.push_back(g.embed_into(a.ring()));
  return Ideal(a.ring(), std::move(back));
}

bool equal_up_to_radical(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  for (const Polynomial& g : a.gens())
    if (!radical_membership(g, b)) return false;
  for (const Polynomial& g : b.gens())
    if (!radical_membership(g, a)) return false;
  return true;
}

std::int64_t dimension(const Ideal& i) {
  const GroebnerBasis& gb = i.groebner();
  if (gb.is_unit()) return -1;
  std::size_t n = i.ring()->nvars();
  if (n > 24) throw std::invalid_argument("dimension: too many variables for exhaustive search");

  std::vector<std::uint32_t> supports;
  supports.reserve(gb.elements.size());
  for (const Polynomial& g : gb.elements) {
    const Monomial& m = g.leading_term(gb.order).mono;
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (m.exponent(k) > 0) s |= (1u << k);
    supports.push_back(s);
  }

  std::int64_t best = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (std::uint32_t s : supports)
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max<std::int64_t>(best, __builtin_popcount(mask));
  }
  return best;
}

Codim codimension(const Ideal& i) {
  std::int64_t d = dimension(i);
  if (d < 0) return Codim::unit();
  return Codim::of(static_cast<std::int64_t>(i.ring()->nvars()) - d);
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring(), *g.ring());
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("gcd of zero polynomial");
  Ideal lcm_ideal = intersection(Ideal(f.ring(), {f}), Ideal(g.ring(), {g}));
  const GroebnerBasis& gb = lcm_ideal.groebner();
  if (gb.elements.size() != 1)
    throw std::logic_error("(f) ∩ (g) is principal over a field; basis size " +
                           std::to_string(gb.elements.size()));
  const Polynomial& lcm = gb.elements[0];
  auto q = try_exact_divide(f * g, lcm);
  if (!q) throw std::logic_error("lcm does not divide f·g");
  return q->make_monic(MonomialOrder::grevlex());
}

Polynomial content_wrt_block(const Polynomial& h, std::size_t t_begin) {
  if (h.is_zero()) throw std::invalid_argument("content of the zero polynomial");
  std::size_t n = h.ring()->nvars();
  if (t_begin > n) throw std::invalid_argument("block start out of range");

  // coefficients of h grouped by the monomial in the trailing block
  std::vector<std::pair<Monomial, std::vector<Term>>> groups;
  for (const Term& t : h.terms()) {
    std::vector<std::int64_t> tpart(n, 0), cpart = t.mono.exponents();
    for (std::size_t k = t_begin; k < n; ++k) {
      tpart[k] = cpart[k];
      cpart[k] = 0;
    }
    Monomial key(std::move(tpart));
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&key](const auto& g) { return g.first == key; });
    if (it == groups.end()) {
      groups.push_back({key, {}});
      it = std::prev(groups.end());
    }
    it->second.push_back(Term{Monomial(std::move(cpart)), t.coeff});
  }

  std::optional<Polynomial> content;
  for (auto& [key, terms] : groups) {
    Polynomial c = Polynomial::from_terms(h.ring(), std::move(terms));
    content = content ? poly_gcd(*content, c) : c;
  }
  return content->make_monic(MonomialOrder::grevlex());
}

}  // namespace forcealg
