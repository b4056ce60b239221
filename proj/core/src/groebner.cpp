#include "forcealg/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

namespace forcealg {

namespace {

std::atomic<std::int64_t> g_degree_cap{60};

void check_cap(std::int64_t degree) {
  std::int64_t cap = g_degree_cap.load(std::memory_order_relaxed);
  if (degree > cap) throw DegreeCapExceeded(degree, cap);
}

// descending term map under a runtime order
struct MonoGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};
using TermMap = std::map<Monomial, Scalar, MonoGreater>;

TermMap to_map(const Polynomial& f, const MonomialOrder& order) {
  TermMap m(MonoGreater{&order});
  for (const Term& t : f.terms()) m.emplace(t.mono, t.coeff);
  return m;
}

// p -= c * q * g
void subtract_multiple(TermMap& p, const Scalar& c, const Monomial& q, const Polynomial& g) {
  for (const Term& t : g.terms()) {
    Monomial m = t.mono.times(q);
    check_cap(m.total_degree());
    Scalar delta = t.coeff * c;
    auto it = p.find(m);
    if (it == p.end()) {
      p.emplace(std::move(m), -delta);
    } else {
      it->second -= delta;
      if (it->second.is_zero()) p.erase(it);
    }
  }
}

Polynomial reduce_full(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order) {
  struct Divisor {
    const Polynomial* g;
    const Term* lead;
  };
  std::vector<Divisor> ds;
  ds.reserve(divisors.size());
  for (const Polynomial& g : divisors)
    if (!g.is_zero()) ds.push_back({&g, &g.leading_term(order)});

  TermMap p = to_map(f, order);
  std::vector<Term> remainder;
  while (!p.empty()) {
    auto it = p.begin();
    bool reduced = false;
    for (const Divisor& d : ds) {
      if (d.lead->mono.divides(it->first)) {
        Monomial q = it->first.divided_by(d.lead->mono);
        Scalar c = it->second / d.lead->coeff;
        subtract_multiple(p, c, q, *d.g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(Term{it->first, it->second});
      p.erase(it);
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

}  // namespace

std::int64_t groebner_degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }

void set_groebner_degree_cap(std::int64_t cap) { g_degree_cap.store(cap, std::memory_order_relaxed); }

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order) {
  for (const Polynomial& g : divisors) require_same_ring(*f.ring(), *g.ring());
  return reduce_full(f, divisors, order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s-polynomial of zero");
  require_same_ring(*f.ring(), *g.ring());
  const Term& lf = f.leading_term(order);
  const Term& lg = g.leading_term(order);
  Monomial l = Monomial::lcm(lf.mono, lg.mono);
  check_cap(l.total_degree());
  Polynomial a = f.scaled(lf.coeff.inverse());
  Polynomial b = g.scaled(lg.coeff.inverse());
  Polynomial ma = Polynomial::term(f.ring(), l.divided_by(lf.mono), Scalar::one(f.ring()->field()));
  Polynomial mb = Polynomial::term(f.ring(), l.divided_by(lg.mono), Scalar::one(f.ring()->field()));
  return ma * a - mb * b;
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         const MonomialOrder& order) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    require_same_ring(*ring, *g.ring());
    if (!g.is_zero()) basis.push_back(g.make_monic(order));
  }

  struct Pair {
    std::int64_t lcm_degree;
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&order](const Pair& a, const Pair& b) {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    Monomial l = Monomial::lcm(basis[i].leading_term(order).mono, basis[j].leading_term(order).mono);
    queue.push_back(Pair{l.total_degree(), l, i, j});
    pending.insert({i, j});
  };
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  bool unit = false;
  for (const Polynomial& g : basis)
    if (g.is_constant() && !g.is_zero()) unit = true;

  while (!queue.empty() && !unit) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair pr = *it;
    queue.erase(it);
    pending.erase({pr.i, pr.j});

    const Monomial& mi = basis[pr.i].leading_term(order).mono;
    const Monomial& mj = basis[pr.j].leading_term(order).mono;
    if (mi.coprime(mj)) continue;  // first criterion

    // chain criterion: some other leading monomial divides the lcm and both
    // side pairs have already been handled
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_term(order).mono.divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::pair{std::min(a, b), std::max(a, b)};
      };
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) skip = true;
    }
    if (skip) continue;

    Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], order);
    Polynomial r = reduce_full(s, basis, order);
    if (r.is_zero()) continue;
    check_cap(r.total_degree());
    if (r.is_constant()) {
      unit = true;
      break;
    }
    basis.push_back(r.make_monic(order));
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
  }

  GroebnerBasis out{ring, order, {}};
  if (unit) {
    out.elements.push_back(Polynomial::constant(ring, 1));
    return out;
  }
  if (basis.empty()) return out;

  // minimal basis: drop elements whose leading monomial is divisible by another's
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& mi = basis[i].leading_term(order).mono;
      const Monomial& mj = basis[j].leading_term(order).mono;
      if (mj.divides(mi) && !(mi == mj && j > i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // inter-reduce tails until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = reduce_full(minimal[i], others, order).make_monic(order);
      if (!(r == minimal[i])) {
        minimal[i] = r;
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&order](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_term(order).mono, b.leading_term(order).mono);
  });
  out.elements = std::move(minimal);
  return out;
}

bool is_groebner_basis(const GroebnerBasis& gb) {
  for (std::size_t j = 1; j < gb.elements.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      Polynomial s = s_polynomial(gb.elements[i], gb.elements[j], gb.order);
      if (!normal_form(s, gb.elements, gb.order).is_zero()) return false;
    }
  return true;
}

}  // namespace forcealg
