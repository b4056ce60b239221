#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "forcealg/polynomial.hpp"

namespace forcealg {

/// Raised when an intermediate polynomial exceeds the configured total-degree
/// cap, turning nontermination-in-practice into a clean diagnostic.
class DegreeCapExceeded : public std::runtime_error {
 public:
  DegreeCapExceeded(std::int64_t degree, std::int64_t cap)
      : std::runtime_error("degree cap exceeded: intermediate degree " + std::to_string(degree) +
                           " > cap " + std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}
  std::int64_t degree() const { return degree_; }
  std::int64_t cap() const { return cap_; }

 private:
  std::int64_t degree_;
  std::int64_t cap_;
};

std::int64_t groebner_degree_cap();          // default 60
void set_groebner_degree_cap(std::int64_t);  // process-wide

/// Remainder of multivariate division of f by the divisors: no remainder term
/// is divisible by any divisor's leading monomial, and f - remainder lies in
/// the ideal they generate. Empty divisor list returns f.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order);

/// S(f, g) = (lcm/lt(f))·f - (lcm/lt(g))·g; the leading terms cancel.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// The unique reduced Gröbner basis of an ideal for a fixed order: elements
/// monic, fully inter-reduced, sorted descending by leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> elements;

  bool is_zero() const { return elements.empty(); }
  bool is_unit() const { return elements.size() == 1 && elements[0].is_one(); }
};

/// Buchberger's algorithm with the normal selection strategy (minimal lcm
/// degree first) and the coprime-leading-monomial and chain criteria.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         const MonomialOrder& order);

/// Checks the Buchberger fixed point: every S-polynomial of basis elements
/// reduces to zero by the basis.
bool is_groebner_basis(const GroebnerBasis& gb);

}  // namespace forcealg
