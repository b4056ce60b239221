#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forcealg/field.hpp"
#include "forcealg/monomial.hpp"
#include "forcealg/order.hpp"
#include "forcealg/ring.hpp"

namespace forcealg {

struct Term {
  Monomial mono;
  Scalar coeff;
  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

/// Sparse exact multivariate polynomial. Terms are kept in canonical form:
/// grevlex-descending, no zero coefficients, no duplicate monomials; the zero
/// polynomial is the empty term list. Equal polynomials are structurally
/// identical. Immutable after construction.
class Polynomial {
 public:
  static Polynomial zero(RingPtr r);
  static Polynomial constant(RingPtr r, Scalar c);
  static Polynomial constant(RingPtr r, long long n);
  static Polynomial variable(RingPtr r, std::size_t index);
  static Polynomial variable(RingPtr r, std::string_view name);
  static Polynomial term(RingPtr r, Monomial m, Scalar c);
  static Polynomial from_terms(RingPtr r, std::vector<Term> terms);  // canonicalizes

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // includes zero
  bool is_one() const;
  std::int64_t total_degree() const;  // -1 for the zero polynomial
  Scalar constant_coefficient() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(std::uint64_t k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(std::string_view var) const;

  /// Full evaluation; every ring variable must be assigned.
  Scalar evaluate(const std::map<std::string, Scalar>& point) const;
  /// Partial evaluation; unassigned variables remain.
  Polynomial substitute(const std::map<std::string, Scalar>& point) const;
  /// Simultaneous substitution of variables by polynomials in the same ring.
  Polynomial substitute_polys(const std::map<std::string, Polynomial>& subs) const;

  /// Map into another ring by variable name; every variable actually used
  /// must exist in the target, and the fields must agree.
  Polynomial embed_into(const RingPtr& target) const;

  const Term& leading_term(const MonomialOrder& order) const;  // throws on zero
  Polynomial make_monic(const MonomialOrder& order) const;
  std::vector<Term> terms_sorted(const MonomialOrder& order) const;  // descending
  Scalar coeff_of(const Monomial& m) const;

  std::string to_string() const;

 private:
  Polynomial(RingPtr r, std::vector<Term> ts) : ring_(std::move(r)), terms_(std::move(ts)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Quotient a/b when b divides a exactly; std::nullopt otherwise.
std::optional<Polynomial> try_exact_divide(const Polynomial& a, const Polynomial& b);

}  // namespace forcealg
