#pragma once

#include <map>
#include <string>
#include <vector>

#include "forcealg/ideal.hpp"
#include "forcealg/report.hpp"

namespace forcealg {

/// Single-equation forcing datum (f_1, ..., f_n; f) over a base polynomial
/// ring. The forcing algebra is B/(f_1 T_1 + ... + f_n T_n + f) with
/// B = base[T_1..T_n].
struct ForcingData {
  RingPtr base;
  std::vector<Polynomial> fs;
  Polynomial f;
  std::vector<std::string> t_names;  // one per f_i

  static ForcingData make(RingPtr base, std::vector<Polynomial> fs, Polynomial f,
                          std::vector<std::string> t_names = {});
  std::size_t n() const { return fs.size(); }
  bool homogeneous() const;  // all f_i zero
};

using Point = std::map<std::string, Scalar>;

/// base[T_1..T_n], base variables leading, block_split at the base arity.
RingPtr forcing_ring(const ForcingData& d);

/// h = f_1 T_1 + ... + f_n T_n + f in the combined ring.
Polynomial forcing_equation(const ForcingData& d);

/// I = (f, f_1, ..., f_n) in the base ring.
Ideal data_ideal(const ForcingData& d);

/// D = ideal of all first partials of the data, in the base ring
/// (zero partials are dropped from the generator list).
Ideal derivative_ideal(const ForcingData& d);

/// J = (f, f_i, Σ_i (∂f_i/∂x_j) T_i + ∂f/∂x_j for each base variable x_j)
/// in the combined ring; cuts out the singular locus of the forcing algebra.
Ideal jacobian_ideal(const ForcingData& d);

/// Integrity over the polynomial base: Yes iff I = R or codim(I) ≥ 2.
/// Requires some f_i ≠ 0; otherwise Degenerate (unless h = 0, where A = B).
CriterionReport is_domain(const ForcingData& d);

/// One-directional irreducibility: ProvenYes when codim(I) ≥ 2 (or I = R
/// with a nonconstant equation); Inconclusive otherwise.
CriterionReport is_irreducible(const ForcingData& d);

/// Normal-domain test:
///   (a) codim(I) ≥ 2 or I = R,   (b) codim(I+D) > 2 or I+D = R.
/// Yes iff (a) and (b); when all f_i = 0 clause (b) alone decides, but for
/// the weaker property "normal ring", flagged by the branch tag.
CriterionReport is_normal(const ForcingData& d);

/// Surjectivity of the forcing morphism: f ∈ rad(f_1, ..., f_n).
bool is_surjective(const ForcingData& d);

/// Fiber over a rational point of the base: empty, or an affine space of
/// dimension n - rank of the evaluated coefficient row.
FiberDescription fiber(const ForcingData& d, const Point& point);

/// True iff every generator of I + D vanishes at the point. The fiber there
/// must be nonempty; an empty fiber is a precondition error.
bool fiber_completely_singular(const ForcingData& d, const Point& point);

/// The component dominating the base: the principal ideal generated by
/// h / content(h), content taken with respect to the T-block. Vertical
/// components are not enumerated.
Ideal horizontal_component(const ForcingData& d);

}  // namespace forcealg
