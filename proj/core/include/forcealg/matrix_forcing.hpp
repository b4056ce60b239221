#pragma once

#include <variant>
#include <vector>

#include "forcealg/forcing.hpp"

namespace forcealg {

/// Several-equation forcing datum: an m×n matrix (f_ij) over the base ring
/// plus an inhomogeneous vector (f_1..f_m). Row i yields the forcing element
/// h_i = Σ_j f_ij T_j + f_i.
struct ForcingMatrix {
  RingPtr base;
  std::vector<std::vector<Polynomial>> entries;  // m rows, n columns
  std::vector<Polynomial> vec;                   // length m
  std::vector<std::string> t_names;              // length n

  static ForcingMatrix make(RingPtr base, std::vector<std::vector<Polynomial>> entries,
                            std::vector<Polynomial> vec, std::vector<std::string> t_names = {});
  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
  bool homogeneous() const;
};

RingPtr matrix_forcing_ring(const ForcingMatrix& m);
std::vector<Polynomial> forcing_elements(const ForcingMatrix& m);  // h_1..h_m in B
Ideal forcing_ideal(const ForcingMatrix& m);                       // H = (h_1..h_m)

struct SwapOp {
  std::size_t a, b;
};
struct ScaleOp {  // factor must be a unit: a nonzero constant
  std::size_t index;
  Scalar factor;
};
struct AddMultipleOp {  // target += factor · source; factor any base polynomial
  std::size_t target, source;
  Polynomial factor;
};
using ElementaryOp = std::variant<SwapOp, ScaleOp, AddMultipleOp>;

/// Row operations leave the forcing ideal unchanged.
ForcingMatrix row_op(const ForcingMatrix& m, const ElementaryOp& op);

/// The T-variable automorphism realizing a column operation, as simultaneous
/// substitutions in B. forward maps the old forcing elements onto the new
/// ones; inverse undoes it.
struct Substitution {
  std::map<std::string, Polynomial> forward;
  std::map<std::string, Polynomial> inverse;
};
struct ColOpResult {
  ForcingMatrix matrix;
  Substitution subst;
};
ColOpResult col_op(const ForcingMatrix& m, const ElementaryOp& op);

/// Exact determinant by cofactor expansion (square matrices).
Polynomial determinant(const ForcingMatrix& m);

/// Fitting ideal I_j: all j×j minors, as an ideal of the base ring.
Ideal fitting_ideal(const ForcingMatrix& m, std::size_t size);

/// Regular-sequence test via pure codimension in the Cohen-Macaulay ambient
/// ring: Yes iff codim(H) equals the number of forcing elements.
CriterionReport is_regular_sequence(const ForcingMatrix& m);

/// Necessary condition for (h_1..h_m) regular in the homogeneous case:
/// m <= n and the largest Fitting ideal is nonzero. Never sufficient.
CriterionReport regular_sequence_necessary_check(const ForcingMatrix& m);

/// det(M)·T_i ∈ H for every i (square homogeneous case).
bool adjoint_membership_check(const ForcingMatrix& m);

/// Fiber over a rational point: Gaussian elimination of the evaluated system.
FiberDescription matrix_fiber(const ForcingMatrix& m, const Point& point);

}  // namespace forcealg
