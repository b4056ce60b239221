#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "forcealg/groebner.hpp"

namespace forcealg {

/// Codimension result. The unit ideal is a distinct variant, never a number:
/// the criteria branch on "or I = R" explicitly.
class Codim {
 public:
  static Codim unit() { return Codim(true, 0); }
  static Codim of(std::int64_t v) { return Codim(false, v); }

  bool is_unit() const { return unit_; }
  std::int64_t value() const {
    if (unit_) throw std::logic_error("codimension of the unit ideal is not a number");
    return v_;
  }
  bool at_least(std::int64_t k) const { return unit_ || v_ >= k; }
  bool greater_than(std::int64_t k) const { return unit_ || v_ > k; }
  std::string to_string() const { return unit_ ? "unit" : std::to_string(v_); }

  friend bool operator==(const Codim&, const Codim&) = default;

 private:
  Codim(bool unit, std::int64_t v) : unit_(unit), v_(v) {}
  bool unit_;
  std::int64_t v_;
};

/// Generator list with a per-order cache of reduced Gröbner bases. The cache
/// is a write-once-per-key, internally synchronized memo; everything else is
/// immutable, so Ideal values are safe to share across threads.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return s_->ring; }
  const std::vector<Polynomial>& gens() const { return s_->gens; }

  const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const&;
  void groebner(const MonomialOrder& = MonomialOrder::grevlex()) const&& = delete;
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero_ideal() const { return groebner().is_zero(); }

 private:
  struct State {
    RingPtr ring;
    std::vector<Polynomial> gens;
    mutable std::mutex mu;
    mutable std::map<MonomialOrder, std::unique_ptr<const GroebnerBasis>> cache;
  };
  std::shared_ptr<State> s_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// Extension I·S along an inclusion of rings (generators embedded by name).
Ideal extend_to_ring(const Ideal& i, const RingPtr& target);

/// f ∈ I, decided by normal form against the reduced basis.
bool membership(const Polynomial& f, const Ideal& i);

/// f ∈ (f²); over a polynomial ring true iff f is zero or a nonzero constant.
bool in_square_ideal(const Polynomial& f);

/// f ∈ rad I via the Rabinowitsch trick: 1 ∈ I·R[z] + (1 - z·f).
bool radical_membership(const Polynomial& f, const Ideal& i);

/// I ∩ k[vars \ drop], computed with a block elimination order.
Ideal elimination(const Ideal& i, const std::vector<std::string>& drop_vars);

/// I ∩ J via eliminating t from t·I + (1-t)·J.
Ideal intersection(const Ideal& a, const Ideal& b);

/// rad I == rad J, by mutual radical membership of generators.
bool equal_up_to_radical(const Ideal& a, const Ideal& b);

/// Krull dimension of R/I via independent sets of the leading-term ideal;
/// -1 for the unit ideal, nvars for the zero ideal.
std::int64_t dimension(const Ideal& i);

/// nvars - dimension; the unit ideal yields the distinct unit marker.
Codim codimension(const Ideal& i);

/// Monic gcd, computed as f·g / lcm with (lcm) = (f) ∩ (g).
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

/// Monic gcd of the coefficients of h viewed as a polynomial in the trailing
/// variable block [t_begin, nvars).
Polynomial content_wrt_block(const Polynomial& h, std::size_t t_begin);

}  // namespace forcealg
