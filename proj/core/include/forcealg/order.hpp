#pragma once

#include <cstddef>
#include <string>
#include <tuple>

#include "forcealg/monomial.hpp"

namespace forcealg {

/// Total, multiplicative well-orders on monomials.
///
/// BlockElim(k) eliminates the first k ring variables: the leading block is
/// compared degree-first (grevlex), so any monomial touching the block beats
/// every monomial free of it.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, BlockElim };

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
  static MonomialOrder block_elim(std::size_t leading_vars) { return {Kind::BlockElim, leading_vars}; }

  Kind kind() const { return kind_; }
  std::size_t leading_block() const { return block_; }

  // negative: a < b; zero: equal; positive: a > b
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
    return std::tuple(a.kind_, a.block_) < std::tuple(b.kind_, b.block_);
  }

 private:
  MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}
  Kind kind_;
  std::size_t block_;
};

}  // namespace forcealg
