#include "forcealg/order.hpp"

#include <stdexcept>

namespace forcealg {

namespace {

// graded reverse lex on the index range [lo, hi)
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    std::int64_t d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d < 0 ? 1 : -1;  // smaller trailing exponent wins
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial arity mismatch");
  std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d < 0 ? -1 : 1;
      }
      return 0;
    case Kind::GrevLex:
      return grevlex_range(a, b, 0, n);
    case Kind::BlockElim: {
      std::size_t k = std::min(block_, n);
      int c = grevlex_range(a, b, 0, k);
      if (c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GrevLex:
      return "grevlex";
    case Kind::BlockElim:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace forcealg
