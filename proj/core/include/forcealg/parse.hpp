#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "forcealg/polynomial.hpp"

namespace forcealg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff? factor*        ('*' between parts optional)
///   factor := var ('^' uint)?
///   coeff  := int | int '/' int
/// Whitespace is ignored between tokens; variables match [A-Za-z][A-Za-z0-9_]*.
/// The generated names "__z" and "__t" are reserved and rejected.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Canonical text form; parse ∘ format is the identity on canonical forms,
/// format ∘ parse canonicalizes.
inline std::string format_polynomial(const Polynomial& f) { return f.to_string(); }

}  // namespace forcealg
