#pragma once

#include <cstdint>
#include <vector>

namespace forcealg {

/// Exponent vector with cached total degree. Exponents are machine words;
/// arithmetic that would overflow aborts with std::overflow_error.
class Monomial {
 public:
  explicit Monomial(std::vector<std::int64_t> exponents);
  static Monomial one(std::size_t nvars);

  std::size_t nvars() const { return e_.size(); }
  std::int64_t exponent(std::size_t i) const { return e_[i]; }
  const std::vector<std::int64_t>& exponents() const { return e_; }
  std::int64_t total_degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial times(const Monomial& o) const;
  Monomial pow(std::uint64_t k) const;
  bool divides(const Monomial& o) const;       // this | o
  Monomial divided_by(const Monomial& d) const;  // requires d | this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }

 private:
  std::vector<std::int64_t> e_;
  std::int64_t deg_;
};

}  // namespace forcealg
