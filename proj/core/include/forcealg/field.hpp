#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace forcealg {

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Coefficient field: the rationals, or a prime field GF(p).
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec gf(std::uint64_t p);  // throws std::invalid_argument unless p is prime

  std::uint64_t characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }
  std::string name() const;  // "QQ" or "GF(p)"

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Exact field element: a canonical rational, or a residue in [0, p).
/// All operations are exact; mixing fields throws std::invalid_argument.
class Scalar {
 public:
  Scalar() : Scalar(FieldSpec::rationals(), mpq_class(0)) {}

  static Scalar zero(const FieldSpec& k);
  static Scalar one(const FieldSpec& k);
  static Scalar of_int(const FieldSpec& k, long long n);
  static Scalar of_mpz(const FieldSpec& k, const mpz_class& n);
  // num/den, reduced; throws on zero denominator (or denominator ≡ 0 mod p).
  static Scalar fraction(const FieldSpec& k, const mpz_class& num, const mpz_class& den);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  const mpq_class& rational() const;  // rationals only
  std::uint64_t residue() const;      // GF(p) only

  std::string to_string() const;  // "5", "-3/2"; residues always in [0, p)

 private:
  Scalar(FieldSpec k, mpq_class q) : field_(k), v_(std::move(q)) {}
  Scalar(FieldSpec k, std::uint64_t r) : field_(k), v_(r) {}
  static void require_same_field(const Scalar& a, const Scalar& b);

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> v_;
};

}  // namespace forcealg
