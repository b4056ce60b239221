#include "forcealg/field.hpp"

#include <stdexcept>

namespace forcealg {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((u128(a) * b) % m);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((u128(a) + b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid over signed 128-bit, p prime, a in (0, p)
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& n, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(n.get_mpz_t(), p);  // floor remainder, always in [0, p)
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::gf(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("GF(p) requires a prime modulus, got " + std::to_string(p));
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const FieldSpec& k) {
  return k.is_rationals() ? Scalar(k, mpq_class(0)) : Scalar(k, std::uint64_t{0});
}

Scalar Scalar::one(const FieldSpec& k) {
  return k.is_rationals() ? Scalar(k, mpq_class(1)) : Scalar(k, std::uint64_t{1});
}

Scalar Scalar::of_int(const FieldSpec& k, long long n) {
  static_assert(sizeof(long) == sizeof(long long));
  return of_mpz(k, mpz_class(static_cast<long>(n)));
}

Scalar Scalar::of_mpz(const FieldSpec& k, const mpz_class& n) {
  if (k.is_rationals()) return Scalar(k, mpq_class(n));
  return Scalar(k, reduce_mpz(n, k.characteristic()));
}

Scalar Scalar::fraction(const FieldSpec& k, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (k.is_rationals()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(k, std::move(q));
  }
  std::uint64_t p = k.characteristic();
  std::uint64_t d = reduce_mpz(den, p);
  if (d == 0) throw std::invalid_argument("denominator is zero in GF(" + std::to_string(p) + ")");
  return Scalar(k, mulmod(reduce_mpz(num, p), invmod(d, p), p));
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? std::get<mpq_class>(v_) == 0 : std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? std::get<mpq_class>(v_) == 1 : std::get<std::uint64_t>(v_) == 1;
}

Scalar Scalar::operator-() const {
  if (field_.is_rationals()) return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
  std::uint64_t r = std::get<std::uint64_t>(v_);
  return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.is_rationals()) return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
  return Scalar(field_, invmod(std::get<std::uint64_t>(v_), field_.characteristic()));
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_))
    throw std::invalid_argument("field mismatch: " + a.field_.name() + " vs " + b.field_.name());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  if (a.field_.is_rationals())
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
  return Scalar(a.field_, addmod(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_),
                                 a.field_.characteristic()));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  if (a.field_.is_rationals())
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
  return Scalar(a.field_, mulmod(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_),
                                 a.field_.characteristic()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.v_ == b.v_;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw std::logic_error("rational() on a GF(p) scalar");
  return std::get<mpq_class>(v_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rationals()) throw std::logic_error("residue() on a rational scalar");
  return std::get<std::uint64_t>(v_);
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) return std::get<mpq_class>(v_).get_str();
  return std::to_string(std::get<std::uint64_t>(v_));
}

}  // namespace forcealg
