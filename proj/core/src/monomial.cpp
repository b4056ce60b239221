#include "forcealg/monomial.hpp"

#include <stdexcept>

namespace forcealg {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("monomial exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("monomial exponent overflow");
  return r;
}

}  // namespace

Monomial::Monomial(std::vector<std::int64_t> exponents) : e_(std::move(exponents)), deg_(0) {
  for (std::int64_t e : e_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    deg_ = checked_add(deg_, e);
  }
}

Monomial Monomial::one(std::size_t nvars) { return Monomial(std::vector<std::int64_t>(nvars, 0)); }

Monomial Monomial::times(const Monomial& o) const {
  if (nvars() != o.nvars()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<std::int64_t> e(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) e[i] = checked_add(e_[i], o.e_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::pow(std::uint64_t k) const {
  if (k > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("monomial exponent overflow");
  std::vector<std::int64_t> e(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) e[i] = checked_mul(e_[i], static_cast<std::int64_t>(k));
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  if (nvars() != o.nvars() || deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < nvars(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  if (!d.divides(*this)) throw std::invalid_argument("monomial not divisible");
  std::vector<std::int64_t> e(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) e[i] = e_[i] - d.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<std::int64_t> e(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
  if (nvars() != o.nvars()) throw std::invalid_argument("monomial arity mismatch");
  for (std::size_t i = 0; i < nvars(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

}  // namespace forcealg
