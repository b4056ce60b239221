#include "forcealg/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace forcealg {

PolyRing::PolyRing(FieldSpec field, std::vector<std::string> vars, std::optional<std::size_t> split)
    : field_(field), vars_(std::move(vars)), split_(split) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw std::invalid_argument("empty variable name");
    if (!index_.emplace(vars_[i], i).second)
      throw std::invalid_argument("duplicate variable name '" + vars_[i] + "'");
  }
  if (split_ && *split_ > vars_.size()) throw std::invalid_argument("block split out of range");
}

RingPtr PolyRing::make(FieldSpec field, std::vector<std::string> vars,
                       std::optional<std::size_t> block_split) {
  return RingPtr(new PolyRing(std::move(field), std::move(vars), block_split));
}

std::optional<std::size_t> PolyRing::var_index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PolyRing::same(const PolyRing& other) const {
  if (this == &other) return true;
  return field_ == other.field_ && vars_ == other.vars_;
}

std::string PolyRing::describe() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i];
  }
  return s + "]";
}

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (!a.same(b))
    throw std::invalid_argument("ring mismatch: " + a.describe() + " vs " + b.describe());
}

RingPtr extended_ring_front(const PolyRing& r, const std::vector<std::string>& new_vars) {
  std::vector<std::string> vars = new_vars;
  vars.insert(vars.end(), r.vars().begin(), r.vars().end());
  return PolyRing::make(r.field(), std::move(vars));
}

RingPtr ring_without(const PolyRing& r, const std::vector<std::string>& drop) {
  std::vector<std::string> vars;
  for (const auto& v : r.vars())
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) vars.push_back(v);
  return PolyRing::make(r.field(), std::move(vars));
}

RingPtr permuted_ring_front(const PolyRing& r, const std::vector<std::string>& lead) {
  std::vector<std::string> vars;
  for (const auto& v : lead) {
    if (!r.var_index(v)) throw std::invalid_argument("unknown variable '" + v + "'");
    vars.push_back(v);
  }
  for (const auto& v : r.vars())
    if (std::find(lead.begin(), lead.end(), v) == lead.end()) vars.push_back(v);
  return PolyRing::make(r.field(), std::move(vars));
}

}  // namespace forcealg
