#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forcealg/field.hpp"

namespace forcealg {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// A polynomial ring: coefficient field plus an ordered list of distinct
/// variable names. Immutable; shared by value through RingPtr.
///
/// block_split, when set, partitions vars() into a leading base block
/// [0, split) and a trailing forcing block [split, n).
class PolyRing {
 public:
  static RingPtr make(FieldSpec field, std::vector<std::string> vars,
                      std::optional<std::size_t> block_split = std::nullopt);

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> var_index(std::string_view name) const;
  std::optional<std::size_t> block_split() const { return split_; }

  /// Same ring for arithmetic purposes: equal field and variable list.
  /// block_split is bookkeeping and does not participate.
  bool same(const PolyRing& other) const;

  std::string describe() const;  // e.g. "QQ[x,y,T1,T2]"

 private:
  PolyRing(FieldSpec field, std::vector<std::string> vars, std::optional<std::size_t> split);

  FieldSpec field_;
  std::vector<std::string> vars_;
  std::optional<std::size_t> split_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

void require_same_ring(const PolyRing& a, const PolyRing& b);

/// New ring with extra variables prepended (used for elimination blocks).
RingPtr extended_ring_front(const PolyRing& r, const std::vector<std::string>& new_vars);
/// New ring with the given variables removed (relative order kept).
RingPtr ring_without(const PolyRing& r, const std::vector<std::string>& drop);
/// New ring listing `lead` first (in the given order), then the rest.
RingPtr permuted_ring_front(const PolyRing& r, const std::vector<std::string>& lead);

}  // namespace forcealg
