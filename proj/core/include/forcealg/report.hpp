#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "forcealg/field.hpp"
#include "forcealg/ideal.hpp"

namespace forcealg {

enum class Verdict { Yes, No, ProvenYes, Inconclusive, Degenerate };

std::string_view to_string(Verdict v);

/// Verdict plus the clause that fired and the quantities it was decided on.
/// The criteria are multi-clause; a bare boolean is not debuggable.
struct CriterionReport {
  Verdict verdict{};
  std::string branch;
  std::vector<std::pair<std::string, Codim>> witnesses;
  std::vector<std::string> notes;

  const Codim* witness(std::string_view name) const {
    for (const auto& [k, v] : witnesses)
      if (k == name) return &v;
    return nullptr;
  }
};

struct FiberDescription {
  enum class Status { Empty, AffineSpace };
  Status status{};
  std::int64_t dim = -1;  // meaningful for AffineSpace
  std::int64_t rank = 0;
  std::vector<Scalar> residue_point;  // the evaluated coefficients
};

using CheckValue = std::variant<std::int64_t, bool, std::string>;
std::string to_string(const CheckValue& v);

struct CaseSubcheck {
  std::string label;
  CheckValue expected;
  CheckValue actual;
  bool ok() const { return expected == actual; }
};

/// Result of one executable verification case; passed is the conjunction of
/// its subchecks.
struct CaseResult {
  std::string name;
  bool passed = false;
  std::vector<CaseSubcheck> subchecks;
  std::vector<std::string> notes;

  void add(std::string label, CheckValue expected, CheckValue actual) {
    subchecks.push_back({std::move(label), std::move(expected), std::move(actual)});
  }
  void finalize() {
    passed = true;
    for (const auto& c : subchecks) passed = passed && c.ok();
  }
};

}  // namespace forcealg
