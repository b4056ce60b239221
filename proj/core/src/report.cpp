#include "forcealg/report.hpp"

namespace forcealg {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::ProvenYes: return "ProvenYes";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Degenerate: return "Degenerate";
  }
  return "?";
}

std::string to_string(const CheckValue& v) {
  if (std::holds_alternative<std::int64_t>(v)) return std::to_string(std::get<std::int64_t>(v));
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
  return std::get<std::string>(v);
}

}  // namespace forcealg
