#include "artin/catalog.hpp"

#include <algorithm>

namespace artin {

const std::vector<GroupEntry>& catalog_groups() {
  static const std::vector<GroupEntry> groups = {
      {"C1", 1, {1}, 1},
      {"C2", 2, {1, 1}, 2},
      {"C3", 3, {1, 1, 1}, 3},
      {"S3", 6, {1, 1, 2}, 3},
      {"C4", 4, {1, 1, 1, 1}, 4},
      {"V4", 4, {1, 1, 1, 1}, 4},
      {"Q8", 8, {1, 1, 1, 1, 2}, 5},
      {"D4", 8, {1, 1, 1, 1, 2}, 5},
      {"A4", 12, {1, 1, 1, 3}, 4},
      {"S4", 24, {1, 1, 2, 3, 3}, 5},
      {"A5", 60, {1, 3, 3, 4, 5}, 5},
      {"S5", 120, {1, 1, 4, 4, 5, 5, 6}, 7},
  };
  return groups;
}

std::optional<GroupEntry> find_group(std::string_view name) {
  const auto& groups = catalog_groups();
  auto it = std::find_if(groups.begin(), groups.end(),
                         [&](const GroupEntry& g) { return g.name == name; });
  if (it == groups.end()) return std::nullopt;
  return *it;
}

EntryValidation validate_catalog_entry(const GroupEntry& entry) {
  EntryValidation out;
  out.reasons = degree_law_violations(entry.degrees, entry.order);
  if (entry.degrees.size() != entry.class_count) {
    out.reasons.push_back("class count " + std::to_string(entry.class_count) + " != " +
                          std::to_string(entry.degrees.size()) + " degrees");
  }
  if (!std::is_sorted(entry.degrees.begin(), entry.degrees.end())) {
    out.reasons.push_back("degrees not sorted nondecreasing");
  }
  out.ok = out.reasons.empty();
  return out;
}

DegreeVector GroupEntry::degree_vector() const {
  auto check = validate_catalog_entry(*this);
  if (!check.ok) throw Error(Errc::InvalidValue, name + ": " + check.reasons.front());
  return DegreeVector(degrees, order, name);
}

}  // namespace artin
