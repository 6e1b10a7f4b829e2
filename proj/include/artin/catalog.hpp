#pragma once

// Character degrees of small groups, used as realistic (r, d) families.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artin/core_model.hpp"

namespace artin {

struct GroupEntry {
  std::string name;
  std::int64_t order = 0;
  std::vector<std::int64_t> degrees;  // nondecreasing, so d_1 = 1 is the trivial character
  std::size_t class_count = 0;

  /// Throws InvalidValue unless the entry passes validate_catalog_entry.
  DegreeVector degree_vector() const;
};

struct EntryValidation {
  bool ok = true;
  std::vector<std::string> reasons;
};

const std::vector<GroupEntry>& catalog_groups();
std::optional<GroupEntry> find_group(std::string_view name);
EntryValidation validate_catalog_entry(const GroupEntry& entry);

}  // namespace artin
