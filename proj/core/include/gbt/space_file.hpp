#pragma once

// Space files: {"points":[str...],"mu1":[[str...]...],"mu2":[[str...]...]}.
// The empty set may be omitted from mu1/mu2; it is always implied.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gbt/predicates.hpp"

namespace gbt {

struct SpaceFileOptions {
  // Close each family under unions instead of rejecting it.
  bool complete_unions = false;
};

struct ParsedSpace {
  GbtSpace space;
  // Sets added by complete_unions (∅ is never reported).
  std::vector<Subset> added_mu1;
  std::vector<Subset> added_mu2;
};

// Throws Errc::schema_violation, label errors, or UnionEscape.
ParsedSpace parse_space_file(std::string_view text, const SpaceFileOptions& options = {});
ParsedSpace read_space_file(const std::filesystem::path& path, const SpaceFileOptions& options = {});

// Canonical rendering: subsets in family order with ∅ written as [],
// labels in point order. Ends with a newline.
std::string write_space_file(const GbtSpace& s);
// Same content on one line, no trailing newline.
std::string space_json_compact(const GbtSpace& s);

}  // namespace gbt
