#pragma once

// Named predicates and operators over a GBT space, shared by the fixture
// corpus and the `check` command. A check is addressed by name and takes up to
// a side index and two subsets; it yields either a truth value or a subset.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gbt/axioms.hpp"

namespace gbt {

enum class CheckArity : unsigned char {
  space,        // no set argument
  subset,       // one set
  subset_pair,  // two sets
};

struct CheckInfo {
  std::string_view name;
  CheckArity arity;
  bool needs_side;
  bool set_valued;  // result is a Subset rather than a truth value
  std::string_view summary;
};

const std::vector<CheckInfo>& check_catalog();
// Throws Errc::unknown_name.
const CheckInfo& find_check(std::string_view name);

struct CheckArgs {
  std::optional<Side> side;
  std::optional<Subset> set;
  std::optional<Subset> other_set;
};

using CheckValue = std::variant<bool, Subset>;

// Throws Errc::schema_violation when a required argument is missing.
CheckValue evaluate_check(const GbtSpace& s, std::string_view name, const CheckArgs& args);

std::string format_value(const GroundSet& ground, const CheckValue& v);

}  // namespace gbt
