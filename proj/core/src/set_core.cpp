#include "gbt/set_core.hpp"

#include <algorithm>
#include <bit>

namespace gbt {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ground_mismatch: return "ground-mismatch";
    case Errc::bad_ground_set: return "bad-ground-set";
    case Errc::unknown_label: return "unknown-label";
    case Errc::duplicate_label: return "duplicate-label";
    case Errc::missing_empty_set: return "missing-empty-set";
    case Errc::union_escape: return "union-escape";
    case Errc::schema_violation: return "schema-violation";
    case Errc::unknown_name: return "unknown-name";
    case Errc::out_of_range: return "out-of-range";
    case Errc::io_failure: return "io-failure";
  }
  return "unknown";
}

Subset::Subset(unsigned n, Mask bits) : n_(static_cast<std::uint8_t>(n)), bits_(bits) {
  if (n > kMaxPoints)
    throw Error(Errc::out_of_range, "carrier size " + std::to_string(n) + " exceeds the cap of " +
                                        std::to_string(kMaxPoints));
  if ((bits & ~full_mask(n)) != 0)
    throw Error(Errc::out_of_range, "subset bits exceed carrier of size " + std::to_string(n));
}

Subset Subset::singleton(unsigned n, unsigned point) {
  if (point >= n) throw Error(Errc::out_of_range, "point index out of range");
  return Subset(n, Mask{1} << point);
}

unsigned Subset::count() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }

namespace {

void same_ground(const Subset& a, const Subset& b) {
  if (a.universe_size() != b.universe_size())
    throw Error(Errc::ground_mismatch, "subsets over carriers of size " +
                                           std::to_string(a.universe_size()) + " and " +
                                           std::to_string(b.universe_size()));
}

}  // namespace

Subset unite(const Subset& a, const Subset& b) {
  same_ground(a, b);
  return Subset(a.universe_size(), a.bits() | b.bits());
}

Subset intersect(const Subset& a, const Subset& b) {
  same_ground(a, b);
  return Subset(a.universe_size(), a.bits() & b.bits());
}

Subset difference(const Subset& a, const Subset& b) {
  same_ground(a, b);
  return Subset(a.universe_size(), a.bits() & ~b.bits());
}

Subset complement(const Subset& a) {
  return Subset(a.universe_size(), ~a.bits() & full_mask(a.universe_size()));
}

bool is_subset(const Subset& a, const Subset& b) {
  same_ground(a, b);
  return (a.bits() & ~b.bits()) == 0;
}

bool is_disjoint(const Subset& a, const Subset& b) {
  same_ground(a, b);
  return (a.bits() & b.bits()) == 0;
}

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(Errc::bad_ground_set, "ground set must be nonempty");
  if (names_.size() > kMaxPoints)
    throw Error(Errc::bad_ground_set,
                "ground set has " + std::to_string(names_.size()) + " points; cap is " +
                    std::to_string(kMaxPoints));
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(Errc::bad_ground_set, "empty point label");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j])
        throw Error(Errc::duplicate_label, "duplicate point label '" + names_[i] + "'");
  }
}

GroundSet GroundSet::standard(unsigned n) {
  if (n == 0 || n > kMaxPoints)
    throw Error(Errc::bad_ground_set, "standard ground set size must be in 1.." +
                                          std::to_string(kMaxPoints));
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(names));
}

unsigned GroundSet::index_of(std::string_view label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end())
    throw Error(Errc::unknown_label, "unknown point label '" + std::string(label) + "'");
  return static_cast<unsigned>(it - names_.begin());
}

Subset GroundSet::parse_subset(std::span<const std::string> labels) const {
  Mask bits = 0;
  for (const auto& label : labels) {
    Mask bit = Mask{1} << index_of(label);
    if (bits & bit)
      throw Error(Errc::duplicate_label, "label '" + label + "' listed twice in one subset");
    bits |= bit;
  }
  return Subset(size(), bits);
}

Subset GroundSet::parse_subset(std::initializer_list<std::string_view> labels) const {
  std::vector<std::string> owned(labels.begin(), labels.end());
  return parse_subset(std::span<const std::string>(owned));
}

void GroundSet::check(const Subset& s) const {
  if (s.universe_size() != size())
    throw Error(Errc::ground_mismatch, "subset does not belong to this ground set");
}

std::vector<std::string> GroundSet::labels_of(const Subset& s) const {
  check(s);
  std::vector<std::string> out;
  for (unsigned i = 0; i < size(); ++i)
    if (s.contains(i)) out.push_back(names_[i]);
  return out;
}

std::string GroundSet::format(const Subset& s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : labels_of(s)) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  out += '}';
  return out;
}

SetFamily::SetFamily(unsigned n, std::vector<Subset> members) : n_(n), members_(std::move(members)) {
  if (n > kMaxPoints) throw Error(Errc::out_of_range, "family carrier exceeds cap");
  for (const auto& s : members_)
    if (s.universe_size() != n)
      throw Error(Errc::ground_mismatch, "family member over a different carrier");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::from_masks(unsigned n, std::vector<Mask> masks) {
  std::vector<Subset> members;
  members.reserve(masks.size());
  for (Mask m : masks) members.emplace_back(n, m);
  return SetFamily(n, std::move(members));
}

bool SetFamily::contains(const Subset& s) const {
  if (s.universe_size() != n_)
    throw Error(Errc::ground_mismatch, "subset over a different carrier than the family");
  return std::binary_search(members_.begin(), members_.end(), s);
}

}  // namespace gbt
