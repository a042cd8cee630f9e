#pragma once

// Finite ground sets and subsets encoded as characteristic bit vectors.
//
// Element i of a GroundSet corresponds to bit i of a Subset. A Subset only
// remembers the size of the carrier it was built for; mixing subsets over
// carriers of different sizes is rejected with Errc::ground_mismatch.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbt/error.hpp"

namespace gbt {

using Mask = std::uint32_t;

inline constexpr unsigned kMaxPoints = 16;

constexpr Mask full_mask(unsigned n) noexcept {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

class Subset {
 public:
  constexpr Subset() noexcept = default;

  // Throws Errc::out_of_range if bits outside the low n are set.
  Subset(unsigned n, Mask bits);

  static Subset empty(unsigned n) { return Subset(n, 0); }
  static Subset full(unsigned n) { return Subset(n, full_mask(n)); }
  static Subset singleton(unsigned n, unsigned point);

  constexpr Mask bits() const noexcept { return bits_; }
  constexpr unsigned universe_size() const noexcept { return n_; }

  constexpr bool contains(unsigned point) const noexcept {
    return point < n_ && ((bits_ >> point) & 1U) != 0;
  }
  constexpr bool is_empty() const noexcept { return bits_ == 0; }
  constexpr bool is_full() const noexcept { return bits_ == full_mask(n_); }
  unsigned count() const noexcept;

  // Ordering is by carrier size, then by numeric value of the bit vector.
  friend constexpr auto operator<=>(const Subset&, const Subset&) = default;

 private:
  std::uint8_t n_ = 0;
  Mask bits_ = 0;
};

Subset unite(const Subset& a, const Subset& b);
Subset intersect(const Subset& a, const Subset& b);
Subset difference(const Subset& a, const Subset& b);
Subset complement(const Subset& a);
bool is_subset(const Subset& a, const Subset& b);
bool is_disjoint(const Subset& a, const Subset& b);

// Ordered, duplicate-free list of element labels; at most kMaxPoints.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> names);
  GroundSet(std::initializer_list<std::string> names)
      : GroundSet(std::vector<std::string>(names)) {}

  // Points labelled a, b, c, ...
  static GroundSet standard(unsigned n);

  unsigned size() const noexcept { return static_cast<unsigned>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(unsigned point) const { return names_.at(point); }

  // Throws Errc::unknown_label.
  unsigned index_of(std::string_view label) const;

  Subset empty_set() const { return Subset::empty(size()); }
  Subset full_set() const { return Subset::full(size()); }

  Subset parse_subset(std::span<const std::string> labels) const;
  Subset parse_subset(std::initializer_list<std::string_view> labels) const;

  // Labels in point order.
  std::vector<std::string> labels_of(const Subset& s) const;
  // "{a,c}" / "{}".
  std::string format(const Subset& s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  void check(const Subset& s) const;

  std::vector<std::string> names_;
};

// Canonical family of subsets: strictly increasing by bit value.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(unsigned n, std::vector<Subset> members);
  // Masks are range-checked against n, then sorted and deduplicated.
  static SetFamily from_masks(unsigned n, std::vector<Mask> masks);

  unsigned universe_size() const noexcept { return n_; }
  const std::vector<Subset>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const Subset& s) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  unsigned n_ = 0;
  std::vector<Subset> members_;
};

}  // namespace gbt
