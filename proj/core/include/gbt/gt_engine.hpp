#pragma once

// A single generalized topology: a family of "open" subsets that contains the
// empty set and is closed under unions. The carrier itself need not be open,
// so a point may have no open neighbourhood at all.

#include <cstdint>
#include <span>
#include <vector>

#include "gbt/set_core.hpp"

namespace gbt {

class GeneralizedTopology;

// Raised by validate_gt when a union of two members is missing.
class UnionEscape : public Error {
 public:
  UnionEscape(Subset first, Subset second, const std::string& what)
      : Error(Errc::union_escape, what), first_(first), second_(second) {}

  const Subset& first() const noexcept { return first_; }
  const Subset& second() const noexcept { return second_; }

 private:
  Subset first_;
  Subset second_;
};

// Throws Errc::missing_empty_set or UnionEscape.
GeneralizedTopology validate_gt(GroundSet ground, SetFamily opens);

// Smallest union-closed family containing ∅ and every given set.
SetFamily complete_unions(const SetFamily& family);

class GeneralizedTopology {
 public:
  const GroundSet& ground() const noexcept { return ground_; }
  const SetFamily& opens() const noexcept { return opens_; }
  unsigned size() const noexcept { return ground_.size(); }
  Mask full() const noexcept { return full_mask(size()); }

  // Members of opens() as raw masks, ascending.
  std::span<const Mask> open_masks() const noexcept { return masks_; }

  // Raw-mask operators. The argument must fit the carrier; no checks are made.
  bool is_open_bits(Mask a) const noexcept {
    return ((member_[a >> 6] >> (a & 63)) & 1U) != 0;
  }
  bool is_closed_bits(Mask a) const noexcept { return is_open_bits(full() & ~a); }
  Mask closure_bits(Mask a) const noexcept;
  Mask interior_bits(Mask a) const noexcept;
  Mask wedge_bits(Mask a) const noexcept;
  Mask vee_bits(Mask a) const noexcept;
  Mask derived_bits(Mask a) const noexcept;

  friend bool operator==(const GeneralizedTopology& a, const GeneralizedTopology& b) {
    return a.ground_ == b.ground_ && a.opens_ == b.opens_;
  }

 private:
  friend GeneralizedTopology validate_gt(GroundSet ground, SetFamily opens);
  GeneralizedTopology(GroundSet ground, SetFamily opens);

  Mask closure_scan(Mask a) const noexcept;
  Mask wedge_scan(Mask a) const noexcept;

  GroundSet ground_;
  SetFamily opens_;
  std::vector<Mask> masks_;
  std::vector<std::uint64_t> member_;
  // Tabulated closure and wedge for small carriers; empty otherwise.
  std::vector<Mask> closure_table_;
  std::vector<Mask> wedge_table_;
};

bool is_open(const GeneralizedTopology& t, const Subset& a);
bool is_closed(const GeneralizedTopology& t, const Subset& a);

// Intersection of all closed supersets. X is always closed, so this is total.
Subset closure(const GeneralizedTopology& t, const Subset& a);
// Union of all open subsets.
Subset interior(const GeneralizedTopology& t, const Subset& a);
// Intersection of all opens containing A; X when no open contains A.
Subset wedge(const GeneralizedTopology& t, const Subset& a);
// Union of all closed subsets of A; ∅ when there are none.
Subset vee(const GeneralizedTopology& t, const Subset& a);
// Limit points: x such that every open containing x meets A∖{x}. A point with
// no open neighbourhood is a limit point of every set, including ∅.
Subset derived_set(const GeneralizedTopology& t, const Subset& a);

// All ∨-sets (A = vee(A)). Always a generalized topology.
SetFamily vee_family(const GeneralizedTopology& t);

// Single-space separation: some open contains exactly one point of each pair
// (T0), or each ordered pair is split by an open (T1).
bool is_gt_T0(const GeneralizedTopology& t);
bool is_gt_T1(const GeneralizedTopology& t);

// True when t is an ordinary topology: X open and closed under finite intersection.
bool is_topology(const GeneralizedTopology& t);

}  // namespace gbt
