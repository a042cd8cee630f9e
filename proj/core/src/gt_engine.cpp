#include "gbt/gt_engine.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace gbt {

namespace {

constexpr unsigned kTabulateUpTo = 8;

void check_carrier(const GeneralizedTopology& t, const Subset& a) {
  if (a.universe_size() != t.size())
    throw Error(Errc::ground_mismatch, "subset is not over the topology's carrier");
}

}  // namespace

GeneralizedTopology::GeneralizedTopology(GroundSet ground, SetFamily opens)
    : ground_(std::move(ground)), opens_(std::move(opens)) {
  const unsigned n = ground_.size();
  masks_.reserve(opens_.size());
  for (const auto& s : opens_) masks_.push_back(s.bits());
  member_.assign(((std::size_t{1} << n) + 63) / 64, 0);
  for (Mask m : masks_) member_[m >> 6] |= std::uint64_t{1} << (m & 63);

  if (n <= kTabulateUpTo) {
    const Mask count = Mask{1} << n;
    closure_table_.resize(count);
    wedge_table_.resize(count);
    for (Mask a = 0; a < count; ++a) {
      closure_table_[a] = closure_scan(a);
      wedge_table_[a] = wedge_scan(a);
    }
  }
}

Mask GeneralizedTopology::closure_scan(Mask a) const noexcept {
  // X minus every open set that misses A.
  Mask missing = 0;
  for (Mask u : masks_)
    if ((u & a) == 0) missing |= u;
  return full() & ~missing;
}

Mask GeneralizedTopology::wedge_scan(Mask a) const noexcept {
  Mask acc = full();
  for (Mask u : masks_)
    if ((a & ~u) == 0) acc &= u;
  return acc;
}

Mask GeneralizedTopology::closure_bits(Mask a) const noexcept {
  return closure_table_.empty() ? closure_scan(a) : closure_table_[a];
}

Mask GeneralizedTopology::wedge_bits(Mask a) const noexcept {
  return wedge_table_.empty() ? wedge_scan(a) : wedge_table_[a];
}

Mask GeneralizedTopology::interior_bits(Mask a) const noexcept {
  Mask acc = 0;
  for (Mask u : masks_)
    if ((u & ~a) == 0) acc |= u;
  return acc;
}

Mask GeneralizedTopology::vee_bits(Mask a) const noexcept {
  Mask acc = 0;
  for (Mask u : masks_) {
    Mask closed = full() & ~u;
    if ((closed & ~a) == 0) acc |= closed;
  }
  return acc;
}

Mask GeneralizedTopology::derived_bits(Mask a) const noexcept {
  Mask out = 0;
  for (unsigned x = 0; x < size(); ++x) {
    const Mask bit = Mask{1} << x;
    const Mask rest = a & ~bit;
    bool limit = true;
    for (Mask u : masks_) {
      if ((u & bit) != 0 && (u & rest) == 0) {
        limit = false;
        break;
      }
    }
    if (limit) out |= bit;
  }
  return out;
}

GeneralizedTopology validate_gt(GroundSet ground, SetFamily opens) {
  if (opens.universe_size() != ground.size())
    throw Error(Errc::ground_mismatch, "family is not over the given ground set");
  if (!opens.contains(ground.empty_set()))
    throw Error(Errc::missing_empty_set, "family does not contain the empty set");
  const auto& members = opens.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      Subset u = unite(members[i], members[j]);
      if (!opens.contains(u))
        throw UnionEscape(members[i], members[j],
                          "union of " + ground.format(members[i]) + " and " +
                              ground.format(members[j]) + " is " + ground.format(u) +
                              ", which is not in the family");
    }
  }
  return GeneralizedTopology(std::move(ground), std::move(opens));
}

SetFamily complete_unions(const SetFamily& family) {
  std::set<Mask> sets{0};
  for (const auto& s : family) sets.insert(s.bits());
  // Each pass adds every pairwise union; stop once a pass adds nothing.
  for (std::size_t before = 0; before != sets.size();) {
    before = sets.size();
    const std::vector<Mask> snapshot(sets.begin(), sets.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) sets.insert(snapshot[i] | snapshot[j]);
  }
  return SetFamily::from_masks(family.universe_size(), std::vector<Mask>(sets.begin(), sets.end()));
}

bool is_open(const GeneralizedTopology& t, const Subset& a) {
  check_carrier(t, a);
  return t.is_open_bits(a.bits());
}

bool is_closed(const GeneralizedTopology& t, const Subset& a) {
  check_carrier(t, a);
  return t.is_closed_bits(a.bits());
}

Subset closure(const GeneralizedTopology& t, const Subset& a) {
  check_carrier(t, a);
  return Subset(t.size(), t.closure_bits(a.bits()));
}

Subset interior(const GeneralizedTopology& t, const Subset& a) {
  check_carrier(t, a);
  return Subset(t.size(), t.interior_bits(a.bits()));
}

Subset wedge(const GeneralizedTopology& t, const Subset& a) {
  check_carrier(t, a);
  return Subset(t.size(), t.wedge_bits(a.bits()));
}

Subset vee(const GeneralizedTopology& t, const Subset& a) {
  check_carrier(t, a);
  return Subset(t.size(), t.vee_bits(a.bits()));
}

Subset derived_set(const GeneralizedTopology& t, const Subset& a) {
  check_carrier(t, a);
  return Subset(t.size(), t.derived_bits(a.bits()));
}

SetFamily vee_family(const GeneralizedTopology& t) {
  std::vector<Mask> out;
  const Mask count = Mask{1} << t.size();
  for (Mask a = 0; a < count; ++a)
    if (t.vee_bits(a) == a) out.push_back(a);
  return SetFamily::from_masks(t.size(), std::move(out));
}

bool is_gt_T0(const GeneralizedTopology& t) {
  for (unsigned x = 0; x < t.size(); ++x)
    for (unsigned y = x + 1; y < t.size(); ++y) {
      const Mask pair = (Mask{1} << x) | (Mask{1} << y);
      bool split = std::any_of(t.open_masks().begin(), t.open_masks().end(), [&](Mask u) {
        return std::popcount(u & pair) == 1;
      });
      if (!split) return false;
    }
  return true;
}

bool is_gt_T1(const GeneralizedTopology& t) {
  for (unsigned x = 0; x < t.size(); ++x)
    for (unsigned y = 0; y < t.size(); ++y) {
      if (x == y) continue;
      const Mask bx = Mask{1} << x, by = Mask{1} << y;
      bool split = std::any_of(t.open_masks().begin(), t.open_masks().end(),
                               [&](Mask u) { return (u & bx) != 0 && (u & by) == 0; });
      if (!split) return false;
    }
  return true;
}

bool is_topology(const GeneralizedTopology& t) {
  if (!t.is_open_bits(t.full())) return false;
  for (Mask u : t.open_masks())
    for (Mask v : t.open_masks())
      if (!t.is_open_bits(u & v)) return false;
  return true;
}

}  // namespace gbt
