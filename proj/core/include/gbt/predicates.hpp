#pragma once

// Two-topology predicates on a generalized bitopological space (X, μ1, μ2).
//
// Index convention: `side` selects μ_i and the other index j = 3 - i. Every
// one-sided predicate is "with respect to" μ_j. All subset comparisons are
// non-strict.

#include <array>

#include "gbt/gt_engine.hpp"

namespace gbt {

enum class Side : unsigned char { first = 1, second = 2 };

constexpr Side other(Side s) noexcept { return s == Side::first ? Side::second : Side::first; }
constexpr unsigned index_of(Side s) noexcept { return static_cast<unsigned>(s); }
inline constexpr std::array<Side, 2> kBothSides{Side::first, Side::second};

// Throws Errc::out_of_range unless i is 1 or 2.
Side side_from_index(int i);

class GbtSpace {
 public:
  // Both topologies must live over `ground`; throws Errc::ground_mismatch otherwise.
  GbtSpace(GroundSet ground, GeneralizedTopology mu1, GeneralizedTopology mu2);

  const GroundSet& ground() const noexcept { return ground_; }
  const GeneralizedTopology& mu1() const noexcept { return mu1_; }
  const GeneralizedTopology& mu2() const noexcept { return mu2_; }
  const GeneralizedTopology& mu(Side s) const noexcept { return s == Side::first ? mu1_ : mu2_; }
  unsigned size() const noexcept { return ground_.size(); }
  Mask full() const noexcept { return full_mask(size()); }

  // (X, μ2, μ1).
  GbtSpace swapped() const { return GbtSpace(ground_, mu2_, mu1_); }

  friend bool operator==(const GbtSpace&, const GbtSpace&) = default;

 private:
  GroundSet ground_;
  GeneralizedTopology mu1_;
  GeneralizedTopology mu2_;
};

// Validates both families over the ground set and builds the space.
GbtSpace make_space(GroundSet ground, SetFamily mu1, SetFamily mu2);

// closure_i(A) ⊆ wedge_j(A).
bool is_g_closed_wrt(const GbtSpace& s, Side i, const Subset& a);
// Complement is g-closed.
bool is_g_open_wrt(const GbtSpace& s, Side i, const Subset& a);
// Every μ_j-closed F ⊆ A lies inside Int_i(A). Test oracle for is_g_open_wrt.
bool is_g_open_wrt_by_closed_sets(const GbtSpace& s, Side i, const Subset& a);

// A = closure_i(A) ∩ wedge_j(A).
bool is_lambda_closed_wrt(const GbtSpace& s, Side i, const Subset& a);
bool is_lambda_open_wrt(const GbtSpace& s, Side i, const Subset& a);

// A = closure_1(A) ∩ closure_2(A) ∩ wedge_1(A) ∩ wedge_2(A).
bool is_pairwise_lambda_closed(const GbtSpace& s, const Subset& a);
bool is_pairwise_lambda_open(const GbtSpace& s, const Subset& a);

// A = wedge_1(A) ∩ wedge_2(A).
bool is_wedge12_set(const GbtSpace& s, const Subset& a);

// Opens U ⊇ A and V ⊇ B with A ∩ V = B ∩ U = ∅.
bool are_weakly_separated(const GeneralizedTopology& t, const Subset& a, const Subset& b);

// Closure_i(A) ∖ A contains no nonempty μ_j-closed set.
bool closure_gap_free(const GbtSpace& s, Side i, const Subset& a);

SetFamily lambda_open_family_wrt(const GbtSpace& s, Side i);
SetFamily pairwise_lambda_open_family(const GbtSpace& s);

// Existential characterisations of one-sided λ-closedness. Each scans all
// candidate witnesses; is_lambda_closed_wrt is the closed-form decider.
namespace lambda_forms {
// A = F ∩ L with F μ_i-closed and L a ∧_{μ_j}-set.
bool closed_meets_wedge_set(const GbtSpace& s, Side i, Mask a);
// A = P ∩ wedge_j(A) with P μ_i-closed.
bool closed_meets_own_wedge(const GbtSpace& s, Side i, Mask a);
// A = closure_i(A) ∩ L with L a ∧_{μ_j}-set.
bool own_closure_meets_wedge_set(const GbtSpace& s, Side i, Mask a);
}  // namespace lambda_forms

// Existential characterisations of pairwise λ-closedness.
namespace pairwise_forms {
// A = F1 ∩ F2 ∩ L1 ∩ L2 (closed sets and ∧-sets of both topologies).
bool closed_meets_wedge_sets(const GbtSpace& s, Mask a);
// A = F1 ∩ F2 ∩ wedge_1(A) ∩ wedge_2(A).
bool closed_meets_own_wedges(const GbtSpace& s, Mask a);
// A = closure_1(A) ∩ closure_2(A) ∩ L1 ∩ L2.
bool own_closures_meet_wedge_sets(const GbtSpace& s, Mask a);
}  // namespace pairwise_forms

}  // namespace gbt
