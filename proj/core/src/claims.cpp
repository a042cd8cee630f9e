#include "gbt/claims.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "gbt/enumeration.hpp"
#include "gbt/expectations_data.hpp"
#include "gbt/registry_data.hpp"
#include "gbt/space_file.hpp"
#include "json.hpp"

namespace gbt {

namespace {

constexpr std::array<std::string_view, 7> kKindNames{
    "universal-implication", "equivalence", "conditional",  "existence",
    "definition",            "fixture-assertion", "out-of-scope"};

constexpr std::array<std::string_view, 5> kStatusNames{
    "verified", "refuted-with-witness", "fixture-mismatch", "no-witness-in-scope", "out-of-scope"};

ClaimKind parse_kind(std::string_view name) {
  for (std::size_t k = 0; k < kKindNames.size(); ++k)
    if (kKindNames[k] == name) return static_cast<ClaimKind>(k);
  throw std::logic_error("registry uses unknown claim kind " + std::string(name));
}

// ---------------------------------------------------------------------------
// Probes. A violation probe describes why a space breaks a claim; an exhibit
// probe describes why a space shows a phenomenon. Both return nullopt otherwise.

struct Ctx {
  const GbtSpace& s;
  const AxiomProfile& p;
  unsigned n;
  Mask full;
  Mask count;

  const GeneralizedTopology& mu(Side i) const { return s.mu(i); }
  std::string set(Mask a) const { return s.ground().format(Subset(n, a)); }
  std::string pt(unsigned x) const { return s.ground().name(x); }
};

using Probe = std::optional<std::string> (*)(const Ctx&);
using Found = std::optional<std::string>;

Mask bit(unsigned x) { return Mask{1} << x; }
std::string side(Side i) { return "i=" + std::to_string(index_of(i)); }

bool open(const Ctx& c, Side i, Mask a) { return c.mu(i).is_open_bits(a); }
bool closed(const Ctx& c, Side i, Mask a) { return c.mu(i).is_closed_bits(a); }
Mask cl(const Ctx& c, Side i, Mask a) { return c.mu(i).closure_bits(a); }
Mask wd(const Ctx& c, Side i, Mask a) { return c.mu(i).wedge_bits(a); }
Mask ve(const Ctx& c, Side i, Mask a) { return c.mu(i).vee_bits(a); }
bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

bool g(const Ctx& c, Side i, Mask a) { return sub(cl(c, i, a), wd(c, other(i), a)); }
bool g_open(const Ctx& c, Side i, Mask a) { return g(c, i, c.full & ~a); }
bool lam(const Ctx& c, Side i, Mask a) { return a == (cl(c, i, a) & wd(c, other(i), a)); }
bool lam_open(const Ctx& c, Side i, Mask a) { return lam(c, i, c.full & ~a); }
bool plc(const Ctx& c, Mask a) {
  return a == (cl(c, Side::first, a) & cl(c, Side::second, a) & wd(c, Side::first, a) &
               wd(c, Side::second, a));
}
bool plo(const Ctx& c, Mask a) { return plc(c, c.full & ~a); }
bool w12(const Ctx& c, Mask a) { return a == (wd(c, Side::first, a) & wd(c, Side::second, a)); }
Subset subset(const Ctx& c, Mask a) { return Subset(c.n, a); }

Found lemma_7(const Ctx& c) {
  for (Side i : kBothSides) {
    if (wd(c, i, 0) != 0 || ve(c, i, 0) != 0 || wd(c, i, c.full) != c.full ||
        ve(c, i, c.full) != c.full)
      return "wedge or vee moves ∅ or X for " + side(i);
    for (Mask a = 0; a < c.count; ++a) {
      const Mask w = wd(c, i, a), v = ve(c, i, a);
      if (!sub(a, w)) return c.set(a) + " not inside its wedge, " + side(i);
      if (!sub(v, a)) return "vee of " + c.set(a) + " escapes it, " + side(i);
      if (wd(c, i, w) != w) return "wedge not idempotent at " + c.set(a) + ", " + side(i);
      if (ve(c, i, v) != v) return "vee not idempotent at " + c.set(a) + ", " + side(i);
      const Mask rest = c.full & ~a;
      for (Mask extra = rest;; extra = (extra - 1) & rest) {
        const Mask b = a | extra;
        if (!sub(w, wd(c, i, b)) || !sub(v, ve(c, i, b)))
          return "not monotone on " + c.set(a) + " ⊆ " + c.set(b) + ", " + side(i);
        if (extra == 0) break;
      }
    }
  }
  return std::nullopt;
}

Found def_8(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a) {
      bool by_opens = true;
      for (Mask u : c.mu(other(i)).open_masks())
        if (sub(a, u) && !sub(cl(c, i, a), u)) by_opens = false;
      if (by_opens != is_g_closed_wrt(c.s, i, subset(c, a)))
        return "superset scan and decider differ on " + c.set(a) + ", " + side(i);
      if (is_g_open_wrt(c.s, i, subset(c, a)) != is_g_open_wrt_by_closed_sets(c.s, i, subset(c, a)))
        return "g-open forms differ on " + c.set(a) + ", " + side(i);
    }
  return std::nullopt;
}

Found rem_9(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a) {
      if (closed(c, i, a) && !g(c, i, a)) return c.set(a) + " closed but not g-closed, " + side(i);
      if (g(c, i, a) && open(c, other(i), a) && !closed(c, i, a))
        return c.set(a) + " g-closed and μj-open but not μi-closed, " + side(i);
    }
  return std::nullopt;
}

Found g_closed_not_closed(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      if (g(c, i, a) && !closed(c, i, a))
        return c.set(a) + " is g-closed but not μi-closed, " + side(i);
  return std::nullopt;
}

Found note_10(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a) {
      const Side j = other(i);
      if (wd(c, j, a) == a && g(c, i, a) != closed(c, i, a))
        return "∧-set " + c.set(a) + " has g-closed != closed, " + side(i);
      const Mask w = wd(c, j, a);
      if (wd(c, j, w) != w) return "wedge of " + c.set(a) + " is not a ∧-set, " + side(i);
      if (g(c, i, w) != closed(c, i, w))
        return "wedge " + c.set(w) + " has g-closed != closed, " + side(i);
    }
  return std::nullopt;
}

bool gap_free(const Ctx& c, Side i, Mask a) { return closure_gap_free(c.s, i, subset(c, a)); }

Found thm_12(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      if (g(c, i, a) && !gap_free(c, i, a))
        return c.set(a) + " g-closed but its closure gap holds a μj-closed set, " + side(i);
  return std::nullopt;
}

Found gap_free_not_g(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      if (gap_free(c, i, a) && !g(c, i, a))
        return c.set(a) + " has a gap-free closure but is not g-closed, " + side(i);
  return std::nullopt;
}

Found union_intersection_escape(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      for (Mask b = a + 1; b < c.count; ++b)
        if (g(c, i, a) && g(c, i, b) && !g(c, i, a | b) && !g(c, i, a & b))
          return c.set(a) + " and " + c.set(b) + " are g-closed, union " + c.set(a | b) +
                 " and intersection " + c.set(a & b) + " are not, " + side(i);
  return std::nullopt;
}

Found thm_union(const Ctx& c) {
  for (Side i : kBothSides) {
    bool hypothesis = true;
    for (Mask a = 0; a < c.count && hypothesis; ++a)
      for (Mask b = 0; b < c.count && hypothesis; ++b)
        if (closed(c, i, a) && closed(c, i, b) && !g(c, i, a | b)) hypothesis = false;
    if (!hypothesis) continue;
    for (Mask a = 0; a < c.count; ++a)
      for (Mask b = 0; b < c.count; ++b)
        if (g(c, i, a) && g(c, i, b) && !g(c, i, a | b))
          return "hypothesis holds but " + c.set(a) + " ∪ " + c.set(b) + " is not g-closed, " +
                 side(i);
  }
  return std::nullopt;
}

bool weakly_separated_scan(const GeneralizedTopology& t, Mask a, Mask b) {
  for (Mask u : t.open_masks())
    for (Mask v : t.open_masks())
      if (sub(a, u) && sub(b, v) && (a & v) == 0 && (b & u) == 0) return true;
  return false;
}

Found def_weaksep(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      for (Mask b = 0; b < c.count; ++b)
        if (weakly_separated_scan(c.mu(i), a, b) !=
            are_weakly_separated(c.mu(i), subset(c, a), subset(c, b)))
          return "weak separation forms differ on " + c.set(a) + ", " + c.set(b) + ", " + side(i);
  return std::nullopt;
}

Found thm_weaksep(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a) {
      if (!g_open(c, i, a)) continue;
      for (Mask b = 0; b < c.count; ++b)
        if (g_open(c, i, b) && weakly_separated_scan(c.mu(other(i)), a, b) && !g_open(c, i, a | b))
          return c.set(a) + " and " + c.set(b) + " are weakly separated g-open, union is not, " +
                 side(i);
    }
  return std::nullopt;
}

Found thm_15(const Ctx& c) {
  if (c.p.t0 != t0_forms::by_separating_set(c.s)) return "T0 verdict differs from separating-set form";
  return std::nullopt;
}

Found rem_16(const Ctx& c) {
  if ((is_gt_T0(c.s.mu1()) || is_gt_T0(c.s.mu2())) && !c.p.t0) return "a component is T0 but the space is not";
  if (c.p.t1 && !c.p.t0) return "pairwise T1 but not pairwise T0";
  return std::nullopt;
}

Found t0_without_t0_parts(const Ctx& c) {
  if (c.p.t0 && !c.p.t1 && !is_gt_T0(c.s.mu1()) && !is_gt_T0(c.s.mu2()))
    return std::string("pairwise T0, not pairwise T1, neither component T0");
  return std::nullopt;
}

bool in(Mask set, unsigned x) { return (set & bit(x)) != 0; }

Found thm_18(const Ctx& c) {
  if (!c.p.t0) return std::nullopt;
  auto labelled = [&](unsigned p, unsigned q) {
    return !in(cl(c, Side::first, bit(q)), p) || !in(cl(c, Side::second, bit(p)), q);
  };
  for (unsigned x = 0; x < c.n; ++x)
    for (unsigned y = x + 1; y < c.n; ++y)
      if (!labelled(x, y) && !labelled(y, x))
        return "pair " + c.pt(x) + ", " + c.pt(y) + " fails in both labellings";
  return std::nullopt;
}

Found def_19(const Ctx& c) {
  bool symmetric = true;
  for (Side i : kBothSides)
    for (unsigned x = 0; x < c.n; ++x)
      for (unsigned y = 0; y < c.n; ++y)
        if (in(cl(c, i, bit(y)), x) && !in(cl(c, other(i), bit(x)), y)) symmetric = false;
  if (symmetric != c.p.symmetric) return "symmetry decider differs from direct transcription";
  return std::nullopt;
}

Found thm_20(const Ctx& c) {
  if (c.p.t0 && c.p.symmetric && !c.p.t1) return "pairwise T0 and symmetric but not pairwise T1";
  return std::nullopt;
}

std::optional<unsigned> singleton_closed_nowhere(const Ctx& c) {
  for (unsigned x = 0; x < c.n; ++x)
    if (!closed(c, Side::first, bit(x)) && !closed(c, Side::second, bit(x))) return x;
  return std::nullopt;
}

Found thm_21(const Ctx& c) {
  if (!c.p.t1) return std::nullopt;
  if (auto x = singleton_closed_nowhere(c))
    return "pairwise T1 but {" + c.pt(*x) + "} is neither μ1-closed nor μ2-closed";
  return std::nullopt;
}

Found thm_21_ordered(const Ctx& c) {
  if (!ordered_reading::is_pairwise_T1(c.s)) return std::nullopt;
  if (auto x = singleton_closed_nowhere(c))
    return "ordered pairwise T1 but {" + c.pt(*x) + "} is neither μ1-closed nor μ2-closed";
  return std::nullopt;
}

Found singletons_closed_not_t1(const Ctx& c) {
  if (singletons_closed_in_either(c.s) && !c.p.t1)
    return std::string("each singleton is μ1-closed or μ2-closed, yet not pairwise T1");
  return std::nullopt;
}

bool singletons_closed_in_both(const Ctx& c) {
  for (unsigned x = 0; x < c.n; ++x)
    if (!closed(c, Side::first, bit(x)) || !closed(c, Side::second, bit(x))) return false;
  return true;
}

Found note_23(const Ctx& c) {
  if (singletons_closed_in_both(c) && !c.p.t1) return "singletons closed in both, not pairwise T1";
  return std::nullopt;
}

Found t1_without_closed_singletons(const Ctx& c) {
  if (c.p.t1 && !singletons_closed_in_both(c))
    return std::string("pairwise T1 with a singleton not closed in both topologies");
  return std::nullopt;
}

Found t1_without_t1_parts(const Ctx& c) {
  if (c.p.t1 && !is_gt_T1(c.s.mu1()) && !is_gt_T1(c.s.mu2()))
    return std::string("pairwise T1, neither component T1");
  return std::nullopt;
}

Found t1_part_without_t1(const Ctx& c) {
  if ((is_gt_T1(c.s.mu1()) || is_gt_T1(c.s.mu2())) && !c.p.t1)
    return std::string("a component is T1, the space is not pairwise T1");
  return std::nullopt;
}

Found def_27(const Ctx& c) {
  if (t_half_forms::by_definition(c.s) != c.p.t_half) return "subset scan differs from singleton rule";
  return std::nullopt;
}

Found thm_28(const Ctx& c) {
  bool rule = true;
  for (Side i : kBothSides)
    for (unsigned x = 0; x < c.n; ++x)
      if (!closed(c, other(i), bit(x)) && !open(c, i, bit(x))) rule = false;
  if (rule != t_half_forms::by_definition(c.s)) return "singleton rule differs from definition";
  return std::nullopt;
}

Found cor_29(const Ctx& c) {
  bool rule = true;
  for (Side i : kBothSides)
    for (unsigned x = 0; x < c.n; ++x)
      if (!open(c, i, bit(x)) && !closed(c, other(i), bit(x))) rule = false;
  if (rule != t_half_forms::by_definition(c.s)) return "singleton rule differs from definition";
  return std::nullopt;
}

bool g_closed_sets_closed(const Ctx& c, Side i) {
  for (Mask a = 0; a < c.count; ++a)
    if (g(c, i, a) && !closed(c, i, a)) return false;
  return true;
}

Found thm_30(const Ctx& c) {
  for (Side i : kBothSides)
    if (singletons_open_or_cross_closed(c.s, i) != g_closed_sets_closed(c, i))
      return "singleton condition and g-closed condition differ for " + side(i);
  return std::nullopt;
}

Found note_31(const Ctx& c) {
  for (Side i : kBothSides) {
    bool same_index = true;
    for (unsigned x = 0; x < c.n; ++x)
      if (!open(c, i, bit(x)) && !closed(c, i, bit(x))) same_index = false;
    if (!same_index) continue;
    const Side j = other(i);
    for (Mask a = 0; a < c.count; ++a)
      if (g(c, j, a) && !closed(c, j, a))
        return "singletons μ" + std::to_string(index_of(i)) + "-open or closed, yet " + c.set(a) +
               " is g-closed and not closed for " + side(j);
  }
  return std::nullopt;
}

Found rem_32(const Ctx& c) {
  if (t_half_forms::by_singletons(c.s) != t_half_forms::by_definition(c.s))
    return "cross-index singleton rule differs from definition";
  return std::nullopt;
}

Found thm_33(const Ctx& c) {
  if (t_half_forms::by_same_index_singletons(c.s) != t_half_forms::by_definition(c.s))
    return std::string("same-index singleton rule is ") +
           (t_half_forms::by_same_index_singletons(c.s) ? "true" : "false") +
           " but the definition gives " + (c.p.t_half ? "true" : "false");
  return std::nullopt;
}

Found thm_34(const Ctx& c) {
  if (c.p.t_half && !singletons_open_or_closed_somewhere(c.s))
    return "pairwise T1/2 with a singleton open and closed nowhere";
  return std::nullopt;
}

Found somewhere_not_t_half(const Ctx& c) {
  if (singletons_open_or_closed_somewhere(c.s) && !c.p.t_half)
    return std::string("each singleton is open or closed somewhere, not pairwise T1/2");
  return std::nullopt;
}

Found t1_not_t_half(const Ctx& c) {
  if (c.p.t1 && !c.p.t_half) return std::string("pairwise T1, not pairwise T1/2");
  return std::nullopt;
}

Found t_half_not_t1(const Ctx& c) {
  if (c.p.t_half && !c.p.t1) return std::string("pairwise T1/2, not pairwise T1");
  return std::nullopt;
}

Found rem_37(const Ctx& c) {
  if (c.p.t_half && !c.p.t0) return "pairwise T1/2 but not pairwise T0";
  return std::nullopt;
}

Found t0_not_t_half(const Ctx& c) {
  if (c.p.t0 && !c.p.t_half) return std::string("pairwise T0, not pairwise T1/2");
  return std::nullopt;
}

std::vector<Mask> opens_inside(const GeneralizedTopology& t, Mask a) {
  std::vector<Mask> out;
  for (Mask u : t.open_masks())
    if (sub(u, a)) out.push_back(u);
  return out;
}

std::vector<Mask> vee_sets_inside(const Ctx& c, Side i, Mask a) {
  std::vector<Mask> out;
  for (Mask m = 0; m < c.count; ++m)
    if (sub(m, a) && ve(c, i, m) == m) out.push_back(m);
  return out;
}

std::vector<Mask> unions_of(const std::vector<Mask>& xs, const std::vector<Mask>& ys) {
  std::vector<Mask> out;
  for (Mask x : xs)
    for (Mask y : ys) out.push_back(x | y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Found def_38(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a) {
      if (lambda_forms::closed_meets_wedge_set(c.s, i, a) != lam(c, i, a))
        return "F ∩ L search differs from decider on " + c.set(a) + ", " + side(i);
      bool decomposed = false;
      for (Mask v : opens_inside(c.mu(i), a))
        for (Mask m : vee_sets_inside(c, other(i), a))
          if ((v | m) == a) decomposed = true;
      if (decomposed != is_lambda_open_wrt(c.s, i, subset(c, a)))
        return "V ∪ M search differs from decider on " + c.set(a) + ", " + side(i);
    }
  return std::nullopt;
}

Found obs_lambda_closed(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      if ((wd(c, other(i), a) == a || closed(c, i, a)) && !lam(c, i, a))
        return c.set(a) + " is a ∧-set or closed but not λ-closed, " + side(i);
  return std::nullopt;
}

Found lambda_closed_neither(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      if (lam(c, i, a) && wd(c, other(i), a) != a && !closed(c, i, a))
        return c.set(a) + " is λ-closed, neither a ∧_{μj}-set nor μi-closed, " + side(i);
  return std::nullopt;
}

Found thm_40(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      for (Mask b = a + 1; b < c.count; ++b)
        if (lam_open(c, i, a) && lam_open(c, i, b) && !lam_open(c, i, a | b))
          return c.set(a) + " ∪ " + c.set(b) + " is not λ-open, " + side(i);
  return std::nullopt;
}

template <typename Member>
Found union_closed(const Ctx& c, Member member, const std::string& what) {
  if (!member(0)) return what + " misses ∅";
  for (Mask a = 0; a < c.count; ++a)
    for (Mask b = a + 1; b < c.count; ++b)
      if (member(a) && member(b) && !member(a | b))
        return what + " holds " + c.set(a) + " and " + c.set(b) + " but not their union";
  return std::nullopt;
}

Found rem_41(const Ctx& c) {
  for (Side i : kBothSides) {
    if (auto f = union_closed(c, [&](Mask a) { return ve(c, i, a) == a; }, "∨-family of " + side(i)))
      return f;
    if (vee_family(c.mu(i)).size() == 0) return "empty ∨-family";
  }
  return std::nullopt;
}

Found cor_42(const Ctx& c) {
  for (Side i : kBothSides) {
    if (auto f = union_closed(c, [&](Mask a) { return lam_open(c, i, a); }, "λ-open family, " + side(i)))
      return f;
    for (Mask u : c.mu(i).open_masks())
      if (!lam_open(c, i, u)) return "μi-open " + c.set(u) + " is not λ-open, " + side(i);
    for (Mask a = 0; a < c.count; ++a)
      if (ve(c, other(i), a) == a && !lam_open(c, i, a))
        return "∨_{μj}-set " + c.set(a) + " is not λ-open, " + side(i);
  }
  return std::nullopt;
}

Found lem_43(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a) {
      const bool iv = lam(c, i, a);
      if (lambda_forms::closed_meets_wedge_set(c.s, i, a) != iv ||
          lambda_forms::closed_meets_own_wedge(c.s, i, a) != iv ||
          lambda_forms::own_closure_meets_wedge_set(c.s, i, a) != iv)
        return "λ-closed forms disagree on " + c.set(a) + ", " + side(i);
    }
  return std::nullopt;
}

Found g_not_lambda(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      if (g(c, i, a) && !lam(c, i, a)) return c.set(a) + " g-closed, not λ-closed, " + side(i);
  return std::nullopt;
}

Found lambda_not_g(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      if (lam(c, i, a) && !g(c, i, a)) return c.set(a) + " λ-closed, not g-closed, " + side(i);
  return std::nullopt;
}

Found def_44(const Ctx& c) {
  for (Mask a = 0; a < c.count; ++a) {
    if (pairwise_forms::closed_meets_wedge_sets(c.s, a) != plc(c, a))
      return "F1 ∩ F2 ∩ L1 ∩ L2 search differs from decider on " + c.set(a);
    const auto opens = unions_of(opens_inside(c.s.mu1(), a), opens_inside(c.s.mu2(), a));
    const auto vees = unions_of(vee_sets_inside(c, Side::first, a), vee_sets_inside(c, Side::second, a));
    bool decomposed = false;
    for (Mask u : opens)
      for (Mask m : vees)
        if ((u | m) == a) decomposed = true;
    if (decomposed != is_pairwise_lambda_open(c.s, subset(c, a)))
      return "U1 ∪ U2 ∪ M1 ∪ M2 search differs from decider on " + c.set(a);
  }
  return std::nullopt;
}

Found lem_45(const Ctx& c) {
  for (Mask a = 0; a < c.count; ++a) {
    const bool iv = plc(c, a);
    if (pairwise_forms::closed_meets_wedge_sets(c.s, a) != iv ||
        pairwise_forms::closed_meets_own_wedges(c.s, a) != iv ||
        pairwise_forms::own_closures_meet_wedge_sets(c.s, a) != iv)
      return "pairwise λ-closed forms disagree on " + c.set(a);
  }
  return std::nullopt;
}

// Intersection of every closed superset in `closed_in` and every open superset in `open_in`.
Mask hull(const Ctx& c, Mask a, std::initializer_list<Side> closed_in, std::initializer_list<Side> open_in) {
  Mask out = c.full;
  for (Side i : closed_in)
    for (Mask u : c.mu(i).open_masks())
      if (sub(a, c.full & ~u)) out &= c.full & ~u;
  for (Side i : open_in)
    for (Mask u : c.mu(i).open_masks())
      if (sub(a, u)) out &= u;
  return out;
}

Found rem_46(const Ctx& c) {
  for (Mask a = 0; a < c.count; ++a) {
    for (Side i : kBothSides)
      if ((hull(c, a, {i}, {other(i)}) == a) != lam(c, i, a))
        return "direct hull differs from λ-closed decider on " + c.set(a) + ", " + side(i);
    if ((hull(c, a, {Side::first, Side::second}, {Side::first, Side::second}) == a) != plc(c, a))
      return "direct hull differs from pairwise λ-closed decider on " + c.set(a);
  }
  return std::nullopt;
}

Found obs_onesided(const Ctx& c) {
  for (Mask a = 0; a < c.count; ++a)
    if ((lam(c, Side::first, a) || lam(c, Side::second, a)) && !plc(c, a))
      return c.set(a) + " is one-sided λ-closed but not pairwise λ-closed";
  return std::nullopt;
}

Found plc_not_onesided(const Ctx& c) {
  for (Mask a = 0; a < c.count; ++a)
    if (plc(c, a) && !lam(c, Side::first, a) && !lam(c, Side::second, a))
      return c.set(a) + " is pairwise λ-closed, neither one-sided λ-closed";
  return std::nullopt;
}

Found lambda_union_escape(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      for (Mask b = a + 1; b < c.count; ++b)
        if (lam(c, i, a) && lam(c, i, b) && !lam(c, i, a | b))
          return c.set(a) + " and " + c.set(b) + " λ-closed, union is not, " + side(i);
  return std::nullopt;
}

Found plc_union_escape(const Ctx& c) {
  for (Mask a = 0; a < c.count; ++a)
    for (Mask b = a + 1; b < c.count; ++b)
      if (plc(c, a) && plc(c, b) && !plc(c, a | b))
        return c.set(a) + " and " + c.set(b) + " pairwise λ-closed, union is not";
  return std::nullopt;
}

Found note_47(const Ctx& c) {
  return union_closed(c, [&](Mask a) { return plo(c, a); }, "pairwise λ-open family");
}

Found thm_48(const Ctx& c) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < c.count; ++a)
      if (closed(c, i, a) != (g(c, i, a) && lam(c, i, a)))
        return "closedness of " + c.set(a) + " differs from g-closed and λ-closed, " + side(i);
  return std::nullopt;
}

Found def_49(const Ctx& c) {
  for (Mask a = 0; a < c.count; ++a)
    if ((hull(c, a, {}, {Side::first, Side::second}) == a) != w12(c, a))
      return "direct open-superset hull differs from decider on " + c.set(a);
  return std::nullopt;
}

Found note_50(const Ctx& c) {
  for (Mask a = 0; a < c.count; ++a)
    if (w12(c, a) && !plc(c, a)) return c.set(a) + " is a ∧12-set but not pairwise λ-closed";
  return std::nullopt;
}

Found plc_singleton_not_w12(const Ctx& c) {
  for (unsigned x = 0; x < c.n; ++x)
    if (plc(c, bit(x)) && !w12(c, bit(x)))
      return c.set(bit(x)) + " is pairwise λ-closed but not a ∧12-set";
  return std::nullopt;
}

Found first_non_w12(const Ctx& c, const std::string& premise) {
  for (Mask a = 0; a < c.count; ++a)
    if (!w12(c, a))
      return premise + " but " + c.set(a) + " is not a ∧12-set (wedge_1 = " +
             c.set(wd(c, Side::first, a)) + ", wedge_2 = " + c.set(wd(c, Side::second, a)) + ")";
  return std::nullopt;
}

Found thm_51(const Ctx& c) {
  if (!c.p.t1) return std::nullopt;
  return first_non_w12(c, "pairwise T1");
}

Found thm_51_ordered(const Ctx& c) {
  if (!ordered_reading::is_pairwise_T1(c.s)) return std::nullopt;
  return first_non_w12(c, "ordered pairwise T1");
}

Found thm_52(const Ctx& c) {
  if (!c.p.t_half) return std::nullopt;
  for (Mask a = 0; a < c.count; ++a)
    if (!plc(c, a)) return "pairwise T1/2 but " + c.set(a) + " is not pairwise λ-closed";
  return std::nullopt;
}

Found all_plc_not_t_half(const Ctx& c) {
  for (Mask a = 0; a < c.count; ++a)
    if (!plc(c, a)) return std::nullopt;
  if (c.p.t_half) return std::nullopt;
  return std::string("every subset pairwise λ-closed, not pairwise T1/2");
}

Found def_53(const Ctx& c) {
  bool lsym = true;
  for (Mask a = 0; a < c.count; ++a)
    if (plc(c, a) && !(lam(c, Side::first, a) && lam(c, Side::second, a))) lsym = false;
  if (lsym != c.p.lambda_symmetric) return "λ-symmetry decider differs from direct scan";
  return std::nullopt;
}

Found thm_54(const Ctx& c) {
  if (c.p.t1 && c.p.lambda_symmetric && !c.p.t_half)
    return "pairwise T1 and λ-symmetric but not pairwise T1/2";
  return std::nullopt;
}

Found thm_54_ordered(const Ctx& c) {
  if (ordered_reading::is_pairwise_T1(c.s) && c.p.lambda_symmetric && !c.p.t_half)
    return "ordered pairwise T1 and λ-symmetric but not pairwise T1/2";
  return std::nullopt;
}

template <SubsetClass Cls>
Found def_subset_class(const Ctx& c) {
  const bool verdict = Cls == SubsetClass::finite      ? c.p.t_quarter
                       : Cls == SubsetClass::countable ? c.p.t_3_8
                                                       : c.p.t_5_8;
  if (subset_separation::by_definition(c.s, Cls) != verdict)
    return "separating-set definition differs from the profile verdict";
  return std::nullopt;
}

template <SubsetClass Cls>
Found thm_subset_class(const Ctx& c) {
  if (subset_separation::by_definition(c.s, Cls) !=
      subset_separation::by_pairwise_lambda_closed(c.s, Cls))
    return "separating-set definition differs from pairwise λ-closed subsets";
  return std::nullopt;
}

Found thm_57(const Ctx& c) {
  if (c.p.t_quarter && !c.p.t0) return "pairwise T1/4 but not pairwise T0";
  return std::nullopt;
}

Found t0_not_t_quarter(const Ctx& c) {
  if (c.p.t0 && !c.p.t_quarter) return std::string("pairwise T0, not pairwise T1/4");
  return std::nullopt;
}

Found thm_58(const Ctx& c) {
  bool singletons = true;
  for (unsigned x = 0; x < c.n; ++x)
    if (!plc(c, bit(x))) singletons = false;
  if (singletons != c.p.t0) return "T0 verdict differs from pairwise λ-closed singletons";
  return std::nullopt;
}

Found rem_63(const Ctx& c) {
  if (c.p.t_half && !c.p.t_5_8) return "T1/2 without T5/8";
  if (c.p.t_5_8 && !c.p.t_3_8) return "T5/8 without T3/8";
  if (c.p.t_3_8 && !c.p.t_quarter) return "T3/8 without T1/4";
  return std::nullopt;
}

Found thm_65(const Ctx& c) {
  if (c.p.t0 && c.p.r0 && !c.p.t1) return "pairwise T0 and R0 but not pairwise T1";
  return std::nullopt;
}

Found t1_not_r0(const Ctx& c) {
  if (c.p.t1 && !c.p.r0) return std::string("pairwise T1, not pairwise R0");
  return std::nullopt;
}

Found cor_67(const Ctx& c) {
  if (!c.p.r0 || !c.p.lambda_symmetric) return std::nullopt;
  const bool v = c.p.t0;
  if (c.p.t1 != v || c.p.t_half != v || c.p.t_5_8 != v || c.p.t_3_8 != v || c.p.t_quarter != v)
    return std::string("R0 and λ-symmetric but the six axioms differ (T0 = ") + (v ? "true" : "false") +
           ", T1 = " + (c.p.t1 ? "true" : "false") + ", T1/2 = " + (c.p.t_half ? "true" : "false") +
           ", T1/4 = " + (c.p.t_quarter ? "true" : "false") + ")";
  return std::nullopt;
}

struct ClaimLogic {
  Probe violation = nullptr;
  std::vector<Probe> exhibits;
};

const std::unordered_map<std::string, ClaimLogic>& claim_logic() {
  static const std::unordered_map<std::string, ClaimLogic> logic{
      {"LEM-7", {lemma_7, {}}},
      {"DEF-8", {def_8, {}}},
      {"REM-9", {rem_9, {g_closed_not_closed}}},
      {"NOTE-10", {note_10, {}}},
      {"THM-12", {thm_12, {gap_free_not_g}}},
      {"REM-UNION-INTERSECT", {nullptr, {union_intersection_escape}}},
      {"THM-UNION", {thm_union, {}}},
      {"DEF-WEAKSEP", {def_weaksep, {}}},
      {"THM-WEAKSEP", {thm_weaksep, {}}},
      {"THM-15", {thm_15, {}}},
      {"REM-16", {rem_16, {t0_without_t0_parts}}},
      {"THM-18", {thm_18, {}}},
      {"DEF-19", {def_19, {}}},
      {"THM-20", {thm_20, {}}},
      {"THM-21", {thm_21, {singletons_closed_not_t1}}},
      {"THM-21-ORDERED", {thm_21_ordered, {}}},
      {"NOTE-23", {note_23, {t1_without_closed_singletons}}},
      {"REM-24", {nullptr, {t1_without_t1_parts, t1_part_without_t1}}},
      {"DEF-27", {def_27, {}}},
      {"THM-28", {thm_28, {}}},
      {"COR-29", {cor_29, {}}},
      {"THM-30", {thm_30, {}}},
      {"NOTE-31", {nullptr, {note_31}}},
      {"REM-32", {rem_32, {}}},
      {"THM-33", {thm_33, {}}},
      {"THM-33-CROSS", {rem_32, {}}},
      {"THM-34", {thm_34, {somewhere_not_t_half}}},
      {"REM-T1-THALF", {nullptr, {t1_not_t_half, t_half_not_t1}}},
      {"REM-37", {rem_37, {t0_not_t_half}}},
      {"DEF-38", {def_38, {}}},
      {"OBS-LAMBDA-CLOSED", {obs_lambda_closed, {lambda_closed_neither}}},
      {"THM-40", {thm_40, {}}},
      {"REM-41", {rem_41, {}}},
      {"COR-42", {cor_42, {}}},
      {"LEM-43", {lem_43, {}}},
      {"OBS-LAMBDA-G", {nullptr, {g_not_lambda, lambda_not_g}}},
      {"DEF-44", {def_44, {}}},
      {"LEM-45", {lem_45, {}}},
      {"REM-46", {rem_46, {}}},
      {"OBS-ONESIDED-PAIRWISE", {obs_onesided, {plc_not_onesided}}},
      {"OBS-UNION-LAMBDA", {nullptr, {lambda_union_escape, plc_union_escape}}},
      {"NOTE-47", {note_47, {}}},
      {"THM-48", {thm_48, {}}},
      {"DEF-49", {def_49, {}}},
      {"NOTE-50", {note_50, {plc_singleton_not_w12}}},
      {"THM-51", {thm_51, {}}},
      {"THM-51-ORDERED", {thm_51_ordered, {}}},
      {"THM-52", {thm_52, {all_plc_not_t_half}}},
      {"DEF-53", {def_53, {}}},
      {"THM-54", {thm_54, {}}},
      {"THM-54-ORDERED", {thm_54_ordered, {}}},
      {"DEF-55", {def_subset_class<SubsetClass::finite>, {}}},
      {"THM-56", {thm_subset_class<SubsetClass::finite>, {}}},
      {"THM-57", {thm_57, {t0_not_t_quarter}}},
      {"THM-58", {thm_58, {}}},
      {"DEF-59", {def_subset_class<SubsetClass::countable>, {}}},
      {"THM-60", {thm_subset_class<SubsetClass::countable>, {}}},
      {"DEF-61", {def_subset_class<SubsetClass::arbitrary>, {}}},
      {"THM-62", {thm_subset_class<SubsetClass::arbitrary>, {}}},
      {"REM-63", {rem_63, {}}},
      {"THM-65", {thm_65, {}}},
      {"REM-66", {nullptr, {t1_not_r0}}},
      {"COR-67", {cor_67, {}}},
  };
  return logic;
}

std::vector<ClaimRecord> build_registry() {
  std::vector<ClaimRecord> out;
  const auto doc = nlohmann::json::parse(detail::kClaimsJson);
  for (const auto& c : doc.at("claims")) {
    ClaimRecord r{c.at("id").get<std::string>(), c.at("citation").get<std::string>(),
                  c.at("quote").get<std::string>(), c.at("statement").get<std::string>(),
                  parse_kind(c.at("kind").get<std::string>())};
    if (r.kind != ClaimKind::out_of_scope && !claim_logic().contains(r.id))
      throw std::logic_error("claim " + r.id + " has no checker");
    out.push_back(std::move(r));
  }
  for (const auto& f : fixture_corpus())
    out.push_back(ClaimRecord{f.id, f.citation, "", f.listing, ClaimKind::fixture_assertion});
  return out;
}

// ---------------------------------------------------------------------------
// Runner.

struct SweepState {
  std::size_t record = 0;
  const ClaimLogic* logic = nullptr;
  bool refuted = false;
  std::vector<std::optional<ClaimWitness>> exhibits;
  std::optional<ClaimWitness> violation;
  std::uint64_t checked = 0;
  std::chrono::nanoseconds elapsed{0};

  bool settled() const {
    if (refuted) return true;
    if (logic->violation) return false;
    return std::all_of(exhibits.begin(), exhibits.end(), [](const auto& e) { return e.has_value(); });
  }
};

void visit(std::vector<SweepState>& states, const GbtSpace& s) {
  const AxiomProfile profile = axiom_profile(s);
  const Ctx ctx{s, profile, s.size(), s.full(), Mask{1} << s.size()};
  for (auto& st : states) {
    if (st.settled()) continue;
    const auto start = std::chrono::steady_clock::now();
    ++st.checked;
    if (st.logic->violation)
      if (auto why = st.logic->violation(ctx)) {
        st.refuted = true;
        st.violation = ClaimWitness{s, *why};
      }
    for (std::size_t k = 0; k < st.exhibits.size(); ++k)
      if (!st.exhibits[k])
        if (auto why = st.logic->exhibits[k](ctx)) st.exhibits[k] = ClaimWitness{s, *why};
    st.elapsed += std::chrono::steady_clock::now() - start;
  }
}

void sweep(std::vector<SweepState>& states, const ClaimsOptions& options) {
  if (states.empty()) return;
  for (unsigned n = 1; n <= options.max_n; ++n)
    for (const auto& c : canonical_pairs(n, Symmetry::permutations, 1))
      visit(states, space_from_families(n, c.mu1, c.mu2));
  if (options.random_spaces == 0) return;
  const auto families = gt_families(options.random_n);
  std::mt19937_64 rng(options.seed);
  for (std::size_t k = 0; k < options.random_spaces; ++k) {
    const FamilyMask f1 = families[rng() % families.size()];
    const FamilyMask f2 = families[rng() % families.size()];
    visit(states, space_from_families(options.random_n, f1, f2));
  }
}

ClaimReport finish(const ClaimRecord& record, SweepState& st) {
  ClaimReport r{record.id, record.kind, ClaimStatus::verified, std::nullopt, st.checked, st.elapsed, {}};
  if (st.refuted) {
    r.status = ClaimStatus::refuted_with_witness;
    r.witness = std::move(st.violation);
    return r;
  }
  const bool all_found =
      std::all_of(st.exhibits.begin(), st.exhibits.end(), [](const auto& e) { return e.has_value(); });
  if (!all_found) {
    r.status = ClaimStatus::no_witness_in_scope;
    return r;
  }
  if (!st.exhibits.empty()) {
    ClaimWitness w = *st.exhibits.front();
    for (std::size_t k = 1; k < st.exhibits.size(); ++k)
      w.detail += "; also " + st.exhibits[k]->detail + " in " + space_json_compact(st.exhibits[k]->space);
    r.witness = std::move(w);
  }
  return r;
}

ClaimReport run_fixture(const ClaimRecord& record) {
  const auto start = std::chrono::steady_clock::now();
  const FixtureSpace& f = find_fixture(record.id);
  ClaimReport r{record.id, record.kind, ClaimStatus::verified, std::nullopt, 1, {}, evaluate_fixture(f)};
  std::string detail;
  for (const auto& o : r.assertions) {
    if (o.matches_expected) continue;
    const FixtureAssertion& a = f.assertions[o.index];
    if (!detail.empty()) detail += "; ";
    detail += describe_assertion(f.space.ground(), a) + " expected " +
              format_value(f.space.ground(), a.expected) + ", engine " +
              format_value(f.space.ground(), o.engine);
    if (!o.detail.empty()) detail += " (" + o.detail + ")";
  }
  if (!detail.empty()) {
    r.status = ClaimStatus::fixture_mismatch;
    r.witness = ClaimWitness{f.space, detail};
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace

std::string_view claim_kind_name(ClaimKind k) noexcept { return kKindNames[static_cast<std::size_t>(k)]; }

std::string_view claim_status_name(ClaimStatus s) noexcept {
  return kStatusNames[static_cast<std::size_t>(s)];
}

ClaimStatus parse_claim_status(std::string_view name) {
  for (std::size_t k = 0; k < kStatusNames.size(); ++k)
    if (kStatusNames[k] == name) return static_cast<ClaimStatus>(k);
  throw Error(Errc::unknown_name, "unknown claim status '" + std::string(name) + "'");
}

const std::vector<ClaimRecord>& list_claims() {
  static const std::vector<ClaimRecord> registry = build_registry();
  return registry;
}

const ClaimRecord& find_claim(std::string_view id) {
  const auto& all = list_claims();
  auto it = std::find_if(all.begin(), all.end(), [&](const ClaimRecord& r) { return r.id == id; });
  if (it == all.end()) throw Error(Errc::unknown_name, "unknown claim id '" + std::string(id) + "'");
  return *it;
}

std::string explain(std::string_view id) {
  const ClaimRecord& r = find_claim(id);
  std::string out = r.id + "\n  citation: " + r.citation + "\n  kind: " +
                    std::string(claim_kind_name(r.kind)) + "\n";
  if (!r.quote.empty()) out += "  quote: \"" + r.quote + "\"\n";
  if (r.kind != ClaimKind::fixture_assertion) {
    out += "  checks: " + r.statement + "\n";
    return out;
  }
  const FixtureSpace& f = find_fixture(r.id);
  out += "  space: " + f.listing + "\n  assertions:\n";
  for (const auto& a : f.assertions)
    out += "    " + describe_assertion(f.space.ground(), a) + " = " +
           format_value(f.space.ground(), a.expected) + "  \"" + a.quote + "\"\n";
  return out;
}

std::vector<ClaimReport> run_claims(const ClaimsOptions& options) {
  const auto& registry = list_claims();
  for (const auto& id : options.only) find_claim(id);
  auto selected = [&](const ClaimRecord& r) {
    return options.only.empty() ||
           std::find(options.only.begin(), options.only.end(), r.id) != options.only.end();
  };

  std::vector<SweepState> states;
  for (std::size_t k = 0; k < registry.size(); ++k) {
    const ClaimRecord& r = registry[k];
    if (!selected(r) || r.kind == ClaimKind::fixture_assertion || r.kind == ClaimKind::out_of_scope)
      continue;
    const ClaimLogic& logic = claim_logic().at(r.id);
    states.push_back(SweepState{k, &logic, false, std::vector<std::optional<ClaimWitness>>(logic.exhibits.size()),
                                std::nullopt, 0, {}});
  }
  sweep(states, options);

  std::vector<ClaimReport> reports;
  auto state = states.begin();
  for (std::size_t k = 0; k < registry.size(); ++k) {
    const ClaimRecord& r = registry[k];
    if (!selected(r)) continue;
    if (r.kind == ClaimKind::fixture_assertion) {
      reports.push_back(run_fixture(r));
    } else if (r.kind == ClaimKind::out_of_scope) {
      reports.push_back(ClaimReport{r.id, r.kind, ClaimStatus::out_of_scope, std::nullopt, 0, {}, {}});
    } else {
      reports.push_back(finish(r, *state));
      ++state;
    }
  }
  return reports;
}

const std::map<std::string, ClaimStatus, std::less<>>& committed_expectations() {
  static const std::map<std::string, ClaimStatus, std::less<>> expected = [] {
    std::map<std::string, ClaimStatus, std::less<>> out;
    const auto doc = nlohmann::json::parse(detail::kExpectationsJson);
    for (const auto& [id, status] : doc.at("expected").items())
      out.emplace(id, parse_claim_status(status.get<std::string>()));
    return out;
  }();
  return expected;
}

std::vector<ClaimDeviation> compare_with_expectations(const std::vector<ClaimReport>& reports) {
  std::vector<ClaimDeviation> out;
  const auto& expected = committed_expectations();
  for (const auto& r : reports) {
    auto it = expected.find(r.id);
    if (it == expected.end())
      out.push_back(ClaimDeviation{r.id, std::nullopt, r.status});
    else if (it->second != r.status)
      out.push_back(ClaimDeviation{r.id, it->second, r.status});
  }
  return out;
}

}  // namespace gbt
