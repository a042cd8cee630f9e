#include "gbt/axioms.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace gbt {

namespace {

constexpr std::array<std::string_view, 9> kNames{"T0",  "T1_4", "T3_8", "T5_8", "T1_2",
                                                 "T1",  "R0",   "SYM",  "LSYM"};

Mask bit(unsigned x) { return Mask{1} << x; }

Mask subset_count(const GbtSpace& s) { return Mask{1} << s.size(); }

// Some open of t contains x and misses y.
bool splits(const GeneralizedTopology& t, unsigned x, unsigned y) {
  for (Mask u : t.open_masks())
    if ((u & bit(x)) != 0 && (u & bit(y)) == 0) return true;
  return false;
}

bool t0_labelled(const GbtSpace& s, unsigned x, unsigned y) {
  return splits(s.mu1(), x, y) || splits(s.mu2(), y, x);
}

bool t1_labelled(const GbtSpace& s, unsigned x, unsigned y) {
  return splits(s.mu1(), x, y) && splits(s.mu2(), y, x);
}

bool plc(const GbtSpace& s, Mask a) {
  return a == (s.mu1().closure_bits(a) & s.mu2().closure_bits(a) & s.mu1().wedge_bits(a) &
               s.mu2().wedge_bits(a));
}

bool lambda_closed(const GbtSpace& s, Side i, Mask a) {
  return a == (s.mu(i).closure_bits(a) & s.mu(other(i)).wedge_bits(a));
}

bool g_closed(const GbtSpace& s, Side i, Mask a) {
  return (s.mu(i).closure_bits(a) & ~s.mu(other(i)).wedge_bits(a)) == 0;
}

Subset as_subset(const GbtSpace& s, Mask a) { return Subset(s.size(), a); }

AxiomWitness pair_witness(unsigned x, unsigned y, std::string note) {
  AxiomWitness w;
  w.points = std::make_pair(x, y);
  w.note = std::move(note);
  return w;
}

std::optional<AxiomWitness> t0_violation(const GbtSpace& s) {
  for (unsigned x = 0; x < s.size(); ++x)
    for (unsigned y = x + 1; y < s.size(); ++y)
      if (!t0_labelled(s, x, y) && !t0_labelled(s, y, x))
        return pair_witness(x, y, "no open set of either topology contains exactly one of " +
                                      s.ground().name(x) + ", " + s.ground().name(y));
  return std::nullopt;
}

std::optional<AxiomWitness> t1_violation(const GbtSpace& s) {
  for (unsigned x = 0; x < s.size(); ++x)
    for (unsigned y = x + 1; y < s.size(); ++y)
      if (!t1_labelled(s, x, y) && !t1_labelled(s, y, x))
        return pair_witness(x, y, "no labelling of the pair " + s.ground().name(x) + ", " +
                                      s.ground().name(y) +
                                      " is split by a μ1-open and a μ2-open set");
  return std::nullopt;
}

std::optional<AxiomWitness> r0_violation(const GbtSpace& s) {
  for (Side i : kBothSides) {
    const auto& ti = s.mu(i);
    const auto& tj = s.mu(other(i));
    for (Mask g : ti.open_masks())
      for (unsigned x = 0; x < s.size(); ++x) {
        if ((g & bit(x)) == 0) continue;
        const Mask cl = tj.closure_bits(bit(x));
        if ((cl & ~g) != 0) {
          AxiomWitness w;
          w.side = i;
          w.set = as_subset(s, g);
          w.points = std::make_pair(x, static_cast<unsigned>(std::countr_zero(cl & ~g)));
          w.note = "μ" + std::to_string(index_of(i)) + "-open " + s.ground().format(*w.set) +
                   " contains " + s.ground().name(x) + " but not its μ" +
                   std::to_string(index_of(other(i))) + "-closure " +
                   s.ground().format(as_subset(s, cl));
          return w;
        }
      }
  }
  return std::nullopt;
}

std::optional<AxiomWitness> symmetry_violation(const GbtSpace& s) {
  for (Side i : kBothSides) {
    const auto& ti = s.mu(i);
    const auto& tj = s.mu(other(i));
    for (unsigned x = 0; x < s.size(); ++x)
      for (unsigned y = 0; y < s.size(); ++y) {
        if ((ti.closure_bits(bit(y)) & bit(x)) == 0) continue;
        if ((tj.closure_bits(bit(x)) & bit(y)) != 0) continue;
        AxiomWitness w;
        w.side = i;
        w.points = std::make_pair(x, y);
        w.note = s.ground().name(x) + " lies in the μ" + std::to_string(index_of(i)) +
                 "-closure of " + s.ground().name(y) + " but " + s.ground().name(y) +
                 " is outside the μ" + std::to_string(index_of(other(i))) + "-closure of " +
                 s.ground().name(x);
        return w;
      }
  }
  return std::nullopt;
}

std::optional<AxiomWitness> t_half_violation(const GbtSpace& s) {
  for (Side i : kBothSides)
    for (Mask a = 0; a < subset_count(s); ++a)
      if (g_closed(s, i, a) && !s.mu(i).is_closed_bits(a)) {
        AxiomWitness w;
        w.side = i;
        w.set = as_subset(s, a);
        w.note = s.ground().format(*w.set) + " is g_μ" + std::to_string(index_of(i)) +
                 "-closed with respect to μ" + std::to_string(index_of(other(i))) +
                 " but not μ" + std::to_string(index_of(i)) + "-closed";
        return w;
      }
  return std::nullopt;
}

std::optional<AxiomWitness> plc_violation(const GbtSpace& s) {
  for (Mask a = 0; a < subset_count(s); ++a)
    if (!plc(s, a)) {
      AxiomWitness w;
      w.set = as_subset(s, a);
      w.note = s.ground().format(*w.set) + " is not pairwise λ-closed";
      return w;
    }
  return std::nullopt;
}

std::optional<AxiomWitness> lambda_symmetry_violation(const GbtSpace& s) {
  for (Mask a = 0; a < subset_count(s); ++a)
    if (plc(s, a)) {
      for (Side i : kBothSides)
        if (!lambda_closed(s, i, a)) {
          AxiomWitness w;
          w.set = as_subset(s, a);
          w.side = i;
          w.note = s.ground().format(*w.set) + " is pairwise λ-closed but not λ_μ" +
                   std::to_string(index_of(i)) + "-closed with respect to μ" +
                   std::to_string(index_of(other(i)));
          return w;
        }
    }
  return std::nullopt;
}

void set_verdict(AxiomProfile& p, Axiom a, std::optional<AxiomWitness> violation) {
  const bool holds = !violation.has_value();
  switch (a) {
    case Axiom::T0: p.t0 = holds; break;
    case Axiom::T1_4: p.t_quarter = holds; break;
    case Axiom::T3_8: p.t_3_8 = holds; break;
    case Axiom::T5_8: p.t_5_8 = holds; break;
    case Axiom::T1_2: p.t_half = holds; break;
    case Axiom::T1: p.t1 = holds; break;
    case Axiom::R0: p.r0 = holds; break;
    case Axiom::SYM: p.symmetric = holds; break;
    case Axiom::LSYM: p.lambda_symmetric = holds; break;
  }
  p.witnesses[axiom_index(a)] = std::move(violation);
}

void agree(bool canonical, bool alternative, std::string_view what) {
  if (canonical != alternative)
    throw DeciderDisagreement(std::string(what) + ": canonical decider says " +
                              (canonical ? "true" : "false") + ", alternative says " +
                              (alternative ? "true" : "false"));
}

}  // namespace

std::string_view axiom_name(Axiom a) noexcept { return kNames[axiom_index(a)]; }

std::optional<Axiom> parse_axiom(std::string_view name) {
  std::string norm;
  for (char c : name) {
    if (c == '/') c = '_';
    norm += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  if (norm == "SYMMETRIC") norm = "SYM";
  if (norm == "LAMBDA_SYMMETRIC" || norm == "LAMBDA-SYMMETRIC") norm = "LSYM";
  for (Axiom a : kAllAxioms)
    if (kNames[axiom_index(a)] == norm) return a;
  return std::nullopt;
}

bool AxiomProfile::holds(Axiom a) const noexcept {
  switch (a) {
    case Axiom::T0: return t0;
    case Axiom::T1_4: return t_quarter;
    case Axiom::T3_8: return t_3_8;
    case Axiom::T5_8: return t_5_8;
    case Axiom::T1_2: return t_half;
    case Axiom::T1: return t1;
    case Axiom::R0: return r0;
    case Axiom::SYM: return symmetric;
    case Axiom::LSYM: return lambda_symmetric;
  }
  return false;
}

bool is_pairwise_T0(const GbtSpace& s) { return !t0_violation(s); }
bool is_pairwise_T1(const GbtSpace& s) { return !t1_violation(s); }
bool is_pairwise_R0(const GbtSpace& s) { return !r0_violation(s); }
bool is_pairwise_symmetric(const GbtSpace& s) { return !symmetry_violation(s); }
bool is_pairwise_T_half(const GbtSpace& s) { return t_half_forms::by_singletons(s); }
bool is_pairwise_lambda_symmetric(const GbtSpace& s) { return !lambda_symmetry_violation(s); }
bool is_pairwise_T_quarter(const GbtSpace& s) { return !plc_violation(s); }
bool is_pairwise_T_3_8(const GbtSpace& s) { return !plc_violation(s); }
bool is_pairwise_T_5_8(const GbtSpace& s) { return !plc_violation(s); }

AxiomProfile fast_profile(const GbtSpace& s) {
  AxiomProfile p;
  set_verdict(p, Axiom::T0, t0_violation(s));
  auto plc_fail = plc_violation(s);
  set_verdict(p, Axiom::T1_4, plc_fail);
  set_verdict(p, Axiom::T3_8, plc_fail);
  set_verdict(p, Axiom::T5_8, plc_fail);
  set_verdict(p, Axiom::T1_2, t_half_violation(s));
  set_verdict(p, Axiom::T1, t1_violation(s));
  set_verdict(p, Axiom::R0, r0_violation(s));
  set_verdict(p, Axiom::SYM, symmetry_violation(s));
  set_verdict(p, Axiom::LSYM, lambda_symmetry_violation(s));
  return p;
}

AxiomProfile axiom_profile(const GbtSpace& s) {
  AxiomProfile p = fast_profile(s);

  agree(p.t0, t0_forms::by_separating_set(s), "pairwise T0 (separating-set form)");
  agree(p.t0, t0_forms::by_singletons(s), "pairwise T0 (singleton form)");
  agree(p.t_half, t_half_forms::by_singletons(s), "pairwise T1/2 (singleton form)");
  agree(p.t_quarter, subset_separation::by_definition(s, SubsetClass::finite),
        "pairwise T1/4 (definition)");
  agree(p.t_3_8, subset_separation::by_definition(s, SubsetClass::countable),
        "pairwise T3/8 (definition)");
  agree(p.t_5_8, subset_separation::by_definition(s, SubsetClass::arbitrary),
        "pairwise T5/8 (definition)");
  agree(p.t_quarter, subset_separation::by_pairwise_lambda_closed(s, SubsetClass::finite),
        "pairwise T1/4 (pairwise λ-closed form)");

  const bool chain = (!p.t_half || p.t_5_8) && (!p.t_5_8 || p.t_3_8) &&
                     (!p.t_3_8 || p.t_quarter) && (!p.t_quarter || p.t0);
  if (!chain) throw DeciderDisagreement("implication chain T1/2 ⟹ T5/8 ⟹ T3/8 ⟹ T1/4 ⟹ T0 broken");
  return p;
}

namespace t0_forms {

bool by_definition(const GbtSpace& s) { return !t0_violation(s); }

bool by_separating_set(const GbtSpace& s) {
  for (unsigned x = 0; x < s.size(); ++x)
    for (unsigned y = x + 1; y < s.size(); ++y) {
      const Mask pair = bit(x) | bit(y);
      bool found = false;
      for (Mask a = 0; a < subset_count(s) && !found; ++a) {
        if (std::popcount(a & pair) != 1) continue;
        found = s.mu1().is_open_bits(a) || s.mu2().is_open_bits(a) ||
                s.mu1().is_closed_bits(a) || s.mu2().is_closed_bits(a);
      }
      if (!found) return false;
    }
  return true;
}

bool by_singletons(const GbtSpace& s) {
  for (unsigned x = 0; x < s.size(); ++x)
    if (!plc(s, bit(x))) return false;
  return true;
}

}  // namespace t0_forms

namespace t_half_forms {

bool by_definition(const GbtSpace& s) { return !t_half_violation(s); }

bool by_singletons(const GbtSpace& s) {
  return singletons_open_or_cross_closed(s, Side::first) &&
         singletons_open_or_cross_closed(s, Side::second);
}

bool by_same_index_singletons(const GbtSpace& s) {
  for (Side i : kBothSides)
    for (unsigned x = 0; x < s.size(); ++x)
      if (!s.mu(i).is_open_bits(bit(x)) && !s.mu(i).is_closed_bits(bit(x))) return false;
  return true;
}

}  // namespace t_half_forms

namespace subset_separation {

namespace {

// Every subset of a finite carrier is finite, and therefore countable.
std::vector<Mask> subsets_in(const GbtSpace& s, SubsetClass) {
  std::vector<Mask> out(subset_count(s));
  for (Mask a = 0; a < out.size(); ++a) out[a] = a;
  return out;
}

bool separated_from(const GbtSpace& s, Mask p, unsigned y) {
  for (Side i : kBothSides) {
    const auto& t = s.mu(i);
    for (Mask u : t.open_masks()) {
      if ((p & ~u) == 0 && (u & bit(y)) == 0) return true;  // open A_y
      const Mask f = t.full() & ~u;
      if ((p & ~f) == 0 && (f & bit(y)) == 0) return true;  // closed A_y
    }
  }
  return false;
}

}  // namespace

bool by_definition(const GbtSpace& s, SubsetClass cls) {
  for (Mask p : subsets_in(s, cls))
    for (unsigned y = 0; y < s.size(); ++y)
      if ((p & bit(y)) == 0 && !separated_from(s, p, y)) return false;
  return true;
}

bool by_pairwise_lambda_closed(const GbtSpace& s, SubsetClass cls) {
  for (Mask p : subsets_in(s, cls))
    if (!plc(s, p)) return false;
  return true;
}

}  // namespace subset_separation

bool singletons_open_or_cross_closed(const GbtSpace& s, Side i) {
  for (unsigned x = 0; x < s.size(); ++x)
    if (!s.mu(i).is_open_bits(bit(x)) && !s.mu(other(i)).is_closed_bits(bit(x))) return false;
  return true;
}

bool singletons_closed_in_either(const GbtSpace& s) {
  for (unsigned x = 0; x < s.size(); ++x)
    if (!s.mu1().is_closed_bits(bit(x)) && !s.mu2().is_closed_bits(bit(x))) return false;
  return true;
}

bool singletons_open_or_closed_somewhere(const GbtSpace& s) {
  for (unsigned x = 0; x < s.size(); ++x) {
    const Mask b = bit(x);
    if (!s.mu1().is_open_bits(b) && !s.mu2().is_open_bits(b) && !s.mu1().is_closed_bits(b) &&
        !s.mu2().is_closed_bits(b))
      return false;
  }
  return true;
}

namespace ordered_reading {

bool is_pairwise_T0(const GbtSpace& s) {
  for (unsigned x = 0; x < s.size(); ++x)
    for (unsigned y = 0; y < s.size(); ++y)
      if (x != y && !t0_labelled(s, x, y)) return false;
  return true;
}

bool is_pairwise_T1(const GbtSpace& s) {
  for (unsigned x = 0; x < s.size(); ++x)
    for (unsigned y = 0; y < s.size(); ++y)
      if (x != y && !t1_labelled(s, x, y)) return false;
  return true;
}

}  // namespace ordered_reading

}  // namespace gbt
