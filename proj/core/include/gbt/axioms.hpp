#pragma once

// Pairwise separation axioms of a generalized bitopological space.
//
// Point-pair axioms (T0, T1) use the unordered reading: a pair {x, y} passes
// if the condition holds for at least one of its two labellings. The ordered
// reading is kept in `ordered_reading` for comparison.
//
// On a finite carrier every subset is finite and countable, so T1/4, T3/8 and
// T5/8 coincide; each still has its own definitional decider.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gbt/predicates.hpp"

namespace gbt {

enum class Axiom : unsigned char { T0, T1_4, T3_8, T5_8, T1_2, T1, R0, SYM, LSYM };

inline constexpr std::array<Axiom, 9> kAllAxioms{Axiom::T0,   Axiom::T1_4, Axiom::T3_8,
                                                 Axiom::T5_8, Axiom::T1_2, Axiom::T1,
                                                 Axiom::R0,   Axiom::SYM,  Axiom::LSYM};

constexpr std::size_t axiom_index(Axiom a) noexcept { return static_cast<std::size_t>(a); }

// "T0", "T1_4", "T3_8", "T5_8", "T1_2", "T1", "R0", "SYM", "LSYM".
std::string_view axiom_name(Axiom a) noexcept;
// Also accepts "T1/4"-style names and lower case. nullopt if unknown.
std::optional<Axiom> parse_axiom(std::string_view name);

// Why an axiom failed. Which fields are set depends on the axiom.
struct AxiomWitness {
  std::optional<Subset> set;
  std::optional<std::pair<unsigned, unsigned>> points;
  std::optional<Side> side;
  std::string note;

  friend bool operator==(const AxiomWitness&, const AxiomWitness&) = default;
};

struct AxiomProfile {
  bool t0 = false;
  bool t_quarter = false;
  bool t_3_8 = false;
  bool t_5_8 = false;
  bool t_half = false;
  bool t1 = false;
  bool r0 = false;
  bool symmetric = false;
  bool lambda_symmetric = false;
  // Set exactly for the axioms that fail.
  std::array<std::optional<AxiomWitness>, 9> witnesses;

  bool holds(Axiom a) const noexcept;
  const std::optional<AxiomWitness>& witness(Axiom a) const { return witnesses[axiom_index(a)]; }

  friend bool operator==(const AxiomProfile&, const AxiomProfile&) = default;
};

bool is_pairwise_T0(const GbtSpace& s);
bool is_pairwise_T1(const GbtSpace& s);
bool is_pairwise_R0(const GbtSpace& s);
bool is_pairwise_symmetric(const GbtSpace& s);
bool is_pairwise_T_half(const GbtSpace& s);
bool is_pairwise_lambda_symmetric(const GbtSpace& s);
bool is_pairwise_T_quarter(const GbtSpace& s);
bool is_pairwise_T_3_8(const GbtSpace& s);
bool is_pairwise_T_5_8(const GbtSpace& s);

// Every decider, each cross-checked against its alternative algorithms.
// Throws DeciderDisagreement if two algorithms differ or the implication
// chain T1/2 ⟹ T5/8 ⟹ T3/8 ⟹ T1/4 ⟹ T0 is broken.
AxiomProfile axiom_profile(const GbtSpace& s);

// Same verdicts without any cross-checks. For hot loops over many spaces.
AxiomProfile fast_profile(const GbtSpace& s);

// Alternative algorithms, exposed for cross-validation.
namespace t0_forms {
// Some open of μ1 or μ2 contains exactly one point of each pair.
bool by_definition(const GbtSpace& s);
// Each pair is split by a set that is μ_i-open or μ_j-closed for some i, j.
bool by_separating_set(const GbtSpace& s);
// Every singleton is pairwise λ-closed.
bool by_singletons(const GbtSpace& s);
}  // namespace t0_forms

namespace t_half_forms {
// Every g_{μi}-closed set with respect to μj is μi-closed, for both orders.
bool by_definition(const GbtSpace& s);
// Each singleton is (μ1-open or μ2-closed) and (μ2-open or μ1-closed).
bool by_singletons(const GbtSpace& s);
// Each singleton is μ_i-open or μ_i-closed for i = 1 and for i = 2.
bool by_same_index_singletons(const GbtSpace& s);
}  // namespace t_half_forms

// The subsets a T1/4 / T3/8 / T5/8-style condition quantifies over.
enum class SubsetClass { finite, countable, arbitrary };

namespace subset_separation {
// For every P in the class and y ∉ P there is A ⊇ P with y ∉ A that is
// μ1-open, μ2-open, μ1-closed or μ2-closed.
bool by_definition(const GbtSpace& s, SubsetClass cls);
// Every P in the class is pairwise λ-closed.
bool by_pairwise_lambda_closed(const GbtSpace& s, SubsetClass cls);
}  // namespace subset_separation

// Set-valued consequences used by several claims.
// Each singleton is μ_i-open or μ_j-closed (i ≠ j, one direction).
bool singletons_open_or_cross_closed(const GbtSpace& s, Side i);
// Each singleton is μ1-closed or μ2-closed.
bool singletons_closed_in_either(const GbtSpace& s);
// Each singleton is μ1-open, μ2-open, μ1-closed or μ2-closed.
bool singletons_open_or_closed_somewhere(const GbtSpace& s);

namespace ordered_reading {
// Definitions 2 and 3 applied to every ordered pair (x, y).
bool is_pairwise_T0(const GbtSpace& s);
bool is_pairwise_T1(const GbtSpace& s);
}  // namespace ordered_reading

}  // namespace gbt
