#pragma once

// Exhaustive isomorph-free enumeration of generalized topologies and GBT
// spaces on small labelled carriers, counterexample mining, and censuses.
//
// A family of subsets of an n-point carrier is a FamilyMask: bit S is set iff
// the subset with bit pattern S belongs to the family. This caps enumeration
// at n = 6 (2^6 = 64 subsets).
//
// Canonical keys are byte strings [n][mu1 bytes][mu2 bytes], each family
// written big-endian in max(1, 2^n / 8) bytes, so byte order equals numeric
// order. The canonical key of a space is the least key over its orbit.

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbt/axioms.hpp"

namespace gbt {

inline constexpr unsigned kMaxEnumerationPoints = 6;

using FamilyMask = std::uint64_t;

enum class Symmetry { permutations, permutations_and_swap };

std::string_view symmetry_name(Symmetry s) noexcept;  // "perm" / "perm+swap"
Symmetry parse_symmetry(std::string_view name);       // throws Errc::unknown_name

FamilyMask family_mask(const GeneralizedTopology& t);
GeneralizedTopology topology_from_family(const GroundSet& ground, FamilyMask family);
GbtSpace space_from_families(unsigned n, FamilyMask mu1, FamilyMask mu2);

// Every union-closed family containing ∅, each once, ascending.
void for_each_gt_family(unsigned n, const std::function<void(FamilyMask)>& visit);
std::vector<FamilyMask> gt_families(unsigned n);
std::vector<GeneralizedTopology> enumerate_gts(unsigned n);

std::string canonical_key(const GbtSpace& s, Symmetry symmetry);
std::string encode_key(unsigned n, FamilyMask mu1, FamilyMask mu2);
// Inverse of encode_key; throws Errc::schema_violation on malformed input.
GbtSpace space_from_key(std::string_view key);
std::string key_to_hex(std::string_view key);
std::string key_from_hex(std::string_view hex);

// Number of group elements (permutations, optionally times swap) fixing s.
std::uint64_t stabilizer_size(const GbtSpace& s, Symmetry symmetry);
std::uint64_t group_order(unsigned n, Symmetry symmetry);

// Optional bound on the number of open sets (including ∅) in each topology.
struct SizeBounds {
  std::size_t min_open_sets = 1;
  std::size_t max_open_sets = std::size_t{1} << kMaxEnumerationPoints;
  bool admits(FamilyMask family) const noexcept;
  bool unconstrained(unsigned n) const noexcept;
  friend bool operator==(const SizeBounds&, const SizeBounds&) = default;
};

struct CanonicalSpace {
  std::string key;
  FamilyMask mu1 = 0;
  FamilyMask mu2 = 0;
  std::uint64_t orbit_size = 0;
};

// One representative per orbit, ascending by key. The order does not depend
// on the worker count.
std::vector<CanonicalSpace> canonical_pairs(unsigned n, Symmetry symmetry, unsigned workers = 0,
                                            const SizeBounds& bounds = {});
std::vector<GbtSpace> enumerate_gbt_pairs(unsigned n, Symmetry symmetry, unsigned workers = 0);

// Space-level properties a mining query can constrain: the nine axioms plus a
// few derived conditions. All are invariant under point permutations and
// under swapping μ1 with μ2.
enum class Property : unsigned char {
  T0, T1_4, T3_8, T5_8, T1_2, T1, R0, SYM, LSYM,
  GT_T0_EITHER,             // (X, μ1) or (X, μ2) is T0
  GT_T1_EITHER,             // (X, μ1) or (X, μ2) is T1
  WEDGE12_ALL,              // every subset is a ∧_{μ1μ2}-set
  PLC_SINGLETONS_WEDGE12,   // every pairwise λ-closed singleton is a ∧_{μ1μ2}-set
};

std::string_view property_name(Property p) noexcept;
Property parse_property(std::string_view name);  // throws Errc::unknown_name
std::vector<Property> all_properties();
bool evaluate_property(Property p, const GbtSpace& s, const AxiomProfile& profile);

struct MiningQuery {
  unsigned n_min = 1;
  unsigned n_max = 3;
  std::vector<Property> antecedents;     // must all hold
  std::optional<Property> consequent;    // must fail
  Symmetry symmetry = Symmetry::permutations_and_swap;
  std::size_t limit = 1;
};

// Throws Errc::out_of_range or Errc::schema_violation for unusable queries.
void validate_query(const MiningQuery& q);
std::string describe_query(const MiningQuery& q);

struct Witness {
  GbtSpace space;
  AxiomProfile profile;
  MiningQuery query;
  std::string canonical_key;
};

struct MiningResult {
  std::vector<Witness> witnesses;
  // The whole n range was swept. With no witnesses this proves none exists.
  bool sweep_complete = false;
  std::uint64_t spaces_checked = 0;

  bool exhausted() const noexcept { return sweep_complete && witnesses.empty(); }
};

struct SearchOptions {
  unsigned workers = 0;  // 0: hardware concurrency
  // Append-only log of {key, space, profile} records. With `resume`, records
  // already in the log are kept and the sweep restarts after the last one.
  std::optional<std::filesystem::path> log;
  bool resume = false;
};

MiningResult mine(const MiningQuery& q, const SearchOptions& options = {});

struct CensusRow {
  unsigned n = 0;
  Symmetry symmetry = Symmetry::permutations;
  SizeBounds bounds;
  bool constrained = false;
  std::uint64_t labeled_gt_count = 0;
  std::uint64_t labeled_pair_count = 0;
  std::uint64_t canonical_pair_count = 0;
  std::uint64_t orbit_size_sum = 0;
  std::array<std::uint64_t, 9> axiom_counts{};  // canonical spaces satisfying each axiom
};

CensusRow census(unsigned n, Symmetry symmetry, const SearchOptions& options = {},
                 const SizeBounds& bounds = {});

// One JSON object per line; byte-identical for identical inputs.
std::string log_record(std::string_view key, const GbtSpace& s, const AxiomProfile& p);

}  // namespace gbt
