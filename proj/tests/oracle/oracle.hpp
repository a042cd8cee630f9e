#pragma once

// Test-only reference implementation. Every notion is evaluated straight from
// its definition by exhaustive scans over std::set subsets, sharing no code
// with the bitmask engine. Slow on purpose; n <= 4 is the intended range.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace oracle {

using Set = std::set<int>;
using Family = std::vector<Set>;

struct Space {
  int n = 0;
  Family mu1;  // open sets, ∅ included
  Family mu2;
  const Family& mu(int i) const { return i == 1 ? mu1 : mu2; }
};

Set universe(int n);
Family all_subsets(int n);
Set complement(int n, const Set& a);
bool subset_of(const Set& a, const Set& b);
Set meet(const Set& a, const Set& b);
Set join(const Set& a, const Set& b);

bool is_gt(const Family& f);
bool is_open(const Family& mu, const Set& a);
bool is_closed(int n, const Family& mu, const Set& a);
Set closure(int n, const Family& mu, const Set& a);
Set interior(const Family& mu, const Set& a);
Set wedge(int n, const Family& mu, const Set& a);
Set vee(int n, const Family& mu, const Set& a);
Set derived(int n, const Family& mu, const Set& a);

bool g_closed(const Space& s, int i, const Set& a);
bool g_open(const Space& s, int i, const Set& a);
bool lambda_closed(const Space& s, int i, const Set& a);
bool lambda_open(const Space& s, int i, const Set& a);
bool pairwise_lambda_closed(const Space& s, const Set& a);
bool pairwise_lambda_open(const Space& s, const Set& a);
bool wedge12_set(const Space& s, const Set& a);
bool gap_free(const Space& s, int i, const Set& a);
bool weakly_separated(const Family& mu, const Set& a, const Set& b);

bool gt_T0(int n, const Family& mu);
bool gt_T1(int n, const Family& mu);
bool is_topology(int n, const Family& mu);

struct Profile {
  bool t0, t_quarter, t_3_8, t_5_8, t_half, t1, r0, symmetric, lambda_symmetric;
  bool holds(const std::string& axiom) const;
};
Profile profile(const Space& s);

using Value = std::variant<bool, Set>;
// Same names and argument conventions as the engine's check catalog.
Value evaluate(const Space& s, const std::string& check, int side, const std::optional<Set>& a,
               const std::optional<Set>& b);

// Counting by brute force over every family of nonempty subsets.
std::uint64_t naive_gt_count(int n);
std::vector<Family> naive_gts(int n);

struct OrbitCensus {
  std::uint64_t labeled_pairs = 0;
  std::uint64_t canonical_pairs = 0;
  // orbit representative (least encoding) -> orbit size
  std::map<std::vector<std::vector<int>>, std::uint64_t> orbits;
};
// Groups every labelled pair of GTs into orbits under point permutations,
// optionally combined with swapping the two topologies.
OrbitCensus naive_orbits(int n, bool with_swap);

}  // namespace oracle
