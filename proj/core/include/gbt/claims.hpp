#pragma once

// Registry of claims about GBT spaces, the fixture corpus of worked example
// spaces, and a runner that checks every claim against the engine.
//
// Universal claims are swept over every canonical space up to a bound and over
// a fixed pseudo-random sample of larger spaces. Existence claims succeed when
// the sweep finds a space showing the phenomenon. Fixture claims compare the
// engine's verdict with the transcribed expected verdict.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbt/checks.hpp"

namespace gbt {

enum class ClaimKind : unsigned char {
  universal_implication,
  equivalence,
  conditional,
  existence,
  definition,
  fixture_assertion,
  out_of_scope,
};

enum class ClaimStatus : unsigned char {
  verified,
  refuted_with_witness,
  fixture_mismatch,
  no_witness_in_scope,
  out_of_scope,
};

std::string_view claim_kind_name(ClaimKind k) noexcept;
std::string_view claim_status_name(ClaimStatus s) noexcept;
ClaimStatus parse_claim_status(std::string_view name);  // throws Errc::unknown_name

struct ClaimRecord {
  std::string id;
  std::string citation;
  std::string quote;
  std::string statement;
  ClaimKind kind = ClaimKind::universal_implication;
};

// Registry order: claims in source order, then one record per fixture.
const std::vector<ClaimRecord>& list_claims();
const ClaimRecord& find_claim(std::string_view id);  // throws Errc::unknown_name
std::string explain(std::string_view id);

struct FixtureAssertion {
  std::string check;
  CheckArgs args;
  CheckValue expected;
  std::string quote;
};

struct FixtureSpace {
  std::string id;
  std::string citation;
  std::string listing;  // set listing exactly as transcribed
  GbtSpace space;
  std::vector<FixtureAssertion> assertions;
};

const std::vector<FixtureSpace>& fixture_corpus();
const FixtureSpace& find_fixture(std::string_view id);  // throws Errc::unknown_name

// "g-closed-wrt side=1 {a,d}".
std::string describe_assertion(const GroundSet& ground, const FixtureAssertion& a);

struct AssertionOutcome {
  std::size_t index = 0;
  CheckValue engine;
  bool matches_expected = false;
  // Closure and wedge values of the set argument, when there is one.
  std::string detail;
};

std::vector<AssertionOutcome> evaluate_fixture(const FixtureSpace& f);

struct ClaimWitness {
  GbtSpace space;
  std::string detail;
};

struct ClaimReport {
  std::string id;
  ClaimKind kind = ClaimKind::universal_implication;
  ClaimStatus status = ClaimStatus::verified;
  std::optional<ClaimWitness> witness;
  std::uint64_t spaces_checked = 0;
  std::chrono::nanoseconds elapsed{0};
  std::vector<AssertionOutcome> assertions;  // fixture claims only
};

struct ClaimsOptions {
  unsigned max_n = 3;                  // exhaustive sweep over canonical spaces, n = 1..max_n
  std::size_t random_spaces = 1000;    // extra pseudo-random spaces on random_n points
  unsigned random_n = 4;
  std::uint64_t seed = 0x6762742d73656564ULL;
  std::vector<std::string> only;       // claim ids to run; empty runs all
};

// Reports in registry order. Throws DeciderDisagreement if the axiom deciders
// disagree on any swept space.
std::vector<ClaimReport> run_claims(const ClaimsOptions& options = {});

// Expected status per claim id, as committed with the sources.
const std::map<std::string, ClaimStatus, std::less<>>& committed_expectations();

struct ClaimDeviation {
  std::string id;
  std::optional<ClaimStatus> expected;
  ClaimStatus actual;
};

std::vector<ClaimDeviation> compare_with_expectations(const std::vector<ClaimReport>& reports);

}  // namespace gbt
