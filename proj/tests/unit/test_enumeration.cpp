#include <filesystem>
#include <fstream>
#include <sstream>

#include "bridge.hpp"
#include "doctest.h"

using namespace gbt;

namespace {

std::filesystem::path temp_log(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("gbt_test_" + name + ".jsonl");
  std::filesystem::remove(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> keys(const MiningResult& r) {
  std::vector<std::string> out;
  for (const auto& w : r.witnesses) out.push_back(w.canonical_key);
  return out;
}

}  // namespace

TEST_CASE("GT counts match the naive brute-force count") {
  const std::uint64_t expected[] = {0, 2, 7, 61, 2480};
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(gt_families(n).size() == expected[n]);
    CHECK(oracle::naive_gt_count(static_cast<int>(n)) == expected[n]);
  }
}

TEST_CASE("enumerated families are union closed, distinct and ascending") {
  const auto fams = gt_families(3);
  CHECK(std::is_sorted(fams.begin(), fams.end()));
  CHECK(std::adjacent_find(fams.begin(), fams.end()) == fams.end());
  for (auto f : fams) CHECK(oracle::is_gt(testing::to_oracle(topology_from_family(GroundSet::standard(3), f))));
}

TEST_CASE("canonical pairs agree with the naive orbit oracle") {
  for (unsigned n = 1; n <= 3; ++n)
    for (Symmetry sym : {Symmetry::permutations, Symmetry::permutations_and_swap}) {
      const auto pairs = canonical_pairs(n, sym, 1);
      const auto naive = oracle::naive_orbits(static_cast<int>(n), sym == Symmetry::permutations_and_swap);
      CHECK(pairs.size() == naive.canonical_pairs);
      std::multiset<std::uint64_t> engine_sizes, oracle_sizes;
      std::uint64_t total = 0;
      for (const auto& c : pairs) {
        engine_sizes.insert(c.orbit_size);
        total += c.orbit_size;
        const GbtSpace s = space_from_families(n, c.mu1, c.mu2);
        CHECK(c.orbit_size * stabilizer_size(s, sym) == group_order(n, sym));
        CHECK(canonical_key(s, sym) == c.key);
      }
      for (const auto& [code, size] : naive.orbits) oracle_sizes.insert(size);
      CHECK(engine_sizes == oracle_sizes);
      CHECK(total == naive.labeled_pairs);
      CHECK(std::is_sorted(pairs.begin(), pairs.end(),
                           [](const CanonicalSpace& a, const CanonicalSpace& b) { return a.key < b.key; }));
    }
}

TEST_CASE("labelled pair counts for one and two points") {
  CHECK(census(1, Symmetry::permutations, SearchOptions{1}).labeled_pair_count == 4);
  CHECK(census(2, Symmetry::permutations, SearchOptions{1}).labeled_pair_count == 49);
  const CensusRow row = census(3, Symmetry::permutations, SearchOptions{1});
  CHECK(row.labeled_gt_count == 61);
  CHECK(row.orbit_size_sum == row.labeled_pair_count);
}

TEST_CASE("keys encode, decode and hex round trip") {
  for (const auto& c : canonical_pairs(3, Symmetry::permutations, 1)) {
    const GbtSpace s = space_from_key(c.key);
    CHECK(family_mask(s.mu1()) == c.mu1);
    CHECK(family_mask(s.mu2()) == c.mu2);
    CHECK(encode_key(3, c.mu1, c.mu2) == c.key);
    CHECK(key_from_hex(key_to_hex(c.key)) == c.key);
  }
  CHECK(encode_key(4, 1, 1).size() == 1 + 2 + 2);
  CHECK_THROWS_AS(space_from_key("\x03\x01"), Error);
  CHECK_THROWS_AS(key_from_hex("zz"), Error);
}

TEST_CASE("canonical keys are invariant under relabelling") {
  for (const GbtSpace& s : enumerate_gbt_pairs(3, Symmetry::permutations, 1)) {
    const std::string k = canonical_key(s, Symmetry::permutations);
    CHECK(canonical_key(space_from_key(k), Symmetry::permutations) == k);
    CHECK(canonical_key(s.swapped(), Symmetry::permutations_and_swap) ==
          canonical_key(s, Symmetry::permutations_and_swap));
  }
}

TEST_CASE("size bounds restrict the enumerated families") {
  const SizeBounds b{2, 3};
  const auto pairs = canonical_pairs(3, Symmetry::permutations, 1, b);
  for (const auto& c : pairs) {
    CHECK(b.admits(c.mu1));
    CHECK(b.admits(c.mu2));
  }
  CHECK(pairs.size() < canonical_pairs(3, Symmetry::permutations, 1).size());
  CHECK(SizeBounds{}.unconstrained(3));
}

TEST_CASE("mining finds re-verifiable witnesses") {
  MiningQuery q;
  q.antecedents = {Property::T0};
  q.consequent = Property::T1_4;
  q.n_max = 3;
  const MiningResult r = mine(q, SearchOptions{1});
  REQUIRE(r.witnesses.size() == 1);
  const Witness& w = r.witnesses.front();
  const AxiomProfile p = axiom_profile(w.space);
  CHECK(p.t0);
  CHECK_FALSE(p.t_quarter);
  CHECK(canonical_key(w.space, q.symmetry) == w.canonical_key);
}

TEST_CASE("mining reports an exhausted sweep") {
  MiningQuery q;
  q.antecedents = {Property::T1_4};
  q.consequent = Property::T3_8;
  q.n_max = 3;
  const MiningResult r = mine(q, SearchOptions{1});
  CHECK(r.exhausted());
  CHECK(r.spaces_checked > 0);
}

TEST_CASE("mining results do not depend on the worker count") {
  MiningQuery q;
  q.antecedents = {Property::T1};
  q.consequent = Property::T1_2;
  q.n_max = 3;
  q.limit = 50;
  const MiningResult one = mine(q, SearchOptions{1});
  const MiningResult four = mine(q, SearchOptions{4});
  CHECK(keys(one) == keys(four));
  CHECK(one.spaces_checked == four.spaces_checked);
  CHECK(one.sweep_complete == four.sweep_complete);
}

TEST_CASE("query validation") {
  MiningQuery q;
  CHECK_THROWS_AS(validate_query(q), Error);
  q.antecedents = {Property::T0};
  q.limit = 0;
  CHECK_THROWS_AS(validate_query(q), Error);
  q.limit = 1;
  q.n_max = 7;
  CHECK_THROWS_AS(validate_query(q), Error);
  CHECK(parse_property("wedge12_all") == Property::WEDGE12_ALL);
  CHECK_THROWS_AS(parse_property("T9"), Error);
}

TEST_CASE("census log resumes after an interruption with identical results") {
  const auto path = temp_log("census");
  SearchOptions full{1, path, false};
  const CensusRow whole = census(3, Symmetry::permutations_and_swap, full);
  const std::string text = slurp(path);
  REQUIRE(!text.empty());

  // Keep a third of the records and a torn fragment of the next one.
  std::size_t cut = 0;
  for (int k = 0; k < 100; ++k) cut = text.find('\n', cut) + 1;
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text.substr(0, cut) << text.substr(cut, 17);
  }
  const CensusRow resumed = census(3, Symmetry::permutations_and_swap, SearchOptions{2, path, true});
  CHECK(resumed.canonical_pair_count == whole.canonical_pair_count);
  CHECK(resumed.orbit_size_sum == whole.orbit_size_sum);
  CHECK(resumed.axiom_counts == whole.axiom_counts);
  CHECK(slurp(path) == text);
  std::filesystem::remove(path);
}

TEST_CASE("mining log resumes and keeps earlier witnesses") {
  const auto path = temp_log("mine");
  MiningQuery q;
  q.antecedents = {Property::T1};
  q.consequent = Property::R0;
  q.n_max = 3;
  q.limit = 2;
  const MiningResult first = mine(q, SearchOptions{1, path, false});
  REQUIRE(first.witnesses.size() == 2);
  q.limit = 4;
  const MiningResult more = mine(q, SearchOptions{1, path, true});
  const MiningResult direct = mine(q, SearchOptions{1});
  CHECK(keys(more) == keys(direct));
  std::filesystem::remove(path);
}

TEST_CASE("a corrupt log is rejected") {
  const auto path = temp_log("corrupt");
  {
    std::ofstream out(path);
    out << "not json\n";
  }
  CHECK_THROWS_AS(census(2, Symmetry::permutations, SearchOptions{1, path, true}), Error);
  std::filesystem::remove(path);
}

TEST_CASE("log records are byte-stable") {
  const auto c = canonical_pairs(2, Symmetry::permutations, 1).back();
  const GbtSpace s = space_from_families(2, c.mu1, c.mu2);
  const std::string a = log_record(c.key, s, axiom_profile(s));
  CHECK(a == log_record(c.key, s, axiom_profile(s)));
  CHECK(a.find("\"key\":\"" + key_to_hex(c.key) + "\"") != std::string::npos);
}
