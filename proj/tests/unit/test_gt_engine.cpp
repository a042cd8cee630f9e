#include "bridge.hpp"
#include "doctest.h"
#include "gbt/gt_engine.hpp"

using namespace gbt;

namespace {

GeneralizedTopology gt(const GroundSet& g, std::initializer_list<std::initializer_list<std::string_view>> sets) {
  std::vector<Subset> members;
  for (auto s : sets) members.push_back(g.parse_subset(s));
  return validate_gt(g, SetFamily(g.size(), members));
}

}  // namespace

TEST_CASE("validate_gt requires the empty set") {
  const GroundSet g = GroundSet::standard(2);
  try {
    validate_gt(g, SetFamily::from_masks(2, {0b01}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_empty_set);
  }
}

TEST_CASE("validate_gt names the pair whose union escapes") {
  const GroundSet g = GroundSet::standard(2);
  try {
    validate_gt(g, SetFamily::from_masks(2, {0, 0b01, 0b10}));
    FAIL("expected an error");
  } catch (const UnionEscape& e) {
    CHECK(e.first().bits() == 0b01);
    CHECK(e.second().bits() == 0b10);
  }
}

TEST_CASE("complete_unions adds exactly the missing unions") {
  const SetFamily done = complete_unions(SetFamily::from_masks(3, {0b001, 0b010, 0b100}));
  CHECK(done.size() == 8);
  CHECK(complete_unions(SetFamily::from_masks(2, {})).size() == 1);
}

TEST_CASE("operators on a generalized topology without X") {
  // μ = {∅, {c}, {a,c}} on {a,b,c}: b has no open neighbourhood.
  const GroundSet g = GroundSet::standard(3);
  const auto mu = gt(g, {{}, {"c"}, {"a", "c"}});
  CHECK(g.format(closure(mu, g.parse_subset({"a"}))) == "{a,b}");
  CHECK(g.format(closure(mu, g.parse_subset({"c"}))) == "{a,b,c}");
  CHECK(g.format(interior(mu, g.parse_subset({"a", "b"}))) == "{}");
  CHECK(g.format(wedge(mu, g.parse_subset({"a"}))) == "{a,c}");
  CHECK(g.format(wedge(mu, g.parse_subset({"b"}))) == "{a,b,c}");
  CHECK(g.format(vee(mu, g.parse_subset({"a", "b"}))) == "{a,b}");
  CHECK(g.format(vee(mu, g.parse_subset({"a"}))) == "{}");
  // b is a limit point of every set vacuously.
  CHECK(g.format(derived_set(mu, g.parse_subset({"c"}))) == "{a,b}");
  CHECK(is_closed(mu, g.full_set()));
  CHECK_FALSE(is_open(mu, g.full_set()));
  CHECK_FALSE(is_topology(mu));
  CHECK(is_gt_T0(mu));
  CHECK_FALSE(is_gt_T1(mu));
}

TEST_CASE("every operator matches the oracle on every GT with n <= 4") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_gts(n)) {
      const auto o = testing::to_oracle(t);
      const int on = static_cast<int>(n);
      REQUIRE(oracle::is_gt(o));
      CHECK(is_gt_T0(t) == oracle::gt_T0(on, o));
      CHECK(is_gt_T1(t) == oracle::gt_T1(on, o));
      CHECK(is_topology(t) == oracle::is_topology(on, o));
      for (Mask bits = 0; bits < (Mask{1} << n); ++bits) {
        const Subset a(n, bits);
        const auto oa = testing::to_oracle(a);
        REQUIRE(testing::to_oracle(closure(t, a)) == oracle::closure(on, o, oa));
        REQUIRE(testing::to_oracle(interior(t, a)) == oracle::interior(o, oa));
        REQUIRE(testing::to_oracle(wedge(t, a)) == oracle::wedge(on, o, oa));
        REQUIRE(testing::to_oracle(vee(t, a)) == oracle::vee(on, o, oa));
        REQUIRE(testing::to_oracle(derived_set(t, a)) == oracle::derived(on, o, oa));
        REQUIRE(is_open(t, a) == oracle::is_open(o, oa));
        REQUIRE(is_closed(t, a) == oracle::is_closed(on, o, oa));
      }
    }
  }
}

TEST_CASE("closure, interior, wedge and vee obey their algebraic laws") {
  for (unsigned n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_gts(n)) {
      const Mask full = full_mask(n);
      for (Mask a = 0; a <= full; ++a) {
        const Mask c = t.closure_bits(a), w = t.wedge_bits(a), v = t.vee_bits(a), i = t.interior_bits(a);
        REQUIRE((a & ~c) == 0);
        REQUIRE(t.closure_bits(c) == c);
        REQUIRE(t.is_closed_bits(c));
        REQUIRE((i & ~a) == 0);
        REQUIRE(t.is_open_bits(i));
        REQUIRE(i == (full & ~t.closure_bits(full & ~a)));
        REQUIRE(v == (full & ~t.wedge_bits(full & ~a)));
        REQUIRE(t.wedge_bits(w) == w);
        REQUIRE(t.vee_bits(v) == v);
        for (Mask b = a;; b = (b + 1) | a) {
          REQUIRE((c & ~t.closure_bits(b)) == 0);
          REQUIRE((w & ~t.wedge_bits(b)) == 0);
          REQUIRE((v & ~t.vee_bits(b)) == 0);
          if (b == full) break;
        }
      }
    }
}

TEST_CASE("the vee family is closed under unions and contains the empty set") {
  for (const auto& t : enumerate_gts(3)) {
    const SetFamily f = vee_family(t);
    CHECK(f.contains(Subset::empty(3)));
    for (const auto& a : f)
      for (const auto& b : f) CHECK(f.contains(unite(a, b)));
  }
}
