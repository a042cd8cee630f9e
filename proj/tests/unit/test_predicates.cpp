#include "bridge.hpp"
#include "doctest.h"
#include "gbt/checks.hpp"
#include "gbt/space_file.hpp"

using namespace gbt;

namespace {

GbtSpace space(std::vector<std::string> points, std::vector<std::vector<std::string>> mu1,
               std::vector<std::vector<std::string>> mu2) {
  GroundSet g(std::move(points));
  auto family = [&](const std::vector<std::vector<std::string>>& sets) {
    std::vector<Subset> members{g.empty_set()};
    for (const auto& s : sets) members.push_back(g.parse_subset(s));
    return SetFamily(g.size(), members);
  };
  return make_space(g, family(mu1), family(mu2));
}

Subset set(const GbtSpace& s, std::vector<std::string> labels) { return s.ground().parse_subset(labels); }

}  // namespace

TEST_CASE("g-closed sets that are not closed") {
  const GbtSpace s = space({"a", "b", "c"}, {{"c"}, {"a", "c"}}, {{"a"}, {"a", "b"}});
  // closure_1{a} = {a,b}; wedge_2{a} = {a}.
  CHECK_FALSE(is_g_closed_wrt(s, Side::first, set(s, {"a"})));
  // closure_1{b} = {b} is μ1-closed.
  CHECK(is_g_closed_wrt(s, Side::first, set(s, {"b"})));
  CHECK(is_g_closed_wrt(s, Side::first, set(s, {"a", "b"})));
  CHECK(is_g_open_wrt(s, Side::first, set(s, {"c"})) ==
        is_g_open_wrt_by_closed_sets(s, Side::first, set(s, {"c"})));
}

TEST_CASE("a set without open supersets is g-closed for any closure") {
  const GbtSpace s = space({"a", "b"}, {{"a"}}, {});
  // μ2 = {∅}: the μ2-wedge of every nonempty set is X.
  for (Mask m = 1; m < 4; ++m) CHECK(is_g_closed_wrt(s, Side::first, Subset(2, m)));
}

TEST_CASE("lambda-closed and pairwise lambda-closed sets") {
  const GbtSpace s = space({"a", "b", "c"}, {{"a"}, {"a", "b"}}, {{"c"}, {"b", "c"}});
  CHECK(is_lambda_closed_wrt(s, Side::first, set(s, {"b"})) ==
        lambda_forms::closed_meets_wedge_set(s, Side::first, 0b010));
  CHECK(is_pairwise_lambda_closed(s, s.ground().full_set()));
  CHECK(is_pairwise_lambda_closed(s, s.ground().empty_set()));
  CHECK(is_pairwise_lambda_open(s, s.ground().empty_set()));
  // {a,c}: both wedges are X and both closures are X.
  CHECK_FALSE(is_wedge12_set(s, set(s, {"a", "c"})));
}

TEST_CASE("weak separation") {
  const GbtSpace s = space({"a", "b", "c"}, {{"a"}, {"b"}, {"a", "b"}}, {});
  CHECK(are_weakly_separated(s.mu1(), set(s, {"a"}), set(s, {"b"})));
  CHECK_FALSE(are_weakly_separated(s.mu1(), set(s, {"a"}), set(s, {"c"})));
  CHECK(are_weakly_separated(s.mu1(), s.ground().empty_set(), s.ground().empty_set()));
}

TEST_CASE("the lambda-open families are closed under unions") {
  for (const auto& s : testing::canonical_spaces(3)) {
    for (Side i : kBothSides) {
      const SetFamily f = lambda_open_family_wrt(s, i);
      for (const auto& a : f)
        for (const auto& b : f) REQUIRE(f.contains(unite(a, b)));
    }
    const SetFamily p = pairwise_lambda_open_family(s);
    for (const auto& a : p)
      for (const auto& b : p) REQUIRE(p.contains(unite(a, b)));
  }
}

TEST_CASE("alternative lambda forms agree on every subset of every canonical space") {
  for (const auto& s : testing::canonical_spaces(3)) {
    for (Mask a = 0; a < (Mask{1} << s.size()); ++a) {
      const Subset sub(s.size(), a);
      for (Side i : kBothSides) {
        const bool v = is_lambda_closed_wrt(s, i, sub);
        REQUIRE(lambda_forms::closed_meets_wedge_set(s, i, a) == v);
        REQUIRE(lambda_forms::closed_meets_own_wedge(s, i, a) == v);
        REQUIRE(lambda_forms::own_closure_meets_wedge_set(s, i, a) == v);
      }
      const bool p = is_pairwise_lambda_closed(s, sub);
      REQUIRE(pairwise_forms::closed_meets_wedge_sets(s, a) == p);
      REQUIRE(pairwise_forms::closed_meets_own_wedges(s, a) == p);
      REQUIRE(pairwise_forms::own_closures_meet_wedge_sets(s, a) == p);
    }
  }
}

TEST_CASE("every subset check matches the oracle on every canonical space with n <= 3") {
  for (const auto& s : testing::canonical_spaces(3)) {
    const auto o = testing::to_oracle(s);
    const unsigned n = s.size();
    for (const auto& info : check_catalog()) {
      if (info.arity == CheckArity::space) continue;
      for (Side i : kBothSides) {
        if (!info.needs_side && i == Side::second) continue;
        for (Mask a = 0; a < (Mask{1} << n); ++a) {
          const Subset sa(n, a);
          if (info.arity == CheckArity::subset) {
            CheckArgs args{i, sa, std::nullopt};
            const auto engine = testing::to_oracle(evaluate_check(s, info.name, args));
            const auto expect = oracle::evaluate(o, std::string(info.name), static_cast<int>(index_of(i)),
                                                 testing::to_oracle(sa), std::nullopt);
            INFO(info.name, " side ", index_of(i), " set ", s.ground().format(sa), " in ",
                 space_json_compact(s));
            REQUIRE(engine == expect);
          } else {
            for (Mask b = 0; b < (Mask{1} << n); ++b) {
              const Subset sb(n, b);
              const auto engine = testing::to_oracle(evaluate_check(s, info.name, CheckArgs{i, sa, sb}));
              const auto expect = oracle::evaluate(o, std::string(info.name), static_cast<int>(index_of(i)),
                                                   testing::to_oracle(sa), testing::to_oracle(sb));
              REQUIRE(engine == expect);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("swapping the topologies swaps the one-sided predicates") {
  for (const auto& s : testing::canonical_spaces(3)) {
    const GbtSpace t = s.swapped();
    for (Mask a = 0; a < (Mask{1} << s.size()); ++a) {
      const Subset sub(s.size(), a);
      REQUIRE(is_g_closed_wrt(s, Side::first, sub) == is_g_closed_wrt(t, Side::second, sub));
      REQUIRE(is_lambda_closed_wrt(s, Side::second, sub) == is_lambda_closed_wrt(t, Side::first, sub));
      REQUIRE(is_pairwise_lambda_closed(s, sub) == is_pairwise_lambda_closed(t, sub));
      REQUIRE(is_wedge12_set(s, sub) == is_wedge12_set(t, sub));
    }
  }
}

TEST_CASE("check arguments are validated") {
  const GbtSpace s = space({"a", "b"}, {{"a"}}, {{"b"}});
  CHECK_THROWS_AS(evaluate_check(s, "closure", CheckArgs{}), Error);
  CHECK_THROWS_AS(evaluate_check(s, "closure", CheckArgs{Side::first, std::nullopt, std::nullopt}), Error);
  CHECK_THROWS_AS(find_check("no-such-check"), Error);
  CHECK(find_check("T1_2").name == "T1_2");
  CHECK_THROWS_AS(side_from_index(3), Error);
}
