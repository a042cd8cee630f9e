#include <algorithm>

#include "gbt/claims.hpp"
#include "gbt/registry_data.hpp"
#include "json.hpp"

namespace gbt {

namespace {

using nlohmann::json;

Subset subset_from(const GroundSet& ground, const json& labels) {
  return ground.parse_subset(labels.get<std::vector<std::string>>());
}

SetFamily family_from(const GroundSet& ground, const json& sets) {
  std::vector<Subset> members;
  for (const auto& s : sets) members.push_back(subset_from(ground, s));
  return SetFamily(ground.size(), std::move(members));
}

FixtureSpace load_fixture(const json& j) {
  GroundSet ground(j.at("points").get<std::vector<std::string>>());
  FixtureSpace f{j.at("id").get<std::string>(),
                 j.at("citation").get<std::string>(),
                 j.at("listing").get<std::string>(),
                 make_space(ground, family_from(ground, j.at("mu1")), family_from(ground, j.at("mu2"))),
                 {}};
  for (const auto& a : j.at("assertions")) {
    FixtureAssertion fa;
    fa.check = a.at("check").get<std::string>();
    if (a.contains("side")) fa.args.side = side_from_index(a["side"].get<int>());
    if (a.contains("set")) fa.args.set = subset_from(ground, a["set"]);
    if (a.contains("other_set")) fa.args.other_set = subset_from(ground, a["other_set"]);
    if (a.contains("expected_set"))
      fa.expected = subset_from(ground, a["expected_set"]);
    else
      fa.expected = a.at("expected").get<bool>();
    fa.quote = a.value("quote", "");
    find_check(fa.check);
    f.assertions.push_back(std::move(fa));
  }
  return f;
}

}  // namespace

const std::vector<FixtureSpace>& fixture_corpus() {
  static const std::vector<FixtureSpace> corpus = [] {
    std::vector<FixtureSpace> out;
    const auto doc = json::parse(detail::kFixturesJson);
    for (const auto& f : doc.at("fixtures"))
      out.push_back(load_fixture(f));
    return out;
  }();
  return corpus;
}

const FixtureSpace& find_fixture(std::string_view id) {
  const auto& corpus = fixture_corpus();
  auto it = std::find_if(corpus.begin(), corpus.end(), [&](const FixtureSpace& f) {
    return f.id == id || f.id == "EX-" + std::string(id) || f.id.substr(3) == id;
  });
  if (it == corpus.end()) throw Error(Errc::unknown_name, "unknown fixture '" + std::string(id) + "'");
  return *it;
}

std::string describe_assertion(const GroundSet& ground, const FixtureAssertion& a) {
  std::string out = a.check;
  if (a.args.side) out += " side=" + std::to_string(index_of(*a.args.side));
  if (a.args.set) out += " " + ground.format(*a.args.set);
  if (a.args.other_set) out += " " + ground.format(*a.args.other_set);
  return out;
}

std::vector<AssertionOutcome> evaluate_fixture(const FixtureSpace& f) {
  std::vector<AssertionOutcome> out;
  const GroundSet& g = f.space.ground();
  for (std::size_t k = 0; k < f.assertions.size(); ++k) {
    const FixtureAssertion& a = f.assertions[k];
    AssertionOutcome o;
    o.index = k;
    o.engine = evaluate_check(f.space, a.check, a.args);
    o.matches_expected = o.engine == a.expected;
    if (a.args.set) {
      const Subset& s = *a.args.set;
      o.detail = "closure_1 = " + g.format(closure(f.space.mu1(), s)) +
                 ", closure_2 = " + g.format(closure(f.space.mu2(), s)) +
                 ", wedge_1 = " + g.format(wedge(f.space.mu1(), s)) +
                 ", wedge_2 = " + g.format(wedge(f.space.mu2(), s));
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace gbt
