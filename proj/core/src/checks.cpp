#include "gbt/checks.hpp"

#include <algorithm>

namespace gbt {

namespace {

using A = CheckArity;

const std::vector<CheckInfo> kCatalog{
    {"open", A::subset, true, false, "A is μ_i-open"},
    {"closed", A::subset, true, false, "A is μ_i-closed"},
    {"g-closed-wrt", A::subset, true, false, "closure_i(A) ⊆ wedge_j(A)"},
    {"g-open-wrt", A::subset, true, false, "complement of A is g-closed"},
    {"lambda-closed-wrt", A::subset, true, false, "A = closure_i(A) ∩ wedge_j(A)"},
    {"lambda-open-wrt", A::subset, true, false, "complement of A is λ-closed"},
    {"pairwise-lambda-closed", A::subset, false, false, "A = both closures ∩ both wedges"},
    {"pairwise-lambda-open", A::subset, false, false, "complement of A is pairwise λ-closed"},
    {"wedge-set", A::subset, true, false, "A = wedge_i(A)"},
    {"vee-set", A::subset, true, false, "A = vee_i(A)"},
    {"wedge12-set", A::subset, false, false, "A = wedge_1(A) ∩ wedge_2(A)"},
    {"gap-free", A::subset, true, false, "closure_i(A) ∖ A holds no nonempty μ_j-closed set"},
    {"closure", A::subset, true, true, "μ_i-closure"},
    {"interior", A::subset, true, true, "μ_i-interior"},
    {"wedge", A::subset, true, true, "intersection of μ_i-opens containing A"},
    {"vee", A::subset, true, true, "union of μ_i-closed sets inside A"},
    {"derived", A::subset, true, true, "μ_i-limit points of A"},
    {"weakly-separated", A::subset_pair, true, false, "A and B are μ_i-weakly separated"},
    {"T0", A::space, false, false, "pairwise T0"},
    {"T1_4", A::space, false, false, "pairwise T1/4"},
    {"T3_8", A::space, false, false, "pairwise T3/8"},
    {"T5_8", A::space, false, false, "pairwise T5/8"},
    {"T1_2", A::space, false, false, "pairwise T1/2"},
    {"T1", A::space, false, false, "pairwise T1"},
    {"R0", A::space, false, false, "pairwise R0"},
    {"SYM", A::space, false, false, "pairwise symmetric"},
    {"LSYM", A::space, false, false, "pairwise λ-symmetric"},
    {"gt-T0", A::space, true, false, "(X, μ_i) is T0"},
    {"gt-T1", A::space, true, false, "(X, μ_i) is T1"},
    {"topology", A::space, true, false, "μ_i contains X and is closed under intersection"},
    {"bitopological", A::space, false, false, "both μ1 and μ2 are topologies"},
    {"singletons-closed-in-either", A::space, false, false,
     "each singleton is μ1-closed or μ2-closed"},
    {"singletons-open-or-cross-closed", A::space, true, false,
     "each singleton is μ_i-open or μ_j-closed"},
    {"singletons-open-or-closed-somewhere", A::space, false, false,
     "each singleton is open or closed in some topology"},
    {"singletons-same-index", A::space, false, false,
     "for i = 1 and i = 2 each singleton is μ_i-open or μ_i-closed"},
};

Side need_side(const CheckInfo& info, const CheckArgs& args) {
  if (!args.side) throw Error(Errc::schema_violation, std::string(info.name) + " needs a side");
  return *args.side;
}

const Subset& need_set(const CheckInfo& info, const std::optional<Subset>& set) {
  if (!set) throw Error(Errc::schema_violation, std::string(info.name) + " needs a set");
  return *set;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() { return kCatalog; }

const CheckInfo& find_check(std::string_view name) {
  auto it = std::find_if(kCatalog.begin(), kCatalog.end(),
                         [&](const CheckInfo& c) { return c.name == name; });
  if (it == kCatalog.end()) {
    if (auto axiom = parse_axiom(name)) return find_check(axiom_name(*axiom));
    throw Error(Errc::unknown_name, "unknown check '" + std::string(name) + "'");
  }
  return *it;
}

CheckValue evaluate_check(const GbtSpace& s, std::string_view name, const CheckArgs& args) {
  const CheckInfo& info = find_check(name);
  const std::string_view n = info.name;

  if (auto axiom = parse_axiom(n); axiom && info.arity == A::space && !info.needs_side) {
    switch (*axiom) {
      case Axiom::T0: return is_pairwise_T0(s);
      case Axiom::T1_4: return is_pairwise_T_quarter(s);
      case Axiom::T3_8: return is_pairwise_T_3_8(s);
      case Axiom::T5_8: return is_pairwise_T_5_8(s);
      case Axiom::T1_2: return is_pairwise_T_half(s);
      case Axiom::T1: return is_pairwise_T1(s);
      case Axiom::R0: return is_pairwise_R0(s);
      case Axiom::SYM: return is_pairwise_symmetric(s);
      case Axiom::LSYM: return is_pairwise_lambda_symmetric(s);
    }
  }
  if (n == "bitopological") return is_topology(s.mu1()) && is_topology(s.mu2());
  if (n == "singletons-closed-in-either") return singletons_closed_in_either(s);
  if (n == "singletons-open-or-closed-somewhere") return singletons_open_or_closed_somewhere(s);
  if (n == "singletons-same-index") return t_half_forms::by_same_index_singletons(s);
  if (n == "pairwise-lambda-closed") return is_pairwise_lambda_closed(s, need_set(info, args.set));
  if (n == "pairwise-lambda-open") return is_pairwise_lambda_open(s, need_set(info, args.set));
  if (n == "wedge12-set") return is_wedge12_set(s, need_set(info, args.set));

  const Side i = need_side(info, args);
  const GeneralizedTopology& t = s.mu(i);
  if (n == "gt-T0") return is_gt_T0(t);
  if (n == "gt-T1") return is_gt_T1(t);
  if (n == "topology") return is_topology(t);
  if (n == "singletons-open-or-cross-closed") return singletons_open_or_cross_closed(s, i);

  const Subset& a = need_set(info, args.set);
  if (n == "open") return is_open(t, a);
  if (n == "closed") return is_closed(t, a);
  if (n == "g-closed-wrt") return is_g_closed_wrt(s, i, a);
  if (n == "g-open-wrt") return is_g_open_wrt(s, i, a);
  if (n == "lambda-closed-wrt") return is_lambda_closed_wrt(s, i, a);
  if (n == "lambda-open-wrt") return is_lambda_open_wrt(s, i, a);
  if (n == "wedge-set") return wedge(t, a) == a;
  if (n == "vee-set") return vee(t, a) == a;
  if (n == "gap-free") return closure_gap_free(s, i, a);
  if (n == "closure") return closure(t, a);
  if (n == "interior") return interior(t, a);
  if (n == "wedge") return wedge(t, a);
  if (n == "vee") return vee(t, a);
  if (n == "derived") return derived_set(t, a);
  if (n == "weakly-separated") return are_weakly_separated(t, a, need_set(info, args.other_set));
  throw Error(Errc::unknown_name, "check '" + std::string(n) + "' has no evaluator");
}

std::string format_value(const GroundSet& ground, const CheckValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return ground.format(std::get<Subset>(v));
}

}  // namespace gbt
