#include "gbt_tools/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "gbt/checks.hpp"
#include "gbt/claims.hpp"
#include "gbt/enumeration.hpp"
#include "gbt/lattice.hpp"
#include "gbt/space_file.hpp"
#include "json.hpp"

namespace gbt::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { table, json };

struct Options {
  Format format = Format::table;
  std::string path;
  bool complete_unions = false;

  std::string check_name;
  int side = 0;
  std::optional<std::string> set;
  std::optional<std::string> other_set;

  unsigned n = 3;
  unsigned n_min = 1;
  std::vector<std::string> require;
  std::optional<std::string> forbid;
  std::string symmetry;
  std::size_t limit = 1;
  unsigned workers = 0;
  std::optional<std::string> log;
  std::optional<std::string> resume;
  std::size_t min_open = 1;
  std::size_t max_open = std::size_t{1} << kMaxEnumerationPoints;

  unsigned max_n = 3;
  std::size_t random_spaces = 1000;
  unsigned random_n = 4;
  std::uint64_t seed = ClaimsOptions{}.seed;
  std::vector<std::string> only;
  std::optional<std::string> explain_id;
  bool list = false;
  bool timing = false;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

ParsedSpace load(const Options& o) {
  return read_space_file(o.path, SpaceFileOptions{o.complete_unions});
}

// "a,c", "{a,c}", "{}" or "".
Subset parse_set_argument(const GroundSet& ground, std::string text) {
  std::erase_if(text, [](char ch) { return ch == '{' || ch == '}' || ch == ' '; });
  std::vector<std::string> labels;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    const std::size_t comma = text.find(',', start);
    const std::string label = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (label.empty()) throw Error(Errc::schema_violation, "empty label in set argument");
    labels.push_back(label);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ground.parse_subset(labels);
}

ordered_json labels_json(const GroundSet& ground, const Subset& s) { return ground.labels_of(s); }

std::string witness_text(const GroundSet& ground, const AxiomWitness& w) {
  std::string out;
  if (w.side) out += "side " + std::to_string(index_of(*w.side)) + "; ";
  if (w.points) out += "points " + ground.name(w.points->first) + ", " + ground.name(w.points->second) + "; ";
  if (w.set) out += "set " + ground.format(*w.set) + "; ";
  out += w.note;
  return out;
}

ordered_json witness_json(const GroundSet& ground, const AxiomWitness& w) {
  ordered_json j = ordered_json::object();
  if (w.side) j["side"] = index_of(*w.side);
  if (w.points)
    j["points"] = ordered_json::array({ground.name(w.points->first), ground.name(w.points->second)});
  if (w.set) j["set"] = labels_json(ground, *w.set);
  j["note"] = w.note;
  return j;
}

void print_added(std::ostream& out, const GroundSet& ground, const char* name, const std::vector<Subset>& added) {
  if (added.empty()) return;
  out << "completed " << name << " with";
  for (const auto& s : added) out << ' ' << ground.format(s);
  out << '\n';
}

int cmd_validate(const Options& o, std::ostream& out) {
  const ParsedSpace p = load(o);
  const GroundSet& g = p.space.ground();
  if (o.format == Format::json) {
    ordered_json j{{"valid", true},
                   {"points", g.size()},
                   {"mu1_open_sets", p.space.mu1().opens().size()},
                   {"mu2_open_sets", p.space.mu2().opens().size()}};
    j["added_mu1"] = ordered_json::array();
    j["added_mu2"] = ordered_json::array();
    for (const auto& s : p.added_mu1) j["added_mu1"].push_back(labels_json(g, s));
    for (const auto& s : p.added_mu2) j["added_mu2"].push_back(labels_json(g, s));
    out << j.dump(2) << '\n';
    return exit_ok;
  }
  out << "valid: " << g.size() << " points, mu1 has " << p.space.mu1().opens().size()
      << " open sets, mu2 has " << p.space.mu2().opens().size() << '\n';
  print_added(out, g, "mu1", p.added_mu1);
  print_added(out, g, "mu2", p.added_mu2);
  return exit_ok;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const ParsedSpace p = load(o);
  const GbtSpace& s = p.space;
  const AxiomProfile profile = axiom_profile(s);
  if (o.format == Format::json) {
    ordered_json j;
    j["space"] = ordered_json::parse(space_json_compact(s));
    j["profile"] = ordered_json::object();
    for (Axiom a : kAllAxioms) j["profile"][std::string(axiom_name(a))] = profile.holds(a);
    j["witnesses"] = ordered_json::object();
    for (Axiom a : kAllAxioms)
      if (const auto& w = profile.witness(a)) j["witnesses"][std::string(axiom_name(a))] = witness_json(s.ground(), *w);
    out << j.dump(2) << '\n';
    return exit_ok;
  }
  print_added(out, s.ground(), "mu1", p.added_mu1);
  print_added(out, s.ground(), "mu2", p.added_mu2);
  for (Axiom a : kAllAxioms) {
    out << pad(std::string(axiom_name(a)), 6) << bool_text(profile.holds(a));
    if (const auto& w = profile.witness(a)) out << "   " << witness_text(s.ground(), *w);
    out << '\n';
  }
  return exit_ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  const ParsedSpace p = load(o);
  const GbtSpace& s = p.space;
  const CheckInfo& info = find_check(o.check_name);
  CheckArgs args;
  if (o.side != 0) args.side = side_from_index(o.side);
  if (o.set) args.set = parse_set_argument(s.ground(), *o.set);
  if (o.other_set) args.other_set = parse_set_argument(s.ground(), *o.other_set);
  const CheckValue v = evaluate_check(s, info.name, args);
  if (o.format == Format::json) {
    ordered_json j{{"check", info.name}};
    if (args.side) j["side"] = index_of(*args.side);
    if (args.set) j["set"] = labels_json(s.ground(), *args.set);
    if (args.other_set) j["other_set"] = labels_json(s.ground(), *args.other_set);
    if (const bool* b = std::get_if<bool>(&v))
      j["value"] = *b;
    else
      j["value"] = labels_json(s.ground(), std::get<Subset>(v));
    out << j.dump(2) << '\n';
    return exit_ok;
  }
  out << format_value(s.ground(), v) << '\n';
  return exit_ok;
}

SearchOptions search_options(const Options& o) {
  SearchOptions so;
  so.workers = o.workers;
  if (o.resume) {
    so.log = *o.resume;
    so.resume = true;
  } else if (o.log) {
    so.log = *o.log;
  }
  return so;
}

bool query_holds(const MiningQuery& q, const GbtSpace& s, const AxiomProfile& p) {
  for (Property a : q.antecedents)
    if (!evaluate_property(a, s, p)) return false;
  return !q.consequent || !evaluate_property(*q.consequent, s, p);
}

int cmd_mine(const Options& o, std::ostream& out) {
  MiningQuery q;
  q.n_min = o.n_min;
  q.n_max = o.n;
  for (const auto& r : o.require) q.antecedents.push_back(parse_property(r));
  if (o.forbid) q.consequent = parse_property(*o.forbid);
  q.symmetry = o.symmetry.empty() ? Symmetry::permutations_and_swap : parse_symmetry(o.symmetry);
  q.limit = o.limit;
  validate_query(q);

  const MiningResult result = mine(q, search_options(o));
  for (const auto& w : result.witnesses)
    if (!query_holds(q, w.space, axiom_profile(w.space)))
      throw DeciderDisagreement("mined witness " + key_to_hex(w.canonical_key) + " does not re-verify");

  const char* verdict = !result.witnesses.empty() ? "found" : result.sweep_complete ? "exhausted" : "incomplete";
  if (o.format == Format::json) {
    ordered_json j;
    j["query"] = describe_query(q);
    j["status"] = verdict;
    j["sweep_complete"] = result.sweep_complete;
    j["spaces_checked"] = result.spaces_checked;
    j["witnesses"] = ordered_json::array();
    for (const auto& w : result.witnesses)
      j["witnesses"].push_back(ordered_json::parse(log_record(w.canonical_key, w.space, w.profile)));
    out << j.dump(2) << '\n';
    return exit_ok;
  }
  out << "query: " << describe_query(q) << '\n';
  for (std::size_t k = 0; k < result.witnesses.size(); ++k) {
    const Witness& w = result.witnesses[k];
    out << "witness " << k + 1 << ": key " << key_to_hex(w.canonical_key) << ", re-verified\n  "
        << space_json_compact(w.space) << '\n';
  }
  out << "status: " << verdict << ", " << result.witnesses.size() << " witness(es), "
      << result.spaces_checked << " spaces checked\n";
  return exit_ok;
}

int cmd_census(const Options& o, std::ostream& out) {
  const Symmetry sym = o.symmetry.empty() ? Symmetry::permutations : parse_symmetry(o.symmetry);
  const SizeBounds bounds{o.min_open, o.max_open};
  const CensusRow row = census(o.n, sym, search_options(o), bounds);
  const std::uint64_t group = group_order(o.n, sym);
  if (o.format == Format::json) {
    ordered_json j{{"n", row.n},
                   {"symmetry", symmetry_name(row.symmetry)},
                   {"constrained", row.constrained},
                   {"min_open_sets", bounds.min_open_sets},
                   {"max_open_sets", bounds.max_open_sets},
                   {"labeled_gt_count", row.labeled_gt_count},
                   {"labeled_pair_count", row.labeled_pair_count},
                   {"canonical_pair_count", row.canonical_pair_count},
                   {"orbit_size_sum", row.orbit_size_sum},
                   {"group_order", group}};
    j["axiom_counts"] = ordered_json::object();
    for (Axiom a : kAllAxioms) j["axiom_counts"][std::string(axiom_name(a))] = row.axiom_counts[axiom_index(a)];
    out << j.dump(2) << '\n';
    return exit_ok;
  }
  out << "n = " << row.n << ", symmetry " << symmetry_name(row.symmetry) << ", group order " << group << '\n';
  if (row.constrained)
    out << "open sets per topology between " << bounds.min_open_sets << " and " << bounds.max_open_sets << '\n';
  out << pad("labeled GTs", 22) << row.labeled_gt_count << '\n'
      << pad("labeled pairs", 22) << row.labeled_pair_count << '\n'
      << pad("canonical pairs", 22) << row.canonical_pair_count << '\n'
      << pad("sum of orbit sizes", 22) << row.orbit_size_sum << '\n';
  out << "canonical spaces satisfying each axiom:\n";
  for (Axiom a : kAllAxioms)
    out << "  " << pad(std::string(axiom_name(a)), 6) << row.axiom_counts[axiom_index(a)] << '\n';
  return exit_ok;
}

ordered_json report_json(const ClaimReport& r, bool timing) {
  ordered_json j{{"id", r.id},
                 {"kind", claim_kind_name(r.kind)},
                 {"status", claim_status_name(r.status)},
                 {"spaces_checked", r.spaces_checked}};
  if (r.witness) {
    j["witness"] = {{"space", ordered_json::parse(space_json_compact(r.witness->space))},
                    {"detail", r.witness->detail}};
  }
  if (timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

int cmd_claims(const Options& o, std::ostream& out) {
  if (o.explain_id) {
    out << explain(*o.explain_id);
    return exit_ok;
  }
  if (o.list) {
    if (o.format == Format::json) {
      ordered_json j = ordered_json::array();
      for (const auto& r : list_claims())
        j.push_back({{"id", r.id}, {"citation", r.citation}, {"kind", claim_kind_name(r.kind)},
                     {"quote", r.quote}, {"statement", r.statement}});
      out << j.dump(2) << '\n';
    } else {
      for (const auto& r : list_claims())
        out << pad(r.id, 24) << pad(std::string(claim_kind_name(r.kind)), 23) << r.citation << '\n';
    }
    return exit_ok;
  }

  ClaimsOptions co;
  co.max_n = o.max_n;
  co.random_spaces = o.random_spaces;
  co.random_n = o.random_n;
  co.seed = o.seed;
  co.only = o.only;
  if (co.max_n < 1 || co.max_n > kMaxEnumerationPoints || co.random_n < 1 || co.random_n > kMaxEnumerationPoints)
    throw Error(Errc::out_of_range, "sweep sizes must lie in 1.." + std::to_string(kMaxEnumerationPoints));
  const auto reports = run_claims(co);
  const auto deviations = compare_with_expectations(reports);

  if (o.format == Format::json) {
    ordered_json j;
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r, o.timing));
    j["deviations"] = ordered_json::array();
    for (const auto& d : deviations)
      j["deviations"].push_back({{"id", d.id},
                                 {"expected", d.expected ? ordered_json(claim_status_name(*d.expected)) : ordered_json()},
                                 {"actual", claim_status_name(d.actual)}});
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << pad(r.id, 24) << pad(std::string(claim_status_name(r.status)), 22) << r.spaces_checked << " spaces";
      if (o.timing) out << ", " << std::chrono::duration<double, std::milli>(r.elapsed).count() << " ms";
      out << '\n';
      if (r.witness && r.status != ClaimStatus::verified) {
        out << "    witness " << space_json_compact(r.witness->space) << '\n';
        out << "    " << r.witness->detail << '\n';
      }
    }
    if (deviations.empty()) {
      out << "all " << reports.size() << " statuses match the committed expectations\n";
    } else {
      for (const auto& d : deviations)
        out << "DEVIATION " << d.id << ": expected "
            << (d.expected ? std::string(claim_status_name(*d.expected)) : std::string("no entry")) << ", got "
            << claim_status_name(d.actual) << '\n';
    }
  }
  return deviations.empty() ? exit_ok : exit_claims_deviate;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  out << lattice_dot(build_lattice(o.n, o.workers));
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model lab for generalized bitopological spaces", "gbt"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"table", Format::table}, {"json", Format::json}};
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  };
  auto add_path = [&](CLI::App* c) {
    c->add_option("path", o.path, "Space file")->required();
    c->add_flag("--complete-unions", o.complete_unions, "Close each family under unions instead of rejecting it");
  };
  auto add_search = [&](CLI::App* c) {
    c->add_option("--workers", o.workers, "Worker threads (0: hardware concurrency)");
    auto* log = c->add_option("--log", o.log, "Append-only log of visited records");
    c->add_option("--resume", o.resume, "Resume from and extend this log")->excludes(log);
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate a space file");
  add_path(validate);
  add_format(validate);

  auto* classify = app.add_subcommand("classify", "Decide the nine pairwise axioms for a space");
  add_path(classify);
  add_format(classify);

  auto* check = app.add_subcommand("check", "Evaluate one named predicate or operator");
  add_path(check);
  check->add_option("name", o.check_name, "Check name")->required();
  check->add_option("--side", o.side, "Index i of μ_i")->check(CLI::Range(1, 2));
  check->add_option("--set", o.set, "Subset as comma-separated labels");
  check->add_option("--other-set", o.other_set, "Second subset for two-set checks");
  add_format(check);

  auto* mine_cmd = app.add_subcommand("mine", "Search canonical spaces for a counterexample");
  mine_cmd->add_option("--n", o.n, "Largest carrier size")->check(CLI::Range(1u, kMaxEnumerationPoints));
  mine_cmd->add_option("--n-min", o.n_min, "Smallest carrier size")->check(CLI::Range(1u, kMaxEnumerationPoints));
  mine_cmd->add_option("--require", o.require, "Property that must hold (repeatable)");
  mine_cmd->add_option("--forbid", o.forbid, "Property that must fail");
  mine_cmd->add_option("--symmetry", o.symmetry, "perm or perm+swap");
  mine_cmd->add_option("--limit", o.limit, "Maximum number of witnesses");
  add_search(mine_cmd);
  add_format(mine_cmd);

  auto* census_cmd = app.add_subcommand("census", "Count GTs and canonical GBT spaces");
  census_cmd->add_option("--n", o.n, "Carrier size")->check(CLI::Range(1u, kMaxEnumerationPoints));
  census_cmd->add_option("--symmetry", o.symmetry, "perm or perm+swap");
  census_cmd->add_option("--min-open", o.min_open, "Least number of open sets per topology, ∅ included");
  census_cmd->add_option("--max-open", o.max_open, "Greatest number of open sets per topology, ∅ included");
  add_search(census_cmd);
  add_format(census_cmd);

  auto* claims_cmd = app.add_subcommand("claims", "Check every registered claim and fixture");
  claims_cmd->add_option("--n", o.max_n, "Exhaustive sweep bound");
  claims_cmd->add_option("--random", o.random_spaces, "Number of extra random spaces");
  claims_cmd->add_option("--random-n", o.random_n, "Carrier size of the random spaces");
  claims_cmd->add_option("--seed", o.seed, "Seed of the random sample");
  claims_cmd->add_option("--only", o.only, "Claim ids to run (repeatable)");
  claims_cmd->add_option("--explain", o.explain_id, "Describe one claim and exit");
  claims_cmd->add_flag("--list", o.list, "List the registry and exit");
  claims_cmd->add_flag("--timing", o.timing, "Include per-claim elapsed time");
  add_format(claims_cmd);

  auto* lattice_cmd = app.add_subcommand("lattice", "Export the empirical axiom implication lattice as DOT");
  lattice_cmd->add_option("--n", o.n, "Largest carrier size")->check(CLI::Range(1u, kMaxEnumerationPoints));
  lattice_cmd->add_option("--workers", o.workers, "Worker threads (0: hardware concurrency)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (mine_cmd->parsed()) return cmd_mine(o, out);
    if (census_cmd->parsed()) return cmd_census(o, out);
    if (claims_cmd->parsed()) return cmd_claims(o, out);
    if (lattice_cmd->parsed()) return cmd_lattice(o, out);
  } catch (const DeciderDisagreement& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_decider_disagreement;
  } catch (const Error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace gbt::cli
