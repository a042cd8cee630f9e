#include "gbt/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "gbt/space_file.hpp"
#include "json.hpp"

namespace gbt {

namespace {

// Prefixes are processed in fixed-size batches so that early termination and
// log flushes happen at the same points whatever the worker count.
constexpr std::size_t kPrefixBatch = 8;

void check_enumeration_size(unsigned n) {
  if (n == 0 || n > kMaxEnumerationPoints)
    throw Error(Errc::out_of_range, "enumeration needs 1 <= n <= " +
                                        std::to_string(kMaxEnumerationPoints) + ", got " +
                                        std::to_string(n));
}

// Point permutations of an n-point carrier, each lifted to a map on subsets.
struct PermutationTable {
  unsigned n = 0;
  std::vector<std::vector<Mask>> subset_maps;
};

PermutationTable build_permutations(unsigned n) {
  PermutationTable table{n, {}};
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  const Mask count = Mask{1} << n;
  do {
    std::vector<Mask> map(count);
    for (Mask s = 0; s < count; ++s) {
      Mask image = 0;
      for (unsigned x = 0; x < n; ++x)
        if ((s >> x) & 1U) image |= Mask{1} << perm[x];
      map[s] = image;
    }
    table.subset_maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return table;
}

const PermutationTable& permutations(unsigned n) {
  static const std::vector<PermutationTable> tables = [] {
    std::vector<PermutationTable> out(kMaxEnumerationPoints + 1);
    for (unsigned n = 1; n <= kMaxEnumerationPoints; ++n) out[n] = build_permutations(n);
    return out;
  }();
  check_enumeration_size(n);
  return tables[n];
}

FamilyMask apply(const std::vector<Mask>& map, FamilyMask family) {
  FamilyMask out = 0;
  while (family != 0) {
    const int s = std::countr_zero(family);
    family &= family - 1;
    out |= FamilyMask{1} << map[static_cast<std::size_t>(s)];
  }
  return out;
}

using Pair = std::pair<FamilyMask, FamilyMask>;

// Whether (a, b) is the least element of its orbit.
bool is_canonical_pair(const PermutationTable& perms, Pair p, bool with_swap) {
  for (const auto& map : perms.subset_maps) {
    const FamilyMask a = apply(map, p.first);
    if (a < p.first) return false;
    if (a == p.first && apply(map, p.second) < p.second) return false;
    if (with_swap) {
      const FamilyMask b = apply(map, p.second);
      if (b < p.first) return false;
      if (b == p.first && a < p.second) return false;
    }
  }
  return true;
}

std::uint64_t count_stabilizer(const PermutationTable& perms, Pair p, bool with_swap) {
  std::uint64_t count = 0;
  for (const auto& map : perms.subset_maps) {
    const FamilyMask a = apply(map, p.first), b = apply(map, p.second);
    if (a == p.first && b == p.second) ++count;
    if (with_swap && b == p.first && a == p.second) ++count;
  }
  return count;
}

bool is_canonical_family(const PermutationTable& perms, FamilyMask f) {
  for (const auto& map : perms.subset_maps)
    if (apply(map, f) < f) return false;
  return true;
}

void enumerate_from(Mask s, FamilyMask chosen, const std::function<void(FamilyMask)>& visit) {
  if (s == 0) {
    visit(chosen | 1U);
    return;
  }
  enumerate_from(s - 1, chosen, visit);
  // Every set already chosen is numerically larger than s, and so is its union with s.
  FamilyMask rest = chosen;
  while (rest != 0) {
    const Mask t = static_cast<Mask>(std::countr_zero(rest));
    rest &= rest - 1;
    if (((chosen >> (s | t)) & 1U) == 0 && (s | t) != s) return;
  }
  enumerate_from(s - 1, chosen | (FamilyMask{1} << s), visit);
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// results[i] = job(i) for i in [0, count), computed on up to `workers` threads.
template <typename Result, typename Job>
std::vector<Result> parallel_map(std::size_t count, unsigned workers, const Job& job) {
  std::vector<Result> results(count);
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = job(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          results[i] = job(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

struct Sweep {
  unsigned n;
  bool with_swap;
  std::vector<FamilyMask> families;
  std::vector<FamilyMask> prefixes;
};

Sweep make_sweep(unsigned n, Symmetry symmetry, const SizeBounds& bounds) {
  Sweep sw{n, symmetry == Symmetry::permutations_and_swap, {}, {}};
  const auto& perms = permutations(n);
  for (FamilyMask f : gt_families(n))
    if (bounds.admits(f)) sw.families.push_back(f);
  for (FamilyMask f : sw.families)
    if (is_canonical_family(perms, f)) sw.prefixes.push_back(f);
  return sw;
}

std::vector<CanonicalSpace> pairs_with_prefix(const Sweep& sw, FamilyMask prefix) {
  const auto& perms = permutations(sw.n);
  const std::uint64_t order = perms.subset_maps.size() * (sw.with_swap ? 2 : 1);
  std::vector<CanonicalSpace> out;
  for (FamilyMask second : sw.families) {
    const Pair p{prefix, second};
    if (!is_canonical_pair(perms, p, sw.with_swap)) continue;
    out.push_back(CanonicalSpace{encode_key(sw.n, prefix, second), prefix, second,
                                 order / count_stabilizer(perms, p, sw.with_swap)});
  }
  return out;
}

struct LogState {
  std::vector<std::string> lines;  // complete records already in the log
  std::string last_key;            // raw key of the last record, empty if none
};

LogState read_log(const std::filesystem::path& path) {
  LogState state;
  std::ifstream in(path, std::ios::binary);
  if (!in) return state;
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) break;  // interrupted write; dropped below
    std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw Error(Errc::schema_violation, "corrupt log record in " + path.string());
    }
    if (!record.contains("key") || !record["key"].is_string())
      throw Error(Errc::schema_violation, "log record without a key in " + path.string());
    std::string key = key_from_hex(record["key"].get<std::string>());
    if (!state.last_key.empty() && key <= state.last_key)
      throw Error(Errc::schema_violation, "log records out of order in " + path.string());
    state.last_key = std::move(key);
    state.lines.push_back(std::move(line));
  }
  return state;
}

class LogWriter {
 public:
  LogWriter(const SearchOptions& options, const LogState& existing) {
    if (!options.log) return;
    out_.open(*options.log, std::ios::binary | std::ios::trunc);
    if (!out_) throw Error(Errc::io_failure, "cannot write log " + options.log->string());
    // Rewriting the surviving records drops any torn trailing line.
    for (const auto& line : existing.lines) out_ << line << '\n';
    out_.flush();
  }

  void append(const std::string& line) {
    if (out_.is_open()) out_ << line << '\n';
  }
  void flush() {
    if (out_.is_open()) out_.flush();
  }

 private:
  std::ofstream out_;
};

LogState resume_state(const SearchOptions& options) {
  if (options.log && options.resume) return read_log(*options.log);
  return {};
}

constexpr std::array<std::string_view, 13> kPropertyNames{
    "T0",   "T1_4", "T3_8",         "T5_8",         "T1_2",        "T1",
    "R0",   "SYM",  "LSYM",         "GT_T0_EITHER", "GT_T1_EITHER", "WEDGE12_ALL",
    "PLC_SINGLETONS_WEDGE12"};

bool matches(const MiningQuery& q, const GbtSpace& s, const AxiomProfile& p) {
  for (Property a : q.antecedents)
    if (!evaluate_property(a, s, p)) return false;
  return !q.consequent || !evaluate_property(*q.consequent, s, p);
}

}  // namespace

std::string_view symmetry_name(Symmetry s) noexcept {
  return s == Symmetry::permutations ? "perm" : "perm+swap";
}

Symmetry parse_symmetry(std::string_view name) {
  if (name == "perm" || name == "permutations") return Symmetry::permutations;
  if (name == "perm+swap" || name == "permutations+swap") return Symmetry::permutations_and_swap;
  throw Error(Errc::unknown_name, "unknown symmetry '" + std::string(name) +
                                      "' (expected perm or perm+swap)");
}

FamilyMask family_mask(const GeneralizedTopology& t) {
  check_enumeration_size(t.size());
  FamilyMask f = 0;
  for (Mask m : t.open_masks()) f |= FamilyMask{1} << m;
  return f;
}

GeneralizedTopology topology_from_family(const GroundSet& ground, FamilyMask family) {
  check_enumeration_size(ground.size());
  std::vector<Mask> masks;
  for (FamilyMask rest = family; rest != 0; rest &= rest - 1)
    masks.push_back(static_cast<Mask>(std::countr_zero(rest)));
  return validate_gt(ground, SetFamily::from_masks(ground.size(), std::move(masks)));
}

GbtSpace space_from_families(unsigned n, FamilyMask mu1, FamilyMask mu2) {
  GroundSet ground = GroundSet::standard(n);
  auto t1 = topology_from_family(ground, mu1);
  auto t2 = topology_from_family(ground, mu2);
  return GbtSpace(std::move(ground), std::move(t1), std::move(t2));
}

void for_each_gt_family(unsigned n, const std::function<void(FamilyMask)>& visit) {
  check_enumeration_size(n);
  enumerate_from(full_mask(n), 0, visit);
}

std::vector<FamilyMask> gt_families(unsigned n) {
  std::vector<FamilyMask> out;
  for_each_gt_family(n, [&](FamilyMask f) { out.push_back(f); });
  return out;
}

std::vector<GeneralizedTopology> enumerate_gts(unsigned n) {
  const GroundSet ground = GroundSet::standard(n);
  std::vector<GeneralizedTopology> out;
  for_each_gt_family(n, [&](FamilyMask f) { out.push_back(topology_from_family(ground, f)); });
  return out;
}

std::string encode_key(unsigned n, FamilyMask mu1, FamilyMask mu2) {
  check_enumeration_size(n);
  const unsigned bytes = std::max(1U, (1U << n) / 8);
  std::string key(1, static_cast<char>(n));
  for (FamilyMask f : {mu1, mu2})
    for (unsigned b = bytes; b-- > 0;) key.push_back(static_cast<char>((f >> (8 * b)) & 0xFF));
  return key;
}

GbtSpace space_from_key(std::string_view key) {
  if (key.empty()) throw Error(Errc::schema_violation, "empty canonical key");
  const unsigned n = static_cast<unsigned char>(key[0]);
  if (n == 0 || n > kMaxEnumerationPoints)
    throw Error(Errc::schema_violation, "canonical key has a bad carrier size");
  const unsigned bytes = std::max(1U, (1U << n) / 8);
  if (key.size() != 1 + 2 * bytes)
    throw Error(Errc::schema_violation, "canonical key has the wrong length");
  FamilyMask f[2] = {0, 0};
  for (unsigned k = 0; k < 2; ++k)
    for (unsigned b = 0; b < bytes; ++b)
      f[k] = (f[k] << 8) | static_cast<unsigned char>(key[1 + k * bytes + b]);
  try {
    return space_from_families(n, f[0], f[1]);
  } catch (const Error& e) {
    throw Error(Errc::schema_violation, std::string("canonical key is not a GBT space: ") + e.what());
  }
}

std::string key_to_hex(std::string_view key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (char c : key) {
    const auto byte = static_cast<unsigned char>(c);
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xF]);
  }
  return out;
}

std::string key_from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw Error(Errc::schema_violation, "odd-length key");
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Error(Errc::schema_violation, "key is not lower-case hex");
    out.push_back(static_cast<char>(hi * 16 + lo));
  }
  return out;
}

std::string canonical_key(const GbtSpace& s, Symmetry symmetry) {
  const auto& perms = permutations(s.size());
  const FamilyMask f1 = family_mask(s.mu1()), f2 = family_mask(s.mu2());
  Pair best{f1, f2};
  for (const auto& map : perms.subset_maps) {
    const Pair image{apply(map, f1), apply(map, f2)};
    best = std::min(best, image);
    if (symmetry == Symmetry::permutations_and_swap)
      best = std::min(best, Pair{image.second, image.first});
  }
  return encode_key(s.size(), best.first, best.second);
}

std::uint64_t stabilizer_size(const GbtSpace& s, Symmetry symmetry) {
  return count_stabilizer(permutations(s.size()), {family_mask(s.mu1()), family_mask(s.mu2())},
                          symmetry == Symmetry::permutations_and_swap);
}

std::uint64_t group_order(unsigned n, Symmetry symmetry) {
  return permutations(n).subset_maps.size() * (symmetry == Symmetry::permutations_and_swap ? 2 : 1);
}

bool SizeBounds::admits(FamilyMask family) const noexcept {
  const auto size = static_cast<std::size_t>(std::popcount(family));
  return size >= min_open_sets && size <= max_open_sets;
}

bool SizeBounds::unconstrained(unsigned n) const noexcept {
  return min_open_sets <= 1 && max_open_sets >= (std::size_t{1} << n);
}

std::vector<CanonicalSpace> canonical_pairs(unsigned n, Symmetry symmetry, unsigned workers,
                                            const SizeBounds& bounds) {
  const Sweep sw = make_sweep(n, symmetry, bounds);
  auto per_prefix = parallel_map<std::vector<CanonicalSpace>>(
      sw.prefixes.size(), resolve_workers(workers),
      [&](std::size_t i) { return pairs_with_prefix(sw, sw.prefixes[i]); });
  std::vector<CanonicalSpace> out;
  for (auto& batch : per_prefix)
    for (auto& c : batch) out.push_back(std::move(c));
  return out;
}

std::vector<GbtSpace> enumerate_gbt_pairs(unsigned n, Symmetry symmetry, unsigned workers) {
  std::vector<GbtSpace> out;
  for (const auto& c : canonical_pairs(n, symmetry, workers))
    out.push_back(space_from_families(n, c.mu1, c.mu2));
  return out;
}

std::string_view property_name(Property p) noexcept {
  return kPropertyNames[static_cast<std::size_t>(p)];
}

Property parse_property(std::string_view name) {
  if (auto axiom = parse_axiom(name)) return static_cast<Property>(axiom_index(*axiom));
  std::string norm;
  for (char c : name) norm += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (std::size_t i = 0; i < kPropertyNames.size(); ++i)
    if (kPropertyNames[i] == norm) return static_cast<Property>(i);
  throw Error(Errc::unknown_name, "unknown axiom or property '" + std::string(name) + "'");
}

std::vector<Property> all_properties() {
  std::vector<Property> out;
  for (std::size_t i = 0; i < kPropertyNames.size(); ++i) out.push_back(static_cast<Property>(i));
  return out;
}

bool evaluate_property(Property p, const GbtSpace& s, const AxiomProfile& profile) {
  const auto index = static_cast<std::size_t>(p);
  if (index < kAllAxioms.size()) return profile.holds(kAllAxioms[index]);
  const Mask count = Mask{1} << s.size();
  switch (p) {
    case Property::GT_T0_EITHER: return is_gt_T0(s.mu1()) || is_gt_T0(s.mu2());
    case Property::GT_T1_EITHER: return is_gt_T1(s.mu1()) || is_gt_T1(s.mu2());
    case Property::WEDGE12_ALL:
      for (Mask a = 0; a < count; ++a)
        if (!is_wedge12_set(s, Subset(s.size(), a))) return false;
      return true;
    case Property::PLC_SINGLETONS_WEDGE12:
      for (unsigned x = 0; x < s.size(); ++x) {
        const Subset single = Subset::singleton(s.size(), x);
        if (is_pairwise_lambda_closed(s, single) && !is_wedge12_set(s, single)) return false;
      }
      return true;
    default: return false;
  }
}

void validate_query(const MiningQuery& q) {
  if (q.n_min == 0 || q.n_min > q.n_max || q.n_max > kMaxEnumerationPoints)
    throw Error(Errc::out_of_range, "query needs 1 <= n_min <= n_max <= " +
                                        std::to_string(kMaxEnumerationPoints));
  if (q.antecedents.empty() && !q.consequent)
    throw Error(Errc::schema_violation, "query needs at least one required or forbidden property");
  if (q.limit == 0) throw Error(Errc::out_of_range, "query limit must be positive");
}

std::string describe_query(const MiningQuery& q) {
  std::string out;
  for (Property p : q.antecedents) {
    if (!out.empty()) out += " & ";
    out += property_name(p);
  }
  if (q.consequent) {
    if (!out.empty()) out += " & ";
    out += "!";
    out += property_name(*q.consequent);
  }
  out += " on n=" + std::to_string(q.n_min) + ".." + std::to_string(q.n_max) + " (" +
         std::string(symmetry_name(q.symmetry)) + ")";
  return out;
}

std::string log_record(std::string_view key, const GbtSpace& s, const AxiomProfile& p) {
  nlohmann::ordered_json profile;
  for (Axiom a : kAllAxioms) profile[std::string(axiom_name(a))] = p.holds(a);
  nlohmann::ordered_json record;
  record["key"] = key_to_hex(key);
  record["space"] = nlohmann::ordered_json::parse(space_json_compact(s));
  record["profile"] = std::move(profile);
  return record.dump();
}

MiningResult mine(const MiningQuery& q, const SearchOptions& options) {
  validate_query(q);
  const LogState existing = resume_state(options);
  LogWriter log(options, existing);

  MiningResult result;
  for (const auto& line : existing.lines) {
    const auto record = nlohmann::json::parse(line);
    const std::string key = key_from_hex(record["key"].get<std::string>());
    GbtSpace space = space_from_key(key);
    AxiomProfile profile = axiom_profile(space);
    if (!matches(q, space, profile))
      throw Error(Errc::schema_violation, "log record does not satisfy this query");
    result.witnesses.push_back(Witness{std::move(space), std::move(profile), q, key});
  }
  if (result.witnesses.size() >= q.limit) {
    result.witnesses.erase(result.witnesses.begin() + static_cast<std::ptrdiff_t>(q.limit), result.witnesses.end());
    return result;
  }

  struct Found {
    std::vector<Witness> witnesses;
    std::uint64_t checked = 0;
  };
  const unsigned workers = resolve_workers(options.workers);
  for (unsigned n = q.n_min; n <= q.n_max; ++n) {
    const Sweep sw = make_sweep(n, q.symmetry, SizeBounds{});
    for (std::size_t begin = 0; begin < sw.prefixes.size(); begin += kPrefixBatch) {
      const std::size_t end = std::min(sw.prefixes.size(), begin + kPrefixBatch);
      auto found = parallel_map<Found>(end - begin, workers, [&](std::size_t i) {
        Found f;
        for (const auto& c : pairs_with_prefix(sw, sw.prefixes[begin + i])) {
          if (!existing.last_key.empty() && c.key <= existing.last_key) continue;
          ++f.checked;
          GbtSpace space = space_from_families(n, c.mu1, c.mu2);
          AxiomProfile profile = axiom_profile(space);
          if (matches(q, space, profile))
            f.witnesses.push_back(Witness{std::move(space), std::move(profile), q, c.key});
        }
        return f;
      });
      for (auto& f : found) {
        result.spaces_checked += f.checked;
        for (auto& w : f.witnesses) {
          if (result.witnesses.size() >= q.limit) break;
          log.append(log_record(w.canonical_key, w.space, w.profile));
          result.witnesses.push_back(std::move(w));
        }
      }
      log.flush();
      if (result.witnesses.size() >= q.limit) return result;
    }
  }
  result.sweep_complete = true;
  return result;
}

CensusRow census(unsigned n, Symmetry symmetry, const SearchOptions& options,
                 const SizeBounds& bounds) {
  const Sweep sw = make_sweep(n, symmetry, bounds);
  CensusRow row;
  row.n = n;
  row.symmetry = symmetry;
  row.bounds = bounds;
  row.constrained = !bounds.unconstrained(n);
  row.labeled_gt_count = sw.families.size();
  row.labeled_pair_count = row.labeled_gt_count * row.labeled_gt_count;

  const LogState existing = resume_state(options);
  LogWriter log(options, existing);
  for (const auto& line : existing.lines) {
    const auto record = nlohmann::json::parse(line);
    const std::string key = key_from_hex(record["key"].get<std::string>());
    const GbtSpace space = space_from_key(key);
    if (space.size() != n)
      throw Error(Errc::schema_violation, "log record is for a different carrier size");
    const AxiomProfile profile = axiom_profile(space);
    ++row.canonical_pair_count;
    row.orbit_size_sum += group_order(n, symmetry) / stabilizer_size(space, symmetry);
    for (Axiom a : kAllAxioms)
      if (profile.holds(a)) ++row.axiom_counts[axiom_index(a)];
  }

  struct Batch {
    std::vector<std::string> lines;
    std::uint64_t count = 0;
    std::uint64_t orbit_sum = 0;
    std::array<std::uint64_t, 9> axioms{};
  };
  const unsigned workers = resolve_workers(options.workers);
  for (std::size_t begin = 0; begin < sw.prefixes.size(); begin += kPrefixBatch) {
    const std::size_t end = std::min(sw.prefixes.size(), begin + kPrefixBatch);
    auto batches = parallel_map<Batch>(end - begin, workers, [&](std::size_t i) {
      Batch b;
      for (const auto& c : pairs_with_prefix(sw, sw.prefixes[begin + i])) {
        if (!existing.last_key.empty() && c.key <= existing.last_key) continue;
        const GbtSpace space = space_from_families(n, c.mu1, c.mu2);
        const AxiomProfile profile = axiom_profile(space);
        ++b.count;
        b.orbit_sum += c.orbit_size;
        for (Axiom a : kAllAxioms)
          if (profile.holds(a)) ++b.axioms[axiom_index(a)];
        if (options.log) b.lines.push_back(log_record(c.key, space, profile));
      }
      return b;
    });
    for (const auto& b : batches) {
      row.canonical_pair_count += b.count;
      row.orbit_size_sum += b.orbit_sum;
      for (std::size_t k = 0; k < b.axioms.size(); ++k) row.axiom_counts[k] += b.axioms[k];
      for (const auto& line : b.lines) log.append(line);
    }
    log.flush();
  }
  return row;
}

}  // namespace gbt
