#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

Set universe(int n) {
  Set x;
  for (int k = 0; k < n; ++k) x.insert(k);
  return x;
}

Family all_subsets(int n) {
  Family out;
  for (int bits = 0; bits < (1 << n); ++bits) {
    Set s;
    for (int k = 0; k < n; ++k)
      if (bits & (1 << k)) s.insert(k);
    out.push_back(s);
  }
  return out;
}

Set complement(int n, const Set& a) {
  Set out;
  for (int k = 0; k < n; ++k)
    if (!a.contains(k)) out.insert(k);
  return out;
}

bool subset_of(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

Set join(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

bool is_gt(const Family& f) {
  if (std::find(f.begin(), f.end(), Set{}) == f.end()) return false;
  for (const auto& a : f)
    for (const auto& b : f)
      if (std::find(f.begin(), f.end(), join(a, b)) == f.end()) return false;
  return true;
}

bool is_open(const Family& mu, const Set& a) { return std::find(mu.begin(), mu.end(), a) != mu.end(); }
bool is_closed(int n, const Family& mu, const Set& a) { return is_open(mu, complement(n, a)); }

Set closure(int n, const Family& mu, const Set& a) {
  Set out = universe(n);
  for (const auto& u : mu) {
    Set f = complement(n, u);
    if (subset_of(a, f)) out = meet(out, f);
  }
  return out;
}

Set interior(const Family& mu, const Set& a) {
  Set out;
  for (const auto& u : mu)
    if (subset_of(u, a)) out = join(out, u);
  return out;
}

Set wedge(int n, const Family& mu, const Set& a) {
  Set out = universe(n);
  for (const auto& u : mu)
    if (subset_of(a, u)) out = meet(out, u);
  return out;
}

Set vee(int n, const Family& mu, const Set& a) {
  Set out;
  for (const auto& u : mu) {
    Set f = complement(n, u);
    if (subset_of(f, a)) out = join(out, f);
  }
  return out;
}

Set derived(int n, const Family& mu, const Set& a) {
  Set out;
  for (int x = 0; x < n; ++x) {
    bool limit = true;
    for (const auto& u : mu) {
      if (!u.contains(x)) continue;
      Set rest = meet(u, a);
      rest.erase(x);
      if (rest.empty()) limit = false;
    }
    if (limit) out.insert(x);
  }
  return out;
}

namespace {

int other(int i) { return 3 - i; }

Family closed_sets(int n, const Family& mu) {
  Family out;
  for (const auto& u : mu) out.push_back(complement(n, u));
  return out;
}

Family wedge_sets(int n, const Family& mu) {
  Family out;
  for (const auto& l : all_subsets(n))
    if (wedge(n, mu, l) == l) out.push_back(l);
  return out;
}

Family vee_sets(int n, const Family& mu) {
  Family out;
  for (const auto& m : all_subsets(n))
    if (vee(n, mu, m) == m) out.push_back(m);
  return out;
}

Family distinct_meets(const Family& xs, const Family& ys) {
  std::set<Set> out;
  for (const auto& x : xs)
    for (const auto& y : ys) out.insert(meet(x, y));
  return Family(out.begin(), out.end());
}

Family distinct_joins(const Family& xs, const Family& ys) {
  std::set<Set> out;
  for (const auto& x : xs)
    for (const auto& y : ys) out.insert(join(x, y));
  return Family(out.begin(), out.end());
}

}  // namespace

bool g_closed(const Space& s, int i, const Set& a) {
  const Set c = closure(s.n, s.mu(i), a);
  for (const auto& u : s.mu(other(i)))
    if (subset_of(a, u) && !subset_of(c, u)) return false;
  return true;
}

bool g_open(const Space& s, int i, const Set& a) { return g_closed(s, i, complement(s.n, a)); }

bool lambda_closed(const Space& s, int i, const Set& a) {
  for (const auto& f : closed_sets(s.n, s.mu(i)))
    for (const auto& l : wedge_sets(s.n, s.mu(other(i))))
      if (meet(f, l) == a) return true;
  return false;
}

bool lambda_open(const Space& s, int i, const Set& a) { return lambda_closed(s, i, complement(s.n, a)); }

bool pairwise_lambda_closed(const Space& s, const Set& a) {
  const Family fs = distinct_meets(closed_sets(s.n, s.mu1), closed_sets(s.n, s.mu2));
  const Family ls = distinct_meets(wedge_sets(s.n, s.mu1), wedge_sets(s.n, s.mu2));
  for (const auto& f : fs)
    for (const auto& l : ls)
      if (meet(f, l) == a) return true;
  return false;
}

bool pairwise_lambda_open(const Space& s, const Set& a) {
  const Family us = distinct_joins(s.mu1, s.mu2);
  const Family ms = distinct_joins(vee_sets(s.n, s.mu1), vee_sets(s.n, s.mu2));
  for (const auto& u : us)
    for (const auto& m : ms)
      if (join(u, m) == a) return true;
  return false;
}

bool wedge12_set(const Space& s, const Set& a) {
  return a == meet(wedge(s.n, s.mu1, a), wedge(s.n, s.mu2, a));
}

bool gap_free(const Space& s, int i, const Set& a) {
  Set gap = closure(s.n, s.mu(i), a);
  for (int x : a) gap.erase(x);
  for (const auto& f : closed_sets(s.n, s.mu(other(i))))
    if (!f.empty() && subset_of(f, gap)) return false;
  return true;
}

bool weakly_separated(const Family& mu, const Set& a, const Set& b) {
  for (const auto& u : mu)
    for (const auto& v : mu)
      if (subset_of(a, u) && subset_of(b, v) && meet(a, v).empty() && meet(b, u).empty()) return true;
  return false;
}

bool gt_T0(int n, const Family& mu) {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool split = false;
      for (const auto& u : mu)
        if (u.contains(x) != u.contains(y)) split = true;
      if (!split) return false;
    }
  return true;
}

bool gt_T1(int n, const Family& mu) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool split = false;
      for (const auto& u : mu)
        if (u.contains(x) && !u.contains(y)) split = true;
      if (!split) return false;
    }
  return true;
}

bool is_topology(int n, const Family& mu) {
  if (!is_open(mu, universe(n))) return false;
  for (const auto& a : mu)
    for (const auto& b : mu)
      if (!is_open(mu, meet(a, b))) return false;
  return true;
}

namespace {

bool exists_open(const Family& mu, int in, int out) {
  for (const auto& u : mu)
    if (u.contains(in) && !u.contains(out)) return true;
  return false;
}

// Unordered reading: some labelling of each pair satisfies the clause.
bool pairwise_T0(const Space& s) {
  for (int x = 0; x < s.n; ++x)
    for (int y = x + 1; y < s.n; ++y) {
      auto clause = [&](int p, int q) { return exists_open(s.mu1, p, q) || exists_open(s.mu2, q, p); };
      if (!clause(x, y) && !clause(y, x)) return false;
    }
  return true;
}

bool pairwise_T1(const Space& s) {
  for (int x = 0; x < s.n; ++x)
    for (int y = x + 1; y < s.n; ++y) {
      auto clause = [&](int p, int q) { return exists_open(s.mu1, p, q) && exists_open(s.mu2, q, p); };
      if (!clause(x, y) && !clause(y, x)) return false;
    }
  return true;
}

bool pairwise_R0(const Space& s) {
  for (int i = 1; i <= 2; ++i)
    for (const auto& g : s.mu(i))
      for (int x : g)
        if (!subset_of(closure(s.n, s.mu(other(i)), {x}), g)) return false;
  return true;
}

bool pairwise_symmetric(const Space& s) {
  for (int i = 1; i <= 2; ++i)
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y < s.n; ++y)
        if (closure(s.n, s.mu(i), {y}).contains(x) && !closure(s.n, s.mu(other(i)), {x}).contains(y))
          return false;
  return true;
}

bool pairwise_T_half(const Space& s) {
  for (int i = 1; i <= 2; ++i)
    for (const auto& a : all_subsets(s.n))
      if (g_closed(s, i, a) && !is_closed(s.n, s.mu(i), a)) return false;
  return true;
}

// On a finite carrier finite, countable and arbitrary subsets coincide, so the
// three definitions read the same.
bool separates_every_subset(const Space& s) {
  Family candidates;
  for (int i = 1; i <= 2; ++i)
    for (const auto& u : s.mu(i)) {
      candidates.push_back(u);
      candidates.push_back(complement(s.n, u));
    }
  for (const auto& p : all_subsets(s.n))
    for (int y = 0; y < s.n; ++y) {
      if (p.contains(y)) continue;
      bool found = false;
      for (const auto& a : candidates)
        if (subset_of(p, a) && !a.contains(y)) found = true;
      if (!found) return false;
    }
  return true;
}

bool pairwise_lambda_symmetric(const Space& s) {
  for (const auto& a : all_subsets(s.n))
    if (pairwise_lambda_closed(s, a) && !(lambda_closed(s, 1, a) && lambda_closed(s, 2, a))) return false;
  return true;
}

}  // namespace

bool Profile::holds(const std::string& axiom) const {
  if (axiom == "T0") return t0;
  if (axiom == "T1_4") return t_quarter;
  if (axiom == "T3_8") return t_3_8;
  if (axiom == "T5_8") return t_5_8;
  if (axiom == "T1_2") return t_half;
  if (axiom == "T1") return t1;
  if (axiom == "R0") return r0;
  if (axiom == "SYM") return symmetric;
  if (axiom == "LSYM") return lambda_symmetric;
  throw std::invalid_argument("unknown axiom " + axiom);
}

Profile profile(const Space& s) {
  const bool sep = separates_every_subset(s);
  return Profile{pairwise_T0(s),  sep, sep, sep, pairwise_T_half(s), pairwise_T1(s), pairwise_R0(s),
                 pairwise_symmetric(s), pairwise_lambda_symmetric(s)};
}

Value evaluate(const Space& s, const std::string& c, int i, const std::optional<Set>& a,
               const std::optional<Set>& b) {
  const int n = s.n;
  if (c == "bitopological") return is_topology(n, s.mu1) && is_topology(n, s.mu2);
  if (c == "singletons-closed-in-either") {
    for (int x = 0; x < n; ++x)
      if (!is_closed(n, s.mu1, {x}) && !is_closed(n, s.mu2, {x})) return false;
    return true;
  }
  if (c == "singletons-open-or-closed-somewhere") {
    for (int x = 0; x < n; ++x)
      if (!is_open(s.mu1, {x}) && !is_open(s.mu2, {x}) && !is_closed(n, s.mu1, {x}) && !is_closed(n, s.mu2, {x}))
        return false;
    return true;
  }
  if (c == "singletons-same-index") {
    for (int k = 1; k <= 2; ++k)
      for (int x = 0; x < n; ++x)
        if (!is_open(s.mu(k), {x}) && !is_closed(n, s.mu(k), {x})) return false;
    return true;
  }
  if (c == "singletons-open-or-cross-closed") {
    for (int x = 0; x < n; ++x)
      if (!is_open(s.mu(i), {x}) && !is_closed(n, s.mu(other(i)), {x})) return false;
    return true;
  }
  const Profile p = profile(s);
  for (const char* axiom : {"T0", "T1_4", "T3_8", "T5_8", "T1_2", "T1", "R0", "SYM", "LSYM"})
    if (c == axiom) return p.holds(c);
  if (c == "gt-T0") return gt_T0(n, s.mu(i));
  if (c == "gt-T1") return gt_T1(n, s.mu(i));
  if (c == "topology") return is_topology(n, s.mu(i));
  if (!a) throw std::invalid_argument(c + " needs a set");
  if (c == "pairwise-lambda-closed") return pairwise_lambda_closed(s, *a);
  if (c == "pairwise-lambda-open") return pairwise_lambda_open(s, *a);
  if (c == "wedge12-set") return wedge12_set(s, *a);
  const Family& mu = s.mu(i);
  if (c == "open") return is_open(mu, *a);
  if (c == "closed") return is_closed(n, mu, *a);
  if (c == "g-closed-wrt") return g_closed(s, i, *a);
  if (c == "g-open-wrt") return g_open(s, i, *a);
  if (c == "lambda-closed-wrt") return lambda_closed(s, i, *a);
  if (c == "lambda-open-wrt") return lambda_open(s, i, *a);
  if (c == "wedge-set") return wedge(n, mu, *a) == *a;
  if (c == "vee-set") return vee(n, mu, *a) == *a;
  if (c == "gap-free") return gap_free(s, i, *a);
  if (c == "closure") return closure(n, mu, *a);
  if (c == "interior") return interior(mu, *a);
  if (c == "wedge") return wedge(n, mu, *a);
  if (c == "vee") return vee(n, mu, *a);
  if (c == "derived") return derived(n, mu, *a);
  if (c == "weakly-separated") return weakly_separated(mu, *a, b.value());
  throw std::invalid_argument("oracle has no check " + c);
}

std::vector<Family> naive_gts(int n) {
  const Family nonempty = [&] {
    Family all = all_subsets(n);
    all.erase(all.begin());
    return all;
  }();
  std::vector<Family> out;
  const std::uint64_t choices = std::uint64_t{1} << nonempty.size();
  for (std::uint64_t pick = 0; pick < choices; ++pick) {
    Family f{Set{}};
    for (std::size_t k = 0; k < nonempty.size(); ++k)
      if (pick & (std::uint64_t{1} << k)) f.push_back(nonempty[k]);
    if (is_gt(f)) out.push_back(f);
  }
  return out;
}

std::uint64_t naive_gt_count(int n) { return naive_gts(n).size(); }

namespace {

std::vector<std::vector<int>> encode(const Family& f) {
  std::vector<std::vector<int>> out;
  for (const auto& s : f) out.emplace_back(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

Family relabel(const Family& f, const std::vector<int>& perm) {
  Family out;
  for (const auto& s : f) {
    Set t;
    for (int x : s) t.insert(perm[x]);
    out.push_back(t);
  }
  return out;
}

std::vector<std::vector<int>> pair_code(const Family& a, const Family& b) {
  auto code = encode(a);
  code.push_back({-1});
  for (auto& s : encode(b)) code.push_back(s);
  return code;
}

}  // namespace

OrbitCensus naive_orbits(int n, bool with_swap) {
  const auto gts = naive_gts(n);
  OrbitCensus census;
  std::vector<int> perm(n);
  for (const auto& a : gts)
    for (const auto& b : gts) {
      ++census.labeled_pairs;
      std::vector<std::vector<int>> best;
      bool first = true;
      std::iota(perm.begin(), perm.end(), 0);
      do {
        const Family pa = relabel(a, perm), pb = relabel(b, perm);
        auto code = pair_code(pa, pb);
        if (first || code < best) best = code, first = false;
        if (with_swap) {
          auto swapped = pair_code(pb, pa);
          if (swapped < best) best = swapped;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      ++census.orbits[best];
    }
  census.canonical_pairs = census.orbits.size();
  return census;
}

}  // namespace oracle
