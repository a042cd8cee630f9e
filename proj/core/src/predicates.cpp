#include "gbt/predicates.hpp"

#include <vector>

namespace gbt {

Side side_from_index(int i) {
  if (i == 1) return Side::first;
  if (i == 2) return Side::second;
  throw Error(Errc::out_of_range, "side index must be 1 or 2, got " + std::to_string(i));
}

GbtSpace::GbtSpace(GroundSet ground, GeneralizedTopology mu1, GeneralizedTopology mu2)
    : ground_(std::move(ground)), mu1_(std::move(mu1)), mu2_(std::move(mu2)) {
  if (mu1_.ground() != ground_ || mu2_.ground() != ground_)
    throw Error(Errc::ground_mismatch, "both topologies must be over the space's ground set");
}

GbtSpace make_space(GroundSet ground, SetFamily mu1, SetFamily mu2) {
  auto t1 = validate_gt(ground, std::move(mu1));
  auto t2 = validate_gt(ground, std::move(mu2));
  return GbtSpace(std::move(ground), std::move(t1), std::move(t2));
}

namespace {

Mask bits_of(const GbtSpace& s, const Subset& a) {
  if (a.universe_size() != s.size())
    throw Error(Errc::ground_mismatch, "subset is not over the space's carrier");
  return a.bits();
}

bool g_closed_bits(const GbtSpace& s, Side i, Mask a) {
  const Mask cl = s.mu(i).closure_bits(a);
  return (cl & ~s.mu(other(i)).wedge_bits(a)) == 0;
}

bool lambda_closed_bits(const GbtSpace& s, Side i, Mask a) {
  return a == (s.mu(i).closure_bits(a) & s.mu(other(i)).wedge_bits(a));
}

bool pairwise_lambda_closed_bits(const GbtSpace& s, Mask a) {
  const Mask meet = s.mu1().closure_bits(a) & s.mu2().closure_bits(a) & s.mu1().wedge_bits(a) &
                    s.mu2().wedge_bits(a);
  return a == meet;
}

std::vector<Mask> closed_sets_containing(const GeneralizedTopology& t, Mask a) {
  std::vector<Mask> out;
  for (Mask u : t.open_masks()) {
    Mask f = t.full() & ~u;
    if ((a & ~f) == 0) out.push_back(f);
  }
  return out;
}

std::vector<Mask> wedge_sets_containing(const GeneralizedTopology& t, Mask a) {
  std::vector<Mask> out;
  const Mask count = Mask{1} << t.size();
  for (Mask l = 0; l < count; ++l)
    if ((a & ~l) == 0 && t.wedge_bits(l) == l) out.push_back(l);
  return out;
}

// Distinct values x & y for x in xs, y in ys.
std::vector<Mask> pairwise_meets(const std::vector<Mask>& xs, const std::vector<Mask>& ys,
                                 unsigned n) {
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::vector<Mask> out;
  for (Mask x : xs)
    for (Mask y : ys) {
      Mask m = x & y;
      if (!seen[m]) {
        seen[m] = true;
        out.push_back(m);
      }
    }
  return out;
}

}  // namespace

bool is_g_closed_wrt(const GbtSpace& s, Side i, const Subset& a) {
  return g_closed_bits(s, i, bits_of(s, a));
}

bool is_g_open_wrt(const GbtSpace& s, Side i, const Subset& a) {
  return g_closed_bits(s, i, s.full() & ~bits_of(s, a));
}

bool is_g_open_wrt_by_closed_sets(const GbtSpace& s, Side i, const Subset& a) {
  const Mask bits = bits_of(s, a);
  const Mask inner = s.mu(i).interior_bits(bits);
  const auto& tj = s.mu(other(i));
  for (Mask u : tj.open_masks()) {
    const Mask f = tj.full() & ~u;
    if ((f & ~bits) == 0 && (f & ~inner) != 0) return false;
  }
  return true;
}

bool is_lambda_closed_wrt(const GbtSpace& s, Side i, const Subset& a) {
  return lambda_closed_bits(s, i, bits_of(s, a));
}

bool is_lambda_open_wrt(const GbtSpace& s, Side i, const Subset& a) {
  return lambda_closed_bits(s, i, s.full() & ~bits_of(s, a));
}

bool is_pairwise_lambda_closed(const GbtSpace& s, const Subset& a) {
  return pairwise_lambda_closed_bits(s, bits_of(s, a));
}

bool is_pairwise_lambda_open(const GbtSpace& s, const Subset& a) {
  return pairwise_lambda_closed_bits(s, s.full() & ~bits_of(s, a));
}

bool is_wedge12_set(const GbtSpace& s, const Subset& a) {
  const Mask bits = bits_of(s, a);
  return bits == (s.mu1().wedge_bits(bits) & s.mu2().wedge_bits(bits));
}

bool are_weakly_separated(const GeneralizedTopology& t, const Subset& a, const Subset& b) {
  if (a.universe_size() != t.size() || b.universe_size() != t.size())
    throw Error(Errc::ground_mismatch, "subsets are not over the topology's carrier");
  const Mask am = a.bits(), bm = b.bits();
  bool found_u = false;
  // U must contain A and miss B; V must contain B and miss A. The choices are independent.
  for (Mask u : t.open_masks())
    if ((am & ~u) == 0 && (u & bm) == 0) {
      found_u = true;
      break;
    }
  if (!found_u) return false;
  for (Mask v : t.open_masks())
    if ((bm & ~v) == 0 && (v & am) == 0) return true;
  return false;
}

bool closure_gap_free(const GbtSpace& s, Side i, const Subset& a) {
  const Mask bits = bits_of(s, a);
  const Mask gap = s.mu(i).closure_bits(bits) & ~bits;
  const auto& tj = s.mu(other(i));
  for (Mask u : tj.open_masks()) {
    const Mask f = tj.full() & ~u;
    if (f != 0 && (f & ~gap) == 0) return false;
  }
  return true;
}

SetFamily lambda_open_family_wrt(const GbtSpace& s, Side i) {
  std::vector<Mask> out;
  const Mask count = Mask{1} << s.size();
  for (Mask a = 0; a < count; ++a)
    if (lambda_closed_bits(s, i, s.full() & ~a)) out.push_back(a);
  return SetFamily::from_masks(s.size(), std::move(out));
}

SetFamily pairwise_lambda_open_family(const GbtSpace& s) {
  std::vector<Mask> out;
  const Mask count = Mask{1} << s.size();
  for (Mask a = 0; a < count; ++a)
    if (pairwise_lambda_closed_bits(s, s.full() & ~a)) out.push_back(a);
  return SetFamily::from_masks(s.size(), std::move(out));
}

namespace lambda_forms {

bool closed_meets_wedge_set(const GbtSpace& s, Side i, Mask a) {
  const auto closed = closed_sets_containing(s.mu(i), a);
  const auto wedges = wedge_sets_containing(s.mu(other(i)), a);
  for (Mask f : closed)
    for (Mask l : wedges)
      if ((f & l) == a) return true;
  return false;
}

bool closed_meets_own_wedge(const GbtSpace& s, Side i, Mask a) {
  const Mask w = s.mu(other(i)).wedge_bits(a);
  for (Mask f : closed_sets_containing(s.mu(i), a))
    if ((f & w) == a) return true;
  return false;
}

bool own_closure_meets_wedge_set(const GbtSpace& s, Side i, Mask a) {
  const Mask cl = s.mu(i).closure_bits(a);
  for (Mask l : wedge_sets_containing(s.mu(other(i)), a))
    if ((cl & l) == a) return true;
  return false;
}

}  // namespace lambda_forms

namespace pairwise_forms {

bool closed_meets_wedge_sets(const GbtSpace& s, Mask a) {
  const auto closed = pairwise_meets(closed_sets_containing(s.mu1(), a),
                                     closed_sets_containing(s.mu2(), a), s.size());
  const auto wedges = pairwise_meets(wedge_sets_containing(s.mu1(), a),
                                     wedge_sets_containing(s.mu2(), a), s.size());
  for (Mask f : closed)
    for (Mask l : wedges)
      if ((f & l) == a) return true;
  return false;
}

bool closed_meets_own_wedges(const GbtSpace& s, Mask a) {
  const Mask w = s.mu1().wedge_bits(a) & s.mu2().wedge_bits(a);
  for (Mask f1 : closed_sets_containing(s.mu1(), a))
    for (Mask f2 : closed_sets_containing(s.mu2(), a))
      if ((f1 & f2 & w) == a) return true;
  return false;
}

bool own_closures_meet_wedge_sets(const GbtSpace& s, Mask a) {
  const Mask cl = s.mu1().closure_bits(a) & s.mu2().closure_bits(a);
  for (Mask l1 : wedge_sets_containing(s.mu1(), a))
    for (Mask l2 : wedge_sets_containing(s.mu2(), a))
      if ((cl & l1 & l2) == a) return true;
  return false;
}

}  // namespace pairwise_forms

}  // namespace gbt
