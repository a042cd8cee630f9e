#include "gbt/lattice.hpp"

namespace gbt {

namespace {

std::string node(Axiom a) { return "\"" + std::string(axiom_name(a)) + "\""; }

}  // namespace

LatticeReport build_lattice(unsigned n_max, unsigned workers) {
  if (n_max < 1 || n_max > kMaxEnumerationPoints)
    throw Error(Errc::out_of_range, "lattice sweep needs 1 <= n <= " + std::to_string(kMaxEnumerationPoints));
  std::array<std::array<std::optional<std::string>, 9>, 9> counter{};
  LatticeReport report;
  report.n_max = n_max;
  for (unsigned n = 1; n <= n_max; ++n)
    for (const auto& c : canonical_pairs(n, Symmetry::permutations_and_swap, workers)) {
      const AxiomProfile p = axiom_profile(space_from_families(n, c.mu1, c.mu2));
      ++report.spaces_checked;
      for (Axiom a : kAllAxioms)
        for (Axiom b : kAllAxioms)
          if (a != b && p.holds(a) && !p.holds(b) && !counter[axiom_index(a)][axiom_index(b)])
            counter[axiom_index(a)][axiom_index(b)] = key_to_hex(c.key);
    }
  for (Axiom a : kAllAxioms)
    for (Axiom b : kAllAxioms) {
      if (a == b) continue;
      auto& w = counter[axiom_index(a)][axiom_index(b)];
      if (w)
        report.counter_edges.push_back(LatticeEdge{a, b, w});
      else
        report.edges.push_back(LatticeEdge{a, b, std::nullopt});
    }
  return report;
}

std::string lattice_dot(const LatticeReport& report) {
  std::string out = "digraph axioms {\n  // canonical spaces on 1.." + std::to_string(report.n_max) +
                    " points: " + std::to_string(report.spaces_checked) + "\n  rankdir=BT;\n";
  for (Axiom a : kAllAxioms) out += "  " + node(a) + ";\n";
  for (const auto& e : report.edges) out += "  " + node(e.from) + " -> " + node(e.to) + ";\n";
  for (const auto& e : report.counter_edges)
    out += "  " + node(e.from) + " -> " + node(e.to) + " [style=dashed, color=red, label=\"" +
           *e.witness_key + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace gbt
