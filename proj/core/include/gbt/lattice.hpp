#pragma once

// Empirical implication lattice over the nine pairwise axioms: for every
// ordered pair (P, Q) the sweep either finds no canonical space with P and not
// Q, or records the first such space as a counterexample.

#include <optional>
#include <string>
#include <vector>

#include "gbt/enumeration.hpp"

namespace gbt {

struct LatticeEdge {
  Axiom from;
  Axiom to;
  std::optional<std::string> witness_key;  // hex canonical key; set on refuted edges only
};

struct LatticeReport {
  unsigned n_max = 0;
  std::uint64_t spaces_checked = 0;
  std::vector<LatticeEdge> edges;          // implications with no counterexample
  std::vector<LatticeEdge> counter_edges;  // refuted implications
};

// Sweeps every canonical space (up to permutation and swap) on 1..n_max points.
LatticeReport build_lattice(unsigned n_max, unsigned workers = 0);

// Verified edges are solid, refuted ones dashed and labelled with the witness key.
std::string lattice_dot(const LatticeReport& report);

}  // namespace gbt
