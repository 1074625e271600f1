#ifndef ENGELKIT_ENGEL_HPP
#define ENGELKIT_ENGEL_HPP

#include <cstdint>
#include <vector>

#include "engelkit/subgroup.hpp"

namespace engelkit {

/// One iterated-commutator chain x, [x,g], [[x,g],g], ...
struct EngelChain {
  bool terminates = false; // reached the identity
  unsigned steps = 0;      // number of commutator steps to the identity
  /// Visited elements (parent indices), starting at x. When the chain does
  /// not terminate the trace ends at the first repeated element.
  std::vector<ElementIndex> trace;
};

/// Iterate x <- [x,g] inside the substrate H until the identity or a repeat.
/// Capped at |H| steps; a deterministic walk in a finite set that has not
/// reached the identity by then sits in a non-identity cycle.
EngelChain engel_chain(const Subgroup& H, const Perm& x, const Perm& g);

/// True iff every chain starting from any x in H terminates.
bool is_engel_element(const Subgroup& H, const Perm& g);

/// The subgroup generated by all n-fold iterated commutators
/// [x, g, ..., g] (g repeated n times) as x ranges over all of H.
Subgroup engel_subgroup(const Subgroup& H, const Perm& g, unsigned n);

/// Stable value of the non-increasing chain of iterated-commutator
/// subgroups, with the index where the chain first attains it.
struct EngelStable {
  Subgroup stable;
  unsigned n_stab = 0;
  /// |E_n| for n = 1..R where R is the step at which the generating sets
  /// repeated; the chain is provably constant from R on.
  std::vector<std::size_t> orders;
};

EngelStable stable_engel_subgroup(const Subgroup& H, const Perm& g);

struct EngelRecord {
  ElementIndex g;
  unsigned n_stab;
  std::size_t stable_order;
  Subgroup stable; // E(g), a subgroup of the substrate's parent
  bool engel;      // chain-based verdict
};

/// Per-element stable subgroups and Engel verdicts over a whole substrate.
struct EngelProfile {
  std::vector<EngelRecord> records; // in canonical member order
  std::size_t m = 1;                // max |E(g)| over all g
};

EngelProfile engel_profile(const Subgroup& H);

/// m alone, when the per-element subgroups are not needed afterwards.
std::size_t engel_m(const Subgroup& H);

} // namespace engelkit

#endif
