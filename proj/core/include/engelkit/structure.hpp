#ifndef ENGELKIT_STRUCTURE_HPP
#define ENGELKIT_STRUCTURE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "engelkit/subgroup.hpp"

namespace engelkit {

enum class SeriesKind { lower_central, derived, fitting };

/// A computed subgroup series. Descending for lower_central/derived
/// (computed until two consecutive terms coincide, both kept), ascending
/// for fitting.
struct SeriesRecord {
  SeriesKind kind;
  std::vector<Subgroup> terms;
  bool stabilized = false;
};

SeriesRecord lower_central_series(const Subgroup& H);
SeriesRecord derived_series(const Subgroup& H);

/// Last (stable) term of the lower central series.
Subgroup nilpotent_residual(const Subgroup& H);

bool is_nilpotent(const Subgroup& H);
/// Nilpotency class, or nullopt for a non-nilpotent group.
std::optional<unsigned> nilpotency_class(const Subgroup& H);
bool is_abelian(const Subgroup& H);
bool is_solvable(const Subgroup& H);

/// A Sylow p-subgroup of H, grown by normalizer steps from the p-part of
/// the first eligible element in canonical order. Deterministic; `start`
/// overrides the seed element (used to reach other members of the
/// conjugacy class of Sylow subgroups).
Subgroup sylow(const Subgroup& H, unsigned p,
               std::optional<ElementIndex> start = std::nullopt);

/// Largest normal p-subgroup: intersection of all conjugates of one Sylow.
Subgroup p_core(const Subgroup& H, unsigned p);

/// Largest normal nilpotent subgroup, generated by the p-cores.
Subgroup fitting(const Subgroup& H);

/// Ascending series F_1 <= F_2 <= ... with F_{i+1} the preimage of the
/// Fitting subgroup of G/F_i; stops when it reaches G or stalls.
SeriesRecord fitting_series(const Group& G);
/// First i with F_i = G, or nullopt when the series stalls below G
/// (exactly the non-solvable case).
std::optional<unsigned> fitting_height(const Group& G);

/// Hall q'-subgroup search by seeded random generation over q'-elements,
/// keeping at most 4 generators and restarting whenever the closure picks
/// up q-torsion. Each loop iteration spends one unit of `budget`.
/// Returns nullopt (a soft outcome) when the budget runs out.
/// Throws when G is not solvable.
std::optional<Subgroup> hall_qprime(const Group& G, unsigned q,
                                    unsigned budget = 2000,
                                    std::uint64_t seed = 0);

/// lcm of the element orders.
unsigned exponent(const Subgroup& H);

unsigned element_order(const Perm& p);

/// All ordered pairs (x, y) of members with coprime element orders.
void for_each_coprime_order_pair(
    const Subgroup& H,
    const std::function<void(ElementIndex, ElementIndex)>& fn);

/// Prime factors of n, ascending.
std::vector<unsigned> prime_factors(std::size_t n);
/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, unsigned p);

} // namespace engelkit

#endif
