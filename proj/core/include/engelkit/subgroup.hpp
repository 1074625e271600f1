#ifndef ENGELKIT_SUBGROUP_HPP
#define ENGELKIT_SUBGROUP_HPP

#include <span>
#include <vector>

#include "engelkit/group.hpp"

namespace engelkit {

/// A materialized subgroup of a parent Group, stored as the sorted list of
/// parent element indices (which is the canonical element order restricted
/// to the subgroup) plus a small irredundant generating set.
class Subgroup {
public:
  Subgroup(Group parent, std::vector<ElementIndex> members,
           std::vector<ElementIndex> gens);

  const Group& parent() const { return parent_; }
  std::size_t order() const { return members_.size(); }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_.order(); }

  /// Sorted parent indices of the members.
  const std::vector<ElementIndex>& members() const { return members_; }
  /// Irredundant generating set (parent indices); empty for the trivial
  /// subgroup.
  const std::vector<ElementIndex>& gen_indices() const { return gens_; }
  std::vector<Perm> generator_perms() const;

  bool contains(ElementIndex i) const { return mask_[i]; }
  bool contains(const Perm& p) const;

  const Perm& element(std::size_t k) const {
    return parent_.element(members_[k]);
  }

  bool same_parent(const Subgroup& other) const {
    return parent_.same_handle(other.parent_);
  }
  bool subset_of(const Subgroup& other) const;

  /// Structural equality: same parent handle and same member set.
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.same_parent(b) && a.members_ == b.members_;
  }

  /// Standalone Group on the same points, generated by this subgroup's
  /// generators. Used when a subgroup has to act as a parent in its own
  /// right (e.g. quotients of subgroups).
  Group as_group(std::string label = "") const;

private:
  Group parent_;
  std::vector<ElementIndex> members_;
  std::vector<bool> mask_;
  std::vector<ElementIndex> gens_;
};

Subgroup trivial_subgroup(const Group& G);
Subgroup whole_subgroup(const Group& G);

/// ⟨gens⟩ inside G. Every generator must be an element of G.
Subgroup subgroup(const Group& G, std::span<const Perm> gens);
Subgroup subgroup_from_indices(const Group& G,
                               std::span<const ElementIndex> gens);

/// Rebuild a Subgroup from an already-closed member set (extracts an
/// irredundant generating set; throws if the set is not closed).
Subgroup subgroup_from_members(const Group& G,
                               std::vector<ElementIndex> members);

/// Smallest normal subgroup of G containing S.
Subgroup normal_closure(const Group& G, const Subgroup& S);

/// ⟨[a,b] : a in A, b in B⟩, exhaustively over both element sets.
Subgroup commutator_subgroup(const Subgroup& A, const Subgroup& B);

/// Elements of G commuting with every element of S.
Subgroup centralizer(const Group& G, const Subgroup& S);
Subgroup center(const Group& G);

Subgroup intersect(const Subgroup& A, const Subgroup& B);
/// ⟨A ∪ B⟩.
Subgroup join(const Subgroup& A, const Subgroup& B);

/// Conjugate subgroup S^g.
Subgroup conjugate_subgroup(const Subgroup& S, ElementIndex g);

/// Checks n^g in N for every generator n of N and every g in G.elements.
bool is_normal(const Group& G, const Subgroup& N);

/// Frattini subgroup P' P^p of a group of prime-power order.
/// Throws if |P| is not a prime power.
Subgroup frattini_p(const Subgroup& P);

/// G/N realized as the permutation action of G on the cosets of N.
/// Coset indices are canonical: cosets are ordered by their minimal element,
/// and the minimal element is the stored representative.
class Quotient {
public:
  Quotient(Group parent, Subgroup kernel);

  const Group& parent() const { return parent_; }
  const Subgroup& kernel() const { return kernel_; }
  /// The coset action as a group in its own right (degree = index of the
  /// kernel).
  const Group& action() const { return action_; }
  std::size_t num_cosets() const { return reps_.size(); }

  /// Coset index of a parent element.
  Point project(ElementIndex i) const { return coset_of_[i]; }
  /// Image of a parent element in the action group.
  ElementIndex project_to_action(ElementIndex i) const;
  Perm project_perm(const Perm& p) const;
  /// Representative (minimal) parent element of a coset.
  ElementIndex section(Point coset) const { return reps_[coset]; }

private:
  Group parent_;
  Subgroup kernel_;
  std::vector<ElementIndex> reps_;
  std::vector<Point> coset_of_;
  Group action_;
};

Quotient quotient(const Group& G, const Subgroup& N);

/// Subgroup of Q.action() generated by the projections of S's generators.
Subgroup image_in_quotient(const Quotient& Q, const Subgroup& S);

/// Full inverse image in Q.parent() of a subgroup of Q.action().
Subgroup preimage_in_parent(const Quotient& Q, const Subgroup& T);

namespace detail {

/// Incrementally grown closed set of parent indices. adjoin() skips
/// candidates already inside; otherwise the candidate joins the irredundant
/// generator list and the closure is re-run.
class ClosureBuilder {
public:
  explicit ClosureBuilder(const Group& G);

  bool contains(ElementIndex i) const { return mask_[i]; }
  std::size_t size() const { return list_.size(); }
  /// Returns true if the candidate was new (i.e. the subgroup grew).
  bool adjoin(ElementIndex g);
  void adjoin_all(std::span<const ElementIndex> gens);

  const std::vector<ElementIndex>& unsorted_members() const { return list_; }
  const std::vector<ElementIndex>& irredundant_gens() const { return irr_; }
  std::vector<ElementIndex> sorted_members() const;

private:
  const Group& g_;
  std::vector<bool> mask_;
  std::vector<ElementIndex> list_;
  std::vector<ElementIndex> irr_;
};

} // namespace detail

} // namespace engelkit

#endif
