#ifndef ENGELKIT_GROUP_HPP
#define ENGELKIT_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "engelkit/perm.hpp"

namespace engelkit {

/// Position of an element in a group's canonical (lexicographically sorted)
/// element list. Index 0 is always the identity.
using ElementIndex = std::uint32_t;

constexpr std::size_t kDefaultEnumerationCap = 10000;

/// Breadth-first closure of a generating set under products.
/// Returns the full element set in canonical sorted order.
/// Throws CapExceeded once the closure grows past `cap`.
std::vector<Perm> enumerate(unsigned degree, std::span<const Perm> generators,
                            std::size_t cap = kDefaultEnumerationCap);

/// An immutable, fully materialized permutation group.
///
/// Construction enumerates the whole element set once; everything afterwards
/// is read-only, so handles can be shared freely across threads. For small
/// groups a multiplication table is precomputed and all index-level
/// operations become table lookups.
class Group {
public:
  Group(unsigned degree, std::vector<Perm> generators, std::string label = "",
        std::size_t cap = kDefaultEnumerationCap);

  unsigned degree() const { return d_->degree; }
  std::size_t order() const { return d_->elements.size(); }
  const std::string& label() const { return d_->label; }
  std::size_t cap() const { return d_->cap; }

  const std::vector<Perm>& generators() const { return d_->generators; }
  /// Indices of the generators in the canonical element list.
  const std::vector<ElementIndex>& generator_indices() const {
    return d_->gen_indices;
  }

  /// Canonical sorted element list; iteration over it is the deterministic
  /// order used by every algorithm and report.
  const std::vector<Perm>& elements() const { return d_->elements; }
  const Perm& element(ElementIndex i) const { return d_->elements[i]; }

  bool contains(const Perm& p) const { return index_of(p).has_value(); }
  std::optional<ElementIndex> index_of(const Perm& p) const;
  /// index_of that throws when the element is not a member.
  ElementIndex require_index(const Perm& p) const;

  ElementIndex identity_index() const { return 0; }

  ElementIndex mul(ElementIndex a, ElementIndex b) const;
  ElementIndex inv(ElementIndex a) const;
  /// b^-1 a b.
  ElementIndex conj(ElementIndex a, ElementIndex b) const {
    return mul(mul(inv(b), a), b);
  }
  /// a^-1 b^-1 a b.
  ElementIndex comm(ElementIndex a, ElementIndex b) const {
    return mul(inv(a), conj(a, b));
  }
  ElementIndex power(ElementIndex a, unsigned long long n) const;

  unsigned element_order(ElementIndex a) const { return d_->orders[a]; }

  /// Same underlying object (not structural equality).
  bool same_handle(const Group& other) const { return d_ == other.d_; }

private:
  struct Data {
    unsigned degree;
    std::size_t cap;
    std::string label;
    std::vector<Perm> generators;
    std::vector<ElementIndex> gen_indices;
    std::vector<Perm> elements;
    std::unordered_map<Perm, ElementIndex, PermHash> index;
    std::vector<ElementIndex> inverses;
    std::vector<unsigned> orders;
    std::vector<ElementIndex> mult; // order*order, empty when past threshold
  };
  std::shared_ptr<const Data> d_;
};

} // namespace engelkit

#endif
