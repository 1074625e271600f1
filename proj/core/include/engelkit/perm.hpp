#ifndef ENGELKIT_PERM_HPP
#define ENGELKIT_PERM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "engelkit/error.hpp"

namespace engelkit {

/// 0-based point of the permutation domain {0, ..., degree-1}.
/// External text formats are 1-based; the shift happens only at parse/print.
using Point = std::uint16_t;

/// A permutation of {1..d} stored as its image list.
///
/// The product convention used throughout: compose(p, q) means "apply p
/// first, then q". Conjugation a^b = b^-1 a b, commutator [a,b] = a^-1 b^-1 a b.
class Perm {
public:
  /// Identity of the given degree.
  explicit Perm(unsigned degree);

  /// From an explicit image list (0-based); validates bijectivity.
  explicit Perm(std::vector<Point> images);

  static Perm identity(unsigned degree) { return Perm(degree); }

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point operator[](Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;

  /// Multiplicative order (lcm of cycle lengths).
  unsigned order() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  /// Lexicographic on image lists; the canonical element order.
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

/// Apply p, then q.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
/// b^-1 a b.
Perm conjugate(const Perm& a, const Perm& b);
/// a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

/// Cycle notation: "(1 2)(3 4)", 1-based points, fixed points omitted,
/// "()" or "id" for the identity.
std::string to_cycles(const Perm& p);

/// Parse cycle notation into a permutation of the given degree.
/// Throws ParseError (with position) on malformed input, points out of
/// range, or repeated points.
Perm parse_cycles(std::string_view text, unsigned degree, int line = 1,
                  int column_offset = 0);

} // namespace engelkit

#endif
