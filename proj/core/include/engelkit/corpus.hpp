#ifndef ENGELKIT_CORPUS_HPP
#define ENGELKIT_CORPUS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "engelkit/group.hpp"

namespace engelkit {

/// Parsed form of a group file: a label, a degree, and generator strings in
/// cycle notation.
struct GroupSpec {
  std::string name;
  unsigned degree = 0;
  std::vector<std::string> generator_strings;
};

/// Built-in constructors. `name` is one of:
///   cyclic(n), dihedral(n>=3), symmetric(n<=6), alternating(n<=6),
///   klein4, quaternion8, elem_abelian(p,k<=3), frobenius(p<=13,k|p-1),
///   wreath_c2_c2, direct_product(a,b)
/// where a,b in direct_product recurse into the same syntax.
Group builtin(std::string_view name, std::size_t cap = kDefaultEnumerationCap);

/// The fixed verification corpus: ~30 groups of order <= 720 spanning
/// nilpotent, Fitting-height-2 solvable, height-3, non-solvable, and
/// Frobenius examples.
std::vector<Group> default_corpus(std::size_t cap = kDefaultEnumerationCap);

/// (label, constructor expression) for each corpus entry, in corpus order.
std::vector<std::pair<std::string, std::string>> corpus_catalog();

/// Group file format (UTF-8 text): lines `name=<label>`, `degree=<d>`,
/// `gens=<perm>,<perm>,...` in cycle notation; `#` starts a comment.
GroupSpec parse_group_file(std::string_view text);
std::string render_group_file(const GroupSpec& spec);
Group load(const GroupSpec& spec, std::size_t cap = kDefaultEnumerationCap);

/// Resolve a CLI selector: a corpus label (e.g. "S4"), a builtin
/// constructor expression (e.g. "frobenius(7,3)"), or a path to a group
/// file.
Group resolve_group(const std::string& selector,
                    std::size_t cap = kDefaultEnumerationCap);

} // namespace engelkit

#endif
