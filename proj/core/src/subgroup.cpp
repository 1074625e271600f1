#include "engelkit/subgroup.hpp"

#include <algorithm>
#include <set>

namespace engelkit {

namespace detail {

ClosureBuilder::ClosureBuilder(const Group& G)
    : g_(G), mask_(G.order(), false) {
  mask_[G.identity_index()] = true;
  list_.push_back(G.identity_index());
}

bool ClosureBuilder::adjoin(ElementIndex g) {
  if (mask_[g]) return false;
  irr_.push_back(g);
  mask_[g] = true;
  list_.push_back(g);
  // re-close: right-multiply everything reached so far by every generator
  for (std::size_t scan = 0; scan < list_.size(); ++scan) {
    for (ElementIndex h : irr_) {
      ElementIndex k = g_.mul(list_[scan], h);
      if (!mask_[k]) {
        mask_[k] = true;
        list_.push_back(k);
      }
    }
  }
  return true;
}

void ClosureBuilder::adjoin_all(std::span<const ElementIndex> gens) {
  for (ElementIndex g : gens) adjoin(g);
}

std::vector<ElementIndex> ClosureBuilder::sorted_members() const {
  std::vector<ElementIndex> out = list_;
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

Subgroup::Subgroup(Group parent, std::vector<ElementIndex> members,
                   std::vector<ElementIndex> gens)
    : parent_(std::move(parent)), members_(std::move(members)),
      mask_(parent_.order(), false), gens_(std::move(gens)) {
  for (ElementIndex i : members_) mask_[i] = true;
}

std::vector<Perm> Subgroup::generator_perms() const {
  std::vector<Perm> out;
  out.reserve(gens_.size());
  for (ElementIndex i : gens_) out.push_back(parent_.element(i));
  return out;
}

bool Subgroup::contains(const Perm& p) const {
  auto i = parent_.index_of(p);
  return i && mask_[*i];
}

bool Subgroup::subset_of(const Subgroup& other) const {
  if (!same_parent(other)) throw Error("subgroups have different parents");
  for (ElementIndex i : members_)
    if (!other.contains(i)) return false;
  return true;
}

Group Subgroup::as_group(std::string label) const {
  return Group(parent_.degree(), generator_perms(),
               label.empty() ? parent_.label() + "-sub" : std::move(label),
               parent_.cap());
}

Subgroup trivial_subgroup(const Group& G) {
  return Subgroup(G, {G.identity_index()}, {});
}

Subgroup whole_subgroup(const Group& G) {
  std::vector<ElementIndex> all(G.order());
  for (ElementIndex i = 0; i < G.order(); ++i) all[i] = i;
  return Subgroup(G, std::move(all), G.generator_indices());
}

Subgroup subgroup_from_indices(const Group& G,
                               std::span<const ElementIndex> gens) {
  detail::ClosureBuilder cb(G);
  cb.adjoin_all(gens);
  return Subgroup(G, cb.sorted_members(), cb.irredundant_gens());
}

Subgroup subgroup(const Group& G, std::span<const Perm> gens) {
  std::vector<ElementIndex> idx;
  idx.reserve(gens.size());
  for (const Perm& p : gens) idx.push_back(G.require_index(p));
  return subgroup_from_indices(G, idx);
}

Subgroup subgroup_from_members(const Group& G,
                               std::vector<ElementIndex> members) {
  detail::ClosureBuilder cb(G);
  cb.adjoin_all(members);
  if (cb.size() != members.size())
    throw Error("member set of size " + std::to_string(members.size()) +
                " is not closed (closure has " + std::to_string(cb.size()) +
                " elements)");
  std::sort(members.begin(), members.end());
  return Subgroup(G, std::move(members), cb.irredundant_gens());
}

Subgroup normal_closure(const Group& G, const Subgroup& S) {
  if (!S.parent().same_handle(G))
    throw Error("subgroup does not live in the given group");
  detail::ClosureBuilder cb(G);
  cb.adjoin_all(S.gen_indices());
  // conjugate the irredundant generators by the group generators until stable
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ElementIndex> snapshot = cb.irredundant_gens();
    for (ElementIndex w : snapshot)
      for (ElementIndex t : G.generator_indices())
        if (cb.adjoin(G.conj(w, t))) changed = true;
  }
  return Subgroup(G, cb.sorted_members(), cb.irredundant_gens());
}

Subgroup commutator_subgroup(const Subgroup& A, const Subgroup& B) {
  if (!A.same_parent(B)) throw Error("subgroups have different parents");
  const Group& G = A.parent();
  std::vector<bool> seen(G.order(), false);
  std::vector<ElementIndex> gens;
  for (ElementIndex a : A.members())
    for (ElementIndex b : B.members()) {
      ElementIndex c = G.comm(a, b);
      if (!seen[c]) {
        seen[c] = true;
        gens.push_back(c);
      }
    }
  return subgroup_from_indices(G, gens);
}

Subgroup centralizer(const Group& G, const Subgroup& S) {
  if (!S.parent().same_handle(G))
    throw Error("subgroup does not live in the given group");
  std::vector<ElementIndex> members;
  for (ElementIndex x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (ElementIndex s : S.gen_indices())
      if (G.conj(s, x) != s) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return subgroup_from_members(G, std::move(members));
}

Subgroup center(const Group& G) { return centralizer(G, whole_subgroup(G)); }

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  if (!A.same_parent(B)) throw Error("subgroups have different parents");
  std::vector<ElementIndex> members;
  std::set_intersection(A.members().begin(), A.members().end(),
                        B.members().begin(), B.members().end(),
                        std::back_inserter(members));
  return subgroup_from_members(A.parent(), std::move(members));
}

Subgroup join(const Subgroup& A, const Subgroup& B) {
  if (!A.same_parent(B)) throw Error("subgroups have different parents");
  detail::ClosureBuilder cb(A.parent());
  cb.adjoin_all(A.gen_indices());
  cb.adjoin_all(B.gen_indices());
  return Subgroup(A.parent(), cb.sorted_members(), cb.irredundant_gens());
}

Subgroup conjugate_subgroup(const Subgroup& S, ElementIndex g) {
  const Group& G = S.parent();
  std::vector<ElementIndex> members;
  members.reserve(S.order());
  for (ElementIndex i : S.members()) members.push_back(G.conj(i, g));
  std::sort(members.begin(), members.end());
  std::vector<ElementIndex> gens;
  gens.reserve(S.gen_indices().size());
  for (ElementIndex i : S.gen_indices()) gens.push_back(G.conj(i, g));
  return Subgroup(G, std::move(members), std::move(gens));
}

bool is_normal(const Group& G, const Subgroup& N) {
  if (!N.parent().same_handle(G))
    throw Error("subgroup does not live in the given group");
  for (ElementIndex g = 0; g < G.order(); ++g)
    for (ElementIndex n : N.gen_indices())
      if (!N.contains(G.conj(n, g))) return false;
  return true;
}

namespace {
// p for |P| = p^k, or 0 when the order is not a prime power
unsigned prime_power_base(std::size_t n) {
  if (n == 1) return 1;
  unsigned p = 0;
  for (unsigned d = 2; static_cast<std::size_t>(d) * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = static_cast<unsigned>(n); // n prime
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}
} // namespace

Subgroup frattini_p(const Subgroup& P) {
  unsigned p = prime_power_base(P.order());
  if (p == 0)
    throw Error("Frattini computation needs a group of prime-power order, "
                "got order " +
                std::to_string(P.order()));
  if (P.order() == 1) return trivial_subgroup(P.parent());
  const Group& G = P.parent();
  Subgroup derived = commutator_subgroup(P, P);
  detail::ClosureBuilder cb(G);
  cb.adjoin_all(derived.gen_indices());
  for (ElementIndex x : P.members()) cb.adjoin(G.power(x, p));
  return Subgroup(G, cb.sorted_members(), cb.irredundant_gens());
}

Quotient::Quotient(Group parent, Subgroup kernel)
    : parent_(std::move(parent)), kernel_(std::move(kernel)),
      coset_of_(parent_.order(), 0),
      action_(1, {}) // placeholder, rebuilt below
{
  if (!kernel_.parent().same_handle(parent_))
    throw Error("kernel does not live in the given group");
  if (!is_normal(parent_, kernel_))
    throw Error("quotient kernel is not normal");

  // ascending scan: the first unassigned element of each coset is its
  // representative, so cosets come out ordered by minimal element
  std::vector<bool> assigned(parent_.order(), false);
  for (ElementIndex i = 0; i < parent_.order(); ++i) {
    if (assigned[i]) continue;
    Point c = static_cast<Point>(reps_.size());
    reps_.push_back(i);
    for (ElementIndex n : kernel_.members()) {
      ElementIndex m = parent_.mul(n, i);
      assigned[m] = true;
      coset_of_[m] = c;
    }
  }

  const unsigned deg = static_cast<unsigned>(reps_.size());
  std::vector<Perm> action_gens;
  action_gens.reserve(parent_.generators().size());
  for (ElementIndex t : parent_.generator_indices()) {
    std::vector<Point> im(deg);
    for (Point c = 0; c < deg; ++c) im[c] = coset_of_[parent_.mul(reps_[c], t)];
    action_gens.push_back(Perm(std::move(im)));
  }
  std::string qlabel = parent_.label().empty()
                           ? "quotient"
                           : parent_.label() + "/N" +
                                 std::to_string(kernel_.order());
  action_ = Group(deg, std::move(action_gens), std::move(qlabel),
                  parent_.cap());
  if (action_.order() * kernel_.order() != parent_.order())
    throw Error("coset action order mismatch"); // cannot happen for normal N
}

ElementIndex Quotient::project_to_action(ElementIndex i) const {
  return action_.require_index(project_perm(parent_.element(i)));
}

Perm Quotient::project_perm(const Perm& p) const {
  ElementIndex pi = parent_.require_index(p);
  const unsigned deg = static_cast<unsigned>(reps_.size());
  std::vector<Point> im(deg);
  for (Point c = 0; c < deg; ++c) im[c] = coset_of_[parent_.mul(reps_[c], pi)];
  return Perm(std::move(im));
}

Quotient quotient(const Group& G, const Subgroup& N) { return Quotient(G, N); }

Subgroup image_in_quotient(const Quotient& Q, const Subgroup& S) {
  if (!S.parent().same_handle(Q.parent()))
    throw Error("subgroup does not live in the quotient's parent");
  std::vector<ElementIndex> gens;
  gens.reserve(S.gen_indices().size());
  for (ElementIndex i : S.gen_indices())
    gens.push_back(Q.project_to_action(i));
  return subgroup_from_indices(Q.action(), gens);
}

Subgroup preimage_in_parent(const Quotient& Q, const Subgroup& T) {
  if (!T.parent().same_handle(Q.action()))
    throw Error("subgroup does not live in the quotient action");
  // union of the cosets whose action image lies in T
  std::vector<bool> coset_in(Q.num_cosets(), false);
  for (Point c = 0; c < Q.num_cosets(); ++c) {
    ElementIndex rep = Q.section(c);
    coset_in[c] = T.contains(Q.project_to_action(rep));
  }
  std::vector<ElementIndex> members;
  for (ElementIndex i = 0; i < Q.parent().order(); ++i)
    if (coset_in[Q.project(i)]) members.push_back(i);
  return subgroup_from_members(Q.parent(), std::move(members));
}

} // namespace engelkit
