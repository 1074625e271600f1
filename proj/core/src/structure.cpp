#include "engelkit/structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace engelkit {

std::vector<unsigned> prime_factors(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; static_cast<std::size_t>(p) * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

SeriesRecord lower_central_series(const Subgroup& H) {
  SeriesRecord rec{SeriesKind::lower_central, {H}, false};
  while (true) {
    Subgroup next = commutator_subgroup(rec.terms.back(), H);
    bool same = next.order() == rec.terms.back().order();
    rec.terms.push_back(std::move(next));
    if (same) {
      rec.stabilized = true;
      return rec;
    }
  }
}

SeriesRecord derived_series(const Subgroup& H) {
  SeriesRecord rec{SeriesKind::derived, {H}, false};
  while (true) {
    const Subgroup& cur = rec.terms.back();
    Subgroup next = commutator_subgroup(cur, cur);
    bool same = next.order() == cur.order();
    rec.terms.push_back(std::move(next));
    if (same) {
      rec.stabilized = true;
      return rec;
    }
  }
}

Subgroup nilpotent_residual(const Subgroup& H) {
  return lower_central_series(H).terms.back();
}

bool is_nilpotent(const Subgroup& H) {
  return nilpotent_residual(H).is_trivial();
}

std::optional<unsigned> nilpotency_class(const Subgroup& H) {
  SeriesRecord lcs = lower_central_series(H);
  for (unsigned i = 0; i < lcs.terms.size(); ++i)
    if (lcs.terms[i].is_trivial()) return i;
  return std::nullopt;
}

bool is_abelian(const Subgroup& H) {
  return commutator_subgroup(H, H).is_trivial();
}

bool is_solvable(const Subgroup& H) {
  return derived_series(H).terms.back().is_trivial();
}

namespace {

// normalizer of P in H by exhaustive scan
std::vector<ElementIndex> normalizer_members(const Subgroup& H,
                                             const Subgroup& P) {
  const Group& G = H.parent();
  std::vector<ElementIndex> out;
  for (ElementIndex h : H.members()) {
    bool norm = true;
    for (ElementIndex w : P.gen_indices())
      if (!P.contains(G.conj(w, h))) {
        norm = false;
        break;
      }
    if (norm) out.push_back(h);
  }
  return out;
}

bool is_p_power(unsigned n, unsigned p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

} // namespace

Subgroup sylow(const Subgroup& H, unsigned p,
               std::optional<ElementIndex> start) {
  const Group& G = H.parent();
  std::size_t target = p_part(H.order(), p);
  if (target == 1) return trivial_subgroup(G);

  ElementIndex seed_elt = 0;
  if (start) {
    if (!H.contains(*start)) throw Error("sylow start element outside group");
    if (G.element_order(*start) % p != 0)
      throw Error("sylow start element has order coprime to p");
    seed_elt = *start;
  } else {
    bool found = false;
    for (ElementIndex i : H.members())
      if (G.element_order(i) % p == 0) {
        seed_elt = i;
        found = true;
        break;
      }
    if (!found) throw Error("no element of order divisible by p"); // Cauchy
  }
  unsigned m = G.element_order(seed_elt);
  std::size_t pk = p_part(m, p);
  detail::ClosureBuilder cb(G);
  cb.adjoin(G.power(seed_elt, m / pk));
  Subgroup P(G, cb.sorted_members(), cb.irredundant_gens());

  while (P.order() < target) {
    std::vector<ElementIndex> norm = normalizer_members(H, P);
    bool grown = false;
    for (ElementIndex t : norm) {
      if (P.contains(t)) continue;
      if (!is_p_power(G.element_order(t), p)) continue;
      if (!P.contains(G.power(t, p))) continue;
      detail::ClosureBuilder nb(G);
      nb.adjoin_all(P.gen_indices());
      nb.adjoin(t);
      P = Subgroup(G, nb.sorted_members(), nb.irredundant_gens());
      grown = true;
      break;
    }
    if (!grown)
      throw Error("sylow growth stalled"); // impossible for |P| < p-part
  }
  return P;
}

Subgroup p_core(const Subgroup& H, unsigned p) {
  const Group& G = H.parent();
  Subgroup P = sylow(H, p);
  if (P.is_trivial()) return P;
  std::set<std::vector<ElementIndex>> seen;
  Subgroup core = P;
  seen.insert(P.members());
  for (ElementIndex h : H.members()) {
    Subgroup conj = conjugate_subgroup(P, h);
    if (seen.insert(conj.members()).second) core = intersect(core, conj);
  }
  return core;
}

Subgroup fitting(const Subgroup& H) {
  const Group& G = H.parent();
  detail::ClosureBuilder cb(G);
  for (unsigned p : prime_factors(H.order()))
    cb.adjoin_all(p_core(H, p).gen_indices());
  return Subgroup(G, cb.sorted_members(), cb.irredundant_gens());
}

SeriesRecord fitting_series(const Group& G) {
  SeriesRecord rec{SeriesKind::fitting, {}, false};
  Subgroup whole = whole_subgroup(G);
  rec.terms.push_back(fitting(whole));
  while (true) {
    const Subgroup& cur = rec.terms.back();
    if (cur.order() == G.order()) {
      rec.stabilized = true;
      return rec;
    }
    if (cur.is_trivial()) {
      // F(G/1) = F(G) = 1, the series stalls here
      rec.stabilized = true;
      return rec;
    }
    Quotient Q = quotient(G, cur);
    Subgroup fq = fitting(whole_subgroup(Q.action()));
    Subgroup next = preimage_in_parent(Q, fq);
    if (next.order() == cur.order()) {
      rec.stabilized = true;
      return rec;
    }
    rec.terms.push_back(std::move(next));
  }
}

std::optional<unsigned> fitting_height(const Group& G) {
  SeriesRecord rec = fitting_series(G);
  if (rec.terms.back().order() == G.order())
    return static_cast<unsigned>(rec.terms.size());
  return std::nullopt;
}

std::optional<Subgroup> hall_qprime(const Group& G, unsigned q,
                                    unsigned budget, std::uint64_t seed) {
  Subgroup whole = whole_subgroup(G);
  if (!is_solvable(whole))
    throw Error("Hall subgroup search requires a solvable group");
  std::size_t qpart = p_part(G.order(), q);
  if (qpart == 1) return whole; // q does not divide |G|
  std::size_t target = G.order() / qpart;
  if (target == 1) return trivial_subgroup(G);

  std::vector<ElementIndex> pool;
  for (ElementIndex i = 0; i < G.order(); ++i)
    if (G.element_order(i) % q != 0) pool.push_back(i);

  std::mt19937_64 rng(seed);
  std::vector<ElementIndex> gens;
  for (unsigned used = 0; used < budget; ++used) {
    ElementIndex x = pool[rng() % pool.size()];
    std::vector<ElementIndex> cand = gens;
    cand.push_back(x);
    detail::ClosureBuilder cb(G);
    cb.adjoin_all(cand);
    if (cb.size() % q == 0) {
      gens.clear(); // picked up q-torsion, restart
      continue;
    }
    gens = std::move(cand);
    if (cb.size() == target)
      return Subgroup(G, cb.sorted_members(), cb.irredundant_gens());
    if (gens.size() >= 4) gens.clear();
  }
  return std::nullopt;
}

unsigned exponent(const Subgroup& H) {
  unsigned e = 1;
  const Group& G = H.parent();
  for (ElementIndex i : H.members()) e = std::lcm(e, G.element_order(i));
  return e;
}

unsigned element_order(const Perm& p) { return p.order(); }

void for_each_coprime_order_pair(
    const Subgroup& H,
    const std::function<void(ElementIndex, ElementIndex)>& fn) {
  const Group& G = H.parent();
  for (ElementIndex x : H.members())
    for (ElementIndex y : H.members())
      if (std::gcd(G.element_order(x), G.element_order(y)) == 1) fn(x, y);
}

} // namespace engelkit
