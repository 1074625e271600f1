#include "engelkit/engel.hpp"

#include <algorithm>

namespace engelkit {

namespace {

// local positions 0..|H|-1 of the members, and the commutation-with-g map
// f(a) = [member[a], g] as a function on local positions
struct Substrate {
  const Group* G;
  const std::vector<ElementIndex>* members;
  std::vector<std::uint32_t> local_of; // parent index -> local position
  std::vector<std::uint32_t> comm_g;   // local -> local

  Substrate(const Subgroup& H, ElementIndex g) {
    G = &H.parent();
    members = &H.members();
    local_of.assign(G->order(), 0);
    for (std::uint32_t a = 0; a < members->size(); ++a)
      local_of[(*members)[a]] = a;
    comm_g.resize(members->size());
    for (std::uint32_t a = 0; a < members->size(); ++a)
      comm_g[a] = local_of[G->comm((*members)[a], g)];
  }

  std::uint32_t local_identity() const { return local_of[0]; }
};

// local positions from which the iterated chain reaches the identity:
// reverse reachability in the functional graph of comm_g
std::vector<bool> terminating_set(const Substrate& s) {
  const std::size_t n = s.comm_g.size();
  std::vector<std::vector<std::uint32_t>> rev(n);
  for (std::uint32_t a = 0; a < n; ++a)
    if (a != s.comm_g[a]) rev[s.comm_g[a]].push_back(a);
  std::vector<bool> term(n, false);
  std::vector<std::uint32_t> stack{s.local_identity()};
  term[s.local_identity()] = true;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t u : rev[v])
      if (!term[u]) {
        term[u] = true;
        stack.push_back(u);
      }
  }
  return term;
}

} // namespace

EngelChain engel_chain(const Subgroup& H, const Perm& x, const Perm& g) {
  const Group& G = H.parent();
  ElementIndex xi = G.require_index(x);
  ElementIndex gi = G.require_index(g);
  if (!H.contains(xi) || !H.contains(gi))
    throw Error("engel chain arguments must lie in the substrate subgroup");

  EngelChain out;
  std::vector<bool> visited(G.order(), false);
  ElementIndex cur = xi;
  out.trace.push_back(cur);
  std::size_t cap = H.order();
  for (std::size_t step = 0; step <= cap; ++step) {
    if (cur == G.identity_index()) {
      out.terminates = true;
      out.steps = static_cast<unsigned>(step);
      return out;
    }
    visited[cur] = true;
    cur = G.comm(cur, gi);
    out.trace.push_back(cur);
    if (visited[cur]) return out; // non-identity cycle
  }
  return out; // |H| steps without the identity: cycling
}

bool is_engel_element(const Subgroup& H, const Perm& g) {
  ElementIndex gi = H.parent().require_index(g);
  if (!H.contains(gi)) throw Error("element outside the substrate subgroup");
  Substrate s(H, gi);
  std::vector<bool> term = terminating_set(s);
  return std::all_of(term.begin(), term.end(), [](bool b) { return b; });
}

namespace {

// generating sets W_1 = {[x,g] : x in H}, W_{n+1} = {[w,g] : w in W_n},
// as sorted vectors of local positions
std::vector<std::uint32_t> first_layer(const Substrate& s) {
  std::vector<bool> seen(s.comm_g.size(), false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < s.comm_g.size(); ++a)
    if (!seen[s.comm_g[a]]) {
      seen[s.comm_g[a]] = true;
      out.push_back(s.comm_g[a]);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> next_layer(const Substrate& s,
                                      const std::vector<std::uint32_t>& w) {
  std::vector<bool> seen(s.comm_g.size(), false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t a : w)
    if (!seen[s.comm_g[a]]) {
      seen[s.comm_g[a]] = true;
      out.push_back(s.comm_g[a]);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup close_layer(const Subgroup& H, const Substrate& s,
                     const std::vector<std::uint32_t>& w) {
  std::vector<ElementIndex> gens;
  gens.reserve(w.size());
  for (std::uint32_t a : w) gens.push_back((*s.members)[a]);
  return subgroup_from_indices(H.parent(), gens);
}

} // namespace

Subgroup engel_subgroup(const Subgroup& H, const Perm& g, unsigned n) {
  if (n == 0) throw Error("iterated commutator depth must be positive");
  ElementIndex gi = H.parent().require_index(g);
  if (!H.contains(gi)) throw Error("element outside the substrate subgroup");
  Substrate s(H, gi);
  std::vector<std::uint32_t> w = first_layer(s);
  for (unsigned k = 1; k < n; ++k) w = next_layer(s, w);
  return close_layer(H, s, w);
}

EngelStable stable_engel_subgroup(const Subgroup& H, const Perm& g) {
  ElementIndex gi = H.parent().require_index(g);
  if (!H.contains(gi)) throw Error("element outside the substrate subgroup");
  Substrate s(H, gi);

  // The sets W_n are non-increasing ([x,g,(n+1)] = [[x,g],g,(n)] with
  // [x,g] again a substrate element), so the first repeat is consecutive.
  // Detect repeats on the sets themselves rather than assuming anything
  // about plateaus of the generated subgroups.
  std::vector<std::vector<std::uint32_t>> layers{first_layer(s)};
  while (true) {
    std::vector<std::uint32_t> nxt = next_layer(s, layers.back());
    bool repeat = false;
    for (const auto& prev : layers)
      if (prev == nxt) {
        repeat = true;
        break;
      }
    layers.push_back(std::move(nxt));
    if (repeat) break;
  }

  EngelStable out{close_layer(H, s, layers.back()), 0, {}};
  out.orders.reserve(layers.size());
  for (const auto& layer : layers)
    out.orders.push_back(close_layer(H, s, layer).order());
  for (unsigned n = 0; n < layers.size(); ++n)
    if (out.orders[n] == out.stable.order()) {
      out.n_stab = n + 1;
      break;
    }
  return out;
}

EngelProfile engel_profile(const Subgroup& H) {
  EngelProfile out;
  out.records.reserve(H.order());
  const Group& G = H.parent();
  for (ElementIndex gi : H.members()) {
    const Perm& g = G.element(gi);
    EngelStable st = stable_engel_subgroup(H, g);
    Substrate s(H, gi);
    std::vector<bool> term = terminating_set(s);
    bool engel =
        std::all_of(term.begin(), term.end(), [](bool b) { return b; });
    out.m = std::max(out.m, st.stable.order());
    out.records.push_back(EngelRecord{gi, st.n_stab, st.stable.order(),
                                      std::move(st.stable), engel});
  }
  return out;
}

std::size_t engel_m(const Subgroup& H) {
  std::size_t m = 1;
  const Group& G = H.parent();
  for (ElementIndex gi : H.members()) {
    EngelStable st = stable_engel_subgroup(H, G.element(gi));
    m = std::max(m, st.stable.order());
  }
  return m;
}

} // namespace engelkit
