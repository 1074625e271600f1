#include "engelkit/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace engelkit {

std::vector<Perm> enumerate(unsigned degree, std::span<const Perm> generators,
                            std::size_t cap) {
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw Error("generator degree " + std::to_string(g.degree()) +
                  " does not match group degree " + std::to_string(degree));

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> todo;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  todo.push_back(id);
  for (const Perm& g : generators) {
    if (seen.insert(g).second) {
      if (seen.size() > cap) throw CapExceeded(cap, seen.size());
      todo.push_back(g);
    }
  }
  while (!todo.empty()) {
    Perm cur = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : generators) {
      Perm prod = compose(cur, g);
      if (seen.insert(prod).second) {
        if (seen.size() > cap) throw CapExceeded(cap, seen.size());
        todo.push_back(std::move(prod));
      }
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
// Full multiplication table only while order^2 * degree stays cheap to build
// and small enough to hold; larger groups fall back to compose + hash lookup.
bool want_mult_table(std::size_t order, unsigned degree) {
  return order <= 1024 &&
         order * order * static_cast<std::size_t>(degree) <= 50'000'000;
}
} // namespace

Group::Group(unsigned degree, std::vector<Perm> generators, std::string label,
             std::size_t cap) {
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->cap = cap;
  data->label = std::move(label);
  data->generators = std::move(generators);
  data->elements = enumerate(degree, data->generators, cap);

  const std::size_t n = data->elements.size();
  data->index.reserve(n * 2);
  for (ElementIndex i = 0; i < n; ++i)
    data->index.emplace(data->elements[i], i);

  data->gen_indices.reserve(data->generators.size());
  for (const Perm& g : data->generators)
    data->gen_indices.push_back(data->index.at(g));

  data->orders.resize(n);
  for (ElementIndex i = 0; i < n; ++i)
    data->orders[i] = data->elements[i].order();

  data->inverses.resize(n);
  for (ElementIndex i = 0; i < n; ++i)
    data->inverses[i] = data->index.at(inverse(data->elements[i]));

  if (want_mult_table(n, degree)) {
    data->mult.resize(n * n);
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        data->mult[a * n + b] =
            data->index.at(compose(data->elements[a], data->elements[b]));
  }

  d_ = std::move(data);
}

std::optional<ElementIndex> Group::index_of(const Perm& p) const {
  auto it = d_->index.find(p);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

ElementIndex Group::require_index(const Perm& p) const {
  auto i = index_of(p);
  if (!i)
    throw Error("permutation " + to_cycles(p) + " is not an element of " +
                (label().empty() ? std::string("the group") : label()));
  return *i;
}

ElementIndex Group::mul(ElementIndex a, ElementIndex b) const {
  if (!d_->mult.empty()) return d_->mult[a * order() + b];
  return d_->index.at(compose(d_->elements[a], d_->elements[b]));
}

ElementIndex Group::inv(ElementIndex a) const { return d_->inverses[a]; }

ElementIndex Group::power(ElementIndex a, unsigned long long n) const {
  ElementIndex r = identity_index();
  ElementIndex base = a;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

} // namespace engelkit
