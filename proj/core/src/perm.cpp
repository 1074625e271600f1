#include "engelkit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace engelkit {

Perm::Perm(unsigned degree) : images_(degree) {
  if (degree == 0) throw Error("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw Error("image list is not a bijection of {1.." +
                  std::to_string(images_.size()) + "}");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

unsigned Perm::order() const {
  std::vector<bool> done(images_.size(), false);
  unsigned ord = 1;
  for (Point i = 0; i < images_.size(); ++i) {
    if (done[i]) continue;
    unsigned len = 0;
    Point j = i;
    do {
      done[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

namespace {
void check_degrees(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw Error("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                std::to_string(b.degree()));
}
} // namespace

Perm compose(const Perm& p, const Perm& q) {
  check_degrees(p, q);
  std::vector<Point> im(p.degree());
  for (Point i = 0; i < p.degree(); ++i) im[i] = q[p[i]];
  return Perm(std::move(im));
}

Perm inverse(const Perm& p) {
  std::vector<Point> im(p.degree());
  for (Point i = 0; i < p.degree(); ++i) im[p[i]] = i;
  return Perm(std::move(im));
}

Perm conjugate(const Perm& a, const Perm& b) {
  check_degrees(a, b);
  // b^-1 a b sends x^b to (x^a)^b
  std::vector<Point> im(a.degree());
  for (Point i = 0; i < a.degree(); ++i) im[b[i]] = b[a[i]];
  return Perm(std::move(im));
}

Perm commutator(const Perm& a, const Perm& b) {
  return compose(inverse(a), conjugate(a, b));
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image bytes
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    Point j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      done[j] = true;
      j = p[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  if (out.empty()) return "id";
  return out;
}

Perm parse_cycles(std::string_view text, unsigned degree, int line,
                  int column_offset) {
  if (degree == 0) throw Error("permutation degree must be positive");
  auto fail = [&](const std::string& msg, std::size_t pos) -> ParseError {
    return ParseError(msg, line, column_offset + static_cast<int>(pos) + 1);
  };

  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  if (i < text.size() && text.compare(i, 2, "id") == 0) {
    i += 2;
    skip_ws();
    if (i != text.size()) throw fail("trailing input after 'id'", i);
    return Perm(std::move(im));
  }

  bool any_cycle = false;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw fail(std::string("expected '(' but found '") + text[i] + "'", i);
    std::size_t open_pos = i;
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i == text.size())
        throw fail("unterminated cycle", open_pos);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw fail(std::string("expected point or ')' but found '") + text[i] +
                       "'",
                   i);
      std::size_t start = i;
      unsigned long v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > 1000000) throw fail("point value too large", start);
        ++i;
      }
      if (v < 1 || v > degree)
        throw fail("point " + std::to_string(v) + " out of range 1.." +
                       std::to_string(degree),
                   start);
      Point pt = static_cast<Point>(v - 1);
      if (used[pt])
        throw fail("point " + std::to_string(v) + " repeated", start);
      used[pt] = true;
      cycle.push_back(pt);
    }
    if (!cycle.empty()) {
      for (std::size_t k = 0; k < cycle.size(); ++k)
        im[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    any_cycle = true;
  }
  if (!any_cycle)
    throw fail("empty permutation text (use 'id' or '()' for identity)", 0);
  return Perm(std::move(im));
}

} // namespace engelkit
