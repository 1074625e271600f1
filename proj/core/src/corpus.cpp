#include "engelkit/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace engelkit {

namespace {

Perm cycle_on(unsigned degree, std::initializer_list<unsigned> pts) {
  std::vector<Point> im(degree);
  for (Point i = 0; i < degree; ++i) im[i] = i;
  std::vector<unsigned> v(pts);
  for (std::size_t k = 0; k < v.size(); ++k)
    im[v[k] - 1] = static_cast<Point>(v[(k + 1) % v.size()] - 1);
  return Perm(std::move(im));
}

Group make_cyclic(unsigned n, std::size_t cap) {
  std::string label = "C" + std::to_string(n);
  if (n == 1) return Group(1, {}, label, cap);
  std::vector<Point> im(n);
  for (Point i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
  return Group(n, {Perm(std::move(im))}, label, cap);
}

Group make_dihedral(unsigned n, std::size_t cap) {
  if (n < 3) throw Error("dihedral(n) needs n >= 3");
  std::vector<Point> rot(n), ref(n);
  for (Point i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  return Group(n, {Perm(std::move(rot)), Perm(std::move(ref))},
               "D" + std::to_string(2 * n), cap);
}

Group make_symmetric(unsigned n, std::size_t cap) {
  if (n < 1 || n > 6) throw Error("symmetric(n) supports 1 <= n <= 6");
  std::string label = "S" + std::to_string(n);
  if (n == 1) return Group(1, {}, label, cap);
  std::vector<Perm> gens{cycle_on(n, {1, 2})};
  if (n >= 3) {
    std::vector<Point> im(n);
    for (Point i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
    gens.push_back(Perm(std::move(im)));
  }
  return Group(n, std::move(gens), label, cap);
}

Group make_alternating(unsigned n, std::size_t cap) {
  if (n < 3 || n > 6) throw Error("alternating(n) supports 3 <= n <= 6");
  std::vector<Perm> gens;
  for (unsigned k = 3; k <= n; ++k) gens.push_back(cycle_on(n, {1, 2, k}));
  return Group(n, std::move(gens), "A" + std::to_string(n), cap);
}

Group make_quaternion8(std::size_t cap) {
  // right-regular action on {1,-1,i,-i,j,-j,k,-k} in that point order
  Perm gi = Perm(std::vector<Point>{2, 3, 1, 0, 7, 6, 4, 5});
  Perm gj = Perm(std::vector<Point>{4, 5, 6, 7, 1, 0, 3, 2});
  return Group(8, {gi, gj}, "Q8", cap);
}

Group make_elem_abelian(unsigned p, unsigned k, std::size_t cap) {
  if (k < 1 || k > 3) throw Error("elem_abelian(p,k) supports 1 <= k <= 3");
  bool prime = p >= 2;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw Error("elem_abelian(p,k) needs p prime");
  // regular action of (Z_p)^k by translation, points = base-p tuples
  unsigned deg = 1;
  for (unsigned i = 0; i < k; ++i) deg *= p;
  std::vector<Perm> gens;
  unsigned stride = 1;
  for (unsigned axis = 0; axis < k; ++axis) {
    std::vector<Point> im(deg);
    for (unsigned x = 0; x < deg; ++x) {
      unsigned digit = (x / stride) % p;
      unsigned next = (digit + 1) % p;
      im[x] = static_cast<Point>(x + (next - digit) * stride);
    }
    gens.push_back(Perm(std::move(im)));
    stride *= p;
  }
  return Group(deg, std::move(gens),
               "E" + std::to_string(p) + "^" + std::to_string(k), cap);
}

Group make_frobenius(unsigned p, unsigned k, std::size_t cap) {
  if (p < 3 || p > 13) throw Error("frobenius(p,k) supports primes 3 <= p <= 13");
  bool prime = true;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw Error("frobenius(p,k) needs p prime");
  if (k < 1 || (p - 1) % k != 0)
    throw Error("frobenius(p,k) needs k dividing p-1");
  // affine action on Z_p: translation x+1 and multiplication by the
  // smallest a of multiplicative order k
  unsigned a = 0;
  for (unsigned cand = 1; cand < p; ++cand) {
    unsigned ord = 1;
    unsigned pow = cand;
    while (pow != 1) {
      pow = (pow * cand) % p;
      ++ord;
    }
    if (ord == k) {
      a = cand;
      break;
    }
  }
  if (a == 0) throw Error("no element of the requested order mod p");
  std::vector<Point> trans(p), mult(p);
  for (Point x = 0; x < p; ++x) {
    trans[x] = static_cast<Point>((x + 1) % p);
    mult[x] = static_cast<Point>((static_cast<unsigned>(x) * a) % p);
  }
  std::vector<Perm> gens{Perm(std::move(trans))};
  if (k > 1) gens.push_back(Perm(std::move(mult)));
  return Group(p, std::move(gens),
               "F" + std::to_string(p) + ":" + std::to_string(k), cap);
}

Group make_wreath_c2_c2(std::size_t cap) {
  return Group(4,
               {cycle_on(4, {1, 2}), cycle_on(4, {3, 4}),
                compose(cycle_on(4, {1, 3}), cycle_on(4, {2, 4}))},
               "C2wrC2", cap);
}

Group make_direct_product(const Group& a, const Group& b, std::size_t cap) {
  unsigned deg = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<Point> im(deg);
    for (Point i = 0; i < a.degree(); ++i) im[i] = g[i];
    for (Point i = a.degree(); i < deg; ++i) im[i] = i;
    gens.push_back(Perm(std::move(im)));
  }
  for (const Perm& g : b.generators()) {
    std::vector<Point> im(deg);
    for (Point i = 0; i < a.degree(); ++i) im[i] = i;
    for (Point i = 0; i < b.degree(); ++i)
      im[a.degree() + i] = static_cast<Point>(a.degree() + g[i]);
    gens.push_back(Perm(std::move(im)));
  }
  return Group(deg, std::move(gens), a.label() + "x" + b.label(), cap);
}

// ---- builtin expression parsing: name or name(arg,...) ----

struct Expr {
  std::string head;
  std::vector<std::string> args; // raw argument strings (may be nested exprs)
};

Expr parse_expr(std::string_view s) {
  auto strip = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
      v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
      v.remove_suffix(1);
    return v;
  };
  s = strip(s);
  auto open = s.find('(');
  if (open == std::string_view::npos) return {std::string(s), {}};
  if (s.back() != ')') throw Error("malformed constructor: " + std::string(s));
  Expr e{std::string(strip(s.substr(0, open))), {}};
  std::string_view inner = s.substr(open + 1, s.size() - open - 2);
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
      e.args.emplace_back(strip(inner.substr(start, i - start)));
      start = i + 1;
    } else if (inner[i] == '(') {
      ++depth;
    } else if (inner[i] == ')') {
      --depth;
    }
  }
  if (e.args.size() == 1 && e.args[0].empty()) e.args.clear();
  return e;
}

unsigned arg_uint(const Expr& e, std::size_t i) {
  if (i >= e.args.size())
    throw Error("constructor " + e.head + " is missing argument " +
                std::to_string(i + 1));
  const std::string& a = e.args[i];
  if (a.empty() ||
      !std::all_of(a.begin(), a.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error("constructor argument '" + a + "' is not a number");
  return static_cast<unsigned>(std::stoul(a));
}

} // namespace

Group builtin(std::string_view name, std::size_t cap) {
  Expr e = parse_expr(name);
  auto want = [&](std::size_t n) {
    if (e.args.size() != n)
      throw Error("constructor " + e.head + " expects " + std::to_string(n) +
                  " argument(s)");
  };
  if (e.head == "cyclic") {
    want(1);
    return make_cyclic(arg_uint(e, 0), cap);
  }
  if (e.head == "dihedral") {
    want(1);
    return make_dihedral(arg_uint(e, 0), cap);
  }
  if (e.head == "symmetric") {
    want(1);
    return make_symmetric(arg_uint(e, 0), cap);
  }
  if (e.head == "alternating") {
    want(1);
    return make_alternating(arg_uint(e, 0), cap);
  }
  if (e.head == "klein4") {
    want(0);
    return Group(4,
                 {compose(cycle_on(4, {1, 2}), cycle_on(4, {3, 4})),
                  compose(cycle_on(4, {1, 3}), cycle_on(4, {2, 4}))},
                 "V4", cap);
  }
  if (e.head == "quaternion8") {
    want(0);
    return make_quaternion8(cap);
  }
  if (e.head == "elem_abelian") {
    want(2);
    return make_elem_abelian(arg_uint(e, 0), arg_uint(e, 1), cap);
  }
  if (e.head == "frobenius") {
    want(2);
    return make_frobenius(arg_uint(e, 0), arg_uint(e, 1), cap);
  }
  if (e.head == "wreath_c2_c2") {
    want(0);
    return make_wreath_c2_c2(cap);
  }
  if (e.head == "direct_product") {
    want(2);
    Group a = builtin(e.args[0], cap);
    Group b = builtin(e.args[1], cap);
    return make_direct_product(a, b, cap);
  }
  throw Error("unknown builtin group constructor: " + e.head);
}

namespace {
const char* kCorpusNames[] = {
      "cyclic(2)",
      "cyclic(3)",
      "cyclic(4)",
      "cyclic(6)",
      "cyclic(12)",
      "dihedral(4)",
      "dihedral(5)",
      "dihedral(6)",
      "klein4",
      "quaternion8",
      "elem_abelian(2,2)",
      "elem_abelian(2,3)",
      "elem_abelian(3,2)",
      "wreath_c2_c2",
      "symmetric(3)",
      "symmetric(4)",
      "symmetric(5)",
      "symmetric(6)",
      "alternating(4)",
      "alternating(5)",
      "alternating(6)",
      "frobenius(5,2)",
      "frobenius(5,4)",
      "frobenius(7,3)",
      "frobenius(7,6)",
      "frobenius(11,5)",
      "frobenius(13,3)",
      "frobenius(13,4)",
      "direct_product(symmetric(3),cyclic(2))",
      "direct_product(dihedral(4),symmetric(3))",
      "direct_product(alternating(4),cyclic(2))",
};
} // namespace

std::vector<Group> default_corpus(std::size_t cap) {
  std::vector<Group> out;
  out.reserve(std::size(kCorpusNames));
  for (const char* n : kCorpusNames) out.push_back(builtin(n, cap));
  return out;
}

GroupSpec parse_group_file(std::string_view text) {
  GroupSpec spec;
  bool saw_degree = false, saw_gens = false;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++lineno;

    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) {
      if (eol == text.size()) break;
      pos = eol + 1;
      continue;
    }
    std::size_t b = line.find_last_not_of(" \t\r");
    std::string_view body = line.substr(a, b - a + 1);

    std::size_t eq = body.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected key=value", lineno, static_cast<int>(a) + 1);
    std::string_view key = body.substr(0, eq);
    std::string_view val = body.substr(eq + 1);

    if (key == "name") {
      spec.name = std::string(val);
    } else if (key == "degree") {
      if (val.empty() ||
          !std::all_of(val.begin(), val.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        throw ParseError("degree must be a positive integer", lineno,
                         static_cast<int>(a + eq + 2));
      spec.degree = static_cast<unsigned>(std::stoul(std::string(val)));
      if (spec.degree == 0)
        throw ParseError("degree must be positive", lineno,
                         static_cast<int>(a + eq + 2));
      saw_degree = true;
    } else if (key == "gens") {
      if (!saw_degree)
        throw ParseError("degree must appear before gens", lineno,
                         static_cast<int>(a) + 1);
      // split on top-level commas and parse each permutation now so that
      // positions in the diagnostics point into this line
      std::size_t start = 0;
      for (std::size_t i = 0; i <= val.size(); ++i) {
        if (i == val.size() || val[i] == ',') {
          std::string_view piece = val.substr(start, i - start);
          int col0 = static_cast<int>(a + eq + 1 + start);
          parse_cycles(piece, spec.degree, lineno, col0);
          std::string trimmed(piece);
          spec.generator_strings.push_back(std::move(trimmed));
          start = i + 1;
        }
      }
      saw_gens = true;
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", lineno,
                       static_cast<int>(a) + 1);
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (!saw_degree) throw ParseError("missing degree= line", lineno, 1);
  if (!saw_gens) throw ParseError("missing gens= line", lineno, 1);
  if (spec.name.empty()) spec.name = "user";
  return spec;
}

std::string render_group_file(const GroupSpec& spec) {
  std::string out = "name=" + spec.name + "\n";
  out += "degree=" + std::to_string(spec.degree) + "\n";
  out += "gens=";
  for (std::size_t i = 0; i < spec.generator_strings.size(); ++i) {
    if (i) out += ',';
    out += spec.generator_strings[i];
  }
  out += "\n";
  return out;
}

Group load(const GroupSpec& spec, std::size_t cap) {
  std::vector<Perm> gens;
  gens.reserve(spec.generator_strings.size());
  for (const std::string& s : spec.generator_strings)
    gens.push_back(parse_cycles(s, spec.degree));
  return Group(spec.degree, std::move(gens), spec.name, cap);
}

namespace {
// label a constructor expression produces, without building the group
std::string label_of_builtin(std::string_view name) {
  Expr e = parse_expr(name);
  if (e.head == "cyclic") return "C" + e.args.at(0);
  if (e.head == "dihedral")
    return "D" + std::to_string(2 * std::stoul(e.args.at(0)));
  if (e.head == "symmetric") return "S" + e.args.at(0);
  if (e.head == "alternating") return "A" + e.args.at(0);
  if (e.head == "klein4") return "V4";
  if (e.head == "quaternion8") return "Q8";
  if (e.head == "elem_abelian") return "E" + e.args.at(0) + "^" + e.args.at(1);
  if (e.head == "frobenius") return "F" + e.args.at(0) + ":" + e.args.at(1);
  if (e.head == "wreath_c2_c2") return "C2wrC2";
  if (e.head == "direct_product")
    return label_of_builtin(e.args.at(0)) + "x" + label_of_builtin(e.args.at(1));
  throw Error("unknown builtin group constructor: " + e.head);
}
} // namespace

std::vector<std::pair<std::string, std::string>> corpus_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(std::size(kCorpusNames));
  for (const char* n : kCorpusNames) out.emplace_back(label_of_builtin(n), n);
  return out;
}

Group resolve_group(const std::string& selector, std::size_t cap) {
  // corpus labels first, building only the matching group
  for (const char* n : kCorpusNames)
    if (label_of_builtin(n) == selector) return builtin(n, cap);
  // builtin constructor syntax?
  bool looks_builtin =
      !selector.empty() &&
      std::isalpha(static_cast<unsigned char>(selector.front())) &&
      selector.find('/') == std::string::npos &&
      selector.find('.') == std::string::npos;
  if (looks_builtin) {
    try {
      return builtin(selector, cap);
    } catch (const CapExceeded&) {
      throw; // the constructor matched, the group is just too large
    } catch (const Error&) {
      // fall through to file lookup
    }
  }
  std::ifstream in(selector, std::ios::binary);
  if (!in)
    throw Error("cannot resolve group selector '" + selector +
                "': not a corpus label, builtin constructor, or readable file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load(parse_group_file(ss.str()), cap);
}

} // namespace engelkit
