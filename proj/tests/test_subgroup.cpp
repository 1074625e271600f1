#include <doctest.h>

#include <numeric>

#include "engelkit/subgroup.hpp"
#include "oracles.hpp"

using namespace engelkit;

namespace {

Perm p(unsigned degree, std::string_view cycles) {
  return parse_cycles(cycles, degree);
}

Group s3() { return Group(3, {p(3, "(1 2)"), p(3, "(1 2 3)")}, "S3"); }
Group s4() { return Group(4, {p(4, "(1 2)"), p(4, "(1 2 3 4)")}, "S4"); }
Group a4() { return Group(4, {p(4, "(1 2 3)"), p(4, "(1 2 4)")}, "A4"); }

Subgroup sub(const Group& g, std::initializer_list<std::string_view> gens) {
  std::vector<Perm> v;
  for (auto s : gens) v.push_back(p(g.degree(), s));
  return subgroup(g, v);
}

} // namespace

TEST_SUITE_BEGIN("subgroup");

TEST_CASE("subgroup generation") {
  Group g = s3();
  CHECK(subgroup(g, {}).order() == 1);
  CHECK(sub(g, {"(1 2 3)"}).order() == 3);

  Group h = s4();
  Subgroup v4 = sub(h, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(v4.order() == 4);
  CHECK(oracles::to_perm_set(v4) ==
        oracles::generated({p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")}, 4));

  // degree mismatch: the candidate generator cannot be a member
  CHECK_THROWS_AS(subgroup(g, std::vector<Perm>{p(4, "(1 2)")}), Error);
  // generator outside the parent
  Group a3(3, {p(3, "(1 2 3)")}, "A3");
  CHECK_THROWS_AS(subgroup(a3, std::vector<Perm>{p(3, "(1 2)")}), Error);
}

TEST_CASE("subgroup order divides parent order") {
  Group g = s4();
  for (ElementIndex i = 0; i < g.order(); ++i) {
    ElementIndex gens[1] = {i};
    Subgroup h = subgroup_from_indices(g, gens);
    CHECK(g.order() % h.order() == 0);
  }
}

TEST_CASE("normal closure") {
  Group g = s4();
  CHECK(normal_closure(g, trivial_subgroup(g)).order() == 1);
  CHECK(normal_closure(g, sub(g, {"(1 2)(3 4)"})).order() == 4);  // V4
  CHECK(normal_closure(g, sub(g, {"(1 2 3)"})).order() == 12);    // A4

  Subgroup nc = normal_closure(g, sub(g, {"(1 2)(3 4)"}));
  CHECK(is_normal(g, nc));
  CHECK(sub(g, {"(1 2)(3 4)"}).subset_of(nc));
}

TEST_CASE("normal closure is the minimal normal overgroup") {
  // brute force: intersect all normal subgroups (unions of conjugacy
  // classes) containing S
  for (Group g : {s3(), s4(), a4(),
                  Group(4, {p(4, "(1 2 3 4)"), p(4, "(1 3)")}, "D8")}) {
    auto normals = oracles::all_normal_subgroups(g);
    for (ElementIndex i = 0; i < g.order(); ++i) {
      ElementIndex gens[1] = {i};
      Subgroup s = subgroup_from_indices(g, gens);
      Subgroup nc = normal_closure(g, s);
      std::set<Perm> expect;
      bool first = true;
      std::set<Perm> s_set = oracles::to_perm_set(s);
      for (const auto& n : normals) {
        if (!std::includes(n.begin(), n.end(), s_set.begin(), s_set.end()))
          continue;
        if (first) {
          expect = n;
          first = false;
        } else {
          std::set<Perm> inter;
          std::set_intersection(expect.begin(), expect.end(), n.begin(),
                                n.end(), std::inserter(inter, inter.begin()));
          expect = std::move(inter);
        }
      }
      CHECK(oracles::to_perm_set(nc) == expect);
    }
  }
}

TEST_CASE("commutator subgroup") {
  Group g = s3();
  Subgroup whole = whole_subgroup(g);
  CHECK(commutator_subgroup(whole, trivial_subgroup(g)).order() == 1);
  Subgroup derived = commutator_subgroup(whole, whole);
  CHECK(derived.order() == 3);
  CHECK(oracles::to_perm_set(derived) ==
        oracles::derived_subgroup(oracles::to_perm_set(whole), 3));

  Group a = a4();
  Subgroup v4 = sub(a, {"(1 2)(3 4)", "(1 3)(2 4)"});
  Subgroup c3 = sub(a, {"(1 2 3)"});
  CHECK(commutator_subgroup(v4, c3).order() == 4);
}

TEST_CASE("abelianization: derived subgroup is the smallest with abelian quotient") {
  for (Group g : {s3(), s4(), a4()}) {
    Subgroup whole = whole_subgroup(g);
    Subgroup derived = commutator_subgroup(whole, whole);
    Quotient q = quotient(g, derived);
    Subgroup qw = whole_subgroup(q.action());
    CHECK(commutator_subgroup(qw, qw).is_trivial());
    // any larger abelian quotient would come from a smaller normal subgroup
    for (const auto& n : oracles::all_normal_subgroups(g)) {
      if (n.size() >= derived.order()) continue;
      std::vector<ElementIndex> members;
      for (const Perm& e : n) members.push_back(g.require_index(e));
      Quotient qq = quotient(g, subgroup_from_members(g, members));
      Subgroup qqw = whole_subgroup(qq.action());
      CHECK(!commutator_subgroup(qqw, qqw).is_trivial());
    }
  }
}

TEST_CASE("centralizer and center") {
  Group c6(6, {p(6, "(1 2 3 4 5 6)")}, "C6");
  CHECK(center(c6).order() == 6);
  CHECK(center(s3()).order() == 1);

  Group g = s4();
  Subgroup v4 = sub(g, {"(1 2)(3 4)", "(1 3)(2 4)"});
  Subgroup c = centralizer(g, v4);
  CHECK(c == v4);
}

TEST_CASE("intersection") {
  Group g = s3();
  Subgroup a3 = sub(g, {"(1 2 3)"});
  CHECK(intersect(a3, a3) == a3);
  CHECK(intersect(a3, sub(g, {"(1 2)"})).order() == 1);

  Group h = s4();
  Subgroup a4_in_s4 = sub(h, {"(1 2 3)", "(1 2 4)"});
  Subgroup syl2 = sub(h, {"(1 2 3 4)", "(1 3)"});
  REQUIRE(syl2.order() == 8);
  Subgroup meet = intersect(a4_in_s4, syl2);
  CHECK(meet.order() == 4);
  CHECK(meet == sub(h, {"(1 2)(3 4)", "(1 3)(2 4)"}));
}

TEST_CASE("normality") {
  Group g = s3();
  CHECK(is_normal(g, center(g)));
  CHECK(!is_normal(g, sub(g, {"(1 2)"})));
  Group h = s4();
  CHECK(is_normal(h, sub(h, {"(1 2)(3 4)", "(1 3)(2 4)"})));
}

TEST_CASE("quotient basics") {
  Group g = s4();
  Subgroup whole = whole_subgroup(g);
  CHECK(quotient(g, whole).action().order() == 1);

  Subgroup v4 = sub(g, {"(1 2)(3 4)", "(1 3)(2 4)"});
  Quotient q = quotient(g, v4);
  CHECK(q.action().order() == 6);
  CHECK(q.action().degree() == 6);
  // order/exponent profile of S3: order 6, exponent 6, nonabelian
  Subgroup qw = whole_subgroup(q.action());
  unsigned exp = 1;
  for (ElementIndex i = 0; i < q.action().order(); ++i)
    exp = std::lcm(exp, q.action().element_order(i));
  CHECK(exp == 6);
  CHECK(!commutator_subgroup(qw, qw).is_trivial());

  Group h = s3();
  CHECK(quotient(h, sub(h, {"(1 2 3)"})).action().order() == 2);
  CHECK_THROWS_AS(quotient(h, sub(h, {"(1 2)"})), Error);
}

TEST_CASE("quotient projection is a surjective homomorphism with kernel N") {
  Group g = s4();
  Subgroup v4 = sub(g, {"(1 2)(3 4)", "(1 3)(2 4)"});
  Quotient q = quotient(g, v4);
  CHECK(q.action().order() * v4.order() == g.order());
  for (Point c = 0; c < q.num_cosets(); ++c)
    CHECK(q.project(q.section(c)) == c);
  for (ElementIndex a = 0; a < g.order(); ++a) {
    for (ElementIndex b = 0; b < g.order(); ++b) {
      ElementIndex ab = g.mul(a, b);
      CHECK(q.project_to_action(ab) ==
            q.action().mul(q.project_to_action(a), q.project_to_action(b)));
    }
    // kernel of the projection is exactly N
    bool in_kernel =
        q.project_to_action(a) == q.action().identity_index();
    CHECK(in_kernel == v4.contains(a));
  }
}

TEST_CASE("image in quotient") {
  Group g = s4();
  Subgroup v4 = sub(g, {"(1 2)(3 4)", "(1 3)(2 4)"});
  Quotient q = quotient(g, v4);
  CHECK(image_in_quotient(q, v4).order() == 1);
  Subgroup a4_in_s4 = sub(g, {"(1 2 3)", "(1 2 4)"});
  CHECK(image_in_quotient(q, a4_in_s4).order() == 3);
  CHECK(image_in_quotient(q, whole_subgroup(g)).order() == 6);

  // image of generators equals projection of the full element set
  Subgroup img = image_in_quotient(q, a4_in_s4);
  std::set<Perm> expect;
  for (std::size_t k = 0; k < a4_in_s4.order(); ++k)
    expect.insert(q.project_perm(a4_in_s4.element(k)));
  CHECK(oracles::to_perm_set(img) == expect);
}

TEST_CASE("preimage undoes projection") {
  Group g = s4();
  Subgroup v4 = sub(g, {"(1 2)(3 4)", "(1 3)(2 4)"});
  Quotient q = quotient(g, v4);
  Subgroup img = image_in_quotient(q, sub(g, {"(1 2 3)", "(1 2 4)"}));
  Subgroup pre = preimage_in_parent(q, img);
  CHECK(pre.order() == 12);
  CHECK(pre == sub(g, {"(1 2 3)", "(1 2 4)"}));
}

TEST_CASE("frattini subgroup of p-groups") {
  // elementary abelian: trivial Frattini subgroup
  Group e8(8, {p(8, "(1 2)(3 4)(5 6)(7 8)"), p(8, "(1 3)(2 4)(5 7)(6 8)"),
               p(8, "(1 5)(2 6)(3 7)(4 8)")},
           "E2^3");
  REQUIRE(e8.order() == 8);
  CHECK(frattini_p(whole_subgroup(e8)).order() == 1);

  // C4: squares generate the order-2 subgroup
  Group c4(4, {p(4, "(1 2 3 4)")}, "C4");
  Subgroup phi = frattini_p(whole_subgroup(c4));
  CHECK(phi.order() == 2);

  // Q8 in its regular representation: Frattini = center, order 2
  Group q8(8, {Perm(std::vector<Point>{2, 3, 1, 0, 7, 6, 4, 5}),
               Perm(std::vector<Point>{4, 5, 6, 7, 1, 0, 3, 2})},
           "Q8");
  REQUIRE(q8.order() == 8);
  Subgroup q8_phi = frattini_p(whole_subgroup(q8));
  CHECK(q8_phi.order() == 2);
  CHECK(q8_phi == center(q8));

  // quotient by the Frattini subgroup is elementary abelian
  for (Group g : {c4, q8}) {
    Subgroup f = frattini_p(whole_subgroup(g));
    CHECK(is_normal(g, f));
    Quotient q = quotient(g, f);
    Subgroup qw = whole_subgroup(q.action());
    CHECK(commutator_subgroup(qw, qw).is_trivial());
    for (ElementIndex i = 0; i < q.action().order(); ++i)
      CHECK(q.action().element_order(i) <= 2);
  }

  // not a p-group
  CHECK_THROWS_AS(frattini_p(whole_subgroup(s3())), Error);
}

TEST_SUITE_END();
