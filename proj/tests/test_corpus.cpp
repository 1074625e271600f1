#include <doctest.h>

#include <set>

#include "engelkit/corpus.hpp"
#include "engelkit/structure.hpp"

using namespace engelkit;

TEST_SUITE_BEGIN("corpus");

TEST_CASE("builtin orders match their closed forms") {
  CHECK(builtin("cyclic(1)").order() == 1);
  CHECK(builtin("cyclic(7)").order() == 7);
  CHECK(builtin("dihedral(4)").order() == 8);
  CHECK(builtin("dihedral(6)").order() == 12);
  CHECK(builtin("symmetric(4)").order() == 24);
  CHECK(builtin("symmetric(6)").order() == 720);
  CHECK(builtin("alternating(4)").order() == 12);
  CHECK(builtin("alternating(6)").order() == 360);
  CHECK(builtin("klein4").order() == 4);
  CHECK(builtin("quaternion8").order() == 8);
  CHECK(builtin("elem_abelian(2,3)").order() == 8);
  CHECK(builtin("elem_abelian(3,2)").order() == 9);
  CHECK(builtin("frobenius(7,3)").order() == 21);
  CHECK(builtin("frobenius(11,5)").order() == 55);
  CHECK(builtin("wreath_c2_c2").order() == 8);
  CHECK(builtin("direct_product(symmetric(3),cyclic(2))").order() == 12);
  CHECK(builtin("direct_product(dihedral(4),symmetric(3))").order() == 48);
}

TEST_CASE("frobenius groups use the affine action") {
  Group f = builtin("frobenius(7,3)");
  CHECK(f.degree() == 7);
  CHECK(f.order() == 21);
  REQUIRE(f.generators().size() == 2);
  // x -> x+1 and x -> 2x on Z_7 (2 has multiplicative order 3 mod 7)
  const Perm& trans = f.generators()[0];
  const Perm& mult = f.generators()[1];
  for (Point x = 0; x < 7; ++x) {
    CHECK(trans[x] == (x + 1) % 7);
    CHECK(mult[x] == (2 * x) % 7);
  }
  CHECK(mult.order() == 3);

  CHECK_THROWS_AS(builtin("frobenius(7,4)"), Error); // 4 does not divide 6
  CHECK_THROWS_AS(builtin("frobenius(9,2)"), Error); // 9 not prime
}

TEST_CASE("builtin structural spot checks") {
  CHECK(is_nilpotent(whole_subgroup(builtin("quaternion8"))));
  CHECK(is_nilpotent(whole_subgroup(builtin("wreath_c2_c2"))));
  CHECK(is_abelian(whole_subgroup(builtin("elem_abelian(3,2)"))));
  CHECK(!is_abelian(whole_subgroup(builtin("quaternion8"))));
  CHECK(exponent(whole_subgroup(builtin("elem_abelian(2,3)"))) == 2);
  // Q8: a single involution
  Group q8 = builtin("quaternion8");
  std::size_t involutions = 0;
  for (ElementIndex i = 0; i < q8.order(); ++i)
    if (q8.element_order(i) == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("unknown constructors and bad parameters") {
  CHECK_THROWS_AS(builtin("nosuch(3)"), Error);
  CHECK_THROWS_AS(builtin("symmetric(7)"), Error);
  CHECK_THROWS_AS(builtin("alternating(2)"), Error);
  CHECK_THROWS_AS(builtin("dihedral(2)"), Error);
  CHECK_THROWS_AS(builtin("elem_abelian(4,2)"), Error);
  CHECK_THROWS_AS(builtin("cyclic(x)"), Error);
  CHECK_THROWS_AS(builtin("cyclic"), Error);
}

TEST_CASE("default corpus contents") {
  std::vector<Group> corpus = default_corpus();
  CHECK(corpus.size() == 31);

  std::set<std::string> labels;
  bool has_s4 = false, has_f73 = false, has_c12 = false, has_s3 = false;
  for (const Group& g : corpus) {
    CHECK(g.order() <= 720);
    CHECK(labels.insert(g.label()).second); // unique labels
    if (g.label() == "S4") {
      has_s4 = true;
      CHECK(g.order() == 24);
    }
    if (g.label() == "F7:3") {
      has_f73 = true;
      CHECK(g.order() == 21);
    }
    if (g.label() == "C12") has_c12 = true;
    if (g.label() == "S3") has_s3 = true;
  }
  CHECK(has_s4);
  CHECK(has_f73);
  CHECK(has_c12);
  CHECK(has_s3);

  // the catalog mirrors the corpus labels in order
  auto catalog = corpus_catalog();
  REQUIRE(catalog.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    CHECK(catalog[i].first == corpus[i].label());
}

TEST_CASE("group files parse") {
  GroupSpec spec = parse_group_file("name=T\ndegree=3\ngens=(1 2),(1 2 3)\n");
  CHECK(spec.name == "T");
  CHECK(spec.degree == 3);
  CHECK(load(spec).order() == 6);

  GroupSpec idspec = parse_group_file("name=I\ndegree=5\ngens=id\n");
  Group idg = load(idspec);
  CHECK(idg.order() == 1);
  CHECK(idg.degree() == 5);

  GroupSpec commented = parse_group_file(
      "# comment line\nname=V\n degree=4 # trailing\ngens=(1 2)(3 4),(1 3)(2 4)\n");
  CHECK(load(commented).order() == 4);
}

TEST_CASE("group file errors carry positions") {
  CHECK_THROWS_AS(parse_group_file("degree=3\ngens=(1 2(3)\n"), ParseError);
  try {
    parse_group_file("degree=3\ngens=(1 2(3)\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 5);
  }
  CHECK_THROWS_AS(parse_group_file("degree=2\ngens=(1 3)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("gens=(1 2)\n"), ParseError); // no degree
  CHECK_THROWS_AS(parse_group_file("degree=3\n"), ParseError);   // no gens
  CHECK_THROWS_AS(parse_group_file("degree=0\ngens=id\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("what=3\n"), ParseError);
}

TEST_CASE("render/parse round trip") {
  for (const char* text :
       {"name=T\ndegree=3\ngens=(1 2),(1 2 3)\n",
        "name=I\ndegree=5\ngens=id\n",
        "name=V4\ndegree=4\ngens=(1 2)(3 4),(1 3)(2 4)\n"}) {
    GroupSpec spec = parse_group_file(text);
    GroupSpec again = parse_group_file(render_group_file(spec));
    CHECK(again.name == spec.name);
    CHECK(again.degree == spec.degree);
    CHECK(again.generator_strings == spec.generator_strings);
    CHECK(load(again).order() == load(spec).order());
  }
}

TEST_CASE("selector resolution") {
  CHECK(resolve_group("S4").order() == 24);
  CHECK(resolve_group("F7:3").order() == 21);
  CHECK(resolve_group("frobenius(7,3)").order() == 21);
  CHECK(resolve_group("cyclic(9)").order() == 9);
  CHECK_THROWS_AS(resolve_group("nonexistent-thing"), Error);
}

TEST_SUITE_END();
