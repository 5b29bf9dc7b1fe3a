#include "doctest.h"
#include "oracles.hpp"
#include "stabclass/group.hpp"

using namespace stabclass;

namespace {

bool associative(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (Element c = 0; c < g.order(); ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

}  // namespace

TEST_CASE("parse_group builds the named groups") {
  const auto c2 = parse_group("C2");
  CHECK(c2.order() == 2);
  const auto c3c2 = parse_group("C3xC2");
  CHECK(c3c2.order() == 6);
  CHECK(c3c2.is_abelian());
  CHECK(c3c2.cyclic_generator().has_value());
  for (const char* s : {"C1", "C7", "D4", "D5", "S3", "V4", "A4", "Q8", "F21", "C2xC3xC3", "D3xC5"}) {
    const auto g = parse_group(s);
    CAPTURE(s);
    CHECK(associative(g));
    for (Element a = 0; a < g.order(); ++a) {
      CHECK(g.mul(a, 0) == a);
      CHECK(g.mul(a, g.inv(a)) == 0);
    }
  }
}

TEST_CASE("permutation groups match a brute-force closure") {
  const auto d5 = parse_group("perm[(1 2 3 4 5), (2 5)(3 4)]");
  CHECK(d5.order() == oracle::permutation_closure_size({{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}));
  CHECK(d5.order() == 10);
  CHECK_FALSE(d5.is_abelian());
  const auto a4 = parse_group("A4");
  CHECK(a4.order() == oracle::permutation_closure_size({{1, 2, 0, 3}, {1, 0, 3, 2}}));
  const auto q8 = parse_group("Q8");
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
}

TEST_CASE("parse errors are reported") {
  CHECK_THROWS_AS(parse_group("Z7"), GroupError);
  CHECK_THROWS_AS(parse_group("C"), GroupError);
  CHECK_THROWS_AS(parse_group("perm[(1 2"), GroupError);
  CHECK_THROWS_AS(parse_group("perm3[(1 2 5)]"), GroupError);
  CHECK_THROWS_AS(parse_group("C2x"), GroupError);
}

TEST_CASE("orientation characters agree with brute-force index-2 subgroups") {
  CHECK(orientation_characters(parse_group("C3")).empty());
  const auto c6 = orientation_characters(parse_group("C6"));
  REQUIRE(c6.size() == 1);
  CHECK(c6[0].kernel.size() == 3);
  CHECK(orientation_characters(parse_group("C2xC2")).size() == 3);
  for (const char* s : {"C2", "C4", "C6", "V4", "D4", "Q8", "S3", "D5", "C2xC2xC2", "C2xC3xC3", "D6", "C10", "A4"}) {
    const auto g = parse_group(s);
    CAPTURE(s);
    auto chars = orientation_characters(g);
    std::vector<std::vector<Element>> kernels;
    for (const auto& c : chars) {
      kernels.push_back(c.kernel);
      CHECK(c.hom.is_surjective());
      for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b) CHECK((c.value(g.mul(a, b)) == ((c.value(a) + c.value(b)) % 2)));
    }
    std::sort(kernels.begin(), kernels.end());
    CHECK(kernels == oracle::index_two_subgroups(g));
  }
}

TEST_CASE("odd normal complement is the set of odd-order elements for |G| = 2 mod 4") {
  for (const auto& g : small_groups_2mod4(50)) {
    CAPTURE(g.name());
    CHECK(g.order() % 4 == 2);
    const auto c = odd_normal_complement(g);
    REQUIRE(c.has_value());
    CHECK(c->p.group.order() == 2);
    std::vector<Element> odd;
    for (Element x = 0; x < g.order(); ++x)
      if (g.element_order(x) % 2 == 1) odd.push_back(x);
    CHECK(c->kernel == odd);
    CHECK(is_normal(g, c->kernel));
  }
  const auto s4ish = odd_normal_complement(parse_group("A4"));
  CHECK_FALSE(s4ish.has_value());
}

TEST_CASE("catalog is sorted by order then name") {
  const auto groups = small_groups_2mod4(100);
  for (std::size_t i = 1; i < groups.size(); ++i) {
    const auto& a = groups[i - 1];
    const auto& b = groups[i];
    CHECK((a.order() < b.order() || (a.order() == b.order() && a.name() < b.name())));
  }
  CHECK(small_groups_2mod4(2).size() == 1);
}

TEST_CASE("homomorphisms are checked on all pairs") {
  const auto c4 = cyclic_group(4), c2 = cyclic_group(2);
  CHECK_NOTHROW(make_hom(c4, c2, {0, 1, 0, 1}));
  CHECK_THROWS_AS(make_hom(c4, c2, {0, 1, 1, 0}), GroupError);
}

TEST_CASE("conjugation action of the dihedral quotient inverts the rotations") {
  const auto d5 = parse_group("D5");
  const auto c = odd_normal_complement(d5);
  REQUIRE(c.has_value());
  const auto autos = conjugation_action(d5, c->k, c->p.coset_reps);
  std::size_t moved = 0;
  for (const auto& a : autos)
    if (!a.is_identity()) {
      ++moved;
      CHECK_FALSE(a.inner);
      for (Element x = 0; x < c->k.group.order(); ++x) CHECK(c->k.group.mul(x, a.images[x]) == 0);
    }
  CHECK(moved == 1);
  const auto c6 = parse_group("C6");
  const auto c6c = odd_normal_complement(c6);
  for (const auto& a : conjugation_action(c6, c6c->k, c6c->p.coset_reps)) CHECK(a.is_identity());
}

TEST_CASE("quotient by the odd kernel is cyclic of order 2") {
  const auto g = parse_group("C2xF21");
  const auto c = odd_normal_complement(g);
  REQUIRE(c.has_value());
  CHECK(c->k.group.order() == 21);
  CHECK_FALSE(c->k.group.is_abelian());
  const auto chi = character_from_complement(g, *c);
  CHECK(chi.kernel == c->kernel);
}
