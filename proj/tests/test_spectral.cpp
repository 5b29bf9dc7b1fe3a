#include "doctest.h"
#include "stabclass/bordism.hpp"
#include "stabclass/cohomology.hpp"
#include "stabclass/spectral.hpp"

using namespace stabclass;

namespace {

E2Page twisted_lhs(const char* name, std::size_t range) {
  const auto g = parse_group(name);
  const auto c = odd_normal_complement(g);
  return lhs_e2_page(g, *c, orientation_characters(c->p.group).front(), range);
}

}  // namespace

TEST_CASE("twisted LHS page has a vanishing p=0 column") {
  for (const char* s : {"C2", "C6", "C10", "C2xC3xC3"}) {
    CAPTURE(s);
    const auto page = twisted_lhs(s, 4);
    for (std::size_t q = 0; q <= 4; ++q) {
      REQUIRE(page.at(0, q).group.has_value());
      CHECK(page.at(0, q).group->is_zero());
    }
    // Row q=0 is the cohomology of C2 with twisted integers.
    CHECK(*page.at(1, 0).group == AbelianGroup::cyclic(2));
    CHECK(page.at(2, 0).group->is_zero());
  }
}

TEST_CASE("LHS page of a dihedral group notes the nontrivial action") {
  const auto page = twisted_lhs("D3", 4);
  CHECK_FALSE(page.notes.empty());
  CHECK_THROWS_AS(page.at(5, 0), DomainError);
}

TEST_CASE("untwisted LHS page over a central kernel") {
  const auto g = parse_group("C6");
  const auto c = odd_normal_complement(g);
  const auto page = lhs_e2_page(g, *c, trivial_character(c->p.group), 4);
  CHECK(*page.at(0, 2).group == AbelianGroup::cyclic(3));
  CHECK(*page.at(2, 0).group == AbelianGroup::cyclic(2));
  CHECK(page.at(1, 2).group->is_zero());
}

TEST_CASE("universal coefficients") {
  const std::vector<AbelianGroup> h{AbelianGroup::integers(), AbelianGroup::cyclic(2), AbelianGroup::zero()};
  const auto z2 = change_coefficients(h, AbelianGroup::cyclic(2));
  CHECK(z2[0] == AbelianGroup::cyclic(2));
  CHECK(z2[1] == AbelianGroup::cyclic(2));
  CHECK(z2[2] == AbelianGroup::cyclic(2));
  const auto z3 = change_coefficients(h, AbelianGroup::cyclic(3));
  CHECK(z3[1].is_zero());
  CHECK(z3[2].is_zero());
}

TEST_CASE("AHSS over the twisted Thom spectrum of C2") {
  const auto c2 = cyclic_group(2);
  const auto x = twisted_thom_homology(orientation_characters(c2).front(), 5);
  const auto stop = diagonal_report(ahss_e2_page(x, "STop", 5), 4);
  REQUIRE(stop.order_bound.has_value());
  CHECK(*stop.order_bound == 8);
  CHECK(stop.collapse);
  const auto so = diagonal_report(ahss_e2_page(x, "SO", 5), 4);
  CHECK(*so.order_bound == 4);
  CHECK(so.collapse);
  // Untwisted: BC2 with a disjoint basepoint has a free summand in degree 0.
  const auto plain = twisted_thom_homology(trivial_character(c2), 4);
  CHECK(plain[0] == AbelianGroup::integers());
  const auto d = diagonal_report(ahss_e2_page(plain, "SO", 4), 4);
  CHECK_FALSE(d.order_bound.has_value());
}

TEST_CASE("missing coefficients give unknown entries and block collapse") {
  const auto x = twisted_thom_homology(orientation_characters(cyclic_group(2)).front(), 6);
  const auto page = ahss_e2_page(x, "STop", 6);
  CHECK_FALSE(page.at(0, 5).group.has_value());
  const auto d = diagonal_report(page, 5);
  CHECK_FALSE(d.collapse);
  CHECK_FALSE(d.order_bound.has_value());
  CHECK_THROWS_AS(ahss_e2_page(x, "STop", 9), DomainError);
  CHECK_THROWS_AS(ahss_e2_page(x, "Nope", 3), DomainError);
}
