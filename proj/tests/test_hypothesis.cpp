#include "doctest.h"
#include "stabclass/hypothesis.hpp"

using namespace stabclass;

TEST_CASE("groups with central odd kernel satisfy the hypothesis") {
  for (const char* s : {"C2", "C6", "C10", "C2xC3xC3", "C2xC5xC5", "C30"}) {
    CAPTURE(s);
    const auto r = thom_simplification_applicable(parse_group(s));
    CHECK(r.applicable());
    REQUIRE(r.verdict.has_value());
    CHECK(r.verdict->kind == ActionVerdictKind::ProvedTrivial);
    CHECK(r.p_order == 2);
  }
}

TEST_CASE("nonabelian kernel with inner action") {
  const auto r = thom_simplification_applicable(parse_group("C2xF21"));
  CHECK_FALSE(r.k_abelian);
  CHECK(r.k_order == 21);
  CHECK(r.applicable());
  CHECK(r.verdict->method.find("inner") != std::string::npos);
}

TEST_CASE("dihedral groups fail with a degree-2 witness") {
  for (const char* s : {"D3", "D5", "D7", "D3xC5"}) {
    CAPTURE(s);
    const auto r = thom_simplification_applicable(parse_group(s));
    CHECK(r.conclusion == Conclusion::NotApplicable);
    REQUIRE(r.verdict.has_value());
    CHECK(r.verdict->kind == ActionVerdictKind::ProvedNontrivial);
    CHECK(r.verdict->degree == 2);
    REQUIRE(r.verdict->witness.has_value());
    CHECK(r.verdict->witness->class_coords != r.verdict->witness->image_coords);
  }
  // Inversion on Z/5 acts on H^2 = Z/5 by -1 = 4.
  const auto w = *thom_simplification_applicable(parse_group("D5")).verdict->witness;
  CHECK(w.cohomology == "Z/5");
  CHECK(w.image_coords == std::vector<long>{4});
}

TEST_CASE("odd order and missing decompositions") {
  const auto odd = thom_simplification_applicable(parse_group("C15"));
  CHECK(odd.conclusion == Conclusion::NotApplicable);
  CHECK_FALSE(odd.verdict.has_value());
  const auto a4 = thom_simplification_applicable(parse_group("A4"));
  CHECK_FALSE(a4.decomposed);
  CHECK(a4.conclusion == Conclusion::NotApplicable);
}

TEST_CASE("verdict names") {
  CHECK(to_string(ActionVerdictKind::ProvedTrivial) == "proved_trivial");
  CHECK(to_string(Conclusion::Undetermined) == "undetermined");
}
