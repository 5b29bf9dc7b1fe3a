#include <map>

#include "doctest.h"
#include "stabclass/manifold.hpp"

using namespace stabclass;

namespace {

// Truncated polynomials over F_2 in two variables: coefficient map from
// exponent pairs, with a^3 = b^3 = 0 or a^5 = 0.
using Poly = std::map<std::pair<int, int>, int>;

Poly mul(const Poly& x, const Poly& y, int amax, int bmax) {
  Poly out;
  for (const auto& [e1, c1] : x)
    for (const auto& [e2, c2] : y) {
      const int a = e1.first + e2.first, b = e1.second + e2.second;
      if (a > amax || b > bmax) continue;
      out[{a, b}] ^= (c1 & c2);
    }
  return out;
}

int degree_part_nonzero(const Poly& p, int deg) {
  int any = 0;
  for (const auto& [e, c] : p)
    if (e.first + e.second == deg) any |= c;
  return any;
}

Poly degree_part(const Poly& p, int deg) {
  Poly out;
  for (const auto& [e, c] : p)
    if (e.first + e.second == deg && c) out[e] = 1;
  return out;
}

}  // namespace

TEST_CASE("Stiefel-Whitney numbers from total class polynomials") {
  // RP4: w = (1+a)^5 with a^5 = 0.
  Poly w{{{0, 0}, 1}};
  for (int i = 0; i < 5; ++i) w = mul(w, Poly{{{0, 0}, 1}, {{1, 0}, 1}}, 4, 0);
  const Poly w2 = degree_part(w, 2);
  const int w2sq = degree_part_nonzero(mul(w2, w2, 4, 0), 4);
  const int w4 = degree_part_nonzero(w, 4);
  const auto rp4 = generator_invariants(Generator::RP4, PinSign::None, Category::Smooth, Structure::None);
  CHECK(rp4.w2sq == w2sq);
  CHECK(rp4.w4 == w4);
  CHECK(w4 == 1);
  // RP2xRP2: w = (1+a+a^2)(1+b+b^2) with a^3 = b^3 = 0.
  const Poly wa{{{0, 0}, 1}, {{1, 0}, 1}, {{2, 0}, 1}}, wb{{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}};
  const Poly wp = mul(wa, wb, 2, 2);
  const Poly wp2 = degree_part(wp, 2);
  const auto rr = generator_invariants(Generator::RP2xRP2, PinSign::None, Category::Smooth, Structure::None);
  CHECK(rr.w2sq == degree_part_nonzero(mul(wp2, wp2, 2, 2), 4));
  CHECK(rr.w4 == degree_part_nonzero(wp, 4));
  CHECK(rr.w2sq == 1);
}

TEST_CASE("E8 characteristic numbers from its intersection form") {
  // Cartan matrix of E8.
  std::vector<std::vector<int>> q(8, std::vector<int>(8, 0));
  for (int i = 0; i < 8; ++i) q[i][i] = 2;
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  for (auto [i, j] : edges) q[i][j] = q[j][i] = -1;
  // Wu class v2 is characterized by x.x = v2.x mod 2; an even form forces v2 = 0,
  // and then w2 = v2 + w1^2 = 0 on a simply connected manifold.
  bool even = true;
  for (int i = 0; i < 8; ++i) even = even && q[i][i] % 2 == 0;
  CHECK(even);
  // w4 is the mod 2 Euler characteristic: 2 + b2 = 10.
  const int euler = 2 + 8;
  const auto e8 = generator_invariants(Generator::E8, PinSign::None, Category::Topological, Structure::None);
  CHECK(e8.w2sq == 0);
  CHECK(e8.w4 == euler % 2);
  CHECK(e8.ks == 1);
  CHECK_THROWS_AS(generator_invariants(Generator::E8, PinSign::None, Category::Smooth, Structure::None), DomainError);
}

TEST_CASE("generator invariants") {
  CHECK(generator_invariants(Generator::RP4, PinSign::Plus, Category::Smooth, Structure::PinPlus).eta == 1);
  CHECK(generator_invariants(Generator::RP4, PinSign::Minus, Category::Smooth, Structure::PinPlus).eta == 15);
  CHECK(generator_invariants(Generator::Q, PinSign::Plus, Category::Smooth, Structure::PinPlus).eta == 9);
  CHECK(generator_invariants(Generator::Q, PinSign::Minus, Category::Smooth, Structure::PinPlus).eta == 7);
  CHECK(generator_invariants(Generator::RP4, PinSign::Plus, Category::Topological, Structure::PinPlus).s_inv == 1);
  CHECK_FALSE(generator_invariants(Generator::RP4, PinSign::Plus, Category::Topological, Structure::PinPlus).eta.has_value());
  CHECK_FALSE(generator_invariants(Generator::RP4, PinSign::Plus, Category::Smooth, Structure::PinPlus).ks.has_value());
  CHECK_THROWS_AS(generator_invariants(Generator::RP4, PinSign::None, Category::Smooth, Structure::PinMinus), DomainError);
  CHECK_THROWS_AS(generator_invariants(Generator::RP2xRP2, PinSign::None, Category::Smooth, Structure::PinPlus), DomainError);
}

TEST_CASE("expressions and additivity") {
  const auto e = parse_manifold("RP4(+) # S2xS2", Category::Smooth);
  CHECK(e.to_string() == "RP4(+) # S2xS2");
  CHECK(invariant_vector(e, Structure::PinPlus).eta == 1);
  const auto t = parse_manifold("RP4(+) # E8", Category::Topological);
  const auto v = invariant_vector(t, Structure::PinPlus);
  CHECK(v.ks == 1);
  CHECK(v.s_inv == 1);
  CHECK(invariant_vector(parse_manifold("S4", Category::Smooth), Structure::None) == InvariantVector{});
  for (const char* s : {"RP4(-)", "Q(+) # S2xS2", "RP2xRP2", "E8 # E8", "S2xS2"}) {
    const auto x = parse_manifold(s, Category::Topological);
    auto y = x;
    y.summands.push_back(Generator::S4);
    CHECK(invariant_vector(x, Structure::None) == invariant_vector(y, Structure::None));
  }
  CHECK_THROWS_AS(parse_manifold("E8", Category::Smooth), DomainError);
  CHECK_THROWS_AS(parse_manifold("S4 # RP4", Category::Smooth), DomainError);
  CHECK_THROWS_AS(parse_manifold("S2xS2(+)", Category::Smooth), DomainError);
  CHECK_THROWS_AS(parse_manifold("CP2", Category::Smooth), DomainError);
  CHECK_THROWS_AS(parse_manifold("RP4 # ", Category::Smooth), DomainError);
}

TEST_CASE("RP4 versus the fake RP4") {
  const auto smooth = stably_equivalent(parse_manifold("RP4", Category::Smooth), parse_manifold("Q", Category::Smooth),
                                        Structure::PinPlus);
  CHECK_FALSE(smooth.equivalent);
  CHECK(smooth.relation == "not stably diffeomorphic");
  CHECK(smooth.witness.front().find("{1,15} != {7,9}") != std::string::npos);
  const auto top = stably_equivalent(parse_manifold("RP4(+)", Category::Topological),
                                     parse_manifold("Q(+)", Category::Topological), Structure::PinPlus);
  CHECK(top.equivalent);
  CHECK(top.relation == "stably homeomorphic");
  CHECK(stably_equivalent(parse_manifold("RP4(+)", Category::Smooth), parse_manifold("RP4(-)", Category::Smooth),
                          Structure::PinPlus)
            .equivalent);
  CHECK(stably_equivalent(parse_manifold("RP2xRP2", Category::Topological),
                          parse_manifold("RP2xRP2 # S2xS2 # S2xS2", Category::Topological), Structure::None)
            .equivalent);
  CHECK_FALSE(stably_equivalent(parse_manifold("RP4", Category::Topological), parse_manifold("RP4 # E8", Category::Topological),
                                Structure::PinPlus)
                  .equivalent);
  CHECK(sign_orbit(9, 16) == std::vector<int>{7, 9});
  CHECK(sign_orbit(8, 16) == std::vector<int>{8});
}

TEST_CASE("independence matrix has full rank over F_2") {
  auto m = independence_matrix();
  REQUIRE(m.size() == 3);
  // Gaussian elimination over F_2.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 3 && rank < 3; ++col) {
    std::size_t piv = rank;
    while (piv < 3 && m[piv][col] == 0) ++piv;
    if (piv == 3) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < 3; ++r)
      if (r != rank && m[r][col])
        for (std::size_t c = 0; c < 3; ++c) m[r][c] ^= m[rank][c];
    ++rank;
  }
  CHECK(rank == 3);
}
