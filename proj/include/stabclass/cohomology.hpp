#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "stabclass/group.hpp"
#include "stabclass/linalg.hpp"
#include "stabclass/resolution.hpp"

namespace stabclass {

/// H^n(G; M) for 0 <= n <= r.degree.
AbelianGroup cohomology(const Resolution& r, const GModule& m, std::size_t n);
std::vector<AbelianGroup> cohomology_range(const Resolution& r, const GModule& m, std::size_t max_n);
/// Uses best_resolution(G, n).
AbelianGroup cohomology(const GModule& m, std::size_t n);

/// H_n(G; M) for 0 <= n <= r.degree.
AbelianGroup homology(const Resolution& r, const GModule& m, std::size_t n);
std::vector<AbelianGroup> homology_range(const Resolution& r, const GModule& m, std::size_t max_n);
AbelianGroup homology(const GModule& m, std::size_t n);

/// dim H^n(G; F_2) for n = 0..max_n, from best_resolution.
std::vector<std::size_t> mod2_dimensions(const FiniteGroup& g, std::size_t max_n);

/// Normalized bar cochains with F_2 coefficients in degrees 0..top, with
/// coboundaries and echelon bases of the coboundary spaces.
class Mod2BarCochains {
 public:
  /// Needs the bar resolution through degree top (d_top), i.e. coboundaries
  /// into degree top; coboundaries out of degree top are built only if
  /// with_cocycles is set.
  Mod2BarCochains(const FiniteGroup& g, std::size_t top, bool with_cocycles);

  const FiniteGroup& group() const { return group_; }
  std::size_t top() const { return top_; }
  std::size_t dim(std::size_t n) const { return dims_[n]; }
  /// delta^n : C^n -> C^{n+1}, rows indexed by (n+1)-tuples.
  const F2Matrix& coboundary(std::size_t n) const { return delta_[n]; }
  bool has_coboundary(std::size_t n) const { return n < delta_.size(); }
  /// Echelon basis of im(delta^{n-1}) inside C^n.
  const F2Echelon& boundaries(std::size_t n) const { return images_[n]; }
  bool is_cocycle(const F2Vector& f, std::size_t n) const;

  std::size_t tuple_index(const std::vector<Element>& tuple) const;

 private:
  FiniteGroup group_;
  std::size_t top_;
  std::vector<std::size_t> dims_;
  std::vector<F2Matrix> delta_;
  std::vector<F2Echelon> images_;
};

/// H^*(G; F_2) in degrees 0..N with cup products from the Alexander-Whitney
/// diagonal on normalized bar cochains.
struct CohomologyRingSlice {
  std::string group;
  std::size_t max_degree = 0;
  std::vector<std::size_t> dims;
  /// basis[n][i]: a cocycle representative, reduced modulo coboundaries.
  std::vector<std::vector<F2Vector>> basis;
  /// products[{p, i, q, j}] = coordinates of basis[p][i] * basis[q][j], p+q <= N.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::vector<int>> products;

  const std::vector<int>& product(std::size_t p, std::size_t i, std::size_t q, std::size_t j) const {
    return products.at({p, i, q, j});
  }
};

/// Coordinates of a cocycle class with respect to chosen representatives.
class ClassCoordinates {
 public:
  ClassCoordinates(const F2Echelon& boundaries, std::vector<F2Vector> reps);
  /// Coordinates of the class of a cocycle; throws if it is not in the span.
  std::vector<int> coordinates(const F2Vector& cocycle) const;

 private:
  const F2Echelon* boundaries_;
  std::vector<F2Vector> pivoted_;     // reduced reps in echelon form
  std::vector<std::uint64_t> combos_; // which original reps each row combines
  std::size_t count_;
};

F2Vector cup_product(const F2Vector& f, std::size_t p, const F2Vector& g, std::size_t q, std::size_t base);

CohomologyRingSlice mod2_ring(const FiniteGroup& g, std::size_t max_degree);

/// Inflation phi^*: H^*(P; F_2) -> H^*(G; F_2) in degrees 0..N.
struct InflationMap {
  std::string source;  // G
  std::string target;  // P
  std::size_t max_degree = 0;
  std::vector<std::size_t> target_dims;  // dim H^n(P)
  std::vector<std::size_t> source_dims;  // dim H^n(G)
  std::vector<bool> injective;
  std::vector<bool> isomorphism;
  bool cup_compatible = false;
  std::size_t cup_pairs_checked = 0;
  /// Matrices in the ring bases (rows: G basis, cols: P basis) when G's ring is feasible.
  std::optional<std::vector<std::vector<std::vector<int>>>> matrices;

  bool isomorphism_in_range() const;
};

InflationMap inflation_map(const GroupHom& phi, std::size_t max_degree);

/// Pullback of a normalized bar cochain along phi (given as tuples of the target).
F2Vector pullback_cochain(const GroupHom& phi, const F2Vector& f, std::size_t n);

/// Cohomology H^q(K; Z) with the action of automorphisms of K, each acting
/// by f -> f o a^{-1}. Generators follow the invariant-factor decomposition.
struct CohomologyWithAction {
  AbelianGroup group;
  std::vector<IntMatrix> action;
};

/// Bar-resolution computation; throws FeasibilityError when the cochain
/// dimension exceeds dense_limit.
CohomologyWithAction cohomology_with_action(const FiniteGroup& k, const std::vector<std::vector<Element>>& autos,
                                            std::size_t q, std::size_t dense_limit = 1200);

}  // namespace stabclass
