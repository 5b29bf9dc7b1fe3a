#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabclass/group.hpp"
#include "stabclass/linalg.hpp"

namespace stabclass {

/// Raised when a requested computation exceeds the configured size bound.
class FeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum total number of free generators a resolution may have. Defaults to
/// 10^6; the environment variable STABCLASS_MAX_GENERATORS overrides it.
std::size_t feasibility_bound();

/// A finitely generated Z[G]-module presented as Z^k / im(relations), with an
/// integer matrix for the action of every group element on the generators.
struct GModule {
  FiniteGroup group;
  std::size_t generators = 0;
  IntMatrix relations;             // generators x (#relations)
  std::vector<IntMatrix> action;   // indexed by group element, generators x generators

  AbelianGroup underlying() const;
  /// p if the relations are exactly p times the identity for a prime p, else 0.
  unsigned elementary_prime() const;
  bool is_free() const { return relations.cols() == 0; }
};

/// Checks that the identity acts trivially, the relations are preserved and
/// the action is multiplicative modulo relations. Throws GroupError.
void validate_module(const GModule& m);

GModule trivial_module(const FiniteGroup& g, const AbelianGroup& a);
GModule twisted_integers(const Character2& alpha);
/// M tensored with Z_alpha: every action matrix is multiplied by (-1)^alpha(g).
GModule twist(const GModule& m, const Character2& alpha);
GModule pullback_module(const GroupHom& phi, const GModule& m);

/// A term coeff * g * e_row appearing in the boundary of e_col.
struct RingTerm {
  std::uint32_t row;
  std::uint32_t col;
  Element g;
  long coeff;
};

/// Truncated free resolution F_{N+1} -> ... -> F_0 -> Z over Z[G].
/// boundary[n] lists the terms of d_n : F_n -> F_{n-1} for 1 <= n <= N+1.
struct Resolution {
  FiniteGroup group;
  std::size_t degree = 0;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<RingTerm>> boundary;
  std::string kind;

  std::size_t total_generators() const;
};

/// Verifies d_n d_{n+1} = 0 in the group ring for all n and that d_1 lands in
/// the augmentation ideal. Returns false on failure.
bool check_resolution(const Resolution& r);

/// Normalized bar resolution, carrying d_1 .. d_{N+1}. Tuples [g1|...|gn]
/// of non-identity elements are indexed in base |G|-1 with g1 most significant.
Resolution bar_resolution(const FiniteGroup& g, std::size_t n);
/// 2-periodic resolution of a cyclic group, generator chosen as the least
/// element of full order.
Resolution periodic_resolution(const FiniteGroup& g, std::size_t n);
/// Tensor product of resolutions of A and B, a resolution of A x B with
/// element (a, b) at index a * |B| + b.
Resolution tensor_resolution(const Resolution& a, const Resolution& b, const FiniteGroup& product);
/// Periodic for cyclic groups, tensor products along recorded direct-product
/// factors, bar otherwise.
Resolution best_resolution(const FiniteGroup& g, std::size_t n);

/// Coboundary d^n : Hom(F_n, M) -> Hom(F_{n+1}, M) in generator coordinates.
IntMatrix coboundary_matrix(const Resolution& r, const GModule& m, std::size_t n);
/// Boundary F_n (x) M -> F_{n-1} (x) M for 1 <= n <= N+1.
IntMatrix chain_boundary_matrix(const Resolution& r, const GModule& m, std::size_t n);

}  // namespace stabclass
