#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabclass/bordism.hpp"

namespace stabclass {

enum class Generator { RP4, Q, RP2xRP2, E8, S4, S2xS2 };
enum class PinSign { None, Plus, Minus };
/// Tangential structure under which manifolds are compared.
enum class Structure { PinPlus, PinMinus, None };

std::string to_string(Generator g);
std::string to_string(Structure s);
Structure parse_structure(const std::string& s);

/// base # summand # summand ...; only the base may carry a pin sign.
struct ManifoldExpr {
  Generator base = Generator::S4;
  PinSign sign = PinSign::None;
  std::vector<Generator> summands;
  Category category = Category::Smooth;

  std::string to_string() const;
};

/// Grammar: `RP4(+) # S2xS2 # S2xS2`, `Q(-)`, `E8`, `RP2xRP2`, `S4`.
ManifoldExpr parse_manifold(const std::string& text, Category category);

/// Values are residues; an absent optional means the invariant is undefined
/// for the declared structure and category.
struct InvariantVector {
  std::optional<int> eta;    // Z/16, smooth pin+
  std::optional<int> s_inv;  // Z/8, topological pin+
  std::optional<int> ks;     // Z/2, topological
  int w4 = 0;                // Z/2
  int w2sq = 0;              // Z/2

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

/// Whether the generator admits the given tangential structure.
bool admits(Generator g, Structure s);

InvariantVector generator_invariants(Generator g, PinSign sign, Category category, Structure structure);

/// Sum over connected summands; connected sum is bordant to disjoint union.
InvariantVector invariant_vector(const ManifoldExpr& e, Structure structure);

struct Comparison {
  bool equivalent = false;
  std::string relation;  // "stably diffeomorphic" / "stably homeomorphic" (possibly negated)
  InvariantVector first, second;
  std::vector<std::string> witness;
  std::vector<std::string> caveats;
};

Comparison stably_equivalent(const ManifoldExpr& a, const ManifoldExpr& b, Structure structure);

/// Orbit of a residue under x ~ -x, as a sorted set of residues.
std::vector<int> sign_orbit(int value, int modulus);

/// Rows RP4, RP2xRP2, E8 evaluated on (w2sq, w4, ks), topological category.
std::vector<std::vector<int>> independence_matrix();

}  // namespace stabclass
