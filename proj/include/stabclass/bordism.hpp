#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabclass/hypothesis.hpp"
#include "stabclass/linalg.hpp"

namespace stabclass {

/// Raised for requests outside the tabulated data or failed preconditions
/// of the classification pipeline.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Category { Smooth, Topological };
/// Normal 1-types of unorientable 4-manifolds with the given fundamental
/// group, named by the normal bundle's w2.
enum class Flavor { AlmostSpinPinPlus, AlmostSpinPinMinus, TotallyNonSpin };

std::string to_string(Category c);
std::string to_string(Flavor f);
Category parse_category(const std::string& s);

struct BordismEntry {
  AbelianGroup group;
  std::string citation;
  /// Named generators of the cyclic summands, in invariant-factor order (may be empty).
  std::vector<std::string> generators;
};

struct CoefficientTable {
  std::string structure;
  Category category = Category::Smooth;
  std::map<std::size_t, BordismEntry> degrees;
};

const std::vector<std::string>& structure_names();
const CoefficientTable& coefficient_table(const std::string& structure);
/// Throws DomainError for an unknown structure or untabulated degree.
const BordismEntry& bordism_group(const std::string& structure, std::size_t degree);

struct ThomIdentification {
  Category category = Category::Smooth;
  Flavor flavor = Flavor::TotallyNonSpin;
  std::string structure;          // tangential structure whose bordism computes Omega^xi
  std::string normal_structure;   // the same structure named on the stable normal bundle
  std::string realizing_bundle;   // sigma - 1 or 3 sigma - 3 over BZ/2
  std::string thom_spectrum;
  std::string tangent_normal_note;
  std::string citation;
};

/// Requires an applicable hypothesis report with a quotient of order 2.
ThomIdentification identify_thom(Category category, Flavor flavor, const HypothesisReport& report);

/// Smooth pin+ bordism Z/16 -> topological pin+ bordism Z/8 + Z/2, k -> (k mod 8, 0).
std::vector<Integer> smooth_to_top_pin_plus(const Integer& k);

}  // namespace stabclass
