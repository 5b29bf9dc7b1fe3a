#pragma once

#include <string>
#include <vector>

#include "stabclass/bordism.hpp"
#include "stabclass/hypothesis.hpp"

namespace stabclass {

struct NormalOneType {
  Category category = Category::Smooth;
  Flavor flavor = Flavor::TotallyNonSpin;
  std::string group;
  ThomIdentification thom;
  std::string citation;
};

/// The three unorientable normal 1-types, ordered tangential pin+, tangential
/// pin-, totally non-spin. Throws DomainError if the hypothesis fails.
std::vector<NormalOneType> enumerate_normal_one_types(const FiniteGroup& g, Category category);
std::vector<NormalOneType> enumerate_normal_one_types(const HypothesisReport& report, Category category);

/// Element of a finite abelian group in invariant-factor coordinates.
using GroupElement = std::vector<Integer>;

struct OrbitStructure {
  std::string structure;
  AbelianGroup group;
  std::string action;                       // human-readable description
  std::vector<std::size_t> negated_factors; // factors on which the involution acts by -1
  std::vector<std::vector<GroupElement>> orbits;
  std::size_t burnside_count = 0;
};

/// Orbits of the automorphism action: x -> -x on the pin+-type summand, identity elsewhere.
OrbitStructure aut_orbits(const std::string& structure, const AbelianGroup& group);

struct ClassEntry {
  std::string label;
  std::vector<std::pair<std::string, std::string>> invariants;  // name -> value
  std::vector<GroupElement> orbit;
};

struct ClassificationTable {
  NormalOneType type;
  std::string structure;
  AbelianGroup bordism;
  OrbitStructure orbits;
  std::vector<ClassEntry> classes;
  std::string invariant_name;
  std::string completeness_citation;
  std::vector<std::string> citations;

  std::size_t count() const { return classes.size(); }
};

ClassificationTable stable_classes(const NormalOneType& type);

/// All three tables for a group in one category.
std::vector<ClassificationTable> classify(const FiniteGroup& g, Category category);

}  // namespace stabclass
