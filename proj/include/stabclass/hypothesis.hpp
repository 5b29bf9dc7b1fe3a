#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabclass/group.hpp"

namespace stabclass {

enum class ActionVerdictKind { ProvedTrivial, ProvedNontrivial, TrivialUpTo };
enum class Conclusion { Applicable, NotApplicable, Undetermined };

std::string to_string(ActionVerdictKind k);
std::string to_string(Conclusion c);

/// A cohomology class of K moved by the action of a coset representative.
struct ActionWitness {
  std::size_t degree = 0;
  Element rep = 0;              // element of G
  std::string cohomology;       // H^degree(K; Z) in invariant-factor form
  std::vector<long> class_coords;
  std::vector<long> image_coords;
  std::string description;
};

struct ActionVerdict {
  ActionVerdictKind kind = ActionVerdictKind::TrivialUpTo;
  std::size_t degree = 0;  // witness degree, or the bound for TrivialUpTo
  std::optional<ActionWitness> witness;
  std::string method;
};

struct HypothesisReport {
  std::string group;
  std::size_t order = 0;
  bool decomposed = false;
  std::string k_name, p_name;
  std::size_t k_order = 0, p_order = 0;
  bool k_abelian = false;
  std::optional<ActionVerdict> verdict;
  Conclusion conclusion = Conclusion::NotApplicable;
  std::vector<std::string> notes;

  bool applicable() const { return conclusion == Conclusion::Applicable; }
};

/// Decides whether P = G/K acts trivially on H^*(K; Z), exactly for abelian
/// K and up to degree max_degree otherwise.
ActionVerdict check_action_trivial(const FiniteGroup& g, const OddComplement& c, std::size_t max_degree = 4);

HypothesisReport thom_simplification_applicable(const FiniteGroup& g, std::size_t max_degree = 4);

}  // namespace stabclass
