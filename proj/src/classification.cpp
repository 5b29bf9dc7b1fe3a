#include "stabclass/classification.hpp"

#include <algorithm>
#include <set>

#include "stabclass/manifold.hpp"

namespace stabclass {

std::vector<NormalOneType> enumerate_normal_one_types(const FiniteGroup& g, Category category) {
  return enumerate_normal_one_types(thom_simplification_applicable(g), category);
}

std::vector<NormalOneType> enumerate_normal_one_types(const HypothesisReport& report, Category category) {
  if (report.order % 4 != 2)
    throw DomainError("classification requires |G| = 2 mod 4; " + report.group + " has order " + std::to_string(report.order));
  if (!report.applicable()) {
    std::string why = "hypothesis fails for " + report.group + ": " + to_string(report.conclusion);
    if (report.verdict) why += " (" + to_string(report.verdict->kind) + " in degree " + std::to_string(report.verdict->degree) + ")";
    throw DomainError(why);
  }
  std::vector<NormalOneType> out;
  for (Flavor f : {Flavor::AlmostSpinPinMinus, Flavor::AlmostSpinPinPlus, Flavor::TotallyNonSpin}) {
    NormalOneType t;
    t.category = category;
    t.flavor = f;
    t.group = report.group;
    t.thom = identify_thom(category, f, report);
    t.citation = t.thom.citation;
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

std::vector<GroupElement> all_elements(const AbelianGroup& a) {
  if (!a.is_finite()) throw DomainError("orbit enumeration needs a finite bordism group, got " + a.to_string());
  std::vector<GroupElement> out{GroupElement(a.torsion.size(), Integer(0))};
  for (std::size_t i = 0; i < a.torsion.size(); ++i) {
    std::vector<GroupElement> next;
    for (const auto& e : out)
      for (Integer v = 0; v < a.torsion[i]; ++v) {
        GroupElement x = e;
        x[i] = v;
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

bool is_pin_plus(const std::string& s) { return s == "Pin+" || s == "TopPin+"; }

Structure structure_of(const std::string& s) {
  if (is_pin_plus(s)) return Structure::PinPlus;
  if (s == "Pin-" || s == "TopPin-") return Structure::PinMinus;
  return Structure::None;
}

}  // namespace

OrbitStructure aut_orbits(const std::string& structure, const AbelianGroup& group) {
  OrbitStructure o;
  o.structure = structure;
  o.group = group;
  if (is_pin_plus(structure)) {
    // The involution reverses the pin structure on RP4; E8 has a unique
    // topological pin+ structure and is fixed.
    const auto& gens = bordism_group(structure, 4).generators;
    for (std::size_t i = 0; i < group.torsion.size(); ++i)
      if (i < gens.size() && gens[i].rfind("RP4", 0) == 0) o.negated_factors.push_back(i);
    o.action = "x -> -x on the RP4 summand, identity elsewhere";
  } else {
    o.action = "trivial";
  }
  auto act = [&](GroupElement x) {
    for (auto i : o.negated_factors) {
      x[i] = (group.torsion[i] - x[i]) % group.torsion[i];
    }
    return x;
  };
  const auto elems = all_elements(group);
  std::set<GroupElement> seen;
  std::size_t fixed = 0;
  for (const auto& x : elems) {
    const GroupElement y = act(x);
    if (y == x) ++fixed;
    if (seen.count(x)) continue;
    std::vector<GroupElement> orbit{x};
    if (y != x) orbit.push_back(y);
    std::sort(orbit.begin(), orbit.end());
    for (const auto& z : orbit) seen.insert(z);
    o.orbits.push_back(std::move(orbit));
  }
  o.burnside_count = o.negated_factors.empty() ? elems.size() : (elems.size() + fixed) / 2;
  return o;
}

ClassificationTable stable_classes(const NormalOneType& type) {
  ClassificationTable t;
  t.type = type;
  t.structure = type.thom.structure;
  const auto& entry = bordism_group(t.structure, 4);
  t.bordism = entry.group;
  t.orbits = aut_orbits(t.structure, t.bordism);
  if (t.orbits.orbits.size() != t.orbits.burnside_count)
    throw DomainError("orbit enumeration disagrees with the Burnside count for " + t.structure);
  const Structure st = structure_of(t.structure);
  std::vector<InvariantVector> gen_inv;
  for (const auto& name : entry.generators)
    gen_inv.push_back(invariant_vector(parse_manifold(name, type.category), st));
  if (gen_inv.size() != t.bordism.torsion.size())
    throw DomainError("generator list of " + t.structure + " does not match its invariant factors");

  const bool smooth = type.category == Category::Smooth;
  t.citations = {entry.citation, type.thom.citation};
  switch (st) {
    case Structure::PinPlus:
      t.invariant_name = smooth ? "eta'" : "S' and ks";
      t.completeness_citation = smooth ? "Stolz [Sto88]; Kirby-Taylor [KT90], eta detects Omega_4^Pin+"
                                       : "Kirby-Taylor [KT90], Thm 9.2: S and ks detect Omega_4^TopPin+";
      break;
    case Structure::PinMinus:
      t.invariant_name = smooth ? "none needed" : "ks";
      t.completeness_citation = smooth ? "Anderson-Brown-Peterson [ABP69]: Omega_4^Pin- = 0"
                                       : "Kirby-Taylor [KT90], Thm 9.2: ks detects Omega_4^TopPin-";
      break;
    case Structure::None:
      t.invariant_name = smooth ? "(w2^2, w4)" : "ks and (w2^2, w4)";
      t.completeness_citation = smooth ? "Thom (1954): Stiefel-Whitney numbers detect unoriented bordism"
                                       : "Kirby-Taylor [KT90], section 9: w2^2, w4, ks detect Omega_4^Top";
      break;
  }

  std::set<std::string> labels;
  for (const auto& orbit : t.orbits.orbits) {
    const GroupElement& x = orbit.front();
    // Evaluate the invariants additively on x = sum x_i g_i.
    auto sum = [&](auto field, int m) -> int {
      long acc = 0;
      for (std::size_t i = 0; i < gen_inv.size(); ++i) acc += x[i].get_si() * field(gen_inv[i]);
      return static_cast<int>(((acc % m) + m) % m);
    };
    const int w4 = sum([](const InvariantVector& g) { return g.w4; }, 2);
    const int w2sq = sum([](const InvariantVector& g) { return g.w2sq; }, 2);
    ClassEntry c;
    c.orbit = orbit;
    if (st == Structure::PinPlus && smooth) {
      const int eta = sum([](const InvariantVector& g) { return *g.eta; }, 16);
      const auto orb = sign_orbit(eta, 16);
      c.label = "eta'=" + std::to_string(orb.front());
      c.invariants = {{"eta'", std::to_string(orb.front())}};
    } else if (st == Structure::PinPlus) {
      const int s = sum([](const InvariantVector& g) { return *g.s_inv; }, 8);
      const int ks = sum([](const InvariantVector& g) { return *g.ks; }, 2);
      const int sp = sign_orbit(s, 8).front();
      c.label = "S'=" + std::to_string(sp) + ", ks=" + std::to_string(ks);
      c.invariants = {{"S'", std::to_string(sp)}, {"ks", std::to_string(ks)}};
    } else if (st == Structure::PinMinus && smooth) {
      c.label = "trivial";
    } else if (st == Structure::PinMinus) {
      const int ks = sum([](const InvariantVector& g) { return *g.ks; }, 2);
      c.label = "ks=" + std::to_string(ks);
      c.invariants = {{"ks", std::to_string(ks)}};
    } else {
      if (!smooth) {
        const int ks = sum([](const InvariantVector& g) { return *g.ks; }, 2);
        c.invariants.push_back({"ks", std::to_string(ks)});
        c.label = "ks=" + std::to_string(ks) + ", ";
      }
      c.label += "(w2^2,w4)=(" + std::to_string(w2sq) + "," + std::to_string(w4) + ")";
      c.invariants.push_back({"w2^2", std::to_string(w2sq)});
      c.invariants.push_back({"w4", std::to_string(w4)});
    }
    if (!labels.insert(c.label).second)
      throw DomainError("invariant labels fail to separate the orbits of " + t.structure + " (label " + c.label + ")");
    t.classes.push_back(std::move(c));
  }
  // Orbit representatives in label order, e.g. eta' = 0..8.
  std::stable_sort(t.classes.begin(), t.classes.end(), [](const ClassEntry& a, const ClassEntry& b) {
    return a.invariants < b.invariants;
  });
  return t;
}

std::vector<ClassificationTable> classify(const FiniteGroup& g, Category category) {
  std::vector<ClassificationTable> out;
  for (const auto& t : enumerate_normal_one_types(g, category)) out.push_back(stable_classes(t));
  return out;
}

}  // namespace stabclass
