#include "stabclass/bordism.hpp"

#include <algorithm>

namespace stabclass {

std::string to_string(Category c) { return c == Category::Smooth ? "smooth" : "top"; }

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::AlmostSpinPinPlus: return "almost-spin-pin+";
    case Flavor::AlmostSpinPinMinus: return "almost-spin-pin-";
    case Flavor::TotallyNonSpin: return "totally-non-spin";
  }
  return "?";
}

Category parse_category(const std::string& s) {
  if (s == "smooth") return Category::Smooth;
  if (s == "top" || s == "topological") return Category::Topological;
  throw DomainError("unknown category '" + s + "' (expected smooth or top)");
}

namespace {

AbelianGroup grp(std::initializer_list<long> orders) {
  std::vector<Integer> v;
  for (long o : orders) v.emplace_back(o);
  return AbelianGroup::from_cyclic_orders(v);
}

const char* kThom = "Thom, Quelques proprietes globales des varietes differentiables (1954), Thm IV.12 and corollary";
const char* kSO = "Thom (1954); Wall, Determination of the cobordism ring (1960)";
const char* kABP = "Anderson-Brown-Peterson, Pin cobordism and related topics (1969) [ABP69]";
const char* kKT = "Kirby-Taylor, Pin structures on low-dimensional manifolds (1990) [KT90]";
const char* kKT92 = "Kirby-Taylor [KT90], Thm 9.2";
const char* kGia = "Giambalvo, Pin and Pin' cobordism (1973) [Gia73a]; Kirby-Taylor [KT90Pinp, KT90]";
const char* kTop = "Kirby-Taylor [KT90], section 9; Freedman-Quinn, Topology of 4-manifolds (1990)";
const char* kTopO = "unoriented topological bordism: detected by w2^2, w4 and the triangulation obstruction on RP4, RP2xRP2, E8 [KT90, section 9]";

std::map<std::string, CoefficientTable> build_tables() {
  std::map<std::string, CoefficientTable> t;
  auto add = [&](const std::string& name, Category cat, std::vector<std::pair<AbelianGroup, std::string>> rows,
                 std::map<std::size_t, std::vector<std::string>> gens = {}) {
    CoefficientTable tab{name, cat, {}};
    for (std::size_t d = 0; d < rows.size(); ++d)
      tab.degrees[d] = BordismEntry{rows[d].first, rows[d].second, gens.count(d) ? gens[d] : std::vector<std::string>{}};
    t[name] = std::move(tab);
  };
  const auto S = Category::Smooth;
  const auto T = Category::Topological;
  add("O", S,
      {{grp({2}), kThom}, {grp({}), kThom}, {grp({2}), kThom}, {grp({}), kThom}, {grp({2, 2}), kThom}, {grp({2}), kThom}},
      {{4, {"RP4", "RP2xRP2"}}});
  add("SO", S, {{grp({0}), kSO}, {grp({}), kSO}, {grp({}), kSO}, {grp({}), kSO}, {grp({0}), kSO}, {grp({2}), kSO}});
  add("Spin", S, {{grp({0}), kABP}, {grp({2}), kABP}, {grp({2}), kABP}, {grp({}), kABP}, {grp({0}), kABP}, {grp({}), kABP}});
  add("Pin+", S,
      {{grp({2}), kKT}, {grp({}), kKT}, {grp({2}), kKT}, {grp({2}), kKT}, {grp({16}), kGia}, {grp({}), kKT}},
      {{4, {"RP4(+)"}}});
  add("Pin-", S,
      {{grp({2}), kABP}, {grp({2}), kABP}, {grp({8}), kABP}, {grp({}), kABP}, {grp({}), std::string(kABP) + "; " + kKT},
       {grp({}), kABP}});
  // Topological structures agree with the smooth ones below dimension 4.
  add("STop", T, {{grp({0}), kSO}, {grp({}), kSO}, {grp({}), kSO}, {grp({}), kSO}, {grp({0, 2}), kTop}},
      {{4, {"CP2", "E8"}}});
  add("TopSpin", T, {{grp({0}), kABP}, {grp({2}), kABP}, {grp({2}), kABP}, {grp({}), kABP}, {grp({0}), kTop}},
      {{4, {"E8"}}});
  add("TopPin+", T, {{grp({2}), kKT}, {grp({}), kKT}, {grp({2}), kKT}, {grp({2}), kKT}, {grp({8, 2}), kKT92}},
      {{4, {"E8", "RP4(+)"}}});
  add("TopPin-", T, {{grp({2}), kABP}, {grp({2}), kABP}, {grp({8}), kABP}, {grp({}), kABP}, {grp({2}), kKT92}},
      {{4, {"E8"}}});
  add("Top", T, {{grp({2}), kThom}, {grp({}), kThom}, {grp({2}), kThom}, {grp({}), kThom}, {grp({2, 2, 2}), kTopO}},
      {{4, {"RP4", "RP2xRP2", "E8"}}});
  return t;
}

const std::map<std::string, CoefficientTable>& tables() {
  static const auto t = build_tables();
  return t;
}

}  // namespace

const std::vector<std::string>& structure_names() {
  static const std::vector<std::string> names{"O",     "SO",   "Spin",    "Pin+",    "Pin-",
                                              "STop",  "TopSpin", "TopPin+", "TopPin-", "Top"};
  return names;
}

const CoefficientTable& coefficient_table(const std::string& structure) {
  auto it = tables().find(structure);
  if (it == tables().end()) throw DomainError("unknown bordism structure '" + structure + "'");
  return it->second;
}

const BordismEntry& bordism_group(const std::string& structure, std::size_t degree) {
  const auto& t = coefficient_table(structure);
  auto it = t.degrees.find(degree);
  if (it == t.degrees.end())
    throw DomainError("bordism group of " + structure + " in degree " + std::to_string(degree) + " is not tabulated");
  return it->second;
}

ThomIdentification identify_thom(Category category, Flavor flavor, const HypothesisReport& report) {
  if (!report.applicable())
    throw DomainError("group " + report.group + " does not satisfy the hypotheses of the Thom-spectrum reduction");
  if (report.p_order != 2)
    throw DomainError("normal 1-types are only modeled for a 2-group quotient of order 2; " + report.group +
                      " has quotient of order " + std::to_string(report.p_order));
  ThomIdentification id;
  id.category = category;
  id.flavor = flavor;
  const bool top = category == Category::Topological;
  const std::string spin = top ? "MTopSpin" : "MSpin";
  switch (flavor) {
    case Flavor::AlmostSpinPinPlus:
      id.structure = top ? "TopPin-" : "Pin-";
      id.normal_structure = top ? "normal TopPin+" : "normal Pin+";
      id.realizing_bundle = "p*(sigma) - 1";
      id.thom_spectrum = spin + " ^ (BZ/2)^(sigma-1) = MT" + id.structure;
      id.citation = top ? "Kirby-Taylor [KT90], section 9 (topological analogue)" : "Peterson [Pet68, section 7]; Kirby-Taylor [KT90Pinp, Lemma 6]";
      break;
    case Flavor::AlmostSpinPinMinus:
      id.structure = top ? "TopPin+" : "Pin+";
      id.normal_structure = top ? "normal TopPin-" : "normal Pin-";
      id.realizing_bundle = "p*(3 sigma) - 3";
      id.thom_spectrum = spin + " ^ (BZ/2)^(3 sigma-3) = MT" + id.structure;
      id.citation = top ? "Kirby-Taylor [KT90], section 9 (topological analogue)" : "Peterson [Pet68, section 7]; Kirby-Taylor [KT90Pinp, Lemma 6]";
      break;
    case Flavor::TotallyNonSpin:
      id.structure = top ? "Top" : "O";
      id.normal_structure = top ? "normal STop x BZ/2" : "normal SO x BZ/2";
      id.realizing_bundle = "p*(sigma) - 1";
      id.thom_spectrum = top ? "MSTop ^ (BZ/2)^(sigma-1) = MTop" : "MSO ^ (BZ/2)^(sigma-1) = MO";
      id.citation = top ? "topological analogue of Gray's splitting [Gra80, section 2]" : "Gray [Gra80, section 2]";
      break;
  }
  id.tangent_normal_note = flavor == Flavor::TotallyNonSpin
                               ? "no pin structure; tangential and normal descriptions agree"
                               : "a pin+/- structure on the stable normal bundle is a pin-/+ structure on the tangent bundle";
  return id;
}

std::vector<Integer> smooth_to_top_pin_plus(const Integer& k) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), k.get_mpz_t(), 8);
  return {r, Integer(0)};
}

}  // namespace stabclass
