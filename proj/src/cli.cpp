#include "stabclass/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <set>

#include "CLI11.hpp"
#include "stabclass/cohomology.hpp"
#include "stabclass/report.hpp"

namespace stabclass {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FiniteGroup group_arg(const std::string& spec) {
  try {
    return parse_group(spec);
  } catch (const GroupError& e) {
    throw UsageError(e.what());
  }
}

Category category_arg(const std::string& s) {
  try {
    return parse_category(s);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::size_t catalog_bound() {
  if (const char* s = std::getenv("STABCLASS_CATALOG_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return 100;
}

// The orientation character used for twisted coefficients: the one coming from
// the odd complement when the quotient has order 2, otherwise the first one.
Character2 orientation_of(const FiniteGroup& g) {
  if (auto c = odd_normal_complement(g); c && c->p.group.order() == 2) return character_from_complement(g, *c);
  auto chars = orientation_characters(g);
  if (chars.empty()) throw DomainError(g.name() + " has no orientation character (no subgroup of index 2)");
  return chars.front();
}

std::vector<std::string> unique(std::vector<std::string> v) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (auto& s : v)
    if (seen.insert(s).second) out.push_back(std::move(s));
  return out;
}

struct Output {
  Json result;
  std::string text;
  std::vector<std::string> citations;
};

Output do_classify(const std::string& group, const std::string& category) {
  const FiniteGroup g = group_arg(group);
  const Category cat = category_arg(category);
  const auto tables = classify(g, cat);
  Output o;
  Json types = Json::array();
  for (const auto& t : tables) {
    types.push_back(to_json(t));
    o.citations.insert(o.citations.end(), t.citations.begin(), t.citations.end());
    o.citations.push_back(t.completeness_citation);
  }
  o.result = Json{{"group", g.name()}, {"category", to_string(cat)}, {"types", types}};
  o.text = "stable " + std::string(cat == Category::Smooth ? "diffeomorphism" : "homeomorphism") + " classes for " +
           g.name() + "\n" + render_text(tables);
  return o;
}

Output do_hypothesis(const std::string& group, std::size_t max_degree) {
  const FiniteGroup g = group_arg(group);
  const auto r = thom_simplification_applicable(g, max_degree);
  return Output{to_json(r), render_text(r), {}};
}

Output do_cohomology(const std::string& group, const std::string& coeff, std::size_t degree, bool homology_flag) {
  const FiniteGroup g = group_arg(group);
  GModule m = trivial_module(g, AbelianGroup::integers());
  if (coeff == "Z2")
    m = trivial_module(g, AbelianGroup::cyclic(2));
  else if (coeff == "Zw")
    m = twisted_integers(orientation_of(g));
  else if (coeff != "Z")
    throw UsageError("unknown coefficients '" + coeff + "' (expected Z, Z2 or Zw)");
  const Resolution r = best_resolution(g, degree + 1);
  const auto groups = homology_flag ? homology_range(r, m, degree) : cohomology_range(r, m, degree);
  Output o;
  Json arr = Json::array();
  o.text = std::string(homology_flag ? "H_n(" : "H^n(") + g.name() + "; " + coeff + ") via " + r.kind + " resolution\n";
  for (std::size_t n = 0; n < groups.size(); ++n) {
    arr.push_back(Json{{"degree", n}, {"group", to_json(groups[n])}});
    o.text += "  n=" + std::to_string(n) + ": " + groups[n].to_string() + "\n";
  }
  o.result = Json{{"group", g.name()},
                  {"coefficients", coeff},
                  {"variance", homology_flag ? "homology" : "cohomology"},
                  {"resolution", r.kind},
                  {"groups", arr}};
  return o;
}

Output do_lhs(const std::string& group, std::size_t range, bool untwisted) {
  const FiniteGroup g = group_arg(group);
  const auto c = odd_normal_complement(g);
  if (!c) throw DomainError(g.name() + " has no odd normal subgroup with 2-group quotient");
  Character2 tw = trivial_character(c->p.group);
  if (!untwisted) {
    auto chars = orientation_characters(c->p.group);
    if (chars.empty()) throw DomainError("the quotient P of " + g.name() + " is trivial, so there is no twist");
    tw = chars.front();
  }
  const auto page = lhs_e2_page(g, *c, tw, range);
  Json column = Json::array();
  bool vanishing = true;
  for (std::size_t q = 1; q <= range; ++q) {
    const auto& e = page.at(0, q);
    column.push_back(Json{{"q", q}, {"group", e.group ? to_json(*e.group) : Json(nullptr)}});
    vanishing = vanishing && e.group && e.group->is_zero();
  }
  Output o;
  o.result = to_json(page);
  o.result["p0_column_vanishes"] = vanishing;
  o.text = render_text(page) + "  column p=0, q>=1 " + (vanishing ? "vanishes" : "does not vanish") + "\n";
  return o;
}

Output do_ahss(const std::string& group, const std::string& structure, std::size_t diagonal, bool untwisted) {
  const FiniteGroup g = group_arg(group);
  const auto& table = coefficient_table(structure);
  const Character2 alpha = untwisted ? trivial_character(g) : orientation_of(g);
  const std::size_t range = diagonal + 1;
  const auto x = twisted_thom_homology(alpha, range);
  const std::string name = untwisted ? "BG+ for " + g.name() : "Thom(w) over B" + g.name();
  const auto page = ahss_e2_page(x, structure, range, name);
  const auto d = diagonal_report(page, diagonal);
  Output o;
  o.result = Json{{"group", g.name()}, {"structure", structure}, {"twisted", !untwisted},
                  {"page", to_json(page)},  {"diagonal", to_json(d)}};
  o.text = render_text(page) + render_text(d);
  for (const auto& [deg, e] : table.degrees) o.citations.push_back(e.citation);
  return o;
}

Output do_compare(const std::string& a, const std::string& b, const std::string& category, const std::string& structure) {
  std::vector<Category> cats;
  if (category == "both")
    cats = {Category::Smooth, Category::Topological};
  else
    cats = {category_arg(category)};
  Structure st;
  try {
    st = parse_structure(structure);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  Output o;
  Json arr = Json::array();
  for (Category cat : cats) {
    ManifoldExpr x, y;
    try {
      x = parse_manifold(a, cat);
      y = parse_manifold(b, cat);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    const auto c = stably_equivalent(x, y, st);
    Json j = to_json(c);
    j["category"] = to_string(cat);
    j["structure"] = to_string(st);
    arr.push_back(j);
    o.text += to_string(cat) + " " + to_string(st) + ": " + x.to_string() + " and " + y.to_string() + " are " + render_text(c);
  }
  o.result = Json{{"first", a}, {"second", b}, {"comparisons", arr}};
  o.citations = {"Stolz [Sto88] (eta of Q is +-9)", "Kirby-Taylor [KT90], Thm 9.2"};
  return o;
}

Output do_tables() {
  Output o;
  Json arr = Json::array();
  for (const auto& s : structure_names()) {
    const auto& t = coefficient_table(s);
    arr.push_back(to_json(t));
    o.text += render_text(t);
    for (const auto& [d, e] : t.degrees) o.citations.push_back(e.citation);
  }
  o.result = Json{{"tables", arr}};
  return o;
}

Output do_catalog(std::size_t max_order) {
  const std::size_t bound = catalog_bound();
  if (max_order > bound)
    throw UsageError("--max-order " + std::to_string(max_order) + " exceeds the configured bound " + std::to_string(bound) +
                     " (set STABCLASS_CATALOG_MAX_ORDER to raise it)");
  std::vector<CatalogRow> rows;
  for (const auto& g : small_groups_2mod4(max_order)) {
    CatalogRow r;
    r.group = g.name();
    r.order = g.order();
    r.hypothesis = thom_simplification_applicable(g);
    if (r.hypothesis.applicable()) {
      for (auto cat : {Category::Smooth, Category::Topological}) {
        auto& counts = cat == Category::Smooth ? r.smooth_counts : r.top_counts;
        for (const auto& t : enumerate_normal_one_types(r.hypothesis, cat)) counts.push_back(stable_classes(t).count());
      }
    }
    rows.push_back(std::move(r));
  }
  Output o;
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  o.result = Json{{"max_order", max_order}, {"rows", arr}};
  o.text = render_text(rows);
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable classification of unorientable 4-manifolds with finite fundamental group", "stabclass"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string group, category = "smooth", coeff, structure = "none", first, second;
  std::size_t max_degree = 4, degree = 4, range = 4, diagonal = 4, max_order = 50;
  bool untwisted = false, homology_flag = false;

  auto* classify_cmd = app.add_subcommand("classify", "Stable class tables for every normal 1-type");
  classify_cmd->add_option("group", group, "Group, e.g. C6 or C2xC3xC3")->required();
  classify_cmd->add_option("--category", category, "smooth or top");

  auto* hyp_cmd = app.add_subcommand("check-hypothesis", "Check the odd-kernel action hypothesis");
  hyp_cmd->add_option("group", group)->required();
  hyp_cmd->add_option("--max-degree", max_degree, "Degree bound for nonabelian kernels");

  auto* coh_cmd = app.add_subcommand("cohomology", "Integral, mod 2 or twisted (co)homology");
  coh_cmd->add_option("group", group)->required();
  coh_cmd->add_option("--coeff", coeff, "Z, Z2 or Zw")->required();
  coh_cmd->add_option("--degree", degree, "Top degree");
  coh_cmd->add_flag("--homology", homology_flag, "Compute homology instead of cohomology");

  auto* lhs_cmd = app.add_subcommand("lhs", "LHS E2 page with twisted coefficients");
  lhs_cmd->add_option("group", group)->required();
  lhs_cmd->add_option("--range", range, "Entries with p+q <= range");
  lhs_cmd->add_flag("--untwisted", untwisted, "Use untwisted coefficients");

  auto* ahss_cmd = app.add_subcommand("ahss", "AHSS E2 page for bordism of the Thom spectrum");
  ahss_cmd->add_option("group", group)->required();
  ahss_cmd->add_option("--coeff", coeff, "Bordism coefficient structure, e.g. STop or SO")->required();
  ahss_cmd->add_option("--diagonal", diagonal, "Total degree to analyze");
  ahss_cmd->add_flag("--untwisted", untwisted, "Use BG with a disjoint basepoint instead of the Thom spectrum");

  auto* cmp_cmd = app.add_subcommand("compare", "Decide stable equivalence of two generator expressions");
  cmp_cmd->add_option("first", first)->required();
  cmp_cmd->add_option("second", second)->required();
  cmp_cmd->add_option("--category", category, "smooth, top or both");
  cmp_cmd->add_option("--structure", structure, "pin+, pin- or none");

  auto* tables_cmd = app.add_subcommand("tables", "Bordism coefficient tables");

  auto* cat_cmd = app.add_subcommand("catalog", "Scan built-in groups of order 2 mod 4");
  cat_cmd->add_option("--max-order", max_order, "Largest group order");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Output o;
  try {
    if (*classify_cmd)
      o = do_classify(group, category);
    else if (*hyp_cmd)
      o = do_hypothesis(group, max_degree);
    else if (*coh_cmd)
      o = do_cohomology(group, coeff, degree, homology_flag);
    else if (*lhs_cmd)
      o = do_lhs(group, range, untwisted);
    else if (*ahss_cmd)
      o = do_ahss(group, coeff, diagonal, untwisted);
    else if (*cmp_cmd)
      o = do_compare(first, second, category, structure);
    else if (*tables_cmd)
      o = do_tables();
    else if (*cat_cmd)
      o = do_catalog(max_order);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const FeasibilityError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (format == "json") {
    Json env{{"schema", kSchemaVersion}, {"command", args}, {"result", o.result},
             {"citations", unique(o.citations)}, {"timing_ms", ms}};
    out << env.dump(2) << "\n";
  } else {
    out << o.text;
    const auto cites = unique(o.citations);
    if (!cites.empty()) {
      out << "citations:\n";
      for (const auto& c : cites) out << "  " << c << "\n";
    }
  }
  return 0;
}

}  // namespace stabclass
