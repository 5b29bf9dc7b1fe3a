#include "stabclass/report.hpp"

#include <sstream>

namespace stabclass {

namespace {

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace

Json to_json(const AbelianGroup& a) {
  Json t = Json::array();
  for (const auto& x : a.torsion) t.push_back(integer_json(x));
  return Json{{"rank", a.rank}, {"torsion", t}, {"name", a.to_string()}};
}

Json to_json(const HypothesisReport& r) {
  Json j{{"group", r.group},        {"order", r.order},       {"decomposed", r.decomposed},
         {"k_order", r.k_order},    {"p_order", r.p_order},   {"k_abelian", r.k_abelian},
         {"conclusion", to_string(r.conclusion)}};
  if (r.verdict) {
    Json v{{"kind", to_string(r.verdict->kind)}, {"degree", r.verdict->degree}, {"method", r.verdict->method}};
    if (const auto& w = r.verdict->witness) {
      v["witness"] = Json{{"degree", w->degree},
                          {"coset_representative", w->rep},
                          {"cohomology", w->cohomology},
                          {"class", w->class_coords},
                          {"image", w->image_coords},
                          {"description", w->description}};
    }
    j["verdict"] = v;
  } else {
    j["verdict"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

Json to_json(const E2Page& page) {
  Json entries = Json::array();
  for (const auto& [pq, e] : page.entries) {
    entries.push_back(Json{{"p", pq.first},
                           {"q", pq.second},
                           {"group", e.group ? to_json(*e.group) : Json(nullptr)},
                           {"note", e.note}});
  }
  return Json{{"kind", to_string(page.kind)}, {"title", page.title}, {"range", page.range},
              {"entries", entries},         {"notes", page.notes}};
}

Json to_json(const DiagonalReport& d) {
  Json entries = Json::array();
  for (const auto& [pq, g] : d.entries) entries.push_back(Json{{"p", pq.first}, {"q", pq.second}, {"group", to_json(g)}});
  return Json{{"degree", d.degree},
              {"entries", entries},
              {"order_bound", d.order_bound ? integer_json(*d.order_bound) : Json(nullptr)},
              {"collapse", d.collapse},
              {"reasons", d.reasons}};
}

Json to_json(const ClassificationTable& t) {
  Json orbits = Json::array();
  for (const auto& o : t.orbits.orbits) {
    Json orbit = Json::array();
    for (const auto& x : o) {
      Json e = Json::array();
      for (const auto& c : x) e.push_back(integer_json(c));
      orbit.push_back(e);
    }
    orbits.push_back(orbit);
  }
  Json classes = Json::array();
  for (const auto& c : t.classes) {
    Json inv = Json::object();
    for (const auto& [k, v] : c.invariants) inv[k] = v;
    classes.push_back(Json{{"label", c.label}, {"invariants", inv}});
  }
  return Json{{"flavor", to_string(t.type.flavor)},
              {"category", to_string(t.type.category)},
              {"structure", t.structure},
              {"normal_structure", t.type.thom.normal_structure},
              {"realizing_bundle", t.type.thom.realizing_bundle},
              {"thom_spectrum", t.type.thom.thom_spectrum},
              {"bordism", to_json(t.bordism)},
              {"orbits", Json{{"action", t.orbits.action},
                              {"negated_factors", t.orbits.negated_factors},
                              {"orbits", orbits},
                              {"burnside_count", t.orbits.burnside_count}}},
              {"invariant", t.invariant_name},
              {"count", t.count()},
              {"classes", classes},
              {"completeness_citation", t.completeness_citation},
              {"citations", t.citations}};
}

Json to_json(const InvariantVector& v) {
  auto opt = [](const std::optional<int>& x) { return x ? Json(*x) : Json(nullptr); };
  return Json{{"eta", opt(v.eta)}, {"s_inv", opt(v.s_inv)}, {"ks", opt(v.ks)}, {"w4", v.w4}, {"w2sq", v.w2sq}};
}

Json to_json(const Comparison& c) {
  return Json{{"equivalent", c.equivalent},
              {"relation", c.relation},
              {"first", to_json(c.first)},
              {"second", to_json(c.second)},
              {"witness", c.witness},
              {"caveats", c.caveats}};
}

Json to_json(const CoefficientTable& t) {
  Json degrees = Json::array();
  for (const auto& [d, e] : t.degrees)
    degrees.push_back(Json{{"degree", d}, {"group", to_json(e.group)}, {"generators", e.generators}, {"citation", e.citation}});
  return Json{{"structure", t.structure}, {"category", to_string(t.category)}, {"degrees", degrees}};
}

Json to_json(const CatalogRow& r) {
  Json j{{"group", r.group},
         {"order", r.order},
         {"conclusion", to_string(r.hypothesis.conclusion)},
         {"verdict", r.hypothesis.verdict ? Json(to_string(r.hypothesis.verdict->kind)) : Json(nullptr)}};
  j["smooth_counts"] = r.smooth_counts;
  j["top_counts"] = r.top_counts;
  return j;
}

std::string render_text(const AbelianGroup& a) { return a.to_string(); }

std::string render_text(const HypothesisReport& r) {
  std::ostringstream os;
  os << "group " << r.group << " (order " << r.order << ")\n";
  if (r.decomposed) os << "  odd kernel K of order " << r.k_order << (r.k_abelian ? " (abelian)" : " (nonabelian)")
                       << ", 2-group quotient P of order " << r.p_order << "\n";
  if (r.verdict) {
    os << "  action of P on H^*(K;Z): " << to_string(r.verdict->kind);
    if (r.verdict->kind != ActionVerdictKind::ProvedTrivial) os << " (degree " << r.verdict->degree << ")";
    os << "\n  method: " << r.verdict->method << "\n";
    if (r.verdict->witness) os << "  witness: " << r.verdict->witness->description << "\n";
  }
  os << "  conclusion: " << to_string(r.conclusion) << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render_text(const E2Page& page) {
  std::ostringstream os;
  os << page.title << "\n";
  const bool homological = page.kind == PageKind::AHSSHomological;
  for (std::size_t q = page.range + 1; q-- > 0;) {
    os << "  q=" << q << " |";
    for (std::size_t p = 0; p + q <= page.range; ++p) {
      const auto& e = page.at(p, q);
      os << " " << pad(e.group ? e.group->to_string() : "?", 12);
    }
    os << "\n";
  }
  os << "        ";
  for (std::size_t p = 0; p <= page.range; ++p) os << " " << pad("p=" + std::to_string(p), 12);
  os << "\n  (" << (homological ? "E^2_{p,q}" : "E_2^{p,q}") << "; ? = unknown)\n";
  for (const auto& n : page.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render_text(const DiagonalReport& d) {
  std::ostringstream os;
  os << "diagonal p+q=" << d.degree << ":";
  if (d.entries.empty()) os << " all entries zero";
  for (const auto& [pq, g] : d.entries) os << " (" << pq.first << "," << pq.second << ")=" << g.to_string();
  os << "\n  order bound: " << (d.order_bound ? d.order_bound->get_str() : std::string("none")) << "\n";
  os << "  collapse on this diagonal: " << (d.collapse ? "certified" : "not certified") << "\n";
  for (const auto& r : d.reasons) os << "    " << r << "\n";
  return os.str();
}

std::string render_text(const std::vector<ClassificationTable>& tables) {
  std::ostringstream os;
  std::size_t total = 0;
  for (const auto& t : tables) {
    total += t.count();
    os << to_string(t.type.flavor) << " (" << to_string(t.type.category) << ", tangential " << t.structure << ")\n";
    os << "  bordism: Omega_4^" << t.structure << " = " << t.bordism.to_string() << "\n";
    os << "  Thom spectrum: " << t.type.thom.thom_spectrum << ", bundle " << t.type.thom.realizing_bundle << "\n";
    os << "  Aut action: " << t.orbits.action << "\n";
    os << "  classes: " << t.count() << ", complete invariant: " << t.invariant_name << "\n";
    for (const auto& c : t.classes) os << "    " << c.label << "\n";
    os << "  completeness: " << t.completeness_citation << "\n";
  }
  os << "total: " << total << "\n";
  return os.str();
}

std::string render_text(const Comparison& c) {
  std::ostringstream os;
  os << c.relation << "\n";
  for (const auto& w : c.witness) os << "  " << w << "\n";
  for (const auto& w : c.caveats) os << "  caveat: " << w << "\n";
  return os.str();
}

std::string render_text(const CoefficientTable& t) {
  std::ostringstream os;
  os << t.structure << " (" << to_string(t.category) << ")\n";
  for (const auto& [d, e] : t.degrees) {
    os << "  Omega_" << d << " = " << pad(e.group.to_string(), 14);
    if (!e.generators.empty()) {
      os << " generators:";
      for (const auto& g : e.generators) os << " " << g;
    }
    os << "  [" << e.citation << "]\n";
  }
  return os.str();
}

std::string render_text(const std::vector<CatalogRow>& rows) {
  std::ostringstream os;
  os << pad("group", 14) << pad("order", 7) << pad("hypothesis", 16) << pad("smooth", 12) << "top\n";
  auto counts = [](const std::vector<std::size_t>& c) {
    if (c.empty()) return std::string("-");
    std::string s;
    std::size_t total = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      s += (i ? "/" : "") + std::to_string(c[i]);
      total += c[i];
    }
    return s + " (" + std::to_string(total) + ")";
  };
  for (const auto& r : rows) {
    const std::string mark = r.hypothesis.applicable() ? "yes" : to_string(r.hypothesis.conclusion);
    os << pad(r.group, 14) << pad(std::to_string(r.order), 7) << pad(mark, 16) << pad(counts(r.smooth_counts), 12)
       << counts(r.top_counts) << "\n";
  }
  return os.str();
}

}  // namespace stabclass
