#include "stabclass/manifold.hpp"

#include <algorithm>
#include <cctype>

#include "stabclass/linalg.hpp"

namespace stabclass {

std::string to_string(Generator g) {
  switch (g) {
    case Generator::RP4: return "RP4";
    case Generator::Q: return "Q";
    case Generator::RP2xRP2: return "RP2xRP2";
    case Generator::E8: return "E8";
    case Generator::S4: return "S4";
    case Generator::S2xS2: return "S2xS2";
  }
  return "?";
}

std::string to_string(Structure s) {
  switch (s) {
    case Structure::PinPlus: return "pin+";
    case Structure::PinMinus: return "pin-";
    case Structure::None: return "none";
  }
  return "?";
}

Structure parse_structure(const std::string& s) {
  if (s == "pin+") return Structure::PinPlus;
  if (s == "pin-") return Structure::PinMinus;
  if (s == "none") return Structure::None;
  throw DomainError("unknown structure '" + s + "' (expected pin+, pin- or none)");
}

std::string ManifoldExpr::to_string() const {
  std::string out = stabclass::to_string(base);
  if (sign == PinSign::Plus) out += "(+)";
  if (sign == PinSign::Minus) out += "(-)";
  for (auto s : summands) out += " # " + stabclass::to_string(s);
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::pair<Generator, PinSign> parse_term(const std::string& raw) {
  std::string t = trim(raw);
  PinSign sign = PinSign::None;
  if (t.size() >= 3 && t.back() == ')') {
    const std::string tag = t.substr(t.size() - 3);
    if (tag == "(+)")
      sign = PinSign::Plus;
    else if (tag == "(-)")
      sign = PinSign::Minus;
    else
      throw DomainError("bad pin-structure tag in '" + t + "'");
    t = trim(t.substr(0, t.size() - 3));
  }
  static const std::vector<std::pair<std::string, Generator>> names{
      {"RP4", Generator::RP4}, {"Q", Generator::Q},   {"RP2xRP2", Generator::RP2xRP2},
      {"E8", Generator::E8},   {"S4", Generator::S4}, {"S2xS2", Generator::S2xS2}};
  for (const auto& [n, g] : names) {
    if (n != t) continue;
    if (sign != PinSign::None && g != Generator::RP4 && g != Generator::Q)
      throw DomainError("pin-structure tags are only meaningful on RP4 and Q, not " + n);
    return {g, sign};
  }
  throw DomainError("unknown generator manifold '" + t + "'");
}

bool non_simply_connected(Generator g) {
  return g == Generator::RP4 || g == Generator::Q || g == Generator::RP2xRP2;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

ManifoldExpr parse_manifold(const std::string& text, Category category) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '#') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  ManifoldExpr e;
  e.category = category;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (trim(parts[i]).empty()) throw DomainError("empty connected summand in '" + text + "'");
    const auto [g, sign] = parse_term(parts[i]);
    if (g == Generator::E8 && category == Category::Smooth)
      throw DomainError("E8 has no smooth structure; use --category top");
    if (i == 0) {
      e.base = g;
      e.sign = sign;
      continue;
    }
    if (non_simply_connected(g))
      throw DomainError("at most one non-simply-connected generator is allowed, and it must come first");
    if (sign != PinSign::None) throw DomainError("pin-structure tags are only allowed on the base");
    e.summands.push_back(g);
  }
  return e;
}

bool admits(Generator g, Structure s) {
  switch (g) {
    case Generator::RP4:
    case Generator::Q: return s != Structure::PinMinus;
    case Generator::RP2xRP2: return s == Structure::None;
    default: return true;
  }
}

InvariantVector generator_invariants(Generator g, PinSign sign, Category category, Structure structure) {
  if (g == Generator::E8 && category == Category::Smooth) throw DomainError("E8 is not smoothable");
  if (structure != Structure::None && !admits(g, structure))
    throw DomainError(to_string(g) + " admits no tangential " + to_string(structure) + " structure");
  InvariantVector v;
  // Stiefel-Whitney numbers: RP4 and Q have w = (1+a)^5, RP2xRP2 has
  // w = (1+a+a^2)(1+b+b^2); E8 has even form and Euler characteristic 10.
  switch (g) {
    case Generator::RP4:
    case Generator::Q: v.w4 = 1; v.w2sq = 0; break;
    case Generator::RP2xRP2: v.w4 = 1; v.w2sq = 1; break;
    default: break;
  }
  const bool pin_plus = structure == Structure::PinPlus;
  const int s = sign == PinSign::Minus ? -1 : 1;
  int eta = 0;
  if (g == Generator::RP4) eta = mod(s, 16);
  if (g == Generator::Q) eta = mod(9 * s, 16);
  if (category == Category::Smooth) {
    if (pin_plus) v.eta = eta;
  } else {
    v.ks = g == Generator::E8 ? 1 : 0;
    // S factors through the comparison map Z/16 -> Z/8 + Z/2.
    if (pin_plus) v.s_inv = eta % 8;
  }
  return v;
}

InvariantVector invariant_vector(const ManifoldExpr& e, Structure structure) {
  InvariantVector v = generator_invariants(e.base, e.sign, e.category, structure);
  for (auto g : e.summands) {
    const InvariantVector w = generator_invariants(g, PinSign::None, e.category, structure);
    if (v.eta) v.eta = mod(*v.eta + *w.eta, 16);
    if (v.s_inv) v.s_inv = mod(*v.s_inv + *w.s_inv, 8);
    if (v.ks) v.ks = mod(*v.ks + *w.ks, 2);
    v.w4 = mod(v.w4 + w.w4, 2);
    v.w2sq = mod(v.w2sq + w.w2sq, 2);
  }
  return v;
}

std::vector<int> sign_orbit(int value, int modulus) {
  std::vector<int> out{mod(value, modulus), mod(-value, modulus)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string orbit_string(const std::vector<int>& o) {
  std::string s = "{";
  for (std::size_t i = 0; i < o.size(); ++i) s += (i ? "," : "") + std::to_string(o[i]);
  return s + "}";
}

}  // namespace

Comparison stably_equivalent(const ManifoldExpr& a, const ManifoldExpr& b, Structure structure) {
  if (a.category != b.category) throw DomainError("expressions are in different categories");
  Comparison c;
  ManifoldExpr x = a, y = b;
  for (ManifoldExpr* e : {&x, &y}) {
    if (structure == Structure::PinPlus && e->sign == PinSign::None &&
        (e->base == Generator::RP4 || e->base == Generator::Q)) {
      e->sign = PinSign::Plus;
      c.caveats.push_back("no pin+ structure tag on " + to_string(e->base) + "; using (+), the other choice lies in the same orbit");
    }
    if (structure != Structure::PinPlus && e->sign != PinSign::None) {
      e->sign = PinSign::None;
      c.caveats.push_back("pin-structure tag ignored outside pin+");
    }
  }
  c.first = invariant_vector(x, structure);
  c.second = invariant_vector(y, structure);
  c.caveats.push_back("both manifolds are assumed to have the same normal 1-type; this is not verified");
  const bool smooth = a.category == Category::Smooth;
  bool eq = true;
  auto check = [&](const std::string& name, const std::string& u, const std::string& v) {
    const bool same = u == v;
    eq = eq && same;
    c.witness.push_back(name + ": " + u + (same ? " = " : " != ") + v);
  };
  auto bit = [](int v) { return std::to_string(v); };
  if (structure == Structure::PinPlus) {
    if (smooth) {
      check("eta' orbit in Z/16", orbit_string(sign_orbit(*c.first.eta, 16)), orbit_string(sign_orbit(*c.second.eta, 16)));
    } else {
      const auto s1 = sign_orbit(*c.first.s_inv, 8), s2 = sign_orbit(*c.second.s_inv, 8);
      check("S' = " + std::to_string(s1.front()) + " vs " + std::to_string(s2.front()) + ", orbit in Z/8", orbit_string(s1),
            orbit_string(s2));
      check("ks", bit(*c.first.ks), bit(*c.second.ks));
    }
  } else if (structure == Structure::PinMinus) {
    if (smooth)
      c.witness.push_back("4-dimensional tangential pin- bordism vanishes; no invariant is needed");
    else
      check("ks", bit(*c.first.ks), bit(*c.second.ks));
  } else {
    if (!smooth) check("ks", bit(*c.first.ks), bit(*c.second.ks));
    check("w4", bit(c.first.w4), bit(c.second.w4));
    check("w2^2", bit(c.first.w2sq), bit(c.second.w2sq));
  }
  c.equivalent = eq;
  c.relation = std::string(eq ? "" : "not ") + (smooth ? "stably diffeomorphic" : "stably homeomorphic");
  return c;
}

std::vector<std::vector<int>> independence_matrix() {
  std::vector<std::vector<int>> rows;
  for (auto g : {Generator::RP4, Generator::RP2xRP2, Generator::E8}) {
    const auto v = generator_invariants(g, PinSign::None, Category::Topological, Structure::None);
    rows.push_back({v.w2sq, v.w4, *v.ks});
  }
  return rows;
}

}  // namespace stabclass
