#include "stabclass/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace stabclass {

namespace {

std::vector<Element> compute_inverses(std::size_t n, const std::vector<Element>& table) {
  std::vector<Element> inv(n, static_cast<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (table[a * n + b] == 0) {
        inv[a] = b;
        break;
      }
  return inv;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Element> table) {
  if (order == 0) throw GroupError("group order must be positive");
  if (table.size() != order * order) throw GroupError("multiplication table has wrong size");
  for (Element e : table)
    if (e >= order) throw GroupError("multiplication table entry out of range");
  for (Element a = 0; a < order; ++a)
    if (table[a] != a || table[a * order] != a) throw GroupError("element 0 is not the identity");

  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->order = order;
  d->inverse = compute_inverses(order, table);
  for (Element a = 0; a < order; ++a) {
    if (d->inverse[a] >= order || table[d->inverse[a] * order + a] != 0)
      throw GroupError("element without two-sided inverse in " + d->name);
  }
  // Full associativity check on all triples for desk-scale groups; larger
  // tables are checked against right multiplication by a generating set.
  auto at = [&](Element a, Element b) { return table[a * order + b]; };
  if (order <= 256) {
    for (Element a = 0; a < order; ++a)
      for (Element b = 0; b < order; ++b) {
        const Element ab = at(a, b);
        for (Element c = 0; c < order; ++c)
          if (at(ab, c) != at(a, at(b, c))) throw GroupError("multiplication is not associative");
      }
  }
  d->table = std::move(table);
  data_ = std::move(d);
  if (order > 256) {
    for (Element c : generating_set(*this))
      for (Element a = 0; a < order; ++a)
        for (Element b = 0; b < order; ++b)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw GroupError("multiplication is not associative");
  }
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*data_);
  d->name = std::move(name);
  return FiniteGroup(std::shared_ptr<const Data>(std::move(d)));
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

Element FiniteGroup::power(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  const auto n = order();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<Element> FiniteGroup::cyclic_generator() const {
  for (Element a = 0; a < order(); ++a)
    if (element_order(a) == order()) return a;
  return std::nullopt;
}

bool GroupHom::is_surjective() const {
  std::vector<bool> hit(target.order(), false);
  for (Element x : images) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<Element> images) {
  if (images.size() != source.order()) throw GroupError("homomorphism table has wrong size");
  for (Element x : images)
    if (x >= target.order()) throw GroupError("homomorphism image out of range");
  if (images[0] != 0) throw GroupError("homomorphism does not preserve the identity");
  for (Element a = 0; a < source.order(); ++a)
    for (Element b = 0; b < source.order(); ++b)
      if (images[source.mul(a, b)] != target.mul(images[a], images[b]))
        throw GroupError("map is not a homomorphism");
  return GroupHom{std::move(source), std::move(target), std::move(images)};
}

Character2 trivial_character(const FiniteGroup& g) {
  Subgroup all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Character2{GroupHom{g, cyclic_group(2), std::vector<Element>(g.order(), 0)}, std::move(all)};
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw GroupError("cyclic group of order 0");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup("C" + std::to_string(n), n, std::move(t));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 2) throw GroupError("dihedral group needs n >= 2");
  const std::size_t order = 2 * n;
  std::vector<Element> t(order * order);
  // r^k s^e is stored at index k + n e.
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t ka = a % n, ea = a / n, kb = b % n, eb = b / n;
      const std::size_t k = ea ? (ka + n - kb) % n : (ka + kb) % n;
      t[a * order + b] = static_cast<Element>(k + n * (ea ^ eb));
    }
  return FiniteGroup("D" + std::to_string(n), order, std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = static_cast<Element>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  FiniteGroup prod(a.name() + "x" + b.name(), n, std::move(t));
  auto d = std::make_shared<FiniteGroup::Data>(*prod.data_);
  auto flatten = [&](const FiniteGroup& f) {
    if (f.factors().empty())
      d->factors.push_back(f);
    else
      d->factors.insert(d->factors.end(), f.factors().begin(), f.factors().end());
  };
  flatten(a);
  flatten(b);
  return FiniteGroup(std::shared_ptr<const FiniteGroup::Data>(std::move(d)));
}

FiniteGroup permutation_group(std::string name,
                              const std::vector<std::vector<std::vector<int>>>& generators_as_cycles,
                              std::size_t degree, std::size_t max_order) {
  using Perm = std::vector<int>;
  std::vector<Perm> gens;
  for (const auto& cycles : generators_as_cycles) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (int pt : cyc) {
        if (pt < 1 || static_cast<std::size_t>(pt) > degree)
          throw GroupError("permutation point " + std::to_string(pt) + " outside degree " +
                           std::to_string(degree));
        if (used[pt - 1]) throw GroupError("point repeated within a generator");
        used[pt - 1] = true;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
    }
    gens.push_back(std::move(p));
  }
  // (p*q)(x) = p(q(x))
  auto compose = [degree](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = p[q[x]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, Element> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : gens) {
      Perm nxt = compose(elems[i], s);
      if (!index.count(nxt)) {
        if (elems.size() >= max_order) throw GroupError("permutation group exceeds order bound");
        index.emplace(nxt, static_cast<Element>(elems.size()));
        elems.push_back(std::move(nxt));
      }
    }
  const std::size_t n = elems.size();
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup(std::move(name), n, std::move(t));
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parse_positive(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw GroupError("cannot parse group '" + std::string(whole) + "'");
  if (digits.size() > 6) throw GroupError("group parameter too large in '" + std::string(whole) + "'");
  return std::stoul(std::string(digits));
}

FiniteGroup parse_perm(const std::string& s) {
  // perm[...] or permN[...]
  const auto open = s.find('[');
  if (open == std::string::npos || s.back() != ']') throw GroupError("malformed perm group '" + s + "'");
  std::optional<std::size_t> declared;
  if (open > 4) declared = parse_positive(std::string_view(s).substr(4, open - 4), s);
  const std::string body = s.substr(open + 1, s.size() - open - 2);

  std::vector<std::vector<std::vector<int>>> gens;
  std::vector<std::vector<int>> current;
  int maxpt = 0;
  std::size_t i = 0;
  bool any = false;
  while (i < body.size()) {
    const char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      const auto close = body.find(')', i);
      if (close == std::string::npos) throw GroupError("unbalanced cycle in '" + s + "'");
      std::vector<int> cyc;
      std::string tok;
      for (std::size_t j = i + 1; j <= close; ++j) {
        const char d = body[j];
        if (std::isdigit(static_cast<unsigned char>(d))) {
          tok += d;
        } else if (d == ' ' || d == ',' || d == ')') {
          if (!tok.empty()) {
            cyc.push_back(std::stoi(tok));
            maxpt = std::max(maxpt, cyc.back());
            tok.clear();
          }
        } else {
          throw GroupError("unexpected character in cycle of '" + s + "'");
        }
      }
      current.push_back(std::move(cyc));
      any = true;
      i = close + 1;
    } else if (c == ',') {
      gens.push_back(std::move(current));
      current.clear();
      ++i;
    } else {
      throw GroupError("unexpected character '" + std::string(1, c) + "' in '" + s + "'");
    }
  }
  if (!current.empty()) gens.push_back(std::move(current));
  if (!any) throw GroupError("perm group needs at least one cycle");
  std::size_t degree = declared.value_or(static_cast<std::size_t>(maxpt));
  if (declared && static_cast<std::size_t>(maxpt) > *declared)
    throw GroupError("generators move points beyond the declared degree " + std::to_string(*declared));
  return permutation_group(s, gens, std::max<std::size_t>(degree, 1));
}

FiniteGroup parse_atom(const std::string& s) {
  if (s.empty()) throw GroupError("empty group factor");
  if (s.rfind("perm", 0) == 0) return parse_perm(s);
  if (s == "S3") return dihedral_group(3).renamed("S3");
  if (s == "V4") return direct_product(cyclic_group(2), cyclic_group(2)).renamed("V4");
  if (s == "A4") return permutation_group("A4", {{{1, 2, 3}}, {{1, 2}, {3, 4}}}, 4);
  if (s == "Q8")
    return permutation_group("Q8", {{{1, 2, 3, 4}, {5, 6, 7, 8}}, {{1, 5, 3, 7}, {2, 8, 4, 6}}}, 8);
  if (s == "F21") return permutation_group("F21", {{{1, 2, 3, 4, 5, 6, 7}}, {{2, 3, 5}, {4, 7, 6}}}, 7);
  if (s[0] == 'C') return cyclic_group(parse_positive(std::string_view(s).substr(1), s));
  if (s[0] == 'D') return dihedral_group(parse_positive(std::string_view(s).substr(1), s));
  throw GroupError("unknown group '" + s + "'");
}

}  // namespace

FiniteGroup parse_group(std::string_view spec) {
  // Split on 'x' or U+00D7 at bracket depth 0.
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  const std::string times = "\xC3\x97";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const char c = spec[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (depth == 0 && c == 'x') {
      parts.push_back(trim(cur));
      cur.clear();
    } else if (depth == 0 && spec.substr(i, times.size()) == times) {
      parts.push_back(trim(cur));
      cur.clear();
      i += times.size() - 1;
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw GroupError("unbalanced brackets in '" + std::string(spec) + "'");
  parts.push_back(trim(cur));
  FiniteGroup g = parse_atom(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parse_atom(parts[i]));
  return g;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.empty() || h.front() != 0) return false;
  std::vector<bool> in(g.order(), false);
  for (Element x : h) in[x] = true;
  for (Element a : h)
    for (Element b : h)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) return false;
  std::vector<bool> in(g.order(), false);
  for (Element x : h) in[x] = true;
  for (Element x = 0; x < g.order(); ++x)
    for (Element k : h)
      if (!in[g.mul(g.mul(x, k), g.inv(x))]) return false;
  return true;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> elems{0};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Element s : gens) {
      const Element y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  Subgroup cur{0};
  for (Element a = 1; a < g.order() && cur.size() < g.order(); ++a) {
    if (std::binary_search(cur.begin(), cur.end(), a)) continue;
    gens.push_back(a);
    cur = generated_subgroup(g, gens);
  }
  return gens;
}

MaterializedSubgroup materialize(const FiniteGroup& g, const Subgroup& h, std::string name) {
  if (!is_subgroup(g, h)) throw GroupError("not a subgroup of " + g.name());
  const std::size_t n = h.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[h[i]] = static_cast<Element>(i);
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = local[g.mul(h[a], h[b])];
  FiniteGroup sub(std::move(name), n, std::move(t));
  return MaterializedSubgroup{sub, GroupHom{sub, g, h}};
}

Quotient quotient(const FiniteGroup& g, const Subgroup& normal, std::string name) {
  if (!is_normal(g, normal)) throw GroupError("quotient by a non-normal subgroup");
  const std::size_t n = g.order();
  std::vector<Element> coset(n, static_cast<Element>(n));
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] != n) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element k : normal) coset[g.mul(x, k)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Element> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = coset[g.mul(reps[a], reps[b])];
  FiniteGroup q(std::move(name), m, std::move(t));
  return Quotient{q, GroupHom{g, q, coset}, reps};
}

std::vector<Character2> orientation_characters(const FiniteGroup& g) {
  const auto gens = generating_set(g);
  const std::size_t k = gens.size();
  const FiniteGroup c2 = cyclic_group(2);
  std::vector<Character2> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> val(g.order(), -1);
    val[0] = 0;
    std::vector<Element> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      const Element x = queue[i];
      for (std::size_t j = 0; j < k; ++j) {
        const Element y = g.mul(x, gens[j]);
        const int v = val[x] ^ static_cast<int>((mask >> j) & 1);
        if (val[y] < 0) {
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<Element> images(g.order());
    Subgroup kernel;
    for (Element x = 0; x < g.order(); ++x) {
      images[x] = static_cast<Element>(val[x]);
      if (val[x] == 0) kernel.push_back(x);
    }
    out.push_back(Character2{GroupHom{g, c2, std::move(images)}, std::move(kernel)});
  }
  std::sort(out.begin(), out.end(),
            [](const Character2& a, const Character2& b) { return a.kernel < b.kernel; });
  return out;
}

std::optional<OddComplement> odd_normal_complement(const FiniteGroup& g) {
  // A normal odd-order K with 2-group quotient contains every odd-order
  // element and consists of them, so it is unique when it exists.
  Subgroup odd;
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) % 2 == 1) odd.push_back(x);
  if (!is_normal(g, odd)) return std::nullopt;
  std::size_t idx = g.order() / odd.size();
  if ((idx & (idx - 1)) != 0) return std::nullopt;
  auto k = materialize(g, odd, "K(" + g.name() + ")");
  auto p = quotient(g, odd, "P(" + g.name() + ")");
  return OddComplement{std::move(odd), std::move(k), std::move(p)};
}

bool KAutomorphism::is_identity() const {
  for (Element i = 0; i < images.size(); ++i)
    if (images[i] != i) return false;
  return true;
}

std::vector<KAutomorphism> conjugation_action(const FiniteGroup& g, const MaterializedSubgroup& k,
                                              const std::vector<Element>& reps) {
  const Subgroup& elems = k.inclusion.images;
  if (!is_normal(g, elems)) throw GroupError("conjugation action requires a normal subgroup");
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  const FiniteGroup& kg = k.group;
  std::vector<KAutomorphism> out;
  for (Element r : reps) {
    KAutomorphism a;
    a.rep = r;
    a.images.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      a.images[i] = local[g.mul(g.mul(r, elems[i]), g.inv(r))];
    for (Element h = 0; h < kg.order() && !a.inner; ++h) {
      bool same = true;
      for (Element x = 0; x < kg.order() && same; ++x)
        same = kg.mul(kg.mul(h, x), kg.inv(h)) == a.images[x];
      a.inner = same;
    }
    out.push_back(std::move(a));
  }
  return out;
}

Character2 character_from_complement(const FiniteGroup& g, const OddComplement& c) {
  if (c.p.group.order() != 2) throw GroupError("2-group quotient of " + g.name() + " is not of order 2");
  Subgroup kernel = c.kernel;
  return Character2{GroupHom{g, cyclic_group(2), c.p.projection.images}, std::move(kernel)};
}

namespace {

// Invariant-factor lists d1 | d2 | ... | dk with product n.
void invariant_factor_lists(std::size_t n, std::size_t prev, std::vector<std::size_t>& cur,
                            std::vector<std::vector<std::size_t>>& out) {
  // Build from the largest factor downward: each new factor divides the previous one.
  if (n == 1) {
    out.emplace_back(cur.rbegin(), cur.rend());
    return;
  }
  for (std::size_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    if (prev != 0 && prev % d != 0) continue;
    // remaining factors must divide d, so n/d must be built from divisors of d
    cur.push_back(d);
    invariant_factor_lists(n / d, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FiniteGroup> small_groups_2mod4(std::size_t max_order) {
  std::map<std::pair<std::size_t, std::string>, FiniteGroup> found;
  auto add = [&](FiniteGroup g) {
    auto key = std::make_pair(g.order(), g.name());
    found.emplace(key, std::move(g));
  };
  for (std::size_t n = 2; n <= max_order; n += 4) add(cyclic_group(n));
  for (std::size_t m = 3; 2 * m <= max_order; m += 2) add(dihedral_group(m));
  // C2 x (non-cyclic odd abelian)
  for (std::size_t m = 3; 2 * m <= max_order; m += 2) {
    std::vector<std::vector<std::size_t>> lists;
    std::vector<std::size_t> cur;
    invariant_factor_lists(m, 0, cur, lists);
    for (const auto& l : lists) {
      if (l.size() < 2) continue;
      FiniteGroup g = cyclic_group(2);
      for (std::size_t d : l) g = direct_product(g, cyclic_group(d));
      add(std::move(g));
    }
  }
  for (std::size_t m = 3; m <= max_order; m += 2)
    for (std::size_t k = 3; 2 * m * k <= max_order; k += 2)
      add(direct_product(dihedral_group(m), cyclic_group(k)));
  if (max_order >= 42) add(direct_product(cyclic_group(2), parse_group("F21")));
  std::vector<FiniteGroup> out;
  for (auto& [key, g] : found) out.push_back(g);
  return out;
}

}  // namespace stabclass
