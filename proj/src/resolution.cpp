#include "stabclass/resolution.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>

namespace stabclass {

std::size_t feasibility_bound() {
  if (const char* env = std::getenv("STABCLASS_MAX_GENERATORS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

namespace {

// Accumulates (row, col, value) triples and assembles a sparse matrix.
class TripletBuilder {
 public:
  TripletBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  void add(std::size_t r, std::size_t c, long v) {
    if (v != 0) t_.emplace_back(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), v);
  }
  IntMatrix build() {
    std::sort(t_.begin(), t_.end());
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < t_.size();) {
      const auto [r, c, v0] = t_[i];
      long v = 0;
      std::size_t j = i;
      while (j < t_.size() && std::get<0>(t_[j]) == r && std::get<1>(t_[j]) == c) v += std::get<2>(t_[j++]);
      if (v != 0) m.push_back(r, c, Integer(v));
      i = j;
    }
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, long>> t_;
};

// True if every column of x lies in the column lattice of r.
bool in_lattice(const IntMatrix& r, const IntMatrix& x) {
  if (x.is_zero()) return true;
  if (r.cols() == 0) return false;
  const auto a = smith_normal_form(r);
  const auto b = smith_normal_form(r.hconcat(x));
  if (a.rank() != b.rank()) return false;
  Integer pa = 1, pb = 1;
  for (const auto& d : a.diagonal) pa *= d;
  for (const auto& d : b.diagonal) pb *= d;
  return pa == pb;
}

std::size_t checked_total(std::size_t base, std::size_t top) {
  const std::size_t bound = feasibility_bound();
  std::size_t total = 0, term = 1;
  for (std::size_t n = 0; n <= top; ++n) {
    total += term;
    if (total > bound) return bound + 1;
    if (n < top) {
      if (base != 0 && term > bound / base + 1) return bound + 1;
      term *= base;
    }
  }
  return total;
}

}  // namespace

AbelianGroup GModule::underlying() const {
  IntMatrix square = relations;
  // Cokernel of the relation matrix.
  const auto s = smith_normal_form(square);
  std::vector<Integer> orders(generators - s.rank(), 0);
  orders.insert(orders.end(), s.diagonal.begin(), s.diagonal.end());
  return AbelianGroup::from_cyclic_orders(orders);
}

unsigned GModule::elementary_prime() const {
  if (relations.cols() != generators || generators == 0) return 0;
  const Integer p = relations.get(0, 0);
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 25) == 0) return 0;
  if (!(relations == IntMatrix::diagonal(std::vector<Integer>(generators, p), generators, generators))) return 0;
  return static_cast<unsigned>(p.get_ui());
}

void validate_module(const GModule& m) {
  const std::size_t n = m.group.order();
  if (m.action.size() != n) throw GroupError("module needs one action matrix per group element");
  if (m.relations.rows() != m.generators) throw GroupError("relation matrix has wrong row count");
  for (const auto& a : m.action)
    if (a.rows() != m.generators || a.cols() != m.generators) throw GroupError("action matrix has wrong shape");
  const IntMatrix id = IntMatrix::identity(m.generators);
  if (!in_lattice(m.relations, m.action[0] - id)) throw GroupError("identity does not act trivially");
  for (const auto& a : m.action)
    if (!in_lattice(m.relations, a * m.relations)) throw GroupError("action does not preserve relations");
  for (Element s : generating_set(m.group))
    for (Element h = 0; h < n; ++h)
      if (!in_lattice(m.relations, m.action[s] * m.action[h] - m.action[m.group.mul(s, h)]))
        throw GroupError("action is not multiplicative");
}

GModule trivial_module(const FiniteGroup& g, const AbelianGroup& a) {
  const std::size_t k = a.rank + a.torsion.size();
  IntMatrix rel(k, a.torsion.size());
  for (std::size_t i = 0; i < a.torsion.size(); ++i)
    rel.push_back(a.rank + i, static_cast<std::uint32_t>(i), a.torsion[i]);
  return GModule{g, k, std::move(rel), std::vector<IntMatrix>(g.order(), IntMatrix::identity(k))};
}

GModule twisted_integers(const Character2& alpha) {
  const FiniteGroup& g = alpha.hom.source;
  std::vector<IntMatrix> action;
  action.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) action.push_back(IntMatrix{{alpha.value(x) ? -1L : 1L}});
  return GModule{g, 1, IntMatrix(1, 0), std::move(action)};
}

GModule twist(const GModule& m, const Character2& alpha) {
  if (!(alpha.hom.source == m.group)) throw GroupError("character and module live on different groups");
  GModule out = m;
  const IntMatrix neg = IntMatrix::diagonal(std::vector<Integer>(m.generators, -1), m.generators, m.generators);
  for (Element x = 0; x < m.group.order(); ++x)
    if (alpha.value(x)) out.action[x] = neg * m.action[x];
  return out;
}

GModule pullback_module(const GroupHom& phi, const GModule& m) {
  if (!(phi.target == m.group)) throw GroupError("pullback: module is not over the target group");
  std::vector<IntMatrix> action;
  action.reserve(phi.source.order());
  for (Element x = 0; x < phi.source.order(); ++x) action.push_back(m.action[phi(x)]);
  return GModule{phi.source, m.generators, m.relations, std::move(action)};
}

std::size_t Resolution::total_generators() const {
  std::size_t t = 0;
  for (auto r : ranks) t += r;
  return t;
}

bool check_resolution(const Resolution& r) {
  const std::size_t n = r.group.order();
  // d_1 must land in the augmentation ideal: coefficients sum to zero per column.
  if (r.boundary.size() < 2) return false;
  {
    std::map<std::uint32_t, long> sums;
    for (const auto& t : r.boundary[1]) sums[t.col] += t.coeff;
    for (const auto& [c, s] : sums)
      if (s != 0) return false;
  }
  for (std::size_t d = 1; d + 1 < r.boundary.size(); ++d) {
    // group terms of d_d by column
    std::vector<std::vector<const RingTerm*>> by_col(r.ranks[d]);
    for (const auto& t : r.boundary[d]) by_col[t.col].push_back(&t);
    std::map<std::tuple<std::uint32_t, std::uint32_t, Element>, long> acc;
    for (const auto& t : r.boundary[d + 1])
      for (const RingTerm* u : by_col[t.row])
        acc[{t.col, u->row, r.group.mul(t.g, u->g)}] += t.coeff * u->coeff;
    for (const auto& [key, v] : acc)
      if (v != 0) return false;
  }
  (void)n;
  return true;
}

Resolution bar_resolution(const FiniteGroup& g, std::size_t n) {
  const std::size_t b = g.order() - 1;
  if (checked_total(b, n + 1) > feasibility_bound())
    throw FeasibilityError("bar resolution of " + g.name() + " through degree " + std::to_string(n + 1) +
                           " exceeds the generator bound " + std::to_string(feasibility_bound()));
  Resolution r{g, n, {}, {}, "bar"};
  r.ranks.push_back(1);
  r.boundary.emplace_back();
  std::vector<std::uint32_t> digits;
  for (std::size_t deg = 1; deg <= n + 1; ++deg) {
    const std::size_t rank = r.ranks.back() * b;
    const std::size_t lower = r.ranks.back();
    r.ranks.push_back(rank);
    std::vector<RingTerm> terms;
    terms.reserve(rank * (deg + 1));
    digits.assign(deg, 0);
    for (std::size_t c = 0; c < rank; ++c) {
      // decode c: digits[0] most significant
      std::size_t x = c;
      for (std::size_t i = deg; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(x % b);
        x /= b;
      }
      const auto col = static_cast<std::uint32_t>(c);
      terms.push_back({static_cast<std::uint32_t>(c % lower), col, digits[0] + 1, 1});
      for (std::size_t i = 0; i + 1 < deg; ++i) {
        const Element h = g.mul(digits[i] + 1, digits[i + 1] + 1);
        if (h == 0) continue;
        std::size_t row = 0;
        for (std::size_t j = 0; j < deg; ++j) {
          if (j == i + 1) continue;
          row = row * b + (j == i ? h - 1 : digits[j]);
        }
        terms.push_back({static_cast<std::uint32_t>(row), col, 0, (i + 1) % 2 ? -1L : 1L});
      }
      terms.push_back({static_cast<std::uint32_t>(c / b), col, 0, deg % 2 ? -1L : 1L});
    }
    r.boundary.push_back(std::move(terms));
  }
  return r;
}

Resolution periodic_resolution(const FiniteGroup& g, std::size_t n) {
  const auto gen = g.cyclic_generator();
  if (!gen) throw GroupError("periodic resolution needs a cyclic group, got " + g.name());
  const Element t = *gen;
  Resolution r{g, n, std::vector<std::size_t>(n + 2, 1), {}, "periodic"};
  r.boundary.emplace_back();
  for (std::size_t deg = 1; deg <= n + 1; ++deg) {
    std::vector<RingTerm> terms;
    if (deg % 2 == 1) {
      terms.push_back({0, 0, t, 1});
      terms.push_back({0, 0, 0, -1});
    } else {
      for (std::size_t i = 0; i < g.order(); ++i) terms.push_back({0, 0, g.power(t, static_cast<long long>(i)), 1});
    }
    r.boundary.push_back(std::move(terms));
  }
  return r;
}

Resolution tensor_resolution(const Resolution& a, const Resolution& b, const FiniteGroup& product) {
  const std::size_t nb = b.group.order();
  if (product.order() != a.group.order() * nb) throw GroupError("tensor resolution: product order mismatch");
  const std::size_t n = std::min(a.degree, b.degree);
  const std::size_t top = n + 1;
  Resolution r{product, n, {}, {}, "tensor(" + a.kind + "," + b.kind + ")"};
  // offsets[deg][p] = start of block F^A_p (x) F^B_{deg-p}
  std::vector<std::vector<std::size_t>> offsets(top + 1);
  for (std::size_t deg = 0; deg <= top; ++deg) {
    std::size_t off = 0;
    for (std::size_t p = 0; p <= deg; ++p) {
      offsets[deg].push_back(off);
      off += a.ranks[p] * b.ranks[deg - p];
    }
    r.ranks.push_back(off);
  }
  if (r.total_generators() > feasibility_bound())
    throw FeasibilityError("tensor resolution of " + product.name() + " exceeds the generator bound");
  auto by_col = [](const Resolution& res) {
    std::vector<std::vector<std::vector<RingTerm>>> out(res.boundary.size());
    for (std::size_t d = 1; d < res.boundary.size(); ++d) {
      out[d].resize(res.ranks[d]);
      for (const auto& t : res.boundary[d]) out[d][t.col].push_back(t);
    }
    return out;
  };
  const auto ca = by_col(a), cb = by_col(b);
  r.boundary.emplace_back();
  for (std::size_t deg = 1; deg <= top; ++deg) {
    std::vector<RingTerm> terms;
    for (std::size_t p = 0; p <= deg; ++p) {
      const std::size_t q = deg - p;
      const std::size_t rbq = b.ranks[q];
      for (std::size_t i = 0; i < a.ranks[p]; ++i)
        for (std::size_t j = 0; j < rbq; ++j) {
          const auto col = static_cast<std::uint32_t>(offsets[deg][p] + i * rbq + j);
          if (p >= 1)
            for (const auto& t : ca[p][i])
              terms.push_back({static_cast<std::uint32_t>(offsets[deg - 1][p - 1] + t.row * rbq + j), col,
                               static_cast<Element>(t.g * nb), t.coeff});
          if (q >= 1)
            for (const auto& t : cb[q][j])
              terms.push_back({static_cast<std::uint32_t>(offsets[deg - 1][p] + i * b.ranks[q - 1] + t.row), col,
                               t.g, p % 2 ? -t.coeff : t.coeff});
        }
    }
    r.boundary.push_back(std::move(terms));
  }
  return r;
}

Resolution best_resolution(const FiniteGroup& g, std::size_t n) {
  if (g.cyclic_generator()) return periodic_resolution(g, n);
  const auto& f = g.factors();
  if (f.size() >= 2) {
    FiniteGroup acc = f.back();
    Resolution res = best_resolution(acc, n);
    for (std::size_t i = f.size() - 1; i-- > 0;) {
      FiniteGroup prod = direct_product(f[i], acc);
      res = tensor_resolution(best_resolution(f[i], n), res, prod);
      acc = prod;
    }
    res.group = g;
    return res;
  }
  return bar_resolution(g, n);
}

IntMatrix coboundary_matrix(const Resolution& r, const GModule& m, std::size_t n) {
  if (n + 1 >= r.boundary.size()) throw FeasibilityError("resolution too short for coboundary in degree " + std::to_string(n));
  const std::size_t k = m.generators;
  TripletBuilder tb(r.ranks[n + 1] * k, r.ranks[n] * k);
  for (const auto& t : r.boundary[n + 1]) {
    const IntMatrix& rho = m.action[t.g];
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& e : rho.row(i)) tb.add(t.col * k + i, t.row * k + e.col, t.coeff * e.value.get_si());
  }
  return tb.build();
}

IntMatrix chain_boundary_matrix(const Resolution& r, const GModule& m, std::size_t n) {
  if (n == 0 || n >= r.boundary.size()) throw FeasibilityError("resolution too short for boundary in degree " + std::to_string(n));
  const std::size_t k = m.generators;
  TripletBuilder tb(r.ranks[n - 1] * k, r.ranks[n] * k);
  for (const auto& t : r.boundary[n]) {
    const IntMatrix& rho = m.action[r.group.inv(t.g)];
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& e : rho.row(i)) tb.add(t.row * k + i, t.col * k + e.col, t.coeff * e.value.get_si());
  }
  return tb.build();
}

}  // namespace stabclass
