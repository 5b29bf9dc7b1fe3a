#include "stabclass/cohomology.hpp"

#include <algorithm>

namespace stabclass {

namespace {

IntMatrix block_relations(const GModule& m, std::size_t copies) {
  const std::size_t k = m.generators, c = m.relations.cols();
  IntMatrix out(k * copies, c * copies);
  for (std::size_t b = 0; b < copies; ++b)
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& e : m.relations.row(i)) out.push_back(b * k + i, static_cast<std::uint32_t>(b * c + e.col), e.value);
  return out;
}

AbelianGroup elementary(std::size_t dim, unsigned p) {
  return AbelianGroup::from_cyclic_orders(std::vector<Integer>(dim, Integer(p)));
}

// Subquotient ker(out) / im(in) at a position of dimension `dim` (in generator
// coordinates), dispatching on the kind of coefficient module.
class Subquotients {
 public:
  Subquotients(const GModule& m, std::vector<std::size_t> dims) : m_(m), dims_(std::move(dims)) {
    p_ = m.elementary_prime();
  }

  AbelianGroup at(std::size_t pos, const IntMatrix* in, const IntMatrix* out) {
    const std::size_t dim = dims_[pos] * m_.generators;
    if (m_.is_free()) {
      const std::size_t rout = out ? rank_of(out) : 0;
      std::size_t rin = 0;
      std::vector<Integer> tors;
      if (in) {
        const auto& f = factors_of(in);
        rin = f.size();
        for (const auto& d : f)
          if (d > 1) tors.push_back(d);
      }
      return AbelianGroup(dim - rout - rin, tors);
    }
    if (p_ != 0) {
      const std::size_t rout = out ? rank_of_p(out) : 0;
      const std::size_t rin = in ? rank_of_p(in) : 0;
      return elementary(dim - rout - rin, p_);
    }
    const IntMatrix zero_in(dim, 0);
    const IntMatrix rel_mid = block_relations(m_, dims_[pos]);
    if (out) {
      const std::size_t target = out->rows() / std::max<std::size_t>(m_.generators, 1);
      return presented_homology(in ? *in : zero_in, *out, rel_mid, block_relations(m_, target));
    }
    const IntMatrix zero_out(0, dim);
    return presented_homology(in ? *in : zero_in, zero_out, rel_mid, IntMatrix(0, 0));
  }

 private:
  const std::vector<Integer>& factors_of(const IntMatrix* m) {
    auto it = cache_.find(m);
    if (it == cache_.end()) it = cache_.emplace(m, smith_normal_form(*m).diagonal).first;
    return it->second;
  }
  std::size_t rank_of(const IntMatrix* m) { return factors_of(m).size(); }
  std::size_t rank_of_p(const IntMatrix* m) {
    auto it = pcache_.find(m);
    if (it == pcache_.end()) it = pcache_.emplace(m, rank_mod_p(*m, p_)).first;
    return it->second;
  }

  const GModule& m_;
  std::vector<std::size_t> dims_;
  unsigned p_ = 0;
  std::map<const IntMatrix*, std::vector<Integer>> cache_;
  std::map<const IntMatrix*, std::size_t> pcache_;
};

void require_same_group(const Resolution& r, const GModule& m) {
  if (!(r.group == m.group)) throw GroupError("resolution and module are over different groups");
}

}  // namespace

std::vector<AbelianGroup> cohomology_range(const Resolution& r, const GModule& m, std::size_t max_n) {
  require_same_group(r, m);
  if (max_n > r.degree) throw FeasibilityError("resolution truncated below requested degree");
  std::vector<IntMatrix> d;
  for (std::size_t n = 0; n <= max_n; ++n) d.push_back(coboundary_matrix(r, m, n));
  Subquotients sq(m, r.ranks);
  std::vector<AbelianGroup> out;
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(sq.at(n, n ? &d[n - 1] : nullptr, &d[n]));
  return out;
}

AbelianGroup cohomology(const Resolution& r, const GModule& m, std::size_t n) {
  require_same_group(r, m);
  if (n > r.degree) throw FeasibilityError("resolution truncated below requested degree");
  IntMatrix out = coboundary_matrix(r, m, n);
  std::optional<IntMatrix> in;
  if (n > 0) in = coboundary_matrix(r, m, n - 1);
  Subquotients sq(m, r.ranks);
  return sq.at(n, in ? &*in : nullptr, &out);
}

AbelianGroup cohomology(const GModule& m, std::size_t n) { return cohomology(best_resolution(m.group, n), m, n); }

std::vector<AbelianGroup> homology_range(const Resolution& r, const GModule& m, std::size_t max_n) {
  require_same_group(r, m);
  if (max_n > r.degree) throw FeasibilityError("resolution truncated below requested degree");
  std::vector<IntMatrix> d(max_n + 2);
  for (std::size_t n = 1; n <= max_n + 1; ++n) d[n] = chain_boundary_matrix(r, m, n);
  Subquotients sq(m, r.ranks);
  std::vector<AbelianGroup> out;
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(sq.at(n, &d[n + 1], n ? &d[n] : nullptr));
  return out;
}

AbelianGroup homology(const Resolution& r, const GModule& m, std::size_t n) {
  require_same_group(r, m);
  if (n > r.degree) throw FeasibilityError("resolution truncated below requested degree");
  IntMatrix in = chain_boundary_matrix(r, m, n + 1);
  std::optional<IntMatrix> out;
  if (n > 0) out = chain_boundary_matrix(r, m, n);
  Subquotients sq(m, r.ranks);
  return sq.at(n, &in, out ? &*out : nullptr);
}

AbelianGroup homology(const GModule& m, std::size_t n) { return homology(best_resolution(m.group, n), m, n); }

std::vector<std::size_t> mod2_dimensions(const FiniteGroup& g, std::size_t max_n) {
  const auto h = cohomology_range(best_resolution(g, max_n), trivial_module(g, AbelianGroup::cyclic(2)), max_n);
  std::vector<std::size_t> dims;
  for (const auto& a : h) dims.push_back(a.torsion.size());
  return dims;
}

// ------------------------------------------------------------- bar cochains

Mod2BarCochains::Mod2BarCochains(const FiniteGroup& g, std::size_t top, bool with_cocycles)
    : group_(g), top_(top) {
  const std::size_t b = g.order() - 1;
  dims_.push_back(1);
  for (std::size_t n = 1; n <= top + 1; ++n) dims_.push_back(dims_.back() * b);
  const std::size_t last = with_cocycles ? top : (top == 0 ? 0 : top - 1);
  const bool any = with_cocycles || top > 0;
  if (any) {
    const Resolution r = bar_resolution(g, last);
    for (std::size_t n = 0; n <= last; ++n) {
      // delta^n from d_{n+1}, coefficients mod 2, group elements act trivially.
      std::vector<F2Vector> rows(r.ranks[n + 1]);
      for (const auto& t : r.boundary[n + 1])
        if (t.coeff % 2 != 0) rows[t.col].push_back(t.row);
      F2Matrix m(r.ranks[n + 1], r.ranks[n]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& v = rows[i];
        std::sort(v.begin(), v.end());
        F2Vector clean;
        for (std::size_t a = 0; a < v.size();) {
          std::size_t c = a;
          while (c < v.size() && v[c] == v[a]) ++c;
          if ((c - a) % 2) clean.push_back(v[a]);
          a = c;
        }
        m.set_row(i, std::move(clean));
      }
      delta_.push_back(std::move(m));
    }
  }
  for (std::size_t n = 0; n <= top; ++n) {
    F2Echelon e(dims_[n]);
    if (n > 0) {
      // columns of delta^{n-1}
      const F2Matrix& d = delta_[n - 1];
      std::vector<F2Vector> cols(d.cols());
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (auto c : d.row(r)) cols[c].push_back(static_cast<std::uint32_t>(r));
      for (auto& c : cols)
        if (!c.empty()) e.insert(std::move(c));
    }
    images_.push_back(std::move(e));
  }
}

bool Mod2BarCochains::is_cocycle(const F2Vector& f, std::size_t n) const {
  if (!has_coboundary(n)) throw FeasibilityError("cocycle test needs the coboundary out of degree " + std::to_string(n));
  return delta_[n].apply(f).empty();
}

std::size_t Mod2BarCochains::tuple_index(const std::vector<Element>& tuple) const {
  const std::size_t b = group_.order() - 1;
  std::size_t idx = 0;
  for (Element x : tuple) {
    if (x == 0) throw GroupError("degenerate tuple has no normalized index");
    idx = idx * b + (x - 1);
  }
  return idx;
}

ClassCoordinates::ClassCoordinates(const F2Echelon& boundaries, std::vector<F2Vector> reps)
    : boundaries_(&boundaries), count_(reps.size()) {
  if (reps.size() > 64) throw LinalgError("too many classes for coordinate tracking");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    F2Vector v = boundaries.reduce(reps[i]);
    std::uint64_t mask = std::uint64_t{1} << i;
    for (std::size_t j = 0; j < pivoted_.size(); ++j)
      if (std::binary_search(v.begin(), v.end(), pivoted_[j].front())) {
        v = f2_add(v, pivoted_[j]);
        mask ^= combos_[j];
      }
    if (v.empty()) throw LinalgError("class representatives are dependent");
    pivoted_.push_back(std::move(v));
    combos_.push_back(mask);
  }
}

std::vector<int> ClassCoordinates::coordinates(const F2Vector& cocycle) const {
  F2Vector v = boundaries_->reduce(cocycle);
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < pivoted_.size(); ++j)
    if (std::binary_search(v.begin(), v.end(), pivoted_[j].front())) {
      v = f2_add(v, pivoted_[j]);
      mask ^= combos_[j];
    }
  if (!v.empty()) throw LinalgError("cocycle class outside the span of the chosen basis");
  std::vector<int> out(count_);
  for (std::size_t i = 0; i < count_; ++i) out[i] = static_cast<int>((mask >> i) & 1);
  return out;
}

F2Vector cup_product(const F2Vector& f, std::size_t /*p*/, const F2Vector& g, std::size_t q, std::size_t base) {
  std::size_t shift = 1;
  for (std::size_t i = 0; i < q; ++i) shift *= base;
  F2Vector out;
  out.reserve(f.size() * g.size());
  for (auto s : f)
    for (auto t : g) out.push_back(static_cast<std::uint32_t>(s * shift + t));
  return out;
}

namespace {

std::vector<F2Vector> cohomology_reps(const Mod2BarCochains& c, std::size_t n) {
  F2Echelon work = c.boundaries(n);
  std::vector<F2Vector> reps;
  for (auto& k : mod2_kernel_basis(c.coboundary(n))) {
    F2Vector r = c.boundaries(n).reduce(k);
    if (work.insert(r)) reps.push_back(std::move(r));
  }
  return reps;
}

}  // namespace

CohomologyRingSlice mod2_ring(const FiniteGroup& g, std::size_t max_degree) {
  const Mod2BarCochains c(g, max_degree, true);
  CohomologyRingSlice s;
  s.group = g.name();
  s.max_degree = max_degree;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    s.basis.push_back(cohomology_reps(c, n));
    s.dims.push_back(s.basis.back().size());
  }
  std::vector<ClassCoordinates> coords;
  for (std::size_t n = 0; n <= max_degree; ++n) coords.emplace_back(c.boundaries(n), s.basis[n]);
  const std::size_t base = g.order() - 1;
  for (std::size_t p = 0; p <= max_degree; ++p)
    for (std::size_t q = 0; p + q <= max_degree; ++q)
      for (std::size_t i = 0; i < s.dims[p]; ++i)
        for (std::size_t j = 0; j < s.dims[q]; ++j)
          s.products[{p, i, q, j}] = coords[p + q].coordinates(cup_product(s.basis[p][i], p, s.basis[q][j], q, base));
  return s;
}

F2Vector pullback_cochain(const GroupHom& phi, const F2Vector& f, std::size_t n) {
  const FiniteGroup& g = phi.source;
  const std::size_t bg = g.order() - 1, bp = phi.target.order() - 1;
  F2Vector out;
  if (n == 0) return f;
  if (bg == 0) return out;
  std::vector<std::uint32_t> digits(n, 0);
  std::size_t idx = 0;
  for (;;) {
    std::size_t img = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Element y = phi(digits[i] + 1);
      if (y == 0)
        ok = false;
      else
        img = img * bp + (y - 1);
    }
    if (ok && std::binary_search(f.begin(), f.end(), static_cast<std::uint32_t>(img)))
      out.push_back(static_cast<std::uint32_t>(idx));
    ++idx;
    std::size_t i = n;
    while (i > 0 && ++digits[i - 1] == bg) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

bool InflationMap::isomorphism_in_range() const {
  return cup_compatible && std::all_of(isomorphism.begin(), isomorphism.end(), [](bool b) { return b; });
}

InflationMap inflation_map(const GroupHom& phi, std::size_t max_degree) {
  if (!phi.is_surjective()) throw GroupError("inflation needs a surjective homomorphism");
  const FiniteGroup& g = phi.source;
  const FiniteGroup& p = phi.target;
  InflationMap m;
  m.source = g.name();
  m.target = p.name();
  m.max_degree = max_degree;
  const CohomologyRingSlice ring_p = mod2_ring(p, max_degree);
  m.target_dims = ring_p.dims;
  m.source_dims = mod2_dimensions(g, max_degree);
  const Mod2BarCochains cg(g, max_degree, false);
  std::vector<std::vector<F2Vector>> pulled(max_degree + 1);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    F2Echelon work = cg.boundaries(n);
    bool inj = true;
    for (const auto& rep : ring_p.basis[n]) {
      pulled[n].push_back(pullback_cochain(phi, rep, n));
      if (!work.insert(pulled[n].back())) inj = false;
    }
    m.injective.push_back(inj);
    m.isomorphism.push_back(inj && m.source_dims[n] == m.target_dims[n]);
  }
  const std::size_t base = g.order() - 1;
  bool ok = true;
  for (const auto& [key, coords] : ring_p.products) {
    const auto [a, i, b, j] = key;
    F2Vector lhs;
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (coords[k]) lhs = f2_add(lhs, pulled[a + b][k]);
    const F2Vector rhs = cup_product(pulled[a][i], a, pulled[b][j], b, base);
    if (!cg.boundaries(a + b).reduce(f2_add(lhs, rhs)).empty()) ok = false;
    ++m.cup_pairs_checked;
  }
  m.cup_compatible = ok;
  try {
    const Mod2BarCochains full(g, max_degree, true);
    std::vector<std::vector<std::vector<int>>> mats;
    for (std::size_t n = 0; n <= max_degree; ++n) {
      const ClassCoordinates cc(full.boundaries(n), cohomology_reps(full, n));
      std::vector<std::vector<int>> cols;
      for (const auto& v : pulled[n]) cols.push_back(cc.coordinates(v));
      mats.push_back(std::move(cols));
    }
    m.matrices = std::move(mats);
  } catch (const FeasibilityError&) {
  }
  return m;
}

// -------------------------------------------------- cohomology with action

CohomologyWithAction cohomology_with_action(const FiniteGroup& k, const std::vector<std::vector<Element>>& autos,
                                            std::size_t q, std::size_t dense_limit) {
  CohomologyWithAction out;
  if (q == 0) {
    out.group = AbelianGroup::integers();
    out.action.assign(autos.size(), IntMatrix::identity(1));
    return out;
  }
  const std::size_t b = k.order() - 1;
  std::size_t dim = 1;
  for (std::size_t i = 0; i < q; ++i) dim *= b;
  if (dim > dense_limit)
    throw FeasibilityError("cochain dimension " + std::to_string(dim) + " of " + k.name() + " in degree " +
                           std::to_string(q) + " exceeds the dense limit " + std::to_string(dense_limit));
  const Resolution r = bar_resolution(k, q);
  const GModule z = trivial_module(k, AbelianGroup::integers());
  const IntMatrix a = coboundary_matrix(r, z, q - 1);
  const IntMatrix next = coboundary_matrix(r, z, q);
  const SmithForm s = smith_normal_form(a, {.transforms = true});
  if (dim - rank(next) - s.rank() != 0) throw LinalgError("cohomology with action supports finite groups only");
  std::vector<std::size_t> pos;
  std::vector<Integer> tors;
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (s.diagonal[i] > 1) {
      pos.push_back(i);
      tors.push_back(s.diagonal[i]);
    }
  out.group = AbelianGroup(0, tors);
  // generator columns of U^{-1}
  const IntMatrix uinv_t = s.left_inverse->transpose();
  const IntMatrix& u = *s.left;
  for (const auto& auto_images : autos) {
    IntMatrix act(pos.size(), pos.size());
    for (std::size_t gi = 0; gi < pos.size(); ++gi) {
      std::vector<Integer> x(dim);
      for (const auto& e : uinv_t.row(pos[gi])) {
        // tuple e.col -> image tuple under the automorphism
        std::size_t idx = e.col, img = 0, scale = 1;
        for (std::size_t t = 0; t < q; ++t) {
          const Element el = static_cast<Element>(idx % b + 1);
          idx /= b;
          img += (auto_images[el] - 1) * scale;
          scale *= b;
        }
        x[img] += e.value;
      }
      const auto y = u.apply(x);
      for (std::size_t gj = 0; gj < pos.size(); ++gj) {
        Integer c;
        mpz_fdiv_r(c.get_mpz_t(), y[pos[gj]].get_mpz_t(), tors[gj].get_mpz_t());
        if (sgn(c) != 0) act.push_back(gj, static_cast<std::uint32_t>(gi), c);
      }
    }
    out.action.push_back(std::move(act));
  }
  return out;
}

}  // namespace stabclass
