#include "stabclass/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <type_traits>

#include "elimination.hpp"

namespace stabclass {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.resize(rows_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw LinalgError("ragged matrix literal");
    std::uint32_t c = 0;
    for (long v : row) {
      if (v != 0) data_[r].push_back(Entry{c, Integer(v)});
      ++c;
    }
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back(Entry{static_cast<std::uint32_t>(i), 1});
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0) m.data_[i].push_back(Entry{static_cast<std::uint32_t>(i), d[i]});
  return m;
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Integer IntMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return 0;
}

void IntMatrix::set(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_) throw LinalgError("matrix index out of range");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (sgn(v) == 0)
      row.erase(it);
    else
      it->value = v;
  } else if (sgn(v) != 0) {
    row.insert(it, Entry{static_cast<std::uint32_t>(c), v});
  }
}

void IntMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (sgn(v) == 0) return;
  if (r >= rows_ || c >= cols_) throw LinalgError("matrix index out of range");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value += v;
    if (sgn(it->value) == 0) row.erase(it);
  } else {
    row.insert(it, Entry{static_cast<std::uint32_t>(c), v});
  }
}

void IntMatrix::push_back(std::size_t r, std::uint32_t c, Integer v) {
  data_[r].push_back(Entry{c, std::move(v)});
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) t.data_[e.col].push_back(Entry{static_cast<std::uint32_t>(r), e.value});
  return t;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != cols_) throw LinalgError("dimension mismatch in matrix-vector product");
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) out[r] += e.value * v[e.col];
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw LinalgError("hconcat row mismatch");
  IntMatrix m(rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    m.data_[r] = data_[r];
    for (const auto& e : o.data_[r])
      m.data_[r].push_back(Entry{static_cast<std::uint32_t>(e.col + cols_), e.value});
  }
  return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& o) const {
  if (cols_ != o.cols_) throw LinalgError("vconcat column mismatch");
  IntMatrix m(rows_ + o.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) m.data_[r] = data_[r];
  for (std::size_t r = 0; r < o.rows_; ++r) m.data_[rows_ + r] = o.data_[r];
  return m;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& o) const {
  IntMatrix m(rows_ + o.rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) m.data_[r] = data_[r];
  for (std::size_t r = 0; r < o.rows_; ++r)
    for (const auto& e : o.data_[r])
      m.data_[rows_ + r].push_back(Entry{static_cast<std::uint32_t>(e.col + cols_), e.value});
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw LinalgError("dimension mismatch in matrix product");
  IntMatrix m(a.rows_, b.cols_);
  std::map<std::uint32_t, Integer> acc;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    acc.clear();
    for (const auto& e : a.data_[r])
      for (const auto& f : b.data_[e.col]) acc[f.col] += e.value * f.value;
    for (auto& [c, v] : acc)
      if (sgn(v) != 0) m.data_[r].push_back(IntMatrix::Entry{c, v});
  }
  return m;
}

namespace {
IntMatrix combine(const IntMatrix& a, const IntMatrix& b, int sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw LinalgError("dimension mismatch in matrix sum");
  IntMatrix m = a;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (const auto& e : b.row(r)) m.add(r, e.col, sign * e.value);
  return m;
}
}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) { return combine(a, b, 1); }
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return combine(a, b, -1); }

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    if (a.data_[r].size() != b.data_[r].size()) return false;
    for (std::size_t i = 0; i < a.data_[r].size(); ++i)
      if (a.data_[r][i].col != b.data_[r][i].col || a.data_[r][i].value != b.data_[r][i].value) return false;
  }
  return true;
}

// ------------------------------------------------------------- AbelianGroup

AbelianGroup::AbelianGroup(std::size_t r, std::vector<Integer> t) : rank(r), torsion(std::move(t)) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw LinalgError("torsion coefficient below 2");
    if (i > 0 && torsion[i] % torsion[i - 1] != 0) throw LinalgError("torsion coefficients not in divisibility order");
  }
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  std::size_t r = 0;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (sgn(o) == 0)
      ++r;
    else if (abs(o) > 1)
      finite.push_back(abs(o));
  }
  // Invariant factors of a diagonal matrix, by repeated gcd/lcm exchange.
  std::sort(finite.begin(), finite.end());
  for (std::size_t i = 0; i < finite.size(); ++i)
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), finite[i].get_mpz_t(), finite[j].get_mpz_t());
      l = finite[i] / g * finite[j];
      finite[i] = g;
      finite[j] = l;
    }
  std::vector<Integer> t;
  for (auto& f : finite)
    if (f > 1) t.push_back(f);
  return AbelianGroup(r, std::move(t));
}

Integer AbelianGroup::order() const {
  if (rank != 0) throw LinalgError("order of an infinite abelian group");
  Integer o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

Integer AbelianGroup::exponent() const {
  if (rank != 0) return 0;
  return torsion.empty() ? Integer(1) : torsion.back();
}

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  // Group equal torsion coefficients: Z/2^2 would be ambiguous, so write (Z/2)^2.
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    if (!first) os << "+";
    first = false;
    if (j - i > 1)
      os << "(Z/" << torsion[i].get_str() << ")^" << (j - i);
    else
      os << "Z/" << torsion[i].get_str();
    i = j;
  }
  return os.str();
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& o) const {
  std::vector<Integer> orders(rank + o.rank, 0);
  orders.insert(orders.end(), torsion.begin(), torsion.end());
  orders.insert(orders.end(), o.torsion.begin(), o.torsion.end());
  return from_cyclic_orders(orders);
}

namespace {
Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
}  // namespace

AbelianGroup AbelianGroup::tensor(const AbelianGroup& o) const {
  std::vector<Integer> orders(rank * o.rank, 0);
  for (std::size_t i = 0; i < o.rank; ++i) orders.insert(orders.end(), torsion.begin(), torsion.end());
  for (std::size_t i = 0; i < rank; ++i) orders.insert(orders.end(), o.torsion.begin(), o.torsion.end());
  for (const auto& s : torsion)
    for (const auto& t : o.torsion) orders.push_back(gcd(s, t));
  return from_cyclic_orders(orders);
}

AbelianGroup AbelianGroup::tor(const AbelianGroup& o) const {
  std::vector<Integer> orders;
  for (const auto& s : torsion)
    for (const auto& t : o.torsion) orders.push_back(gcd(s, t));
  return from_cyclic_orders(orders);
}

// ------------------------------------------------------------------- Smith

namespace {

// Dense working matrix for the residual and transform-tracking paths.
struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> a;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = 1;
    return d;
  }
  IntMatrix to_sparse() const {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (sgn(at(r, c)) != 0) m.push_back(r, static_cast<std::uint32_t>(c), at(r, c));
    return m;
  }
  // row_i += f * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(at(j, c)) != 0) at(i, c) += f * at(j, c);
  }
  void add_col(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t r = 0; r < rows; ++r)
      if (sgn(at(r, j)) != 0) at(r, i) += f * at(r, j);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) at(i, c) = -at(i, c);
  }
};

Dense to_dense(const IntMatrix& m) {
  Dense d(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) d.at(r, e.col) = e.value;
  return d;
}

// Transform bookkeeping: U (rows x rows) with U * M_original * V = current.
struct Transforms {
  Dense u, uinv, v, vinv;
  Transforms(std::size_t r, std::size_t c)
      : u(Dense::identity(r)), uinv(Dense::identity(r)), v(Dense::identity(c)), vinv(Dense::identity(c)) {}
};

// q with |a - q b| <= |b| / 2.
Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs(r) > abs(b)) q += 1;
  return q;
}

class DenseSmith {
 public:
  DenseSmith(Dense m, bool track) : a_(std::move(m)) {
    if (track) t_.emplace(a_.rows, a_.cols);
  }

  // row_i += f * row_j on A (and U); U^{-1}: col_j -= f * col_i
  void row_add(std::size_t i, std::size_t j, const Integer& f) {
    a_.add_row(i, j, f);
    if (t_) {
      t_->u.add_row(i, j, f);
      t_->uinv.add_col(j, i, -f);
    }
  }
  void col_add(std::size_t i, std::size_t j, const Integer& f) {
    a_.add_col(i, j, f);
    if (t_) {
      t_->v.add_col(i, j, f);
      t_->vinv.add_row(j, i, -f);
    }
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    a_.swap_rows(i, j);
    if (t_) {
      t_->u.swap_rows(i, j);
      t_->uinv.swap_cols(i, j);
    }
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    a_.swap_cols(i, j);
    if (t_) {
      t_->v.swap_cols(i, j);
      t_->vinv.swap_rows(i, j);
    }
  }
  void row_negate(std::size_t i) {
    a_.negate_row(i);
    if (t_) {
      t_->u.negate_row(i);
      for (std::size_t r = 0; r < t_->uinv.rows; ++r) t_->uinv.at(r, i) = -t_->uinv.at(r, i);
    }
  }

  std::vector<Integer> run() {
    const std::size_t R = a_.rows, C = a_.cols;
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
      // pivot of least absolute value
      std::size_t pr = R, pc = C;
      for (std::size_t r = t; r < R; ++r)
        for (std::size_t c = t; c < C; ++c) {
          const Integer& v = a_.at(r, c);
          if (sgn(v) == 0) continue;
          if (pr == R || abs(v) < abs(a_.at(pr, pc))) {
            pr = r;
            pc = c;
            if (abs(v) == 1) goto found;
          }
        }
    found:
      if (pr == R) break;
      row_swap(t, pr);
      col_swap(t, pc);
      for (;;) {
        // Nearest-integer quotients leave remainders of at most half the
        // pivot, so the pivot halves on every round and entries stay small.
        for (std::size_t r = t + 1; r < R; ++r)
          if (sgn(a_.at(r, t)) != 0) {
            const Integer q = nearest_quotient(a_.at(r, t), a_.at(t, t));
            if (sgn(q) != 0) row_add(r, t, -q);
          }
        for (std::size_t c = t + 1; c < C; ++c)
          if (sgn(a_.at(t, c)) != 0) {
            const Integer q = nearest_quotient(a_.at(t, c), a_.at(t, t));
            if (sgn(q) != 0) col_add(c, t, -q);
          }
        std::size_t br = R, bc = C;
        for (std::size_t r = t + 1; r < R; ++r)
          if (sgn(a_.at(r, t)) != 0 && (br == R || abs(a_.at(r, t)) < abs(a_.at(br, t)))) br = r;
        for (std::size_t c = t + 1; c < C; ++c)
          if (sgn(a_.at(t, c)) != 0 && (bc == C || abs(a_.at(t, c)) < abs(a_.at(t, bc)))) bc = c;
        if (br != R && (bc == C || abs(a_.at(br, t)) <= abs(a_.at(t, bc)))) {
          row_swap(t, br);
          continue;
        }
        if (bc != C) {
          col_swap(t, bc);
          continue;
        }
        // divisibility of the remaining block
        bool divisible = true;
        for (std::size_t r = t + 1; r < R && divisible; ++r)
          for (std::size_t c = t + 1; c < C; ++c)
            if (sgn(a_.at(r, c)) != 0 && !mpz_divisible_p(a_.at(r, c).get_mpz_t(), a_.at(t, t).get_mpz_t())) {
              row_add(t, r, 1);
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (sgn(a_.at(t, t)) < 0) row_negate(t);
      diag.push_back(a_.at(t, t));
    }
    return diag;
  }

  std::optional<Transforms>& transforms() { return t_; }

 private:
  Dense a_;
  std::optional<Transforms> t_;
};

template <class Ring>
std::vector<typename detail::SparseEliminator<Ring>::Row> int_rows(const IntMatrix& m) {
  std::vector<typename detail::SparseEliminator<Ring>::Row> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows[r].reserve(m.row(r).size());
    for (const auto& e : m.row(r)) {
      if constexpr (std::is_same_v<typename Ring::Value, Integer>) {
        rows[r].push_back({e.col, e.value});
      } else {
        if (!e.value.fits_slong_p()) throw detail::OverflowError{};
        rows[r].push_back({e.col, e.value.get_si()});
      }
    }
  }
  return rows;
}

// Unit pivots are eliminated sparsely; whatever is left goes through dense SNF.
template <class Ring>
std::vector<Integer> eliminate_then_dense(const IntMatrix& mm) {
  detail::SparseEliminator<Ring> elim(Ring{}, mm.cols(), int_rows<Ring>(mm), false);
  elim.run();
  std::vector<Integer> diag(elim.pivot_count(), Integer(1));
  auto rest = elim.residual();
  if (!rest.empty()) {
    std::map<std::uint32_t, std::size_t> colmap;
    for (const auto& row : rest)
      for (const auto& e : row) colmap.emplace(e.col, 0);
    std::size_t k = 0;
    for (auto& [c, idx] : colmap) idx = k++;
    Dense d(rest.size(), colmap.size());
    for (std::size_t r = 0; r < rest.size(); ++r)
      for (const auto& e : rest[r]) d.at(r, colmap[e.col]) = Integer(e.val);
    DenseSmith ds(std::move(d), false);
    auto tail = ds.run();
    diag.insert(diag.end(), tail.begin(), tail.end());
  }
  return diag;
}

std::vector<Integer> sparse_invariant_factors(const IntMatrix& m) {
  // Rows are taken along the longer side.
  IntMatrix t;
  if (m.rows() < m.cols()) t = m.transpose();
  const IntMatrix& mm = m.rows() < m.cols() ? t : m;
  std::vector<Integer> diag;
  try {
    diag = eliminate_then_dense<detail::Int64Ring>(mm);
  } catch (const detail::OverflowError&) {
    diag = eliminate_then_dense<detail::IntegerRing>(mm);
  }
  // The residual factors may not be ordered relative to each other; normalize.
  auto g = AbelianGroup::from_cyclic_orders(diag);
  std::vector<Integer> out(diag.size() - g.torsion.size(), Integer(1));
  out.insert(out.end(), g.torsion.begin(), g.torsion.end());
  return out;
}

}  // namespace

IntMatrix SmithForm::diagonal_matrix() const { return IntMatrix::diagonal(diagonal, rows, cols); }

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options) {
  SmithForm s;
  s.rows = m.rows();
  s.cols = m.cols();
  if (!options.transforms) {
    s.diagonal = sparse_invariant_factors(m);
    return s;
  }
  DenseSmith ds(to_dense(m), true);
  s.diagonal = ds.run();
  auto& t = *ds.transforms();
  s.left = t.u.to_sparse();
  s.right = t.v.to_sparse();
  s.left_inverse = t.uinv.to_sparse();
  s.right_inverse = t.vinv.to_sparse();
  return s;
}

AbelianGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_in.rows() != d_out.cols()) throw LinalgError("homology_at: incompatible dimensions");
  if (!(d_out * d_in).is_zero()) throw LinalgError("homology_at: d_out * d_in != 0");
  const std::size_t n = d_out.cols();
  const auto din = sparse_invariant_factors(d_in);
  const std::size_t rank_out = sparse_invariant_factors(d_out).size();
  std::vector<Integer> tors;
  for (const auto& d : din)
    if (d > 1) tors.push_back(d);
  return AbelianGroup(n - rank_out - din.size(), tors);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  auto s = smith_normal_form(m, {.transforms = true});
  const IntMatrix& v = *s.right;
  IntMatrix k(m.cols(), m.cols() - s.rank());
  for (std::size_t r = 0; r < v.rows(); ++r)
    for (const auto& e : v.row(r))
      if (e.col >= s.rank()) k.push_back(r, static_cast<std::uint32_t>(e.col - s.rank()), e.value);
  return k;
}

AbelianGroup presented_homology(const IntMatrix& d_in, const IntMatrix& d_out, const IntMatrix& rel_mid,
                                const IntMatrix& rel_out) {
  const std::size_t n = d_out.cols();
  if (d_in.rows() != n || rel_mid.rows() != n || rel_out.rows() != d_out.rows())
    throw LinalgError("presented_homology: incompatible dimensions");
  // Cycles: x with d_out x in im(rel_out).
  IntMatrix ker = kernel_basis(d_out.hconcat(rel_out));
  IntMatrix cyc(n, ker.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& e : ker.row(r)) cyc.push_back(r, e.col, e.value);
  // Lattice basis of the cycles: cyc = U^{-1} D V^{-1}.
  auto s = smith_normal_form(cyc, {.transforms = true});
  const std::size_t w = s.rank();
  // Boundaries (including relations) in cycle-basis coordinates: c_i = (U v)_i / d_i.
  IntMatrix bnd = d_in.hconcat(rel_mid);
  IntMatrix uv = *s.left * bnd;
  IntMatrix coords(w, bnd.cols());
  for (std::size_t i = 0; i < uv.rows(); ++i)
    for (const auto& e : uv.row(i)) {
      if (i >= w) throw LinalgError("presented_homology: boundary is not a cycle");
      if (!mpz_divisible_p(e.value.get_mpz_t(), s.diagonal[i].get_mpz_t()))
        throw LinalgError("presented_homology: boundary outside cycle lattice");
      coords.push_back(i, e.col, e.value / s.diagonal[i]);
    }
  auto q = smith_normal_form(coords);
  std::vector<Integer> tors;
  for (const auto& d : q.diagonal)
    if (d > 1) tors.push_back(d);
  return AbelianGroup(w - q.rank(), tors);
}

std::size_t rank(const IntMatrix& m) { return sparse_invariant_factors(m).size(); }

std::size_t rank_mod_p(const IntMatrix& m, unsigned p) {
  const bool flip = m.rows() < m.cols();
  IntMatrix t;
  if (flip) t = m.transpose();
  const IntMatrix& mm = flip ? t : m;
  using Elim = detail::SparseEliminator<detail::PrimeField>;
  std::vector<Elim::Row> rows(mm.rows());
  for (std::size_t r = 0; r < mm.rows(); ++r)
    for (const auto& e : mm.row(r)) {
      Integer v;
      mpz_fdiv_r_ui(v.get_mpz_t(), e.value.get_mpz_t(), p);
      if (sgn(v) != 0) rows[r].push_back({e.col, static_cast<std::uint32_t>(v.get_ui())});
    }
  Elim elim(detail::PrimeField{p}, mm.cols(), std::move(rows), false);
  elim.run();
  return elim.pivot_count();
}

// --------------------------------------------------------------------- F2

F2Vector f2_add(const F2Vector& a, const F2Vector& b) {
  F2Vector out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

F2Matrix F2Matrix::from_int(const IntMatrix& m) {
  F2Matrix f(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r))
      if (mpz_odd_p(e.value.get_mpz_t())) f.data_[r].push_back(e.col);
  return f;
}

void F2Matrix::flip(std::size_t r, std::uint32_t c) {
  auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c);
  if (it != row.end() && *it == c)
    row.erase(it);
  else
    row.insert(it, c);
}

F2Vector F2Matrix::apply(const F2Vector& v) const {
  std::vector<bool> in(cols_, false);
  for (auto c : v) in[c] = true;
  F2Vector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    bool bit = false;
    for (auto c : data_[r]) bit ^= in[c];
    if (bit) out.push_back(static_cast<std::uint32_t>(r));
  }
  return out;
}

namespace {
using F2Elim = detail::SparseEliminator<detail::PrimeField>;
std::vector<F2Elim::Row> f2_rows(const F2Matrix& m) {
  std::vector<F2Elim::Row> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows[r].reserve(m.row(r).size());
    for (auto c : m.row(r)) rows[r].push_back({c, 1u});
  }
  return rows;
}
}  // namespace

std::size_t mod2_rank(const F2Matrix& m) {
  F2Elim elim(detail::PrimeField{2}, m.cols(), f2_rows(m), false);
  elim.run();
  return elim.pivot_count();
}

std::vector<F2Vector> mod2_kernel_basis(const F2Matrix& m) {
  F2Elim elim(detail::PrimeField{2}, m.cols(), f2_rows(m), true);
  elim.run();
  std::vector<F2Vector> out;
  std::vector<std::uint8_t> x(m.cols(), 0);
  for (std::uint32_t f = 0; f < m.cols(); ++f) {
    if (elim.col_pivoted(f)) continue;
    std::fill(x.begin(), x.end(), 0);
    x[f] = 1;
    // Back substitution in reverse pivot order; each pivot row only involves
    // columns pivoted later or never.
    const auto& piv = elim.pivots();
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
      std::uint8_t s = 0;
      for (const auto& e : it->row)
        if (e.col != it->col) s ^= x[e.col];
      x[it->col] = s;
    }
    F2Vector v;
    for (std::uint32_t c = 0; c < m.cols(); ++c)
      if (x[c]) v.push_back(c);
    out.push_back(std::move(v));
  }
  return out;
}

bool F2Echelon::insert(F2Vector v) {
  while (!v.empty() && slot_[v.front()] != kNone) v = f2_add(v, basis_[slot_[v.front()]]);
  if (v.empty()) return false;
  slot_[v.front()] = static_cast<std::uint32_t>(basis_.size());
  basis_.push_back(std::move(v));
  return true;
}

F2Vector F2Echelon::reduce(F2Vector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const auto c = v[pos];
    if (slot_[c] == kNone) {
      ++pos;
      continue;
    }
    v = f2_add(v, basis_[slot_[c]]);
    // entries below c are untouched; resume at the first index >= c
    pos = static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
  }
  return v;
}

}  // namespace stabclass
