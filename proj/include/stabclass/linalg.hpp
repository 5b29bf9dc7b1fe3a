#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabclass {

using Integer = mpz_class;

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse integer matrix stored by rows; each row keeps its nonzero entries
/// sorted by column.
class IntMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    Integer value;
  };

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& d, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  Integer get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Integer& v);
  void add(std::size_t r, std::size_t c, const Integer& v);
  /// Appends to row r; caller guarantees increasing column order and nonzero v.
  void push_back(std::size_t r, std::uint32_t c, Integer v);

  const std::vector<Entry>& row(std::size_t r) const { return data_[r]; }

  IntMatrix transpose() const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  /// Block placement helpers used when assembling module-valued maps.
  IntMatrix hconcat(const IntMatrix& other) const;
  IntMatrix vconcat(const IntMatrix& other) const;
  IntMatrix direct_sum(const IntMatrix& other) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

/// Finitely generated abelian group in invariant-factor form: Z^rank plus
/// Z/t_1 + ... + Z/t_k with 2 <= t_1 | t_2 | ... | t_k.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  AbelianGroup() = default;
  AbelianGroup(std::size_t rank, std::vector<Integer> torsion);

  /// Normalizes an arbitrary list of cyclic orders (0 means Z, 1 is dropped).
  static AbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);
  static AbelianGroup zero() { return {}; }
  static AbelianGroup integers(std::size_t r = 1) { return AbelianGroup(r, {}); }
  static AbelianGroup cyclic(long n) { return from_cyclic_orders({Integer(n)}); }

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool is_finite() const { return rank == 0; }
  Integer order() const;     // throws if infinite
  Integer exponent() const;  // 0 for infinite groups, 1 for the zero group
  std::string to_string() const;

  AbelianGroup direct_sum(const AbelianGroup& other) const;
  AbelianGroup tensor(const AbelianGroup& other) const;
  AbelianGroup tor(const AbelianGroup& other) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
};

struct SmithOptions {
  bool transforms = false;
};

/// Smith normal form. `diagonal` lists the nonzero invariant factors
/// d_1 | d_2 | ... (length = rank). With transforms, left * M * right = D and
/// the inverses are retained too.
struct SmithForm {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> diagonal;
  std::optional<IntMatrix> left, right, left_inverse, right_inverse;

  std::size_t rank() const { return diagonal.size(); }
  IntMatrix diagonal_matrix() const;
};

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options = {});

/// Homology ker(d_out) / im(d_in) of free abelian groups. Throws if
/// d_out * d_in != 0.
AbelianGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

/// Homology at the middle of A -> B -> C where B = Z^n / im(rel_mid) and
/// C = Z^m / im(rel_out); the maps are given on representatives.
AbelianGroup presented_homology(const IntMatrix& d_in, const IntMatrix& d_out,
                                const IntMatrix& rel_mid, const IntMatrix& rel_out);

/// Basis of the integer kernel, as columns.
IntMatrix kernel_basis(const IntMatrix& m);

/// Rank over Q, computed by sparse elimination.
std::size_t rank(const IntMatrix& m);
/// Rank over the prime field F_p.
std::size_t rank_mod_p(const IntMatrix& m, unsigned p);

/// Sparse vector over F_2 (sorted set of support indices).
using F2Vector = std::vector<std::uint32_t>;

F2Vector f2_add(const F2Vector& a, const F2Vector& b);

/// Matrix over F_2 stored by rows.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}
  static F2Matrix from_int(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  void flip(std::size_t r, std::uint32_t c);
  /// Row r must be given sorted.
  void set_row(std::size_t r, F2Vector v) { data_[r] = std::move(v); }
  const F2Vector& row(std::size_t r) const { return data_[r]; }
  F2Vector apply(const F2Vector& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F2Vector> data_;
};

std::size_t mod2_rank(const F2Matrix& m);
/// Kernel basis; vectors are returned in order of their free column.
std::vector<F2Vector> mod2_kernel_basis(const F2Matrix& m);

/// Incremental row echelon basis over F_2; the pivot of a vector is its
/// least support index.
class F2Echelon {
 public:
  explicit F2Echelon(std::size_t dim) : dim_(dim), slot_(dim, kNone) {}
  /// Returns true if v was independent of the current span.
  bool insert(F2Vector v);
  F2Vector reduce(F2Vector v) const;
  std::size_t rank() const { return basis_.size(); }
  std::size_t dim() const { return dim_; }
  bool is_pivot(std::uint32_t c) const { return slot_[c] != kNone; }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  std::size_t dim_;
  std::vector<std::uint32_t> slot_;
  std::vector<F2Vector> basis_;
};

}  // namespace stabclass
