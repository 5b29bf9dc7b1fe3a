#pragma once

// Sparse Gaussian elimination with unit pivots, shared by the integer and
// prime-field paths. Pivots are chosen row by row in order of increasing row
// length, taking the unit entry whose column is currently shortest
// (a Markowitz-style fill-in heuristic).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace stabclass::detail {

struct IntegerRing {
  using Value = mpz_class;
  static bool is_unit(const Value& v) { return v == 1 || v == -1; }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  // Multiplier f with target - f * pivot_value == 0.
  static Value factor(const Value& target, const Value& pivot) { return target * pivot; }
  static Value sub_mul(const Value& a, const Value& f, const Value& b) { return a - f * b; }
  static Value negate(const Value& v) { return -v; }
  static Value div_unit(const Value& a, const Value& u) { return a * u; }
};

// Machine-word integers; any overflow aborts the elimination so the caller
// can restart with arbitrary precision.
struct OverflowError {};

struct Int64Ring {
  using Value = std::int64_t;
  static bool is_unit(Value v) { return v == 1 || v == -1; }
  static bool is_zero(Value v) { return v == 0; }
  static Value factor(Value target, Value pivot) { return target * pivot; }
  static Value sub_mul(Value a, Value f, Value b) {
    Value prod, out;
    if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw OverflowError{};
    return out;
  }
  static Value negate(Value v) { return -v; }
  static Value div_unit(Value a, Value u) { return a * u; }
};

struct PrimeField {
  using Value = std::uint32_t;
  std::uint32_t p;
  static bool is_unit(const Value& v) { return v != 0; }
  static bool is_zero(const Value& v) { return v == 0; }
  Value inverse(Value a) const {
    // Fermat; p is small.
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<Value>(r);
  }
  Value factor(Value target, Value pivot) const {
    return static_cast<Value>(std::uint64_t(target) * inverse(pivot) % p);
  }
  Value sub_mul(Value a, Value f, Value b) const {
    const std::uint64_t fb = std::uint64_t(f) * b % p;
    return static_cast<Value>((a + p - fb) % p);
  }
  Value negate(Value v) const { return v == 0 ? 0 : p - v; }
  Value div_unit(Value a, Value u) const { return static_cast<Value>(std::uint64_t(a) * inverse(u) % p); }
};

template <class Ring>
class SparseEliminator {
 public:
  using Value = typename Ring::Value;
  struct Entry {
    std::uint32_t col;
    Value val;
  };
  using Row = std::vector<Entry>;

  struct Pivot {
    std::uint32_t col;
    Row row;  // row as it stood when chosen; only unpivoted columns appear
  };

  SparseEliminator(Ring ring, std::size_t cols, std::vector<Row> rows, bool record_pivots)
      : ring_(std::move(ring)),
        rows_(std::move(rows)),
        col_rows_(cols),
        col_count_(cols, 0),
        row_alive_(rows_.size(), true),
        col_alive_(cols, true),
        record_(record_pivots) {
    for (std::uint32_t r = 0; r < rows_.size(); ++r)
      for (const auto& e : rows_[r]) {
        col_rows_[e.col].push_back(r);
        ++col_count_[e.col];
      }
  }

  void run() {
    // Passes over the live rows in order of increasing length; a pass that
    // pivots nothing ends the elimination.
    bool progress = true;
    std::vector<std::uint32_t> order;
    while (progress) {
      progress = singleton_sweep();
      order.clear();
      for (std::uint32_t r = 0; r < rows_.size(); ++r)
        if (row_alive_[r] && !rows_[r].empty()) order.push_back(r);
      std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return rows_[a].size() < rows_[b].size();
      });
      for (std::uint32_t r : order) {
        if (!row_alive_[r] || rows_[r].empty()) continue;
        std::int64_t best = -1;
        std::uint32_t best_count = 0;
        for (std::size_t i = 0; i < rows_[r].size(); ++i) {
          const auto& e = rows_[r][i];
          if (!ring_.is_unit(e.val)) continue;
          if (best < 0 || col_count_[e.col] < best_count) {
            best = static_cast<std::int64_t>(i);
            best_count = col_count_[e.col];
          }
        }
        if (best < 0) continue;
        pivot(r, static_cast<std::size_t>(best));
        progress = true;
      }
    }
  }

  std::size_t pivot_count() const { return pivots_done_; }

  /// Pivots on columns with a single live entry; these cause no fill-in.
  bool singleton_sweep() {
    bool any = false;
    for (bool again = true; again;) {
      again = false;
      for (std::uint32_t c = 0; c < col_count_.size(); ++c) {
        if (!col_alive_[c] || col_count_[c] != 1) continue;
        for (std::uint32_t r : col_rows_[c]) {
          if (!row_alive_[r]) continue;
          auto& row = rows_[r];
          auto it = std::lower_bound(row.begin(), row.end(), c,
                                     [](const Entry& e, std::uint32_t col) { return e.col < col; });
          if (it == row.end() || it->col != c) continue;
          if (ring_.is_unit(it->val)) {
            pivot(r, static_cast<std::size_t>(it - row.begin()));
            again = any = true;
          }
          break;
        }
      }
    }
    return any;
  }
  const std::vector<Pivot>& pivots() const { return pivots_; }
  bool col_pivoted(std::uint32_t c) const { return !col_alive_[c]; }

  /// Rows still holding entries after elimination (no unit entries remain).
  std::vector<Row> residual() const {
    std::vector<Row> out;
    for (std::uint32_t r = 0; r < rows_.size(); ++r)
      if (row_alive_[r] && !rows_[r].empty()) out.push_back(rows_[r]);
    return out;
  }

 private:
  void pivot(std::uint32_t r, std::size_t idx) {
    Row prow = std::move(rows_[r]);
    rows_[r].clear();
    row_alive_[r] = false;
    const std::uint32_t c = prow[idx].col;
    const Value u = prow[idx].val;
    for (std::uint32_t rr : col_rows_[c]) {
      if (rr == r || !row_alive_[rr]) continue;
      Row& target = rows_[rr];
      auto it = std::lower_bound(target.begin(), target.end(), c,
                                 [](const Entry& e, std::uint32_t col) { return e.col < col; });
      if (it == target.end() || it->col != c) continue;
      const Value f = ring_.factor(it->val, u);
      eliminate_into(rr, target, prow, f);
    }
    for (const auto& e : prow) --col_count_[e.col];
    col_alive_[c] = false;
    col_rows_[c].clear();
    col_rows_[c].shrink_to_fit();
    ++pivots_done_;
    if (record_) pivots_.push_back(Pivot{c, std::move(prow)});
  }

  // target -= f * prow
  void eliminate_into(std::uint32_t rr, Row& target, const Row& prow, const Value& f) {
    Row out;
    out.reserve(target.size() + prow.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < prow.size()) {
      if (j == prow.size() || (i < target.size() && target[i].col < prow[j].col)) {
        out.push_back(std::move(target[i++]));
      } else if (i == target.size() || prow[j].col < target[i].col) {
        Value v = ring_.sub_mul(Value(0), f, prow[j].val);
        if (!ring_.is_zero(v)) {
          ++col_count_[prow[j].col];
          col_rows_[prow[j].col].push_back(rr);
          out.push_back(Entry{prow[j].col, std::move(v)});
        }
        ++j;
      } else {
        Value v = ring_.sub_mul(target[i].val, f, prow[j].val);
        if (ring_.is_zero(v))
          --col_count_[prow[j].col];
        else
          out.push_back(Entry{prow[j].col, std::move(v)});
        ++i;
        ++j;
      }
    }
    target = std::move(out);
  }

  Ring ring_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_count_;
  std::vector<bool> row_alive_, col_alive_;
  bool record_;
  std::size_t pivots_done_ = 0;
  std::vector<Pivot> pivots_;
};

}  // namespace stabclass::detail
