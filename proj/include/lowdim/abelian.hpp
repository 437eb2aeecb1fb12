#pragma once

// Exact integer linear algebra: exponent-sum matrices, Smith normal form and
// the invariant-factor description of finitely generated abelian groups.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lowdim/error.hpp"
#include "lowdim/presentation.hpp"

namespace lowdim {

using Integer = boost::multiprecision::cpp_int;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      detail::require(r.size() == cols_, "ragged matrix literal");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    detail::require(a.cols_ == b.rows_, "matrix dimension mismatch in product");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntegerMatrix m) {
  detail::require(m.is_square(), "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Row i, column j: exponent sum of generator j in relator i.
inline IntegerMatrix exponent_matrix(const Presentation& p) {
  IntegerMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (Letter l : p.relator(i)) m(i, generator_of(l)) += l > 0 ? 1 : -1;
  return m;
}

struct SmithDecomposition {
  std::vector<Integer> diagonal;  // length min(rows, cols), nonnegative, d_i | d_{i+1}
  IntegerMatrix left;             // rows x rows, unimodular
  IntegerMatrix right;            // cols x cols, unimodular
};

/// left * m * right is diagonal with the invariant factors on the diagonal.
inline SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  IntegerMatrix left = IntegerMatrix::identity(rows), right = IntegerMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  auto smallest_nonzero = [&](std::size_t t) -> std::pair<std::size_t, std::size_t> {
    std::pair<std::size_t, std::size_t> at{rows, cols};
    Integer best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const Integer v = abs(a(i, j));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          at = {i, j};
        }
      }
    return at;
  };
  auto bring_to_pivot = [&](std::size_t t, std::pair<std::size_t, std::size_t> at) {
    if (at.first != t) {
      a.swap_rows(t, at.first);
      left.swap_rows(t, at.first);
    }
    if (at.second != t) {
      a.swap_cols(t, at.second);
      right.swap_cols(t, at.second);
    }
  };

  for (std::size_t t = 0; t < steps; ++t) {
    auto at = smallest_nonzero(t);
    if (at.first == rows) break;
    bring_to_pivot(t, at);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.add_row(i, t, -q);
        left.add_row(i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_col(j, t, -q);
        right.add_col(j, t, -q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A smaller remainder exists in row or column t; move it to the pivot.
        std::pair<std::size_t, std::size_t> best{t, t};
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(best.first, best.second))) best = {i, t};
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(best.first, best.second))) best = {t, j};
        bring_to_pivot(t, best);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remaining block.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      a.add_row(t, bad_row, 1);
      left.add_row(t, bad_row, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out{{}, std::move(left), std::move(right)};
  out.diagonal.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(a(t, t));
  return out;
}

/// Z^rank + sum of Z/t for t in torsion (each t > 1, t_i | t_{i+1}).
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }

  std::string describe() const {
    if (is_trivial()) return "0";
    std::string s;
    auto add = [&](const std::string& term) { s += (s.empty() ? "" : " + ") + term; };
    if (rank == 1) add("Z");
    else if (rank > 1) add("Z^" + std::to_string(rank));
    for (const auto& t : torsion) add("Z/" + t.str());
    return s;
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of the row space of m inside Z^cols: the abelian group generated
/// by the columns subject to the rows as relations.
inline AbelianGroup abelian_invariants(const IntegerMatrix& m) {
  auto snf = smith_normal_form(m);
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (const auto& d : snf.diagonal) {
    if (d != 0) ++nonzero;
    if (d > 1) g.torsion.push_back(d);
  }
  g.rank = m.cols() - nonzero;
  return g;
}

/// H_1 presented by a square relation matrix (e.g. a surgery linking matrix).
inline AbelianGroup h1_from_matrix(const IntegerMatrix& m) {
  detail::require(m.is_square(), "h1_from_matrix needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                                     std::to_string(m.cols()));
  return abelian_invariants(m);
}

inline AbelianGroup abelianization(const Presentation& p) { return abelian_invariants(exponent_matrix(p)); }

}  // namespace lowdim
