// Exact linear algebra: Smith normal form over Z, ranks over Z/p, and
// Gaussian elimination over Z/2 on packed bit vectors.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "einfty/coefficient.hpp"

namespace einfty {

/// Dense integer matrix with optional row and column labels.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static ExactMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    t.row_labels = col_labels;
    t.col_labels = row_labels;
    return t;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
    const Ring z = Ring::integers();
    ExactMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::int64_t x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = z.add(m(i, j), z.mul(x, b(k, j)));
      }
    return m;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, std::int64_t k) {
    const Ring z = Ring::integers();
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(src, j) != 0) (*this)(dst, j) = z.add((*this)(dst, j), z.mul(k, (*this)(src, j)));
  }
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, std::int64_t k) {
    const Ring z = Ring::integers();
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, src) != 0) (*this)(i, dst) = z.add((*this)(i, dst), z.mul(k, (*this)(i, src)));
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct SmithForm {
  ExactMatrix U, D, V;  // U * M * V = D
  std::vector<std::int64_t> diagonal;  // nonzero invariant factors, d_1 | d_2 | ...
  std::size_t rank() const { return diagonal.size(); }
};

/// Smith normal form with unimodular transforms. Pivots are chosen of
/// minimal absolute value; arithmetic is checked and throws OverflowError.
inline SmithForm smith_normal_form(const ExactMatrix& m, bool with_transforms = true) {
  SmithForm f{with_transforms ? ExactMatrix::identity(m.rows()) : ExactMatrix(),
              m,
              with_transforms ? ExactMatrix::identity(m.cols()) : ExactMatrix(),
              {}};
  ExactMatrix& D = f.D;
  auto row_op = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    D.add_row(dst, src, k);
    if (with_transforms) f.U.add_row(dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    D.add_col(dst, src, k);
    if (with_transforms) f.V.add_col(dst, src, k);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    if (with_transforms) f.U.swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    if (with_transforms) f.V.swap_cols(a, b);
  };

  const std::size_t R = D.rows(), C = D.cols();
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    for (;;) {
      // Smallest nonzero entry of the remaining block.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (D(i, j) != 0 && (!best || std::llabs(D(i, j)) < std::llabs(D(best->first, best->second))))
            best = std::pair{i, j};
      if (!best) break;
      row_swap(t, best->first);
      col_swap(t, best->second);
      const std::int64_t p = D(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i)
        if (D(i, t) != 0) {
          row_op(i, t, -(D(i, t) / p));
          clean = clean && D(i, t) == 0;
        }
      for (std::size_t j = t + 1; j < C; ++j)
        if (D(t, j) != 0) {
          col_op(j, t, -(D(t, j) / p));
          clean = clean && D(t, j) == 0;
        }
      if (!clean) continue;
      // Divisibility: fold a row holding a non-multiple into the pivot row.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < R && !bad; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (D(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (!bad) break;
      row_op(t, *bad, 1);
    }
    if (D(t, t) == 0) break;
    if (D(t, t) < 0) {
      D.negate_row(t);
      if (with_transforms) f.U.negate_row(t);
    }
    f.diagonal.push_back(D(t, t));
  }
  return f;
}

/// Rank of an integer matrix reduced mod a prime p.
inline std::size_t rank_mod_p(const ExactMatrix& m, std::int64_t p) {
  const Ring r = Ring::mod(p);
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = r.normalize(m(i, j));
  std::size_t rank = 0;
  for (std::size_t j = 0; j < m.cols() && rank < m.rows(); ++j) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][j] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = r.inverse(a[rank][j]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][j] == 0) continue;
      const std::int64_t k = r.mul(a[i][j], inv);
      for (std::size_t c = j; c < m.cols(); ++c) a[i][c] = r.add(a[i][c], r.neg(r.mul(k, a[rank][c])));
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Z/2

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static BitVector unit(std::size_t n, std::size_t i) {
    BitVector v(n);
    v.set(i, true);
    return v;
  }

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool b) {
    if (b)
      words_[i / 64] |= std::uint64_t{1} << (i % 64);
    else
      words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& o) {
    if (o.size_ != size_) throw std::invalid_argument("bit vector size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::optional<std::size_t> first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
    return std::nullopt;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::string render() const {
    std::string s;
    for (std::size_t i = 0; i < size_; ++i) s += get(i) ? '1' : '0';
    return s;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incremental row echelon form over Z/2. Each stored row carries a tag
/// recording which inserted vectors it combines.
class F2Echelon {
 public:
  F2Echelon(std::size_t length, std::size_t tag_length) : length_(length), tag_length_(tag_length) {}

  struct Reduced {
    BitVector remainder;
    BitVector tag;
  };

  Reduced reduce(const BitVector& v) const {
    Reduced r{v, BitVector(tag_length_)};
    for (const auto& row : rows_)
      if (r.remainder.get(row.pivot)) {
        r.remainder ^= row.vector;
        r.tag ^= row.tag;
      }
    return r;
  }

  /// Adds v with the given tag; false when v is already in the span.
  bool insert(const BitVector& v, const BitVector& tag) {
    Reduced r = reduce(v);
    auto p = r.remainder.first();
    if (!p) return false;
    r.tag ^= tag;
    // Keep rows sorted by pivot and fully reduced.
    for (auto& row : rows_)
      if (row.vector.get(*p)) {
        row.vector ^= r.remainder;
        row.tag ^= r.tag;
      }
    Row nr{*p, std::move(r.remainder), std::move(r.tag)};
    auto it = std::lower_bound(rows_.begin(), rows_.end(), nr.pivot,
                               [](const Row& a, std::size_t piv) { return a.pivot < piv; });
    rows_.insert(it, std::move(nr));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t length() const { return length_; }

 private:
  struct Row {
    std::size_t pivot;
    BitVector vector;
    BitVector tag;
  };
  std::size_t length_;
  std::size_t tag_length_;
  std::vector<Row> rows_;
};

/// Basis of {x : A x = 0} over Z/2, A given by its rows, in reduced echelon
/// order (one vector per free column, ascending).
inline std::vector<BitVector> nullspace_mod2(const std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<BitVector> a = rows;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < a.size(); ++j) {
    std::size_t piv = r;
    while (piv < a.size() && !a[piv].get(j)) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != r && a[i].get(j)) a[i] ^= a[r];
    pivot_col.push_back(j);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto j : pivot_col) is_pivot[j] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(cols);
    v.set(f, true);
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
      if (a[k].get(f)) v.set(pivot_col[k], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace einfty
