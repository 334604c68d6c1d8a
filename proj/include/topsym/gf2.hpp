#pragma once

// Dense bit-packed linear algebra over the two-element field.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "topsym/errors.hpp"

namespace topsym {

class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static BitVector from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
      if (b != 0) v.set(i);
      ++i;
    }
    return v;
  }

  static BitVector from_indices(std::size_t size, std::span<const std::size_t> ones) {
    BitVector v(size);
    for (std::size_t i : ones) v.flip(i);
    return v;
  }

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }

  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }

  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVector& operator^=(const BitVector& other) {
    if (other.size_ != size_) throw InputError("BitVector xor: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  /// Parity of the bitwise AND.
  bool dot(const BitVector& other) const {
    if (other.size_ != size_) throw InputError("BitVector dot: length mismatch");
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
  }

  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the lowest set bit at or after `from`, or npos.
  std::size_t find_next(std::size_t from = 0) const noexcept {
    if (from >= size_) return npos;
    std::size_t w = from / kWordBits;
    Word cur = words_[w] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (cur != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return npos;
      cur = words_[w];
    }
  }

  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = find_next(0); i != npos; i = find_next(i + 1)) out.push_back(i);
    return out;
  }

  /// Copy of bits [first, first + length).
  BitVector slice(std::size_t first, std::size_t length) const {
    if (first + length > size_) throw InputError("BitVector slice out of range");
    BitVector out(length);
    for (std::size_t i = find_next(first); i != npos && i < first + length; i = find_next(i + 1)) {
      out.set(i - first);
    }
    return out;
  }

  /// Same bits with `extra` zero positions appended.
  BitVector extended(std::size_t extra) const {
    BitVector out(size_ + extra);
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    return out;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector& a, const BitVector& b) = default;

 private:
  static std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Immutable matrix over GF(2), stored as bit-packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;

  static Gf2Matrix zero(std::size_t rows, std::size_t cols) {
    return Gf2Matrix(cols, std::vector<BitVector>(rows, BitVector(cols)));
  }

  static Gf2Matrix identity(std::size_t n) {
    std::vector<BitVector> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(BitVector::unit(n, i));
    return Gf2Matrix(n, std::move(rows));
  }

  static Gf2Matrix from_rows(std::size_t cols, std::vector<BitVector> rows) {
    for (const auto& r : rows) {
      if (r.size() != cols) throw InputError("Gf2Matrix: row length differs from column count");
    }
    return Gf2Matrix(cols, std::move(rows));
  }

  static Gf2Matrix from_columns(std::size_t rows, std::span<const BitVector> columns) {
    std::vector<BitVector> out(rows, BitVector(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw InputError("Gf2Matrix: column length differs from row count");
      for (std::size_t i : columns[j].ones()) out[i].set(j);
    }
    return Gf2Matrix(columns.size(), std::move(out));
  }

  /// Rows given as 0/1 integers; convenient for tests and small literals.
  static Gf2Matrix from_literal(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    std::vector<BitVector> out;
    for (const auto& r : rows) {
      if (r.size() != cols) throw InputError("Gf2Matrix literal: ragged rows");
      out.push_back(BitVector::from_bits(r));
    }
    return Gf2Matrix(cols, std::move(out));
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows() == 0 || cols() == 0; }

  bool at(std::size_t i, std::size_t j) const { return rows_.at(i).test(j); }
  const BitVector& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }

  BitVector column(std::size_t j) const {
    BitVector c(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
      if (rows_[i].test(j)) c.set(i);
    }
    return c;
  }

  std::vector<BitVector> columns() const {
    std::vector<BitVector> out(cols_, BitVector(rows()));
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j : rows_[i].ones()) out[j].set(i);
    }
    return out;
  }

  bool is_zero() const noexcept {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
  }

  Gf2Matrix transpose() const {
    auto cols = columns();
    return Gf2Matrix(rows(), std::move(cols));
  }

  /// Matrix-vector product M x.
  BitVector apply(const BitVector& x) const {
    if (x.size() != cols_) throw InputError("Gf2Matrix::apply: vector length differs from column count");
    BitVector out(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
      if (rows_[i].dot(x)) out.set(i);
    }
    return out;
  }

  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows()) throw InputError("Gf2Matrix product: inner dimensions differ");
    std::vector<BitVector> out(a.rows(), BitVector(b.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k : a.rows_[i].ones()) out[i] ^= b.rows_[k];
    }
    return Gf2Matrix(b.cols(), std::move(out));
  }

  /// Columns of `right` placed after the columns of this matrix.
  Gf2Matrix hconcat(const Gf2Matrix& right) const {
    if (right.rows() != rows()) throw InputError("Gf2Matrix hconcat: row counts differ");
    std::vector<BitVector> out;
    out.reserve(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
      BitVector r = rows_[i].extended(right.cols());
      for (std::size_t j : right.rows_[i].ones()) r.set(cols_ + j);
      out.push_back(std::move(r));
    }
    return Gf2Matrix(cols_ + right.cols(), std::move(out));
  }

  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) = default;

 private:
  Gf2Matrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {}

  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct EchelonForm {
  Gf2Matrix reduced;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

namespace detail {

// Gauss-Jordan on rows in place over the first `ncols` columns; first-nonzero pivoting.
// Returns pivot columns; rows [0, rank) hold the pivots afterwards.
inline std::vector<std::size_t> gauss_jordan(std::vector<BitVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t pick = next;
    while (pick < rows.size() && !rows[pick].test(col)) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[pick], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].test(col)) rows[r] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace detail

inline EchelonForm row_echelon(const Gf2Matrix& m) {
  auto rows = m.row_vectors();
  auto pivots = detail::gauss_jordan(rows, m.cols());
  return {Gf2Matrix::from_rows(m.cols(), std::move(rows)), std::move(pivots)};
}

inline std::size_t rank(const Gf2Matrix& m) {
  // Forward elimination only; cheaper than the full reduced form.
  auto rows = m.row_vectors();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < rows.size(); ++col) {
    std::size_t pick = r;
    while (pick < rows.size() && !rows[pick].test(col)) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[pick], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i].test(col)) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

/// Basis of the null space {v : M v = 0}, one vector per free column, in column order.
inline std::vector<BitVector> kernel_basis(const Gf2Matrix& m) {
  auto ef = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ef.pivot_columns) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t r = 0; r < ef.rank(); ++r) {
      if (ef.reduced.at(r, free)) v.set(ef.pivot_columns[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with M x = b, or nullopt when b lies outside the column space.
inline std::optional<BitVector> solve_preimage(const Gf2Matrix& m, const BitVector& b) {
  if (b.size() != m.rows()) {
    throw InputError("solve_preimage: right-hand side has length " + std::to_string(b.size()) +
                     ", matrix has " + std::to_string(m.rows()) + " rows");
  }
  const std::size_t n = m.cols();
  std::vector<BitVector> aug;
  aug.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BitVector r = m.row(i).extended(1);
    if (b.test(i)) r.set(n);
    aug.push_back(std::move(r));
  }
  auto pivots = detail::gauss_jordan(aug, n);
  for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
    if (aug[r].test(n)) return std::nullopt;
  }
  BitVector x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (aug[r].test(n)) x.set(pivots[r]);
  }
  if (m.apply(x) != b) throw std::logic_error("solve_preimage: back-substitution check failed");
  return x;
}

/// Incrementally grown set of independent vectors kept in echelon form.
/// Used to pick complements (e.g. homology classes on top of boundaries).
class XorBasis {
 public:
  explicit XorBasis(std::size_t length) : length_(length) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return reduced_.size(); }

  /// Reduce v against the stored vectors.
  BitVector reduce(BitVector v) const {
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      if (v.test(pivot_[i])) v ^= reduced_[i];
    }
    return v;
  }

  bool contains(const BitVector& v) const { return reduce(v).none(); }

  /// Adds v if independent of the current span; returns whether it was added.
  bool insert(const BitVector& v) {
    if (v.size() != length_) throw InputError("XorBasis: vector length mismatch");
    BitVector r = reduce(v);
    std::size_t p = r.find_next(0);
    if (p == BitVector::npos) return false;
    // Keep stored vectors reduced with respect to the new pivot.
    for (auto& other : reduced_) {
      if (other.test(p)) other ^= r;
    }
    reduced_.push_back(std::move(r));
    pivot_.push_back(p);
    return true;
  }

 private:
  std::size_t length_;
  std::vector<BitVector> reduced_;
  std::vector<std::size_t> pivot_;
};

}  // namespace topsym
