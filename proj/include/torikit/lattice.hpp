#pragma once

// Exact integer linear algebra over N = Z^n and its dual M = Hom(N, Z).
// Both lattices are presented in the standard basis; a lattice map is a
// matrix. Nothing in here touches floating point.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace torikit {

using Integer = mpz_class;
using Rational = mpq_class;

class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t rank) : entries_(rank) {}
  explicit IntVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  IntVector(std::initializer_list<long> entries);

  static IntVector unit(std::size_t rank, std::size_t i);

  std::size_t rank() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Integer> entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;
  // gcd of the entries; 0 for the zero vector.
  Integer content() const;
  bool is_primitive() const;
  // Divides by the content. The zero vector is returned unchanged.
  IntVector primitive() const;

  IntVector& operator+=(const IntVector& other);
  IntVector& operator-=(const IntVector& other);
  IntVector& operator*=(const Integer& scalar);

  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(const Integer& s, IntVector a) { return a *= s; }
  friend IntVector operator-(IntVector a);

  friend bool operator==(const IntVector& a, const IntVector& b) {
    return a.entries_ == b.entries_;
  }
  // Lexicographic on entries; shorter vectors first.
  friend bool operator<(const IntVector& a, const IntVector& b);

  std::string to_string() const;

 private:
  std::vector<Integer> entries_;
};

// <u, v> for u in M and v in N. Throws DimensionError on rank mismatch.
Integer pairing(const IntVector& u, const IntVector& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  // Rows must share one length; `cols` is only consulted when `rows` is empty.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// left * A * right == diag(diagonal) padded to A's shape.
struct SmithDecomposition {
  std::vector<Integer> diagonal;  // min(rows, cols) entries, d_i | d_{i+1}
  std::size_t rank = 0;
  IntMatrix left;
  IntMatrix right;
};

// Pivot rule: smallest nonzero |entry| of the active block, ties broken in
// row-major order. Deterministic for a given input.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Exact determinant (Bareiss). Throws DimensionError on non-square input.
Integer determinant(const IntMatrix& a);

// Rank over Q of the given vectors.
std::size_t rank_of(std::span<const IntVector> vectors);

// Row-style Hermite normal form of the lattice generated by `vectors`:
// echelon rows, positive pivots, entries above a pivot reduced into
// [0, pivot). Zero rows are dropped.
std::vector<IntVector> hermite_normal_form(std::span<const IntVector> vectors);

// Basis of {x in Z^rank : <row, x> = 0 for all rows}, in Hermite normal form.
std::vector<IntVector> integer_kernel(std::span<const IntVector> rows, std::size_t rank);

// Basis (Hermite normal form) of span_Q(vectors) ∩ Z^rank.
std::vector<IntVector> saturated_span(std::span<const IntVector> vectors, std::size_t rank);

// rank N / N' for a sublattice N' with the given independent basis.
std::size_t quotient_rank(std::size_t lattice_rank, std::span<const IntVector> sublattice_basis);

// Integer coordinates c with x = sum c_i basis_i, if they exist.
// The basis vectors must be linearly independent.
std::optional<IntVector> coordinates_in_basis(std::span<const IntVector> basis, const IntVector& x);

// Component of v orthogonal (standard inner product) to span(basis), scaled
// to a primitive integer vector. Zero if v lies in the span.
IntVector project_orthogonal(const IntVector& v, std::span<const IntVector> basis);

// Reduces x modulo the lattice spanned by `hnf` (which must be in Hermite
// normal form) so that every pivot coordinate lands in [0, pivot).
IntVector reduce_modulo(IntVector x, std::span<const IntVector> hnf);

// Inverse of a unimodular matrix. Throws IntegrityError if not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& a);

// Sorts lexicographically and removes duplicates.
void sort_unique(std::vector<IntVector>& vectors);

}  // namespace torikit
