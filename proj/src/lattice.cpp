#include "torikit/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "torikit/error.hpp"

namespace torikit {

namespace {

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Rounds toward -infinity.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot column of each
// pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Unique solution of sum_i c_i basis_i = x over Q, if any.
std::optional<std::vector<Rational>> solve_in_span(std::span<const IntVector> basis,
                                                   std::span<const Rational> x) {
  const std::size_t k = basis.size();
  const std::size_t n = x.size();
  RationalMatrix aug(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = Rational(basis[j][i]);
    aug[i][k] = x[i];
  }
  const auto pivots = row_reduce(aug, k);
  if (pivots.size() != k) throw IntegrityError("basis vectors are linearly dependent");
  for (std::size_t i = k; i < n; ++i)
    if (aug[i][k] != 0) return std::nullopt;
  std::vector<Rational> c(k);
  for (std::size_t i = 0; i < k; ++i) c[pivots[i]] = aug[i][k];
  return c;
}

IntVector clear_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x.get_num() * (l / x.get_den()));
  return IntVector(std::move(out)).primitive();
}

}  // namespace

IntVector::IntVector(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long x : entries) entries_.emplace_back(x);
}

IntVector IntVector::unit(std::size_t rank, std::size_t i) {
  IntVector v(rank);
  v[i] = 1;
  return v;
}

bool IntVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

Integer IntVector::content() const {
  Integer g = 0;
  for (const auto& x : entries_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

bool IntVector::is_primitive() const { return content() == 1; }

IntVector IntVector::primitive() const {
  const Integer g = content();
  if (g == 0 || g == 1) return *this;
  IntVector out(*this);
  for (auto& x : out.entries_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector& IntVector::operator+=(const IntVector& other) {
  if (rank() != other.rank()) throw DimensionError("vector rank mismatch in addition");
  for (std::size_t i = 0; i < rank(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& other) {
  if (rank() != other.rank()) throw DimensionError("vector rank mismatch in subtraction");
  for (std::size_t i = 0; i < rank(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

IntVector& IntVector::operator*=(const Integer& scalar) {
  for (auto& x : entries_) x *= scalar;
  return *this;
}

IntVector operator-(IntVector a) {
  for (auto& x : a.entries_) x = -x;
  return a;
}

bool operator<(const IntVector& a, const IntVector& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    const int c = cmp(a.entries_[i], b.entries_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string IntVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

Integer pairing(const IntVector& u, const IntVector& v) {
  if (u.rank() != v.rank())
    throw DimensionError("pairing of vectors of rank " + std::to_string(u.rank()) + " and " +
                         std::to_string(v.rank()));
  Integer s = 0;
  for (std::size_t i = 0; i < u.rank(); ++i) s += u[i] * v[i];
  return s;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().rank();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].rank() != cols) throw DimensionError("ragged rows in matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(std::vector<Integer>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_row_multiple(dst, src, f);
    left.add_row_multiple(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_col_multiple(dst, src, f);
    right.add_col_multiple(dst, src, f);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the active block, first in row-major order.
      std::size_t pr = m, pc = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          const Integer v = abs_of(d(i, j));
          if (pr == m || v < best) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (pr == m) break;
      d.swap_rows(t, pr);
      left.swap_rows(t, pr);
      d.swap_cols(t, pc);
      right.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        row_op(i, t, -trunc_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        col_op(j, t, -trunc_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            row_op(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out;
  out.diagonal.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    out.diagonal.push_back(d(i, i));
    if (d(i, i) != 0) ++out.rank;
  }
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank_of(std::span<const IntVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().rank();
  RationalMatrix m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.rank() != n) throw DimensionError("rank_of: vectors of different rank");
    std::vector<Rational> row;
    row.reserve(n);
    for (const auto& x : v) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return row_reduce(m, n).size();
}

std::vector<IntVector> hermite_normal_form(std::span<const IntVector> vectors) {
  std::vector<IntVector> rows;
  for (const auto& v : vectors)
    if (!v.is_zero()) rows.push_back(v);
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().rank();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs_of(rows[i][c]) < abs_of(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const Integer q = trunc_div(rows[i][c], rows[r][c]);
        rows[i] -= q * rows[r];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) rows[r] = -rows[r];
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(rows[i][c], rows[r][c]);
      if (q != 0) rows[i] -= q * rows[r];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<IntVector> integer_kernel(std::span<const IntVector> rows, std::size_t rank) {
  const IntMatrix a = IntMatrix::from_rows(rows, rank);
  const SmithDecomposition snf = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t j = snf.rank; j < rank; ++j) basis.push_back(snf.right.column(j));
  return hermite_normal_form(basis);
}

std::vector<IntVector> saturated_span(std::span<const IntVector> vectors, std::size_t rank) {
  for (const auto& v : vectors)
    if (v.rank() != rank) throw DimensionError("saturated_span: vector of wrong rank");
  const auto complement = integer_kernel(vectors, rank);
  return integer_kernel(complement, rank);
}

std::size_t quotient_rank(std::size_t lattice_rank, std::span<const IntVector> sublattice_basis) {
  if (sublattice_basis.size() > lattice_rank)
    throw DimensionError("sublattice basis larger than the lattice rank");
  return lattice_rank - sublattice_basis.size();
}

std::optional<IntVector> coordinates_in_basis(std::span<const IntVector> basis, const IntVector& x) {
  std::vector<Rational> target;
  target.reserve(x.rank());
  for (const auto& v : x) target.emplace_back(v);
  for (const auto& b : basis)
    if (b.rank() != x.rank()) throw DimensionError("coordinates_in_basis: rank mismatch");
  const auto c = solve_in_span(basis, target);
  if (!c) return std::nullopt;
  IntVector out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if ((*c)[i].get_den() != 1) return std::nullopt;
    out[i] = (*c)[i].get_num();
  }
  return out;
}

IntVector project_orthogonal(const IntVector& v, std::span<const IntVector> basis) {
  if (basis.empty()) return v.primitive();
  const std::size_t k = basis.size();
  // Gram system G c = (<b_i, v>)
  std::vector<IntVector> gram_cols;
  gram_cols.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    IntVector col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = pairing(basis[i], basis[j]);
    gram_cols.push_back(std::move(col));
  }
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < k; ++i) rhs.emplace_back(pairing(basis[i], v));
  const auto c = solve_in_span(gram_cols, rhs);
  if (!c) throw IntegrityError("singular Gram matrix");
  std::vector<Rational> w;
  w.reserve(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) {
    Rational x(v[i]);
    for (std::size_t j = 0; j < k; ++j) x -= (*c)[j] * basis[j][i];
    w.push_back(x);
  }
  return clear_denominators(w);
}

IntVector reduce_modulo(IntVector x, std::span<const IntVector> hnf) {
  for (const auto& row : hnf) {
    std::size_t p = 0;
    while (p < row.rank() && row[p] == 0) ++p;
    if (p == row.rank()) continue;
    const Integer q = floor_div(x[p], row[p]);
    if (q != 0) x -= q * row;
  }
  return x;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
    m[i][n + i] = 1;
  }
  if (row_reduce(m, n).size() != n) throw IntegrityError("matrix is singular");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = m[i][n + j];
      if (x.get_den() != 1) throw IntegrityError("matrix is not unimodular");
      inv(i, j) = x.get_num();
    }
  return inv;
}

void sort_unique(std::vector<IntVector>& vectors) {
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
}

}  // namespace torikit
