#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ghw/coords.hpp"
#include "ghw/field.hpp"

namespace ghw {

using Vec = std::vector<Elem>;
using BigCount = boost::multiprecision::cpp_int;

/// Dense row-major matrix over a finite field. Holds codes only; every
/// arithmetic routine takes the Field explicitly.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(int i, int j) noexcept { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elem operator()(int i, int j) const noexcept { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::span<Elem> row(int i) noexcept { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const Elem> row(int i) const noexcept {
    return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }
  Vec row_vec(int i) const { auto r = row(i); return Vec(r.begin(), r.end()); }

  void append_row(std::span<const Elem> r);
  /// Keeps the first n rows.
  void truncate_rows(int n);
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix reduced;           // same shape as the input
  int rank = 0;
  std::vector<int> pivots;  // 0-based pivot columns of the first `rank` rows
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RrefResult rref(const Field& f, Matrix mat);
int rank(const Field& f, const Matrix& mat);

/// Coordinates of the nonzero entries, 1-based.
CoordSet support(std::span<const Elem> v);

/// Standard inner product sum_i a_i b_i.
Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

/// out += c * v
void axpy(const Field& f, Elem c, std::span<const Elem> v, std::span<Elem> out);

/// Subspace of F_q^m held by its unique RREF basis. Two Subspace values
/// are equal exactly when they describe the same subspace.
class Subspace {
public:
  /// The zero subspace of F_q^m.
  explicit Subspace(int ambient_dim = 0);

  /// Span of arbitrary generators (rows of length m).
  static Subspace span(const Field& f, int ambient_dim, const std::vector<Vec>& generators);
  static Subspace span(const Field& f, const Matrix& generators);
  /// Adopts a basis already in RREF with full row rank. No validation.
  static Subspace from_rref(Matrix basis, std::vector<int> pivots);
  static Subspace full(int ambient_dim);
  /// <S>: vectors supported inside S.
  static Subspace axes(int ambient_dim, CoordSet s);

  int ambient_dim() const noexcept { return ambient_; }
  int dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  bool contains(const Field& f, std::span<const Elem> v) const;
  bool is_zero() const noexcept { return dim() == 0; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  friend class SubspaceCursor;
  int ambient_ = 0;
  Matrix basis_;
  std::vector<int> pivots_;
};

/// {x : mat * x^T = 0}, a subspace of F_q^m where m = mat.cols().
Subspace null_space(const Field& f, const Matrix& mat, int ambient_dim);
/// Orthogonal complement under the standard inner product.
Subspace dual(const Field& f, const Subspace& h);
Subspace sum(const Field& f, const Subspace& a, const Subspace& b);
Subspace intersect(const Field& f, const Subspace& a, const Subspace& b);
bool meets_trivially(const Field& f, const Subspace& a, const Subspace& b);

/// Calls fn once for every element of the row space of `basis` (q^rows
/// calls, the zero vector first). Vectors are produced by walking the
/// F_p-digits of the coefficients, so each step costs one row addition.
void for_each_combination(const Field& f, const Matrix& basis, const std::function<void(std::span<const Elem>)>& fn);

/// All q^dim elements of a subspace.
std::vector<Vec> elements(const Field& f, const Subspace& s);

/// Number of r-dimensional subspaces of F_q^m:
/// prod_{i<r} (q^{m-i} - 1) / (q^{r-i} - 1). Zero when r > m.
BigCount gaussian_binomial(int m, int r, std::uint64_t q);

/// Throws ResourceLimit when `required` exceeds `cap`.
void check_cap(const BigCount& required, std::uint64_t cap, const char* what);

/// Pivot-column sets of r-dim RREF forms in F_q^m, in lexicographic order.
/// Each one indexes an independent slice of the subspace stream.
std::vector<std::vector<int>> pivot_partitions(int m, int r);

/// Streams the r-dimensional subspaces whose RREF basis has the given
/// pivot columns (0-based), ordered by the free entries read row-major
/// with the last entry varying fastest.
class SubspaceCursor {
public:
  SubspaceCursor(Field f, int m, std::vector<int> pivots);

  /// The current subspace. Valid until the next call to advance().
  const Subspace& current() const noexcept { return current_; }
  bool done() const noexcept { return done_; }
  void advance();
  /// q^{number of free entries}.
  std::uint64_t size() const noexcept { return size_; }

private:
  Field f_;
  std::vector<std::pair<int, int>> free_;  // (row, col) of each free entry
  Subspace current_;
  std::vector<std::uint32_t> digits_;
  std::uint64_t size_ = 1;
  bool done_ = false;
};

/// Every r-dimensional subspace of F_q^m exactly once, ordered by pivot
/// set and then by free entries. Throws ResourceLimit when the Gaussian
/// binomial exceeds `cap`. `fn` returns false to stop early.
void enumerate_subspaces(const Field& f, int m, int r, std::uint64_t cap,
                         const std::function<bool(const Subspace&)>& fn);

/// Convenience: materialized list (intended for tests and small ambients).
std::vector<Subspace> all_subspaces(const Field& f, int m, int r, std::uint64_t cap);

}  // namespace ghw
