#include "ghw/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "ghw/error.hpp"

namespace ghw {

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw DomainError("row length does not match column count");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

void Matrix::append_row(std::span<const Elem> r) {
  if (static_cast<int>(r.size()) != cols_) throw DomainError("row length does not match column count");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void Matrix::truncate_rows(int n) {
  rows_ = std::min(rows_, n);
  data_.resize(static_cast<std::size_t>(rows_) * cols_);
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RrefResult rref(const Field& f, Matrix mat) {
  RrefResult out;
  int row = 0;
  for (int col = 0; col < mat.cols() && row < mat.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < mat.rows(); ++i) {
      if (!mat(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) std::swap_ranges(mat.row(pivot).begin(), mat.row(pivot).end(), mat.row(row).begin());
    const Elem scale = f.inv(mat(row, col));
    if (scale != kOne) {
      for (Elem& x : mat.row(row)) x = f.mul(x, scale);
    }
    for (int i = 0; i < mat.rows(); ++i) {
      if (i == row || mat(i, col).is_zero()) continue;
      axpy(f, f.neg(mat(i, col)), mat.row(row), mat.row(i));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(mat);
  return out;
}

int rank(const Field& f, const Matrix& mat) { return rref(f, mat).rank; }

CoordSet support(std::span<const Elem> v) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) mask |= std::uint64_t{1} << i;
  }
  return CoordSet(mask);
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Elem acc = kZero;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

void axpy(const Field& f, Elem c, std::span<const Elem> v, std::span<Elem> out) {
  if (c.is_zero()) return;
  if (c == kOne) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.add(out[i], v[i]);
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.add(out[i], f.mul(c, v[i]));
}

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const Field& f, const Matrix& generators) {
  auto r = rref(f, generators);
  Subspace s(generators.cols());
  r.reduced.truncate_rows(r.rank);
  s.basis_ = std::move(r.reduced);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span(const Field& f, int ambient_dim, const std::vector<Vec>& generators) {
  return span(f, Matrix::from_rows(generators, ambient_dim));
}

Subspace Subspace::from_rref(Matrix basis, std::vector<int> pivots) {
  Subspace s(basis.cols());
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  std::vector<int> piv(ambient_dim);
  std::iota(piv.begin(), piv.end(), 0);
  return from_rref(Matrix::identity(ambient_dim), std::move(piv));
}

Subspace Subspace::axes(int ambient_dim, CoordSet s) {
  Matrix b(0, ambient_dim);
  std::vector<int> piv;
  Vec e(ambient_dim, kZero);
  for (int c : s.coords()) {
    if (c > ambient_dim) throw DomainError("coordinate outside the ambient space");
    e[c - 1] = kOne;
    b.append_row(e);
    e[c - 1] = kZero;
    piv.push_back(c - 1);
  }
  return from_rref(std::move(b), std::move(piv));
}

bool Subspace::contains(const Field& f, std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != ambient_) throw DomainError("vector length does not match ambient dimension");
  Vec w(v.begin(), v.end());
  for (int i = 0; i < dim(); ++i) {
    const Elem c = w[pivots_[i]];
    if (!c.is_zero()) axpy(f, f.neg(c), basis_.row(i), w);
  }
  return std::all_of(w.begin(), w.end(), [](Elem x) { return x.is_zero(); });
}

Subspace null_space(const Field& f, const Matrix& mat, int ambient_dim) {
  if (mat.cols() != ambient_dim) throw DomainError("matrix column count does not match ambient dimension");
  const auto r = rref(f, mat);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (int p : r.pivots) is_pivot[p] = true;
  Matrix basis(0, ambient_dim);
  Vec x(ambient_dim);
  for (int col = 0; col < ambient_dim; ++col) {
    if (is_pivot[col]) continue;
    std::fill(x.begin(), x.end(), kZero);
    x[col] = kOne;
    for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = f.neg(r.reduced(i, col));
    basis.append_row(x);
  }
  return Subspace::span(f, basis);
}

Subspace dual(const Field& f, const Subspace& h) { return null_space(f, h.basis(), h.ambient_dim()); }

Subspace sum(const Field& f, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("subspaces live in different ambient spaces");
  Matrix g = a.basis();
  for (int i = 0; i < b.dim(); ++i) g.append_row(b.basis().row(i));
  return Subspace::span(f, g);
}

Subspace intersect(const Field& f, const Subspace& a, const Subspace& b) {
  return dual(f, sum(f, dual(f, a), dual(f, b)));
}

bool meets_trivially(const Field& f, const Subspace& a, const Subspace& b) {
  if (a.is_zero() || b.is_zero()) return true;
  Matrix g = a.basis();
  for (int i = 0; i < b.dim(); ++i) g.append_row(b.basis().row(i));
  return rank(f, g) == a.dim() + b.dim();
}

void for_each_combination(const Field& f, const Matrix& basis,
                          const std::function<void(std::span<const Elem>)>& fn) {
  const std::uint32_t p = f.characteristic();
  const std::uint32_t e = f.degree();
  // F_p-generators: x^j * row_i.
  std::vector<Vec> gens;
  gens.reserve(static_cast<std::size_t>(basis.rows()) * e);
  for (int i = 0; i < basis.rows(); ++i) {
    for (std::uint32_t j = 0; j < e; ++j) {
      Vec g(basis.cols(), kZero);
      axpy(f, f.power_basis(j), basis.row(i), g);
      gens.push_back(std::move(g));
    }
  }
  Vec v(basis.cols(), kZero);
  std::vector<std::uint32_t> digits(gens.size(), 0);
  fn(v);
  for (;;) {
    std::size_t d = 0;
    for (; d < gens.size(); ++d) {
      const auto& g = gens[d];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.add(v[c], g[c]);
      if (++digits[d] < p) break;
      digits[d] = 0;  // p additions of g cancel out
    }
    if (d == gens.size()) return;
    fn(v);
  }
}

std::vector<Vec> elements(const Field& f, const Subspace& s) {
  std::vector<Vec> out;
  for_each_combination(f, s.basis(), [&](std::span<const Elem> v) { out.emplace_back(v.begin(), v.end()); });
  return out;
}

BigCount gaussian_binomial(int m, int r, std::uint64_t q) {
  if (r < 0 || m < 0) throw DomainError("gaussian_binomial needs non-negative arguments");
  if (r > m) return 0;
  BigCount num = 1, den = 1;
  const BigCount bq = q;
  for (int i = 0; i < r; ++i) {
    num *= boost::multiprecision::pow(bq, static_cast<unsigned>(m - i)) - 1;
    den *= boost::multiprecision::pow(bq, static_cast<unsigned>(r - i)) - 1;
  }
  return num / den;
}

void check_cap(const BigCount& required, std::uint64_t cap, const char* what) {
  if (required > cap) {
    throw ResourceLimit(std::string(what) + " needs " + required.str() + " candidates, cap is " + std::to_string(cap),
                        required.str());
  }
}

std::vector<std::vector<int>> pivot_partitions(int m, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > m) return out;
  std::vector<int> comb(r);
  std::iota(comb.begin(), comb.end(), 0);
  for (;;) {
    out.push_back(comb);
    int i = r - 1;
    while (i >= 0 && comb[i] == m - r + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

SubspaceCursor::SubspaceCursor(Field f, int m, std::vector<int> pivots) : f_(std::move(f)), current_(m) {
  const int r = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(m, false);
  for (int p : pivots) is_pivot[p] = true;
  Matrix basis(r, m);
  for (int i = 0; i < r; ++i) {
    basis(i, pivots[i]) = kOne;
    for (int j = pivots[i] + 1; j < m; ++j) {
      if (!is_pivot[j]) free_.emplace_back(i, j);
    }
  }
  for (std::size_t k = 0; k < free_.size(); ++k) size_ *= f_.order();
  digits_.assign(free_.size(), 0);
  current_ = Subspace::from_rref(std::move(basis), std::move(pivots));
}

void SubspaceCursor::advance() {
  if (done_) return;
  const std::uint32_t q = f_.order();
  Matrix& b = current_.basis_;
  for (std::size_t k = free_.size(); k-- > 0;) {
    const auto [i, j] = free_[k];
    if (++digits_[k] < q) {
      b(i, j) = Elem{digits_[k]};
      return;
    }
    digits_[k] = 0;
    b(i, j) = kZero;
  }
  done_ = true;
}

void enumerate_subspaces(const Field& f, int m, int r, std::uint64_t cap,
                         const std::function<bool(const Subspace&)>& fn) {
  if (r < 0 || r > m) throw DomainError("subspace dimension out of range");
  check_cap(gaussian_binomial(m, r, f.order()), cap, "subspace enumeration");
  for (auto& piv : pivot_partitions(m, r)) {
    for (SubspaceCursor cur(f, m, std::move(piv)); !cur.done(); cur.advance()) {
      if (!fn(cur.current())) return;
    }
  }
}

std::vector<Subspace> all_subspaces(const Field& f, int m, int r, std::uint64_t cap) {
  std::vector<Subspace> out;
  enumerate_subspaces(f, m, r, cap, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace ghw
