#include "ghw/oracle.hpp"

#include <algorithm>
#include <bit>

#include "ghw/error.hpp"

namespace ghw {

namespace {

// Supports of the codewords xM for x in F_q^k, as n-bit sets indexed by
// sum_i x_i q^i. Falls back to computing rows on demand when too large.
class SupportTable {
public:
  SupportTable(const Field& f, const Matrix& msg, std::uint64_t cap) : f_(f), msg_(msg) {
    words_ = (static_cast<std::size_t>(msg.cols()) + 63) / 64;
    BigCount total = boost::multiprecision::pow(BigCount(f.order()), static_cast<unsigned>(msg.rows()));
    if (total * words_ > BigCount(cap) * 4) return;
    size_ = static_cast<std::size_t>(total);
    bits_.assign(size_ * words_, 0);
    Vec x(msg.rows(), kZero);
    for (std::size_t idx = 0; idx < size_; ++idx) {
      std::size_t rest = idx;
      for (int i = 0; i < msg.rows(); ++i) {
        x[i] = Elem{static_cast<std::uint32_t>(rest % f.order())};
        rest /= f.order();
      }
      fill(x, bits_.data() + idx * words_);
    }
  }

  std::size_t words() const noexcept { return words_; }

  // ORs the support of xM into acc.
  void accumulate(std::span<const Elem> x, std::uint64_t* acc) const {
    if (size_ == 0) {
      std::vector<std::uint64_t> tmp(words_, 0);
      fill(x, tmp.data());
      for (std::size_t w = 0; w < words_; ++w) acc[w] |= tmp[w];
      return;
    }
    std::size_t idx = 0;
    for (std::size_t i = x.size(); i-- > 0;) idx = idx * f_.order() + x[i].code;
    const std::uint64_t* src = bits_.data() + idx * words_;
    for (std::size_t w = 0; w < words_; ++w) acc[w] |= src[w];
  }

private:
  void fill(std::span<const Elem> x, std::uint64_t* out) const {
    for (int j = 0; j < msg_.cols(); ++j) {
      Elem s = kZero;
      for (int i = 0; i < msg_.rows(); ++i) s = f_.add(s, f_.mul(x[i], msg_(i, j)));
      if (!s.is_zero()) out[j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }

  const Field& f_;
  const Matrix& msg_;
  std::size_t words_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Basis of the row space of the generator: the nonzero RREF rows.
Matrix message_basis(const LinearCode& code) {
  auto r = rref(code.field, code.generator);
  r.reduced.truncate_rows(r.rank);
  return r.reduced;
}

std::int64_t min_support(const Field& f, const Matrix& msg, const SupportTable& table, int r, std::uint64_t cap) {
  const int k = msg.rows();
  std::int64_t best = -1;
  std::vector<std::uint64_t> acc(table.words());
  enumerate_subspaces(f, k, r, cap, [&](const Subspace& s) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int i = 0; i < r; ++i) table.accumulate(s.basis().row(i), acc.data());
    std::int64_t w = 0;
    for (std::uint64_t word : acc) w += std::popcount(word);
    if (best < 0 || w < best) best = w;
    return true;
  });
  return best;
}

}  // namespace

std::int64_t ghw_definitional(const LinearCode& code, int r, const Limits& lim) {
  if (r < 1 || r > code.k) {
    throw DomainError("r = " + std::to_string(r) + " outside [1, " + std::to_string(code.k) + "]");
  }
  const Matrix msg = message_basis(code);
  check_cap(gaussian_binomial(code.k, r, code.field.order()), lim.max_enum, "subcode enumeration");
  const SupportTable table(code.field, msg, lim.max_enum);
  return min_support(code.field, msg, table, r, lim.max_enum);
}

WeightHierarchy hierarchy_definitional(const LinearCode& code, const Limits& lim) {
  const Matrix msg = message_basis(code);
  for (int r = 1; r <= code.k; ++r) {
    check_cap(gaussian_binomial(code.k, r, code.field.order()), lim.max_enum, "subcode enumeration");
  }
  const SupportTable table(code.field, msg, lim.max_enum);
  WeightHierarchy h;
  h.method = "definitional";
  h.spec = code.spec;
  for (int r = 1; r <= code.k; ++r) {
    h.values.push_back(min_support(code.field, msg, table, r, lim.max_enum));
    h.provenance.push_back("definitional");
  }
  return h;
}

int lemma1_brute_multi(const Field& f, const std::vector<Subspace>& spaces, std::uint64_t cap) {
  if (spaces.empty()) return 0;
  const int m = spaces.front().ambient_dim();
  Matrix g(0, m);
  for (const Subspace& s : spaces) {
    if (s.ambient_dim() != m) throw DomainError("subspaces live in different ambient spaces");
    for (int i = 0; i < s.dim(); ++i) g.append_row(s.basis().row(i));
  }
  const Subspace total = Subspace::span(f, g);
  const int s = total.dim();
  for (int w = s; w >= 1; --w) {
    bool found = false;
    // W ranges over w-dim subspaces of F_q^s mapped through the basis of the sum.
    enumerate_subspaces(f, s, w, cap, [&](const Subspace& coeffs) {
      Matrix wb(w, m);
      for (int i = 0; i < w; ++i) {
        for (int j = 0; j < s; ++j) axpy(f, coeffs.basis()(i, j), total.basis().row(j), wb.row(i));
      }
      const Subspace cand = Subspace::span(f, wb);
      found = std::all_of(spaces.begin(), spaces.end(), [&](const Subspace& v) { return meets_trivially(f, cand, v); });
      return !found;
    });
    if (found) return w;
  }
  return 0;
}

int lemma1_brute(const Field& f, const Subspace& u, const Subspace& v, std::uint64_t cap) {
  return lemma1_brute_multi(f, {u, v}, cap);
}

}  // namespace ghw
