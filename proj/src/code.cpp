#include "ghw/code.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "ghw/error.hpp"

namespace ghw {

std::int64_t to_int64(const BigCount& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceLimit(std::string(what) + " does not fit in 64 bits", v.str());
  }
  return static_cast<std::int64_t>(v);
}

bool strictly_increasing(const std::vector<std::int64_t>& v) {
  return std::adjacent_find(v.begin(), v.end(), [](auto a, auto b) { return a >= b; }) == v.end();
}

namespace {

// Span of the defining set, grown one vector at a time.
Subspace defining_span(const Field& f, const ComplexSpec& spec, std::uint64_t cap) {
  Subspace span(spec.m);
  for_each_member(f, spec, cap, [&](std::span<const Elem> v) {
    if (!span.contains(f, v)) {
      Matrix g = span.basis();
      g.append_row(v);
      span = Subspace::span(f, g);
    }
    return span.dim() < spec.m;
  });
  return span;
}

}  // namespace

LinearCode build_code(const Field& f, const ComplexSpec& spec, const Limits& lim) {
  LinearCode c{f, spec, {}, {}, 0, 0, Subspace(spec.m)};
  c.defining_set = enumerate(f, spec, lim.max_enum);
  if (c.defining_set.empty()) throw DomainError("defining set is empty");
  c.n = static_cast<int>(c.defining_set.size());
  c.generator = Matrix::from_rows(c.defining_set, spec.m).transposed();
  c.k = rank(f, c.generator);
  c.kernel = null_space(f, rref(f, c.generator.transposed()).reduced, spec.m);
  return c;
}

Prop1Search::Prop1Search(Field f, const ComplexSpec& spec, Limits lim)
    : f_(std::move(f)), spec_(spec), lim_(lim), kernel_(spec.m) {
  n_ = to_int64(cardinality(spec_, f_.order()), "code length");
  if (n_ == 0) throw DomainError("defining set is empty");
  const BigCount delta = complex_size(spec_, f_.order());
  if (!spec_.complement) {
    kernel_ = k_space(spec_);
  } else {
    kernel_ = null_space(f_, defining_span(f_, spec_, lim_.max_enum).basis(), spec_.m);
  }
  k_ = spec_.m - kernel_.dim();
  if (delta <= lim_.max_enum) {
    delta_size_ = static_cast<std::uint64_t>(delta);
    delta_ = complex_members(f_, spec_, lim_.max_enum);
  } else {
    delta_size_ = std::numeric_limits<std::uint64_t>::max();
  }
}

std::uint64_t Prop1Search::count_by_dual(const Subspace& h) const {
  const Subspace hp = dual(f_, h);
  std::uint64_t count = 0;
  for_each_combination(f_, hp.basis(), [&](std::span<const Elem> v) {
    if (in_complex(spec_, support(v))) ++count;
  });
  return count;
}

std::uint64_t Prop1Search::count_by_filter(const Subspace& h) const {
  std::uint64_t count = 0;
  const Matrix& b = h.basis();
  for (const Vec& v : delta_) {
    bool orth = true;
    for (int i = 0; i < b.rows() && orth; ++i) orth = dot(f_, b.row(i), v).is_zero();
    if (orth) ++count;
  }
  return count;
}

std::uint64_t Prop1Search::count_in_dual(const Subspace& h) const {
  if (h.ambient_dim() != spec_.m) throw DomainError("subspace lives in the wrong ambient space");
  const int e = spec_.m - h.dim();
  const BigCount dual_size = boost::multiprecision::pow(BigCount(f_.order()), static_cast<unsigned>(e));
  if (!delta_.empty() && dual_size > delta_size_) return count_by_filter(h);
  check_cap(dual_size, lim_.max_enum, "dual enumeration");
  return count_by_dual(h);
}

Prop1Result Prop1Search::ghw(int r) const {
  if (r < 1 || r > k_) {
    throw DomainError("r = " + std::to_string(r) + " outside [1, " + std::to_string(k_) + "]");
  }
  const int m = spec_.m;
  check_cap(gaussian_binomial(m, r, f_.order()), lim_.max_enum, "subspace enumeration");
  const std::uint64_t dual_size =
      static_cast<std::uint64_t>(boost::multiprecision::pow(BigCount(f_.order()), static_cast<unsigned>(m - r)));
  // Largest achievable score: H^perp inside Delta, or H^perp meeting Delta only in 0.
  const std::uint64_t bound = spec_.complement ? dual_size - 1 : dual_size;
  const bool check_kernel = !kernel_.is_zero();

  const auto parts = pivot_partitions(m, r);
  struct Best {
    bool found = false;
    std::uint64_t score = 0;
    Subspace witness;
    std::uint64_t examined = 0;
  };
  std::vector<Best> best(parts.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop_after{parts.size()};

  auto worker = [&] {
    for (;;) {
      const std::size_t p = next.fetch_add(1);
      if (p >= parts.size() || p > stop_after.load()) return;
      Best& b = best[p];
      for (SubspaceCursor cur(f_, m, parts[p]); !cur.done(); cur.advance()) {
        const Subspace& h = cur.current();
        if (check_kernel && !meets_trivially(f_, h, kernel_)) continue;
        ++b.examined;
        const std::uint64_t c = count_in_dual(h);
        const std::uint64_t score = spec_.complement ? dual_size - c : c;
        if (!b.found || score > b.score) {
          b.found = true;
          b.score = score;
          b.witness = h;
          if (score == bound) {
            std::size_t cur_stop = stop_after.load();
            while (p < cur_stop && !stop_after.compare_exchange_weak(cur_stop, p)) {
            }
            break;
          }
        }
        if (p > stop_after.load()) break;
      }
    }
  };

  unsigned threads = lim_.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : lim_.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, parts.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  Prop1Result out;
  const Best* top = nullptr;
  const std::size_t last = std::min(stop_after.load(), parts.size() - 1);
  for (std::size_t p = 0; p <= last; ++p) {
    out.examined += best[p].examined;
    if (best[p].found && (top == nullptr || best[p].score > top->score)) top = &best[p];
  }
  if (top == nullptr) throw InternalError("no subspace meets the kernel trivially");
  out.value = n_ - static_cast<std::int64_t>(top->score);
  out.witness = top->witness;
  return out;
}

Prop1Result ghw_prop1(const Field& f, const ComplexSpec& spec, int r, const Limits& lim) {
  return Prop1Search(f, spec, lim).ghw(r);
}

WeightHierarchy hierarchy_prop1(const Field& f, const ComplexSpec& spec, const Limits& lim) {
  const Prop1Search search(f, spec, lim);
  WeightHierarchy h;
  h.method = "prop1-search";
  h.spec = spec;
  for (int r = 1; r <= search.k(); ++r) {
    h.values.push_back(search.ghw(r).value);
    h.provenance.push_back("prop1-search");
  }
  return h;
}

}  // namespace ghw
