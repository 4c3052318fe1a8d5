#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghw/field.hpp"
#include "ghw/limits.hpp"
#include "ghw/linalg.hpp"
#include "ghw/simplicial.hpp"

namespace ghw {

/// Converts an exact count to int64; throws ResourceLimit if it does not fit.
std::int64_t to_int64(const BigCount& v, const char* what);

/// C_D = {(x . d)_{d in D} : x in F_q^m} for D = Delta or Delta^c.
struct LinearCode {
  Field field;
  ComplexSpec spec;
  std::vector<Vec> defining_set;  // canonical order, one column each
  Matrix generator;               // m x n
  int n = 0;
  int k = 0;
  Subspace kernel;  // messages x with x . d = 0 for all d in D

  int m() const noexcept { return spec.m; }
};

/// Throws DomainError for an empty defining set and ResourceLimit when
/// q^m exceeds the cap.
LinearCode build_code(const Field& f, const ComplexSpec& spec, const Limits& lim = {});

struct WeightHierarchy {
  std::vector<std::int64_t> values;       // d_1 .. d_k
  std::vector<std::string> provenance;    // one tag per r
  std::string method;
  ComplexSpec spec;
  /// Further closed forms that were evaluated and agreed.
  std::vector<std::string> confirmations;

  int k() const noexcept { return static_cast<int>(values.size()); }
};

/// True iff d_1 < ... < d_k.
bool strictly_increasing(const std::vector<std::int64_t>& v);

struct Prop1Result {
  std::int64_t value = 0;
  Subspace witness;               // first optimal H in canonical order
  std::uint64_t examined = 0;     // subspaces scored before stopping
};

/// GHW search over H in [F_q^m, r] with H meeting K trivially:
///   Delta-code:   d_r = n - max |Delta cap H^perp|
///   Delta^c-code: d_r = n - max (q^{m-r} - |Delta cap H^perp|)
/// Holds the derived data shared across r (n, k, K, the members of Delta).
class Prop1Search {
public:
  Prop1Search(Field f, const ComplexSpec& spec, Limits lim = {});

  std::int64_t n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const Subspace& kernel() const noexcept { return kernel_; }

  /// |Delta cap H^perp| (Delta itself, regardless of the complement flag).
  std::uint64_t count_in_dual(const Subspace& h) const;

  /// Throws DomainError unless 1 <= r <= k, ResourceLimit above the cap.
  Prop1Result ghw(int r) const;

private:
  std::uint64_t count_by_dual(const Subspace& h) const;
  std::uint64_t count_by_filter(const Subspace& h) const;

  Field f_;
  ComplexSpec spec_;
  Limits lim_;
  std::int64_t n_ = 0;
  int k_ = 0;
  Subspace kernel_;
  std::uint64_t delta_size_ = 0;
  std::vector<Vec> delta_;  // filled when |Delta| fits the cap
};

Prop1Result ghw_prop1(const Field& f, const ComplexSpec& spec, int r, const Limits& lim = {});
WeightHierarchy hierarchy_prop1(const Field& f, const ComplexSpec& spec, const Limits& lim = {});

}  // namespace ghw
