#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ghw/coords.hpp"
#include "ghw/field.hpp"
#include "ghw/linalg.hpp"

namespace ghw {

/// Simplicial complex Delta = <S_1, ..., S_l> of F_q^m, or its complement
/// when `complement` is set. The field is supplied separately.
struct ComplexSpec {
  int m = 0;
  std::vector<CoordSet> sets;
  bool complement = false;

  CoordSet support_union() const;
  friend bool operator==(const ComplexSpec&, const ComplexSpec&) = default;
};

/// Drops generators contained in another one, removes duplicates and
/// sorts by (size, lexicographic). Throws DomainError when no generator
/// is left, a set is empty, or a coordinate lies outside [m].
ComplexSpec normalize(ComplexSpec spec);

/// Normalizes and reports whether anything was dropped.
ComplexSpec normalize(ComplexSpec spec, bool& changed);

/// Parses "1,2,3;3,4,5". Whitespace is ignored. Throws ParseError.
std::vector<CoordSet> parse_sets(std::string_view text);
std::string format_sets(const std::vector<CoordSet>& sets);

/// Membership in the defining set (Delta, or Delta^c if flagged).
bool member(const ComplexSpec& spec, std::span<const Elem> v);
/// Membership in Delta itself, ignoring the complement flag.
bool in_complex(const ComplexSpec& spec, CoordSet supp);

/// |Delta| by inclusion-exclusion over the generators (ignores the flag).
BigCount complex_size(const ComplexSpec& spec, std::uint64_t q);
/// Size of the defining set.
BigCount cardinality(const ComplexSpec& spec, std::uint64_t q);

/// Streams the defining set in the order of enumerate(); fn returns false
/// to stop early. Throws ResourceLimit when q^m > cap.
void for_each_member(const Field& f, const ComplexSpec& spec, std::uint64_t cap,
                     const std::function<bool(std::span<const Elem>)>& fn);

/// Members of Delta (never the complement), generator by generator.
/// Costs sum_i q^|S_i| instead of q^m; the order is not canonical.
std::vector<Vec> complex_members(const Field& f, const ComplexSpec& spec, std::uint64_t cap);

/// Members of the defining set in element-code lexicographic order
/// (coordinate 1 most significant). Throws ResourceLimit when q^m > cap.
std::vector<Vec> enumerate(const Field& f, const ComplexSpec& spec, std::uint64_t cap);

/// K = <[m] \ union S_i>.
Subspace k_space(const ComplexSpec& spec);

}  // namespace ghw
