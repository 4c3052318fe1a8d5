#pragma once

#include <cstdint>
#include <vector>

#include "ghw/code.hpp"
#include "ghw/limits.hpp"
#include "ghw/linalg.hpp"

namespace ghw {

/// d_r straight from the definition: the minimum support size over all
/// r-dimensional subcodes, found by enumerating subspaces of the message
/// space F_q^k. Throws DomainError unless 1 <= r <= k.
std::int64_t ghw_definitional(const LinearCode& code, int r, const Limits& lim = {});
WeightHierarchy hierarchy_definitional(const LinearCode& code, const Limits& lim = {});

/// Largest dim W over subspaces W of U+V meeting U and V only in 0.
int lemma1_brute(const Field& f, const Subspace& u, const Subspace& v, std::uint64_t cap = kDefaultMaxEnum);
/// Same with any number of subspaces.
int lemma1_brute_multi(const Field& f, const std::vector<Subspace>& spaces, std::uint64_t cap = kDefaultMaxEnum);

}  // namespace ghw
