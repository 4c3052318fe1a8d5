#include "ghw/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "ghw/error.hpp"
#include "ghw/limits.hpp"

namespace ghw {

CoordSet ComplexSpec::support_union() const {
  CoordSet u;
  for (CoordSet s : sets) u = u | s;
  return u;
}

ComplexSpec normalize(ComplexSpec spec, bool& changed) {
  if (spec.m < 1 || spec.m > kMaxAmbientDim) {
    throw DomainError("ambient dimension must lie in [1, " + std::to_string(kMaxAmbientDim) + "]");
  }
  const CoordSet all = CoordSet::full(spec.m);
  for (CoordSet s : spec.sets) {
    if (s.empty()) throw DomainError("generator sets must be nonempty");
    if (!s.subset_of(all)) throw DomainError("generator set has a coordinate outside [1, " + std::to_string(spec.m) + "]");
  }
  const std::size_t before = spec.sets.size();
  std::vector<CoordSet> kept;
  for (std::size_t i = 0; i < spec.sets.size(); ++i) {
    const CoordSet s = spec.sets[i];
    bool redundant = false;
    for (std::size_t j = 0; j < spec.sets.size() && !redundant; ++j) {
      if (i == j) continue;
      const CoordSet o = spec.sets[j];
      // strictly contained, or an earlier duplicate
      redundant = s.subset_of(o) && (s != o || j < i);
    }
    if (!redundant) kept.push_back(s);
  }
  if (kept.empty()) throw DomainError("complex has no generators");
  std::sort(kept.begin(), kept.end(), [](CoordSet a, CoordSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  changed = kept.size() != before;
  spec.sets = std::move(kept);
  return spec;
}

ComplexSpec normalize(ComplexSpec spec) {
  bool changed = false;
  return normalize(std::move(spec), changed);
}

std::vector<CoordSet> parse_sets(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty set list");
  std::vector<CoordSet> out;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t semi = std::min(compact.find(';', pos), compact.size());
    const std::string_view group(compact.data() + pos, semi - pos);
    if (group.empty()) throw ParseError("empty set at position " + std::to_string(pos + 1));
    CoordSet s;
    std::size_t p = 0;
    while (p <= group.size()) {
      const std::size_t comma = std::min(group.find(',', p), group.size());
      const std::string_view tok = group.substr(p, comma - p);
      int c = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), c);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("bad coordinate '" + std::string(tok) + "'");
      }
      if (c < 1 || c > kMaxAmbientDim) throw ParseError("coordinate " + std::to_string(c) + " out of range");
      s.insert(c);
      p = comma + 1;
    }
    out.push_back(s);
    pos = semi + 1;
  }
  return out;
}

std::string format_sets(const std::vector<CoordSet>& sets) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) os << ';';
    const auto cs = sets[i].coords();
    for (std::size_t j = 0; j < cs.size(); ++j) os << (j ? "," : "") << cs[j];
  }
  return os.str();
}

bool in_complex(const ComplexSpec& spec, CoordSet supp) {
  return std::any_of(spec.sets.begin(), spec.sets.end(), [&](CoordSet s) { return supp.subset_of(s); });
}

bool member(const ComplexSpec& spec, std::span<const Elem> v) {
  if (static_cast<int>(v.size()) != spec.m) throw DomainError("vector length does not match m");
  return in_complex(spec, support(v)) != spec.complement;
}

BigCount complex_size(const ComplexSpec& spec, std::uint64_t q) {
  const std::size_t l = spec.sets.size();
  const BigCount bq = q;
  BigCount total = 0;
  if (l <= 20) {
    for (std::uint32_t t = 1; t < (1u << l); ++t) {
      CoordSet meet = CoordSet::full(spec.m);
      for (std::size_t i = 0; i < l; ++i) {
        if (t >> i & 1u) meet = meet & spec.sets[i];
      }
      const BigCount term = boost::multiprecision::pow(bq, static_cast<unsigned>(meet.size()));
      if (std::popcount(t) % 2) total += term;
      else total -= term;
    }
    return total;
  }
  if (spec.m > 24) throw ResourceLimit("too many generators for inclusion-exclusion", std::to_string(l));
  // Sum (q-1)^|T| over supports T lying in some generator.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << spec.m); ++mask) {
    if (in_complex(spec, CoordSet(mask))) {
      total += boost::multiprecision::pow(bq - 1, static_cast<unsigned>(std::popcount(mask)));
    }
  }
  return total;
}

BigCount cardinality(const ComplexSpec& spec, std::uint64_t q) {
  const BigCount delta = complex_size(spec, q);
  if (!spec.complement) return delta;
  return boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(spec.m)) - delta;
}

void for_each_member(const Field& f, const ComplexSpec& spec, std::uint64_t cap,
                     const std::function<bool(std::span<const Elem>)>& fn) {
  check_cap(boost::multiprecision::pow(BigCount(f.order()), static_cast<unsigned>(spec.m)), cap,
            "defining-set enumeration");
  const std::uint32_t q = f.order();
  const int m = spec.m;
  Vec v(m, kZero);
  std::uint64_t supp = 0;
  for (;;) {
    if (in_complex(spec, CoordSet(supp)) != spec.complement && !fn(v)) return;
    int i = m - 1;
    for (; i >= 0; --i) {
      if (++v[i].code < q) {
        supp |= std::uint64_t{1} << i;
        break;
      }
      v[i] = kZero;
      supp &= ~(std::uint64_t{1} << i);
    }
    if (i < 0) return;
  }
}

std::vector<Vec> enumerate(const Field& f, const ComplexSpec& spec, std::uint64_t cap) {
  std::vector<Vec> out;
  for_each_member(f, spec, cap, [&](std::span<const Elem> v) {
    out.emplace_back(v.begin(), v.end());
    return true;
  });
  return out;
}

std::vector<Vec> complex_members(const Field& f, const ComplexSpec& spec, std::uint64_t cap) {
  BigCount total = 0;
  for (CoordSet s : spec.sets) total += boost::multiprecision::pow(BigCount(f.order()), static_cast<unsigned>(s.size()));
  check_cap(total, cap, "complex enumeration");
  std::vector<Vec> out;
  for (std::size_t g = 0; g < spec.sets.size(); ++g) {
    const Matrix axes = Subspace::axes(spec.m, spec.sets[g]).basis();
    for_each_combination(f, axes, [&](std::span<const Elem> v) {
      const CoordSet supp = support(v);
      // keep v only under the first generator containing it
      for (std::size_t h = 0; h < g; ++h) {
        if (supp.subset_of(spec.sets[h])) return;
      }
      out.emplace_back(v.begin(), v.end());
    });
  }
  return out;
}

Subspace k_space(const ComplexSpec& spec) {
  return Subspace::axes(spec.m, CoordSet::full(spec.m) - spec.support_union());
}

}  // namespace ghw
