#include "ghw/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ghw/error.hpp"

namespace ghw {

namespace {

BigCount pw(const BigCount& q, int e) {
  if (e < 0) throw InternalError("negative exponent " + std::to_string(e));
  return boost::multiprecision::pow(q, static_cast<unsigned>(e));
}

FormulaRow row(int lo, bool lo_closed, int hi, bool hi_closed, std::function<BigCount(int)> f) {
  return FormulaRow{lo, lo_closed, hi, hi_closed, std::move(f)};
}

constexpr bool kClosed = true;
constexpr bool kOpen = false;

}  // namespace

std::string FormulaTable::id() const {
  if (table.empty()) return theorem;
  if (theorem == "A") return "A-" + table;
  return theorem + "/" + table;
}

std::vector<TableValue> evaluate_table(const FormulaTable& t, int m, const FormulaOptions& opt) {
  std::vector<TableValue> out;
  out.reserve(m);
  for (int r = 1; r <= m; ++r) {
    std::optional<TableValue> got;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const FormulaRow& fr = t.rows[i];
      if (!fr.covers(r)) continue;
      BigCount v;
      try {
        v = fr.eval(r);
      } catch (const InternalError& e) {
        throw InternalError(t.id() + " row " + std::to_string(i + 1) + " at r=" + std::to_string(r) + ": " + e.what());
      }
      const int row_no = static_cast<int>(i) + 1;
      if (opt.fault && (opt.fault->table == t.table || opt.fault->table == t.id()) && opt.fault->row == row_no) {
        v += opt.fault->delta;
      }
      if (!got) {
        got = TableValue{v, row_no};
      } else if (got->value != v) {
        throw InternalError(t.id() + ": rows " + std::to_string(got->row) + " and " + std::to_string(row_no) +
                            " disagree at r=" + std::to_string(r) + " (" + got->value.str() + " vs " + v.str() + ")");
      }
    }
    if (!got) throw InternalError(t.id() + ": no row covers r=" + std::to_string(r));
    out.push_back(*got);
  }
  return out;
}

TripleParams triple_params(CoordSet s1, CoordSet s2, CoordSet s3) {
  return TripleParams{s1.size(),        s2.size(),        s3.size(),           (s1 & s2).size(),
                      (s1 & s3).size(), (s2 & s3).size(), (s1 & s2 & s3).size()};
}

FormulaTable thm1_table(std::uint64_t q_, int m) {
  const BigCount q = q_;
  return {"T1", "", {row(1, kClosed, m, kClosed, [=](int r) { return pw(q, m) - pw(q, m - r); })}};
}

FormulaTable table1(std::uint64_t q_, int m, int a, int b, int x) {
  const BigCount q = q_;
  return {"T2",
          "Table1",
          {row(1, kClosed, m - b, kClosed, [=](int r) { return pw(q, a) - pw(q, x + m - r - b); }),
           row(m - b, kClosed, m, kClosed, [=](int r) { return pw(q, a) + pw(q, b) - pw(q, x) - pw(q, m - r); })}};
}

FormulaTable triple_table(const std::string& name, std::uint64_t q_, int m, const TripleParams& p) {
  const BigCount q = q_;
  const auto [a, b, c, x, y, z, t] = p;
  const BigCount n3 = pw(q, a) + pw(q, b) + pw(q, c) - pw(q, x) - pw(q, y) - pw(q, z) + pw(q, t);
  const std::string theorem = (a < b && b < c) ? "T3" : "A";
  auto top = [=](int r) { return pw(q, a) - pw(q, m - r - b - c + x + y + z - t); };
  auto last = [=](int r) { return n3 - pw(q, m - r); };
  FormulaTable tab{theorem, name, {}};
  auto& R = tab.rows;
  if (name == "Table2") {
    R.push_back(row(1, kClosed, m - b - c + z, kClosed, top));
    R.push_back(row(m - b - c + z, kClosed, m - c - x + t, kClosed,
                    [=](int r) { return pw(q, a) + pw(q, b) - pw(q, m - r - c + z) - pw(q, x + y - t); }));
    R.push_back(row(m - c - x + t, kClosed, m - c, kClosed, [=](int r) {
      return pw(q, a) + pw(q, b) - pw(q, x) - pw(q, m - r - c + y) - pw(q, m - r - c + z) + pw(q, m - r - c + t);
    }));
    R.push_back(row(m - c, kClosed, m, kClosed, last));
  } else if (name == "Table3") {
    R.push_back(row(1, kClosed, m - b - c + z, kClosed, top));
    R.push_back(row(m - b - c + z, kClosed, m - a - c + z, kClosed,
                    [=](int r) { return pw(q, a) + pw(q, b) - pw(q, m - r - c + z) - pw(q, x + y - t); }));
    R.push_back(row(m - a - c + z, kClosed, m - a - c + y, kClosed,
                    [=](int r) { return pw(q, b) - pw(q, m - r - a - c + x + y + z - t); }));
    R.push_back(row(m - a - c + y, kClosed, m - c - x + t, kClosed,
                    [=](int r) { return pw(q, a) + pw(q, b) - pw(q, x + z - t) - pw(q, m - r - c + y); }));
    R.push_back(row(m - c - x + t, kClosed, m - c, kClosed, [=](int r) {
      return pw(q, a) + pw(q, b) - pw(q, x) - pw(q, m - r - c + y) - pw(q, m - r - c + z) + pw(q, m - r - c + t);
    }));
    R.push_back(row(m - c, kClosed, m, kClosed, last));
  } else if (name == "Table8") {
    R.push_back(row(1, kClosed, m - b - c + z, kClosed, top));
    R.push_back(row(m - b - c + z, kOpen, m - c - y + t, kClosed,
                    [=](int r) { return pw(q, a) + pw(q, c) - pw(q, m - r - c + z) - pw(q, x + y - t); }));
    R.push_back(row(m - c - y + t, kOpen, m - c, kClosed, [=](int r) {
      return pw(q, a) + pw(q, c) - pw(q, y) - pw(q, m - r - c + x) - pw(q, m - r - c + z) + pw(q, m - r - c + t);
    }));
    R.push_back(row(m - c, kOpen, m, kClosed, last));
  } else if (name == "Table9") {
    R.push_back(row(1, kClosed, m - b - c + z, kClosed, top));
    R.push_back(row(m - b - c + z, kOpen, m - a - c + z, kOpen,
                    [=](int r) { return pw(q, a) + pw(q, b) - pw(q, m - r - c + z) - pw(q, x + y - t); }));
    R.push_back(row(m - a - c + z, kClosed, m - a - c + x, kOpen,
                    [=](int r) { return pw(q, b) - pw(q, m - r - a - c + x + y + z - t); }));
    R.push_back(row(m - a - c + x, kClosed, m - c - y + t, kClosed,
                    [=](int r) { return pw(q, a) + pw(q, b) - pw(q, y + z - t) - pw(q, m - r - c + x); }));
    R.push_back(row(m - c - y + t, kOpen, m - c, kClosed, [=](int r) {
      return pw(q, a) + pw(q, b) - pw(q, y) - pw(q, m - r - c + x) - pw(q, m - r - c + z) + pw(q, m - r - c + t);
    }));
    R.push_back(row(m - c, kOpen, m, kClosed, last));
  } else if (name == "Table10") {
    R.push_back(row(1, kClosed, m - a - c + y, kClosed,
                    [=](int r) { return pw(q, b) - pw(q, m - r - a - c + x + y + z - t); }));
    R.push_back(row(m - a - c + y, kOpen, m - a - z + t, kClosed,
                    [=](int r) { return pw(q, b) + pw(q, c) - pw(q, x + z - t) - pw(q, m - r - a + y); }));
    R.push_back(row(m - a - z + t, kOpen, m - a, kClosed, [=](int r) {
      return pw(q, b) + pw(q, c) - pw(q, z) - pw(q, m - r - a + x) - pw(q, m - r - a + y) + pw(q, m - r - a + t);
    }));
    R.push_back(row(m - a, kOpen, m, kClosed, last));
  } else if (name == "Table11") {
    R.push_back(row(1, kClosed, m - a - b + x, kClosed,
                    [=](int r) { return pw(q, c) - pw(q, m - r - a - b + x + y + z - t); }));
    R.push_back(row(m - a - b + x, kOpen, m - a - z + t, kClosed,
                    [=](int r) { return pw(q, b) + pw(q, c) - pw(q, y + z - t) - pw(q, m - r - a + x); }));
    R.push_back(row(m - a - z + t, kOpen, m - a, kClosed, [=](int r) {
      return pw(q, b) + pw(q, c) - pw(q, z) - pw(q, m - r - a + x) - pw(q, m - r - a + y) + pw(q, m - r - a + t);
    }));
    R.push_back(row(m - a, kOpen, m, kClosed, last));
  } else {
    throw DomainError("unknown three-set table " + name);
  }
  return tab;
}

FormulaTable table4(std::uint64_t q_, int m, const std::vector<int>& s) {
  const BigCount q = q_;
  const int l = static_cast<int>(s.size());
  FormulaTable tab{"T4", "Table4", {}};
  for (int j = 1; j <= l; ++j) {
    const int tail = std::accumulate(s.begin() + j, s.end(), 0);       // sum_{i>j}
    const int tail_j = std::accumulate(s.begin() + j - 1, s.end(), 0); // sum_{i>=j}
    BigCount head = 0;
    for (int i = 0; i < j; ++i) head += pw(q, s[i]);
    auto f = [=](int r) { return head - pw(q, m - r - tail) - j + 1; };
    if (j == 1) tab.rows.push_back(row(1, kClosed, m - tail, kClosed, f));
    else tab.rows.push_back(row(m - tail_j, kOpen, m - tail, kClosed, f));
  }
  return tab;
}

FormulaTable table5(std::uint64_t q_, int m, int s) {
  const BigCount q = q_;
  return {"T5",
          "Table5",
          {row(1, kClosed, s, kClosed, [=](int r) { return pw(q, m) - pw(q, s) - pw(q, m - r) + pw(q, s - r); }),
           row(s, kClosed, m, kClosed, [=](int r) { return pw(q, m) - pw(q, s) - pw(q, m - r) + 1; })}};
}

FormulaTable table6(std::uint64_t q_, int m, int a, int b, int x) {
  const BigCount q = q_;
  const BigCount base = pw(q, m) - pw(q, a) - pw(q, b);
  return {"T6",
          "Table6",
          {row(1, kClosed, a - x, kOpen, [=](int r) { return base - pw(q, m - r) + pw(q, a - r) + pw(q, b - r); }),
           row(a - x, kClosed, b, kOpen, [=](int r) { return base + pw(q, x) - pw(q, m - r) + pw(q, b - r); }),
           row(b, kClosed, m, kClosed, [=](int r) { return base + pw(q, x) - pw(q, m - r) + 1; })}};
}

FormulaTable table7(std::uint64_t q_, int m, const std::vector<int>& s) {
  const BigCount q = q_;
  const int l = static_cast<int>(s.size());
  BigCount base = pw(q, m);
  for (int e : s) base -= pw(q, e);
  FormulaTable tab{"T7", "Table7", {}};
  tab.rows.push_back(row(1, kClosed, s[0], kOpen, [=](int r) {
    BigCount v = base - pw(q, m - r);
    for (int e : s) v += pw(q, e - r);
    return v;
  }));
  for (int j = 2; j <= l; ++j) {
    tab.rows.push_back(row(s[j - 2], kClosed, s[j - 1], kOpen, [=](int r) {
      BigCount v = base - pw(q, m - r) + (j - 1);
      for (int i = j - 1; i < l; ++i) v += pw(q, s[i] - r);
      return v;
    }));
  }
  tab.rows.push_back(row(s[l - 1], kClosed, m, kClosed, [=](int r) { return base - pw(q, m - r) + l; }));
  return tab;
}

std::vector<std::string> triple_rule(const TripleParams& p) {
  const auto [a, b, c, x, y, z, t] = p;
  std::vector<std::string> out;
  auto add = [&](bool cond, const char* name) {
    if (cond && std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  if (a > b || b > c) return out;
  if (b < c) {
    add(y <= z, "Table2");
    add(y >= z, "Table3");
    return out;
  }
  // b == c
  add(x <= y && y <= z, "Table2");
  add(y <= x && x <= z, "Table8");
  add(x <= z && z <= y, "Table3");
  add(z <= x && x <= y, a == b ? "Table10" : "Table3");
  add(y <= z && z <= x, "Table9");
  add(z <= y && y <= x, a == b ? "Table11" : "Table9");
  return out;
}

namespace {

int precedence(const std::string& table) {
  if (table == "Table10" || table == "Table11") return 0;
  if (table == "Table8" || table == "Table9") return 1;
  if (table == "Table2") return 2;
  return 3;
}

bool pairwise_disjoint(const std::vector<CoordSet>& sets) {
  CoordSet seen;
  for (CoordSet s : sets) {
    if (!(seen & s).empty()) return false;
    seen = seen | s;
  }
  return true;
}

std::vector<int> sizes_of(const std::vector<CoordSet>& sets) {
  std::vector<int> s;
  for (CoordSet c : sets) s.push_back(c.size());
  return s;
}

}  // namespace

TheoremSelector select_theorem(std::uint64_t q, const ComplexSpec& raw) {
  const ComplexSpec spec = normalize(raw);
  const int m = spec.m;
  const auto& S = spec.sets;
  const int l = static_cast<int>(S.size());
  const bool disjoint = pairwise_disjoint(S);
  const CoordSet full = CoordSet::full(m);
  TheoremSelector sel;
  auto add = [&](FormulaTable t, std::string label) {
    sel.candidates.push_back(std::move(t));
    sel.labels.push_back(std::move(label));
  };

  if (!spec.complement) {
    if (spec.support_union() != full) throw NotApplicable("union of the generators is not [m]");
    sel.hypotheses.push_back("union = [m]");
    if (l == 1) {
      add(thm1_table(q, m), format_sets(S));
    } else if (l == 2) {
      add(table1(q, m, S[0].size(), S[1].size(), (S[0] & S[1]).size()), format_sets(S));
    } else if (l == 3) {
      std::vector<int> idx{0, 1, 2};
      do {
        const CoordSet s1 = S[idx[0]], s2 = S[idx[1]], s3 = S[idx[2]];
        if (s1.size() > s2.size() || s2.size() > s3.size()) continue;
        const TripleParams p = triple_params(s1, s2, s3);
        auto names = triple_rule(p);
        std::sort(names.begin(), names.end(), [](const auto& u, const auto& v) { return precedence(u) < precedence(v); });
        for (std::size_t i = 0; i < names.size(); ++i) {
          add(triple_table(names[i], q, m, p), format_sets({s1, s2, s3}));
        }
      } while (std::next_permutation(idx.begin(), idx.end()));
      if (sel.candidates.empty()) throw InternalError("no three-set table selected");
      const bool distinct = S[0].size() < S[1].size() && S[1].size() < S[2].size();
      sel.hypotheses.push_back(distinct ? "|S1| < |S2| < |S3|" : "equal generator sizes");
    } else if (!disjoint) {
      throw NotApplicable("no closed form for four or more overlapping generators");
    }
    if (disjoint && l >= 2) {
      sel.hypotheses.push_back("pairwise disjoint");
      add(table4(q, m, sizes_of(S)), format_sets(S));
    }
  } else {
    if (std::any_of(S.begin(), S.end(), [&](CoordSet s) { return s == full; })) {
      throw NotApplicable("complement of F_q^m is empty");
    }
    const auto big = std::count_if(S.begin(), S.end(), [&](CoordSet s) { return s.size() == m - 1; });
    if (q == 2 && big >= 2) {
      throw NotApplicable("code dimension is m - " + std::to_string(big - 1) +
                          " < m: over F_2 two or more generators have size m-1");
    }
    sel.hypotheses.push_back("all |S_i| < m");
    if (l == 1) add(table5(q, m, S[0].size()), format_sets(S));
    else if (l == 2) add(table6(q, m, S[0].size(), S[1].size(), (S[0] & S[1]).size()), format_sets(S));
    else if (!disjoint) throw NotApplicable("no closed form for three or more overlapping generators in the complement");
    if (disjoint) {
      sel.hypotheses.push_back("pairwise disjoint");
      add(table7(q, m, sizes_of(S)), format_sets(S));
    }
  }
  sel.primary = sel.candidates.front().id();
  return sel;
}

WeightHierarchy hierarchy_formula(std::uint64_t q, const ComplexSpec& raw, const FormulaOptions& opt) {
  const ComplexSpec spec = normalize(raw);
  const TheoremSelector sel = select_theorem(q, spec);
  const int m = spec.m;
  const auto primary = evaluate_table(sel.candidates[0], m, opt);
  WeightHierarchy h;
  h.method = "formula";
  h.spec = spec;
  for (int r = 1; r <= m; ++r) {
    h.values.push_back(to_int64(primary[r - 1].value, "weight"));
    h.provenance.push_back(sel.primary + ":row" + std::to_string(primary[r - 1].row));
  }
  for (std::size_t i = 1; i < sel.candidates.size(); ++i) {
    const FormulaTable& t = sel.candidates[i];
    const auto other = evaluate_table(t, m, opt);
    for (int r = 1; r <= m; ++r) {
      if (other[r - 1].value == primary[r - 1].value) continue;
      std::ostringstream msg;
      msg << sel.primary << " [" << sel.labels[0] << "] and " << t.id() << " [" << sel.labels[i]
          << "] disagree at r=" << r << " (" << primary[r - 1].value << " vs " << other[r - 1].value << ")";
      const bool labelings = t.theorem == sel.candidates[0].theorem &&
                             (t.theorem == "A" || t.theorem == "T3");
      if (labelings) throw NotApplicable(msg.str());
      throw InternalError(msg.str());
    }
    if (t.id() != sel.primary && std::find(h.confirmations.begin(), h.confirmations.end(), t.id()) == h.confirmations.end()) {
      h.confirmations.push_back(t.id());
    }
  }
  return h;
}

CodeParams code_params_formula(std::uint64_t q_, const ComplexSpec& raw, const FormulaOptions& opt) {
  const ComplexSpec spec = normalize(raw);
  const WeightHierarchy h = hierarchy_formula(q_, spec, opt);
  const TheoremSelector sel = select_theorem(q_, spec);
  const FormulaTable& t = sel.candidates.front();
  const BigCount q = q_;
  const int m = spec.m;
  const auto& S = spec.sets;
  const auto s = sizes_of(S);
  BigCount n;
  std::optional<BigCount> d;  // the statement's d, where it is stated
  if (t.theorem == "T1") {
    n = pw(q, m);
    d = pw(q, m) - pw(q, m - 1);
  } else if (t.theorem == "T2") {
    const int x = (S[0] & S[1]).size();
    n = pw(q, s[0]) + pw(q, s[1]) - pw(q, x);
    d = pw(q, s[0]) - pw(q, x + m - s[1] - 1);
  } else if (t.theorem == "T3" || t.theorem == "A") {
    const TripleParams p = triple_params(S[0], S[1], S[2]);
    n = pw(q, p.a) + pw(q, p.b) + pw(q, p.c) - pw(q, p.x) - pw(q, p.y) - pw(q, p.z) + pw(q, p.t);
    if (t.theorem == "T3" && m - p.b - p.c + p.z >= 1) {
      d = pw(q, p.a) - pw(q, m - 1 - p.b - p.c + p.x + p.y + p.z - p.t);
    }
  } else if (t.theorem == "T4") {
    n = 1 - static_cast<int>(s.size());
    for (int e : s) n += pw(q, e);
    d = pw(q, s[0]) - pw(q, m - 1 - std::accumulate(s.begin() + 1, s.end(), 0));
  } else if (t.theorem == "T5") {
    n = pw(q, m) - pw(q, s[0]);
    d = pw(q, m) - pw(q, s[0]) - pw(q, m - 1) + pw(q, s[0] - 1);
  } else if (t.theorem == "T6") {
    const int x = (S[0] & S[1]).size();
    n = pw(q, m) - (pw(q, s[0]) + pw(q, s[1]) - pw(q, x));
    d = pw(q, m) - pw(q, s[0]) - pw(q, s[1]) - pw(q, m - 1) + pw(q, s[0] - 1) + pw(q, s[1] - 1);
  } else {  // T7
    n = pw(q, m) + static_cast<int>(s.size()) - 1;
    d = (q - 1) * pw(q, m - 1);
    for (int e : s) {
      n -= pw(q, e);
      *d -= (q - 1) * pw(q, e - 1);
    }
  }
  if (n != cardinality(spec, q_)) {
    throw InternalError(t.id() + ": stated length " + n.str() + " differs from |D| = " + cardinality(spec, q_).str());
  }
  if (d && *d != h.values.front()) {
    throw InternalError(t.id() + ": stated d = " + d->str() + " differs from the r = 1 row, " +
                        std::to_string(h.values.front()));
  }
  return CodeParams{to_int64(n, "code length"), m, h.values.front(), t.id()};
}

int lemma1_dim(int u_dim, int v_dim, int int_dim) {
  if (int_dim < 0 || int_dim > std::min(u_dim, v_dim)) {
    throw DomainError("intersection dimension must lie in [0, min(u, v)]");
  }
  return std::min(u_dim - int_dim, v_dim - int_dim);
}

namespace {

// Rows of `s` that extend a basis of `base` (a subspace of s) to s.
std::vector<Vec> extension(const Field& f, const Subspace& base, const Subspace& s) {
  std::vector<Vec> out;
  Subspace acc = base;
  for (int i = 0; i < s.dim(); ++i) {
    const auto row = s.basis().row(i);
    if (acc.contains(f, row)) continue;
    out.emplace_back(row.begin(), row.end());
    Matrix g = acc.basis();
    g.append_row(row);
    acc = Subspace::span(f, g);
  }
  return out;
}

}  // namespace

Subspace lemma1_witness(const Field& f, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DomainError("subspaces live in different ambient spaces");
  const Subspace d = intersect(f, u, v);
  const auto alpha = extension(f, d, u);
  const auto beta = extension(f, d, v);
  const std::size_t w = std::min(alpha.size(), beta.size());
  Matrix g(0, u.ambient_dim());
  for (std::size_t i = 0; i < w; ++i) {
    Vec sum = alpha[i];
    axpy(f, kOne, beta[i], sum);
    g.append_row(sum);
  }
  return Subspace::span(f, g);
}

}  // namespace ghw
