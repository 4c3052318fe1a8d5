#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ghw/code.hpp"
#include "ghw/linalg.hpp"
#include "ghw/simplicial.hpp"

namespace ghw {

/// One row of a weight-hierarchy table: a closed form valid on a range
/// of r with independently open or closed ends.
struct FormulaRow {
  int lo = 1;
  bool lo_closed = true;
  int hi = 0;
  bool hi_closed = true;
  std::function<BigCount(int r)> eval;

  bool covers(int r) const noexcept {
    return (lo_closed ? r >= lo : r > lo) && (hi_closed ? r <= hi : r < hi);
  }
};

struct FormulaTable {
  std::string theorem;  // "T1".."T7", or "A" for the appendix rules
  std::string table;    // "Table1".."Table11"; empty for T1
  std::vector<FormulaRow> rows;

  /// "T2/Table1", "A-Table9", "T1".
  std::string id() const;
};

/// Test hook: shifts every value produced by one table row.
struct FormulaFault {
  std::string table;  // e.g. "Table1", or "T1"
  int row = 1;        // 1-based
  std::int64_t delta = 1;
};

struct FormulaOptions {
  std::optional<FormulaFault> fault;
};

struct TableValue {
  BigCount value;
  int row = 0;  // 1-based; lowest covering row
};

/// Evaluates r = 1..m. Every r must be covered and all covering rows must
/// agree; otherwise InternalError naming the table, r and rows.
std::vector<TableValue> evaluate_table(const FormulaTable& t, int m, const FormulaOptions& opt = {});

/// Sizes and intersection sizes of an ordered triple (S1, S2, S3).
struct TripleParams {
  int a = 0, b = 0, c = 0;  // |S1|, |S2|, |S3|
  int x = 0, y = 0, z = 0;  // |S1 S2|, |S1 S3|, |S2 S3|
  int t = 0;                // |S1 S2 S3|
};
TripleParams triple_params(CoordSet s1, CoordSet s2, CoordSet s3);

// Closed forms. Sizes are passed already ordered as each table expects.
FormulaTable thm1_table(std::uint64_t q, int m);
FormulaTable table1(std::uint64_t q, int m, int a, int b, int x);
/// name is one of Table2, Table3, Table8, Table9, Table10, Table11.
FormulaTable triple_table(const std::string& name, std::uint64_t q, int m, const TripleParams& p);
FormulaTable table4(std::uint64_t q, int m, const std::vector<int>& sizes);
FormulaTable table5(std::uint64_t q, int m, int s);
FormulaTable table6(std::uint64_t q, int m, int a, int b, int x);
FormulaTable table7(std::uint64_t q, int m, const std::vector<int>& sizes);

/// Tables chosen by the three-set rules for one labeling (a <= b <= c).
std::vector<std::string> triple_rule(const TripleParams& p);

/// Which closed forms apply, and which hypotheses held.
struct TheoremSelector {
  std::string primary;                    // id of the reported table
  std::vector<FormulaTable> candidates;   // all forms to evaluate; [0] is primary
  std::vector<std::string> labels;        // generator order behind each candidate
  std::vector<std::string> hypotheses;    // conditions that held
};

/// Throws NotApplicable with the failed hypothesis.
TheoremSelector select_theorem(std::uint64_t q, const ComplexSpec& spec);

/// Evaluates every candidate and checks they agree.
WeightHierarchy hierarchy_formula(std::uint64_t q, const ComplexSpec& spec, const FormulaOptions& opt = {});

struct CodeParams {
  std::int64_t n = 0;
  int k = 0;
  std::int64_t d = 0;
  std::string theorem;
};

/// [n, k, d] from the theorem statement, cross-checked against
/// inclusion-exclusion and the r = 1 table row.
CodeParams code_params_formula(std::uint64_t q, const ComplexSpec& spec, const FormulaOptions& opt = {});

/// Dimension of the largest subspace inside {0} u (U+V) \ (U u V).
int lemma1_dim(int u_dim, int v_dim, int int_dim);

/// W = span{alpha_i + beta_i}, where the alphas extend a basis of U cap V
/// to U and the betas extend it to V.
Subspace lemma1_witness(const Field& f, const Subspace& u, const Subspace& v);

}  // namespace ghw
