#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fano72/arith.hpp"
#include "fano72/basket.hpp"
#include "fano72/rational.hpp"

namespace fano72::pipeline {

/// Filter schedule. `paper` mirrors the coarse pre-filters used to print the
/// tables; `strict` applies exact sigma comparisons as early as possible.
enum class Mode { paper, strict };

std::string_view mode_name(Mode mode);
/// Throws std::invalid_argument for anything but "paper" or "strict".
Mode parse_mode(std::string_view text);

struct Options {
  Mode mode = Mode::strict;
  /// Added to every J1/J2 budget. Zero for a real run; nonzero only to
  /// check that the harness reports survivors.
  Rational j_budget_slack;
  /// Worker cap, 0 = hardware concurrency. Output never depends on it.
  unsigned threads = 1;
};

struct Table1Row {
  IndexMultiset indices;
  std::int64_t r_x = 1;
  std::int64_t rx_c2c1 = 0;
  std::vector<std::int64_t> candidates;
  /// rx_c2c1 - min(candidates)/4; empty for rows without candidates.
  std::optional<Rational> j1_budget_max;
};

/// J_A = q branch.
struct Table2Entry {
  IndexMultiset indices;
  std::int64_t r_x = 1;
  std::int64_t rx_c2c1 = 0;
  std::int64_t n = 0;
  std::int64_t q = 0;
  Rational j1_budget;
  Rational sigma;
  Rational j2_budget;
  bool passes_j2 = false;
};

struct JCell {
  std::int64_t j = 0;
  bool kept = false;
  /// Set where the printed table and the exact filters disagree.
  bool divergent = false;
};

/// One (N, m) row of the square-factor tables: m^2 | N, m = q/J_A >= 2.
/// Gorenstein rows have empty indices, r_x = 1 and rx_c2c1 = 24.
struct SquareFactorRow {
  IndexMultiset indices;
  std::int64_t r_x = 1;
  std::int64_t rx_c2c1 = 0;
  std::int64_t n = 0;
  arith::Factorization factors;
  std::int64_t m = 0;
  std::vector<JCell> cells;
  Rational j1_budget;
  std::vector<std::string> notes;

  [[nodiscard]] std::vector<std::int64_t> kept() const;
  [[nodiscard]] std::vector<std::int64_t> crossed() const;
};

/// J_A != q branch with q = m J_A >= 7.
struct Table4Entry {
  IndexMultiset indices;
  std::int64_t r_x = 1;
  std::int64_t rx_c2c1 = 0;
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t j_a = 0;
  Rational sigma;
  Rational j2_budget;
  bool passes_j2 = false;
};

/// A printed cell that the exact filters do not reproduce.
struct Divergence {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t j = 0;
  std::string note;
};

struct FilterStep {
  std::string filter;
  std::string detail;
  bool passed = false;
};

/// One enumerated case and the filters applied to it, in order.
struct EliminationRecord {
  /// "non-gorenstein", "gorenstein", or "script" for an unclosed deduction.
  std::string branch;
  IndexMultiset indices;
  std::int64_t r_x = 1;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t j_a = 0;
  std::int64_t q = 0;
  std::vector<FilterStep> trace;
  /// First failing filter; empty means the case survives.
  std::optional<std::string> eliminated_by;
};

struct ScriptStep {
  std::string name;
  std::string detail;
};

/// Deduction for Q-Fano index at most 6 with nonempty basket.
struct LowQTrace {
  // q <= 5
  Rational a_coefficient;
  Rational a_c2c1_lower;
  std::vector<IndexMultiset> a_indices;
  std::vector<std::int64_t> a_scaled_degrees;
  std::optional<Basket> a_basket;
  std::optional<Rational> a_h0;
  bool a_eliminated = false;
  // q = 6
  Rational b_coefficient;
  Rational b_c2c1_lower;
  std::vector<IndexMultiset> b_indices;
  Rational b_n_lower;
  Rational b_n_upper;
  std::vector<std::int64_t> b_candidates;
  std::int64_t b_q_w = 0;
  std::int64_t b_torsion_order = 0;
  Rational b_cover_degree;
  Rational external_bound;
  bool b_eliminated = false;

  std::vector<ScriptStep> steps;
  [[nodiscard]] bool closed() const { return a_eliminated && b_eliminated; }
};

struct QCandidate {
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t j_a = 0;
  Rational sigma;
  Rational j2_budget;
  bool passes_j2 = false;
};

/// Deduction for Gorenstein X (c2c1 = 24) with degree above 72.
struct GorensteinTrace {
  std::int64_t c_min = 0;
  std::int64_t c_max = 0;
  // q <= 6 with a singular curve
  Rational low_q_coefficient;
  Rational min_curve_contribution;
  Rational curve_c_upper;
  bool curve_eliminated = false;
  // q <= 6 without singular curves
  std::vector<std::int64_t> no_curve_degrees;
  /// For each degree in no_curve_degrees, the q <= 6 with c/q^2 an even integer.
  std::vector<std::vector<std::int64_t>> parity_q;
  Rational semistable_bound;
  bool no_curve_eliminated = false;
  // q >= 7
  std::vector<std::int64_t> j_universe;
  std::vector<SquareFactorRow> table5;
  std::vector<Divergence> divergences;
  std::vector<QCandidate> q_candidates;
  bool large_q_eliminated = false;

  std::vector<ScriptStep> steps;
  [[nodiscard]] bool closed() const { return curve_eliminated && no_curve_eliminated && large_q_eliminated; }
};

struct Axiom {
  std::string name;
  std::string statement;
  std::string citation;
};

struct Certificate {
  Mode mode = Mode::strict;
  Rational j_budget_slack;
  std::vector<Table1Row> table1;
  std::vector<Table2Entry> table2;
  std::vector<SquareFactorRow> table3;
  std::vector<Table4Entry> table4;
  LowQTrace low_q;
  GorensteinTrace gorenstein;
  Rational j_universe_budget;
  std::vector<std::int64_t> j_universe;
  std::vector<EliminationRecord> records;
  std::vector<EliminationRecord> survivors;
  std::vector<Axiom> axioms;
  std::vector<std::string> normalizations;

  [[nodiscard]] bool bounded() const { return survivors.empty(); }
};

/// Lowest degree considered; cases below it already satisfy the bound.
inline constexpr std::int64_t kDegreeFloor = 72;
/// Degree bound for canonical Fano 3-folds, used as an axiom.
inline constexpr std::int64_t kExternalDegreeBound = 324;

std::vector<Table1Row> build_table1(unsigned threads = 1);
std::vector<Table2Entry> build_table2(const std::vector<Table1Row>& table1, const Options& options);
std::vector<SquareFactorRow> build_table3(const std::vector<Table1Row>& table1, const Options& options);
std::vector<Table4Entry> build_table4(const std::vector<SquareFactorRow>& table3, const Options& options);
/// Candidate J_A values for the non-Gorenstein branch, with the budget used.
std::pair<Rational, std::vector<std::int64_t>> j_universe(const std::vector<Table1Row>& table1, const Options& options);

LowQTrace certify_low_q();
GorensteinTrace certify_gorenstein(const Options& options);
Certificate certify_all(const Options& options);

/// Cells printed in the Gorenstein square-factor table that the exact filters
/// do not produce as kept.
const std::vector<Divergence>& printed_table5_divergences();

}  // namespace fano72::pipeline
