#pragma once

#include <colrec/gamma.hpp>
#include <colrec/graphs.hpp>

#include <optional>
#include <string>
#include <vector>

namespace colrec::cli {

/// One printed block entry of the 4-vertex example: row class, column class
/// and the printed polynomial. Blocks not listed are printed as zero. A
/// missing `poly` marks a printed placeholder that is not a polynomial.
struct PrintedBlock {
  std::string row;
  std::string column;
  std::optional<std::string> poly;
  std::string printed;
};

/// Printed 4-vertex matrices: the three factors J_alpha, (-1)^e,
/// J_{1-alpha}^{-1} (each in its own variable, written r) and the product M.
const std::vector<PrintedBlock>& printed_j_alpha_v4();
const std::vector<PrintedBlock>& printed_sign_v4();
const std::vector<PrintedBlock>& printed_j_inverse_v4();
const std::vector<PrintedBlock>& printed_m_v4();

/// The two M cells whose printed values are known to be wrong.
bool is_documented_erratum(const std::string& row, const std::string& column);

enum class CellStatus { match, erratum, placeholder, mismatch };
std::string to_string(CellStatus status);

struct CellReport {
  std::string factor;  // J_alpha, sign, J_inverse, M
  std::string row;
  std::string column;
  std::string computed;
  std::string printed;
  CellStatus status = CellStatus::match;
};

struct Example1Report {
  bool v3_matches = false;
  std::string v3_computed;  // complete-first rendering
  std::vector<CellReport> cells;
  std::size_t m_mismatches = 0;  // excluding documented errata
  std::size_t m_errata = 0;
  bool row_sums_vanish = false;
  bool chromatic_agrees = false;
};

/// Compares every block of the computed 4-vertex matrices with the printed
/// ones. Blocks are read through the containment pattern.
Example1Report example1();

struct Example2Row {
  int f = 0;
  int k = 0;
  Rational alpha_bar;
  Rational gamma_bar;     // computed, triangle
  Rational gamma;
  Rational formula_bar;   // piecewise closed form
  Rational formula;
  bool agrees = false;
};

std::vector<Example2Row> example2(int f_min = 5, int f_max = 31, Budget budget = {});

struct Example3Row {
  int n = 0;
  Rational alpha_bar;
  Rational gamma_bar;
  Rational gamma;
  Rational printed_bar;
  Rational printed;
  Rational corrected;  // 1 - (3n+3) 2^{-n} + (3n^2+3n+2) 4^{-n}
  bool bar_agrees = false;
  bool agrees = false;
};

std::vector<Example3Row> example3(int n_min = 1, int n_max = 10, Budget budget = {});

struct TrendRow {
  int n = 0;
  Rational alpha;
  Rational gamma;       // triangle, k = floor(n/2)
  Rational independent; // alpha^3
  double ratio = 0.0;
};

/// Gamma^A on a triangle against alpha^3 with k = floor(n/2).
std::vector<TrendRow> example3_trend(int n_max = 12, Budget budget = {});

}  // namespace colrec::cli
