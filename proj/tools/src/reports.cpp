#include <colrec/cli/reports.hpp>
#include <colrec/poset_matrix.hpp>

#include <algorithm>
#include <memory>
#include <tuple>

namespace colrec::cli {

namespace {

// Class labels on 4 vertices, complete graph first.
const std::vector<std::string> kClassesV4{"K4", "K4-e", "C4", "K3", "empty"};

PosetPtr make_poset(int v) { return std::make_shared<const SubgraphPoset>(enumerate_poset(v)); }

const EdgeSet& triangle_of(const SubgraphPoset& p) { return p[p.size() - 1]; }

Rational corrected_hamming_k3(int n) {
  const Rational half = pow(Rational(2), -n);
  return Rational(1) - Rational(3 * n + 3) * half + Rational(3L * n * n + 3L * n + 2) * half * half;
}

std::size_t class_position(const std::vector<IsoClass>& classes, const std::string& label) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].label == label) return i;
  }
  throw std::logic_error("no class labelled " + label);
}

void compare_factor(const std::string& factor, const PolyMatrix& computed, const std::vector<PrintedBlock>& printed,
                    const std::vector<IsoClass>& classes, Example1Report& report) {
  auto blocks = block_summary(computed, classes);
  for (const auto& row : kClassesV4) {
    for (const auto& col : kClassesV4) {
      CellReport cell{factor, row, col, "", "0", CellStatus::match};
      std::optional<RationalPoly> expected = RationalPoly();
      for (const auto& b : printed) {
        if (b.row != row || b.column != col) continue;
        cell.printed = b.printed;
        expected = b.poly ? std::optional<RationalPoly>(RationalPoly::parse(*b.poly)) : std::nullopt;
      }
      const auto& got = blocks[class_position(classes, row)][class_position(classes, col)];
      cell.computed = got ? got->to_string() : "(not a block multiple)";
      if (!expected) {
        cell.status = CellStatus::placeholder;
      } else if (got && *got == *expected) {
        cell.status = CellStatus::match;
      } else if (factor == "M" && is_documented_erratum(row, col)) {
        cell.status = CellStatus::erratum;
      } else {
        cell.status = CellStatus::mismatch;
      }
      if (factor == "M") {
        if (cell.status == CellStatus::mismatch) ++report.m_mismatches;
        if (cell.status == CellStatus::erratum) ++report.m_errata;
      }
      report.cells.push_back(std::move(cell));
    }
  }
}

}  // namespace

const std::vector<PrintedBlock>& printed_j_alpha_v4() {
  static const std::vector<PrintedBlock> blocks{
      {"K4", "K4", "1", "1"},           {"K4", "K4-e", "r", "a"},        {"K4", "C4", "r^2", "a^2"},
      {"K4", "K3", "r^3", "a^3"},       {"K4", "empty", "r^6", "a^6"},   {"K4-e", "K4-e", "1", "I_6"},
      {"K4-e", "C4", "r", "a K"},       {"K4-e", "K3", "r^2", "a^2 L"},  {"K4-e", "empty", "r^5", "a^5"},
      {"C4", "C4", "1", "I_3"},         {"C4", "empty", "r^3", "a^3"},   {"K3", "K3", std::nullopt, "+-I_4"},
      {"K3", "empty", std::nullopt, "c_9"}, {"empty", "empty", "1", "1"},
  };
  return blocks;
}

const std::vector<PrintedBlock>& printed_sign_v4() {
  static const std::vector<PrintedBlock> blocks{
      {"K4", "K4", "1", "1"},   {"K4-e", "K4-e", "-1", "-I_6"},  {"C4", "C4", "1", "I_3"},
      {"K3", "K3", "-1", "-I_4"}, {"empty", "empty", "1", "1"},
  };
  return blocks;
}

const std::vector<PrintedBlock>& printed_j_inverse_v4() {
  static const std::vector<PrintedBlock> blocks{
      {"K4", "K4", "1", "1"},            {"K4", "K4-e", "-r", "-b"},          {"K4", "C4", "r^2", "b^2"},
      {"K4", "K3", "2r^3", "2b^3"},      {"K4", "empty", "-6r^6", "-6b^6"},   {"K4-e", "K4-e", "1", "I_6"},
      {"K4-e", "C4", "-r", "-b K"},      {"K4-e", "K3", "-r^2", "-b^2 L"},    {"K4-e", "empty", "2r^5", "2b^5"},
      {"C4", "C4", "1", "I_3"},          {"C4", "empty", "-r^4", "-b^4"},     {"K3", "K3", "1", "I_4"},
      {"K3", "empty", "-r^3", "-b^3"},   {"empty", "empty", "1", "1"},
  };
  return blocks;
}

const std::vector<PrintedBlock>& printed_m_v4() {
  static const std::vector<PrintedBlock> blocks{
      {"K4", "K4", "1", "1"},
      {"K4", "K4-e", "-1", "-1"},
      {"K4", "C4", "1", "1"},
      {"K4", "K3", "-1 + 3r - r^2 + r^3", "-1 + 3b - b^2 + b^3"},
      {"K4", "empty", "1 - 6r + 15r^2 - 16r^3", "1 - 6b + 15b^2 - 16b^3"},
      {"K4-e", "K4-e", "-1", "-I_6"},
      {"K4-e", "C4", "1", "K"},
      {"K4-e", "K3", "-1 + 2r", "(-1 + 2b) L"},
      {"K4-e", "empty", "1 - 5r + 10r^2 - 3r^3", "1 - 5b + 10b^2 - 3b^3"},
      {"C4", "C4", "1", "I_3"},
      {"C4", "empty", "1 - 4r + 6r^2 - 4r^3", "1 - 4b + 6b^2 - 4b^3"},
      {"K3", "K3", "-1", "-I_4"},
      {"K3", "empty", "1 - 3r + 3r^2", "1 - 3b + 3b^2"},
      {"empty", "empty", "1", "1"},
  };
  return blocks;
}

bool is_documented_erratum(const std::string& row, const std::string& column) {
  return (row == "K4" && column == "K3") || (row == "K4-e" && column == "empty");
}

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::match: return "match";
    case CellStatus::erratum: return "erratum";
    case CellStatus::placeholder: return "placeholder";
    case CellStatus::mismatch: return "mismatch";
  }
  return "?";
}

Example1Report example1() {
  Example1Report report;

  auto p3 = make_poset(3);
  auto m3 = m_matrix(p3);
  // complete first: index 1 is K3, index 0 is empty
  const RationalPoly printed_v3[2][2] = {{RationalPoly(-1L), RationalPoly({1, -3, 3})}, {RationalPoly(), RationalPoly(1L)}};
  report.v3_matches = true;
  report.v3_computed = "[";
  for (int i = 0; i < 2; ++i) {
    report.v3_computed += i ? ", [" : "[";
    for (int j = 0; j < 2; ++j) {
      const auto& got = m3.at(static_cast<std::size_t>(1 - i), static_cast<std::size_t>(1 - j));
      report.v3_matches = report.v3_matches && got == printed_v3[i][j];
      report.v3_computed += (j ? ", " : "") + got.to_string();
    }
    report.v3_computed += "]";
  }
  report.v3_computed += "]";

  auto p4 = make_poset(4);
  auto classes = iso_class_blocks(*p4);
  auto m4 = m_matrix(p4);
  compare_factor("J_alpha", j_matrix(p4), printed_j_alpha_v4(), classes, report);
  compare_factor("sign", sign_matrix(p4), printed_sign_v4(), classes, report);
  compare_factor("J_inverse", j_inverse_matrix(p4), printed_j_inverse_v4(), classes, report);
  compare_factor("M", m4, printed_m_v4(), classes, report);

  auto at_one = evaluate(m4, Rational(1));
  report.row_sums_vanish = true;
  for (std::size_t h = 0; h < at_one.size(); ++h) {
    Rational sum;
    for (std::size_t e = 0; e < at_one.size(); ++e) sum += at_one.at(h, e);
    report.row_sums_vanish = report.row_sums_vanish && sum == Rational(h == 0 ? 1 : 0);
  }

  report.chromatic_agrees = true;
  for (std::size_t i = 0; i < p4->size(); ++i) {
    report.chromatic_agrees = report.chromatic_agrees && chromatic_via_m(p4, i) == chromatic_oracle((*p4)[i]);
  }
  return report;
}

std::vector<Example2Row> example2(int f_min, int f_max, Budget budget) {
  auto p3 = make_poset(3);
  const EdgeSet& k3 = triangle_of(*p3);
  std::vector<Example2Row> rows;
  for (int f = f_min | 1; f <= f_max; f += 2) {
    auto group = make_group({f});
    for (int k = 0; 2 * k + 1 <= f; ++k) {
      auto allowed = allowed_interval(group, k);
      Example2Row row;
      row.f = f;
      row.k = k;
      row.alpha_bar = allowed.co_density();
      row.gamma_bar = gamma_cyclespace(k3, allowed.complement(), budget);
      row.gamma = gamma_cyclespace(k3, allowed, budget);
      std::tie(row.formula_bar, row.formula) = interval_k3_closed_form(f, k);
      row.agrees = row.gamma_bar == row.formula_bar && row.gamma == row.formula;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<Example3Row> example3(int n_min, int n_max, Budget budget) {
  auto p3 = make_poset(3);
  const EdgeSet& k3 = triangle_of(*p3);
  std::vector<Example3Row> rows;
  for (int n = n_min; n <= n_max; ++n) {
    auto allowed = allowed_hamming(n, 1);
    Example3Row row;
    row.n = n;
    row.alpha_bar = allowed.co_density();
    row.gamma_bar = gamma_cyclespace(k3, allowed.complement(), budget);
    row.gamma = gamma_cyclespace(k3, allowed, budget);
    std::tie(row.printed_bar, row.printed) = hamming_k3_closed_form(n);
    row.corrected = corrected_hamming_k3(n);
    row.bar_agrees = row.gamma_bar == row.printed_bar;
    row.agrees = row.gamma == row.printed;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TrendRow> example3_trend(int n_max, Budget budget) {
  auto p3 = make_poset(3);
  const EdgeSet& k3 = triangle_of(*p3);
  std::vector<TrendRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    auto allowed = allowed_hamming(n, n / 2);
    TrendRow row;
    row.n = n;
    row.alpha = allowed.density();
    row.gamma = gamma_cyclespace(k3, allowed, budget);
    row.independent = pow(row.alpha, 3);
    row.ratio = row.independent == 0 ? 0.0 : Rational(row.gamma / row.independent).get_d();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace colrec::cli
