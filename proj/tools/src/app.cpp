#include <colrec/cli/app.hpp>
#include <colrec/cli/reports.hpp>
#include <colrec/group_spec.hpp>

#include <json.hpp>

#include <chrono>
#include <iostream>
#include <memory>
#include <sstream>

namespace colrec::cli {

namespace {

using nlohmann::json;
using colrec::to_string;
using cli::to_string;

PosetPtr make_poset(int v) { return std::make_shared<const SubgraphPoset>(enumerate_poset(v, kMaxPosetVertices)); }

std::string short_edges(const EdgeSet& e) {
  if (e.edge_count() == 0) return "{}";
  std::string text = format_edges(e);
  return text.substr(text.find("edges=") + 6);
}

std::string girth_text(const EdgeSet& e) {
  auto g = girth(e);
  return g ? std::to_string(*g) : "inf";
}

// Position i of the rendering -> poset index.
std::size_t pick(std::size_t i, std::size_t n, bool complete_first) { return complete_first ? n - 1 - i : i; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_poset(const RunConfig& c, std::ostream& out) {
  auto p = make_poset(c.v);
  json members = json::array();
  if (c.format == "tsv") out << "index\tmask\tedges\te\tc\tgirth\tclass\n";
  for (std::size_t i = 0; i < p->size(); ++i) {
    const EdgeSet& e = (*p)[i];
    if (c.format == "tsv") {
      out << i << '\t' << format_mask(e) << '\t' << short_edges(e) << '\t' << e.edge_count() << '\t' << components(e)
          << '\t' << girth_text(e) << '\t' << iso_label(e) << '\n';
    } else {
      members.push_back({{"index", i},
                         {"mask", format_mask(e)},
                         {"edges", short_edges(e)},
                         {"e", e.edge_count()},
                         {"c", components(e)},
                         {"girth", girth_text(e)},
                         {"class", iso_label(e)}});
    }
  }
  if (c.format == "json") emit(out, {{"v", c.v}, {"size", p->size()}, {"members", members}});
  return kExitOk;
}

PolyMatrix build_matrix(const std::string& name, PosetPtr p) {
  if (name == "zeta") return zeta_matrix(p);
  if (name == "mobius") return mobius_matrix(p);
  if (name == "J") return j_matrix(p);
  if (name == "Jinv") return j_inverse_matrix(p);
  if (name == "M") return m_matrix(p);
  throw UsageError("unknown matrix " + name);
}

int cmd_matrix(const RunConfig& c, std::ostream& out) {
  if (c.errata && (c.v != 4 || c.matrix != "M")) throw UsageError("--errata applies to the M matrix on 4 vertices");
  auto p = make_poset(c.v);
  auto m = build_matrix(c.matrix, p);
  std::optional<Rational> r;
  if (c.r) r = parse_rational(*c.r);
  auto render = [&](const RationalPoly& poly) { return r ? to_string(poly.evaluate(*r)) : poly.to_string(); };

  const std::size_t n = p->size();
  json members = json::array();
  json entries = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    members.push_back(short_edges((*p)[pick(i, n, c.complete_first)]));
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(render(m.at(pick(i, n, c.complete_first), pick(j, n, c.complete_first))));
    entries.push_back(std::move(row));
  }

  json blocks;
  if (c.blocks) {
    auto classes = iso_class_blocks(*p);
    auto table = block_summary(m, classes);
    const std::size_t k = classes.size();
    json labels = json::array();
    json cells = json::array();
    for (std::size_t x = 0; x < k; ++x) {
      const auto& cx = classes[pick(x, k, c.complete_first)];
      labels.push_back({{"class", cx.label}, {"size", cx.members.size()}});
      json row = json::array();
      for (std::size_t y = 0; y < k; ++y) {
        const auto& cell = table[pick(x, k, c.complete_first)][pick(y, k, c.complete_first)];
        row.push_back(cell ? json(render(*cell)) : json(nullptr));
      }
      cells.push_back(std::move(row));
    }
    blocks = {{"classes", labels}, {"table", cells}};
  }

  json errata = json::array();
  if (c.errata) {
    for (const auto& cell : example1().cells) {
      if (cell.factor != "M" || cell.status == CellStatus::match) continue;
      errata.push_back({{"row", cell.row}, {"column", cell.column}, {"computed", cell.computed},
                        {"printed", cell.printed}, {"status", to_string(cell.status)}});
    }
  }

  if (c.format == "tsv") {
    out << "H\\E";
    for (const auto& mem : members) out << '\t' << mem.get<std::string>();
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      out << members[i].get<std::string>();
      for (const auto& x : entries[i]) out << '\t' << x.get<std::string>();
      out << '\n';
    }
    if (c.blocks) {
      out << "\nclass";
      for (const auto& l : blocks["classes"]) out << '\t' << l["class"].get<std::string>();
      out << '\n';
      for (std::size_t x = 0; x < blocks["table"].size(); ++x) {
        out << blocks["classes"][x]["class"].get<std::string>();
        for (const auto& cell : blocks["table"][x]) out << '\t' << (cell.is_null() ? "-" : cell.get<std::string>());
        out << '\n';
      }
    }
    if (c.errata) {
      out << "\nrow\tcolumn\tcomputed\tprinted\tstatus\n";
      for (const auto& e : errata) {
        out << e["row"].get<std::string>() << '\t' << e["column"].get<std::string>() << '\t'
            << e["computed"].get<std::string>() << '\t' << e["printed"].get<std::string>() << '\t'
            << e["status"].get<std::string>() << '\n';
      }
    }
    return kExitOk;
  }
  json doc{{"matrix", c.matrix},
           {"v", c.v},
           {"order", c.complete_first ? "complete-first" : "empty-first"},
           {"members", members},
           {"entries", entries}};
  if (r) doc["r"] = to_string(*r);
  else doc["variable"] = "r";
  if (c.blocks) doc["blocks"] = blocks;
  if (c.errata) doc["errata"] = errata;
  emit(out, doc);
  return kExitOk;
}

GammaMethod exact_method(const std::string& name) {
  if (name == "brute") return GammaMethod::brute;
  if (name == "cycle") return GammaMethod::cycle;
  return GammaMethod::automatic;
}

AllowedSet parse_allowed(const RunConfig& c) {
  try {
    return parse_allowed_spec(parse_group_spec(c.group), c.allowed);
  } catch (const SpecError& e) {
    throw UsageError(e.what());
  }
}

int cmd_gamma(const RunConfig& c, std::ostream& out) {
  auto p = make_poset(c.v);
  auto allowed = parse_allowed(c);
  const Budget budget{c.budget};
  const bool fourier = c.method == "fourier";
  const GammaMethod method = exact_method(c.method);
  const std::string method_name = fourier ? "fourier" : to_string(method == GammaMethod::automatic ? GammaMethod::cycle : method);

  json records = json::array();
  if (c.format == "tsv") out << "mask\tedges\tvalue" << (fourier ? "\timag" : "") << "\tmethod" << (c.timing ? "\ttiming_ms" : "") << '\n';
  for (const EdgeSet& e : p->members()) {
    auto start = std::chrono::steady_clock::now();
    json rec{{"mask", format_mask(e)}, {"edges", short_edges(e)}};
    std::string value;
    std::string imag;
    if (fourier) {
      auto z = gamma_fourier(e, allowed, budget);
      std::ostringstream re, im;
      re.precision(17);
      im.precision(17);
      re << z.real();
      im << z.imag();
      value = re.str();
      imag = im.str();
      rec["value"] = z.real();
      rec["imag"] = z.imag();
    } else {
      value = to_string(method == GammaMethod::brute ? gamma_bruteforce(e, allowed, budget) : gamma_cyclespace(e, allowed, budget));
      rec["value"] = value;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rec["method"] = method_name;
    if (c.timing) rec["timing_ms"] = ms;
    if (c.format == "tsv") {
      out << format_mask(e) << '\t' << short_edges(e) << '\t' << value;
      if (fourier) out << '\t' << imag;
      out << '\t' << method_name;
      if (c.timing) out << '\t' << ms;
      out << '\n';
    }
    records.push_back(std::move(rec));
  }
  if (c.format == "json") {
    emit(out, {{"v", c.v},
               {"group", c.group},
               {"allowed", c.allowed},
               {"alpha", to_string(allowed.density())},
               {"method", method_name},
               {"records", records}});
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  auto p = make_poset(c.v);
  auto allowed = parse_allowed(c);
  auto report = verify_reciprocity(p, allowed, exact_method(c.method), Budget{c.budget});
  const std::string verdict = std::string(report.passed() ? "PASS " : "FAIL ") + std::to_string(report.agree_count()) + "/" +
                              std::to_string(report.agrees.size());
  if (c.format == "tsv") {
    out << "mask\tedges\tgamma\tgamma_bar\tlhs\trhs\tagrees\n";
    for (std::size_t i = 0; i < p->size(); ++i) {
      out << format_mask((*p)[i]) << '\t' << short_edges((*p)[i]) << '\t' << to_string(report.gamma.values[i]) << '\t'
          << to_string(report.gamma_bar.values[i]) << '\t' << to_string(report.lhs[i]) << '\t' << to_string(report.rhs[i])
          << '\t' << (report.agrees[i] ? "yes" : "no") << '\n';
    }
    out << "# " << verdict << '\n';
  } else {
    json coords = json::array();
    for (std::size_t i = 0; i < p->size(); ++i) {
      coords.push_back({{"mask", format_mask((*p)[i])},
                        {"edges", short_edges((*p)[i])},
                        {"gamma", to_string(report.gamma.values[i])},
                        {"gamma_bar", to_string(report.gamma_bar.values[i])},
                        {"lhs", to_string(report.lhs[i])},
                        {"rhs", to_string(report.rhs[i])},
                        {"agrees", static_cast<bool>(report.agrees[i])}});
    }
    emit(out, {{"v", c.v},
               {"group", c.group},
               {"allowed", c.allowed},
               {"alpha", to_string(report.alpha)},
               {"method", to_string(report.gamma.method)},
               {"verdict", verdict},
               {"passed", report.passed()},
               {"coordinates", coords}});
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_chromatic(const RunConfig& c, std::ostream& out) {
  auto p = make_poset(c.v);
  std::vector<std::size_t> targets;
  if (c.edges) {
    auto idx = p->index_of(parse_edge_set(*c.edges).mask());
    if (!idx) throw UsageError(*c.edges + " has an isthmus; chromatic via M needs an isthmus-free edge set");
    targets.push_back(*idx);
  } else {
    for (std::size_t i = 0; i < p->size(); ++i) targets.push_back(i);
  }
  bool all = true;
  json rows = json::array();
  if (c.format == "tsv") out << "edges\tvia_m\toracle\tagrees\n";
  for (std::size_t i : targets) {
    auto via = chromatic_via_m(p, i).to_string("f");
    auto oracle = chromatic_oracle((*p)[i]).to_string("f");
    all = all && via == oracle;
    if (c.format == "tsv") {
      out << short_edges((*p)[i]) << '\t' << via << '\t' << oracle << '\t' << (via == oracle ? "yes" : "no") << '\n';
    } else {
      rows.push_back({{"edges", short_edges((*p)[i])}, {"class", iso_label((*p)[i])}, {"via_m", via}, {"oracle", oracle}, {"agrees", via == oracle}});
    }
  }
  if (c.format == "json") emit(out, {{"v", c.v}, {"agree", all}, {"members", rows}});
  return all ? kExitOk : kExitVerifyFailed;
}

int example1_out(const RunConfig& c, std::ostream& out) {
  auto rep = example1();
  const bool ok = rep.v3_matches && rep.m_mismatches == 0 && rep.row_sums_vanish && rep.chromatic_agrees;
  if (c.format == "tsv") {
    out << "# v=3 M (complete first) " << rep.v3_computed << (rep.v3_matches ? " matches" : " differs") << '\n';
    out << "factor\trow\tcolumn\tcomputed\tprinted\tstatus\n";
    for (const auto& cell : rep.cells) {
      out << cell.factor << '\t' << cell.row << '\t' << cell.column << '\t' << cell.computed << '\t' << cell.printed << '\t'
          << to_string(cell.status) << '\n';
    }
    out << "# M mismatches " << rep.m_mismatches << ", documented errata " << rep.m_errata << ", row sums at r=1 "
        << (rep.row_sums_vanish ? "vanish" : "do not vanish") << ", chromatic check "
        << (rep.chromatic_agrees ? "agrees" : "disagrees") << '\n';
  } else {
    json cells = json::array();
    for (const auto& cell : rep.cells) {
      cells.push_back({{"factor", cell.factor}, {"row", cell.row}, {"column", cell.column}, {"computed", cell.computed},
                       {"printed", cell.printed}, {"status", to_string(cell.status)}});
    }
    emit(out, {{"example", 1},
               {"v3", {{"computed", rep.v3_computed}, {"matches", rep.v3_matches}}},
               {"v4_cells", cells},
               {"m_mismatches", rep.m_mismatches},
               {"m_errata", rep.m_errata},
               {"row_sums_vanish_at_1", rep.row_sums_vanish},
               {"chromatic_agrees", rep.chromatic_agrees},
               {"reproduced", ok}});
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int example2_out(const RunConfig& c, std::ostream& out) {
  auto rows = example2();
  auto p3 = make_poset(3);
  auto g5 = make_group({5});
  const Rational spot = gamma_bruteforce((*p3)[1], allowed_interval(g5, 1).complement());
  bool ok = spot == ratio(7, 25);
  for (const auto& r : rows) ok = ok && r.agrees;
  if (c.format == "tsv") {
    out << "f\tk\talpha_bar\tgamma_bar\tformula_bar\tgamma\tformula\tagrees\n";
    for (const auto& r : rows) {
      out << r.f << '\t' << r.k << '\t' << to_string(r.alpha_bar) << '\t' << to_string(r.gamma_bar) << '\t'
          << to_string(r.formula_bar) << '\t' << to_string(r.gamma) << '\t' << to_string(r.formula) << '\t'
          << (r.agrees ? "yes" : "no") << '\n';
    }
    out << "# brute force f=5 k=1 gamma_bar " << to_string(spot) << '\n';
  } else {
    json table = json::array();
    for (const auto& r : rows) {
      table.push_back({{"f", r.f}, {"k", r.k}, {"alpha_bar", to_string(r.alpha_bar)}, {"gamma_bar", to_string(r.gamma_bar)},
                       {"formula_bar", to_string(r.formula_bar)}, {"gamma", to_string(r.gamma)},
                       {"formula", to_string(r.formula)}, {"agrees", r.agrees}});
    }
    emit(out, {{"example", 2}, {"rows", table}, {"brute_force_f5_k1", to_string(spot)}, {"reproduced", ok}});
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int example3_out(const RunConfig& c, std::ostream& out) {
  auto rows = example3(1, 10, Budget{c.budget});
  auto trend = example3_trend(12, Budget{c.budget});
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.bar_agrees && r.agrees;
  if (c.format == "tsv") {
    out << "n\talpha_bar\tgamma_bar\tprinted_bar\tgamma\tprinted\tgap\tcorrected\n";
    for (const auto& r : rows) {
      out << r.n << '\t' << to_string(r.alpha_bar) << '\t' << to_string(r.gamma_bar) << '\t' << to_string(r.printed_bar)
          << '\t' << to_string(r.gamma) << '\t' << to_string(r.printed) << '\t' << to_string(Rational(r.gamma - r.printed))
          << '\t' << to_string(r.corrected) << '\n';
    }
    out << "\nn\tk\talpha\tgamma\talpha^3\tratio\n";
    for (const auto& t : trend) {
      out << t.n << '\t' << t.n / 2 << '\t' << to_string(t.alpha) << '\t' << to_string(t.gamma) << '\t'
          << to_string(t.independent) << '\t' << t.ratio << '\n';
    }
  } else {
    json table = json::array();
    for (const auto& r : rows) {
      table.push_back({{"n", r.n}, {"alpha_bar", to_string(r.alpha_bar)}, {"gamma_bar", to_string(r.gamma_bar)},
                       {"printed_bar", to_string(r.printed_bar)}, {"bar_agrees", r.bar_agrees},
                       {"gamma", to_string(r.gamma)}, {"printed", to_string(r.printed)}, {"agrees", r.agrees},
                       {"gap", to_string(Rational(r.gamma - r.printed))}, {"corrected", to_string(r.corrected)},
                       {"corrected_agrees", r.gamma == r.corrected}});
    }
    json trend_rows = json::array();
    for (const auto& t : trend) {
      trend_rows.push_back({{"n", t.n}, {"k", t.n / 2}, {"alpha", to_string(t.alpha)}, {"gamma", to_string(t.gamma)},
                            {"alpha_cubed", to_string(t.independent)}, {"ratio", t.ratio}});
    }
    emit(out, {{"example", 3}, {"rows", table}, {"trend", trend_rows}, {"reproduced", ok}});
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int execute(const RunConfig& c, std::ostream& out) {
  if (c.command == "poset") return cmd_poset(c, out);
  if (c.command == "matrix") return cmd_matrix(c, out);
  if (c.command == "gamma") return cmd_gamma(c, out);
  if (c.command == "verify") return cmd_verify(c, out);
  if (c.command == "chromatic") return cmd_chromatic(c, out);
  if (c.command == "examples") {
    if (c.example == 1) return example1_out(c, out);
    if (c.example == 2) return example2_out(c, out);
    return example3_out(c, out);
  }
  throw UsageError("unknown command " + c.command);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_run_config(args), out);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace colrec::cli
