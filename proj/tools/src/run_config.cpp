#include <colrec/cli/run_config.hpp>
#include <colrec/group_spec.hpp>
#include <colrec/rational.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

namespace colrec::cli {

namespace {

const std::vector<std::string> kMatrices{"zeta", "mobius", "J", "Jinv", "M"};
const std::vector<std::string> kMethods{"auto", "brute", "cycle", "fourier"};
const std::vector<std::string> kFormats{"json", "tsv"};

bool uses_group(const std::string& command) { return command == "gamma" || command == "verify"; }

void add_common(CLI::App& sub, RunConfig& c) {
  sub.add_option("--format", c.format, "Output format")->check(CLI::IsMember(kFormats));
}

void add_vertices(CLI::App& sub, RunConfig& c) {
  sub.add_option("--v", c.v, "Number of vertices")->check(CLI::Range(2, kMaxPosetVertices));
}

void add_colouring(CLI::App& sub, RunConfig& c) {
  sub.add_option("--group", c.group, "Colour group, e.g. Z5, Z2^3, Z3xZ9");
  sub.add_option("--allowed", c.allowed, "Allowed differences: interval:k, hamming:k, nonzero, all, none, set:{..}");
  sub.add_option("--budget", c.budget, "Work budget for enumeration");
}

void canonicalize(RunConfig& c) {
  if (uses_group(c.command)) {
    try {
      auto group = parse_group_spec(c.group);
      c.allowed = canonical_allowed_spec(group, c.allowed);
      c.group = render_group_spec(group);
    } catch (const SpecError& e) {
      throw UsageError(e.what());
    }
  }
  if (c.r) {
    try {
      c.r = to_string(parse_rational(*c.r));
    } catch (const std::exception& e) {
      throw UsageError("--r: " + std::string(e.what()));
    }
  }
  if (c.edges) {
    try {
      auto e = parse_edge_set(*c.edges);
      c.v = e.vertex_count();
      c.edges = format_edges(e);
    } catch (const std::exception& e) {
      throw UsageError("--edges: " + std::string(e.what()));
    }
  }
  if (c.command == "verify" && c.method == "fourier") throw UsageError("verify needs an exact method");
}

}  // namespace

RunConfig parse_run_config(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Reciprocity for group colourings of isthmus-free subgraph posets", "colrec"};
  app.require_subcommand(1);

  auto* poset = app.add_subcommand("poset", "List the isthmus-free edge sets on v vertices");
  add_vertices(*poset, c);
  add_common(*poset, c);

  auto* matrix = app.add_subcommand("matrix", "Print zeta, mobius, J, Jinv or M over the poset");
  matrix->add_option("which", c.matrix, "Matrix name")->check(CLI::IsMember(kMatrices));
  add_vertices(*matrix, c);
  matrix->add_option("--r", c.r, "Evaluate at a rational p/q instead of printing polynomials");
  matrix->add_flag("--paper-order", c.complete_first, "Order rows and columns with the complete graph first");
  matrix->add_flag("--blocks", c.blocks, "Add an isomorphism-class block summary");
  matrix->add_flag("--errata", c.errata, "Compare M on 4 vertices with the printed reference values");
  add_common(*matrix, c);

  auto* gamma = app.add_subcommand("gamma", "Compute Gamma^A over the poset");
  add_vertices(*gamma, c);
  add_colouring(*gamma, c);
  gamma->add_option("--method", c.method, "Computation method")->check(CLI::IsMember(kMethods));
  gamma->add_flag("--timing", c.timing, "Include per-member wall time");
  add_common(*gamma, c);

  auto* verify = app.add_subcommand("verify", "Check the reciprocity identity coordinate by coordinate");
  add_vertices(*verify, c);
  add_colouring(*verify, c);
  verify->add_option("--method", c.method, "Exact method")->check(CLI::IsMember(kMethods));
  add_common(*verify, c);

  auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomials from M against deletion-contraction");
  add_vertices(*chromatic, c);
  chromatic->add_option("--edges", c.edges, "Single member, e.g. v=4;edges=01,12,23,03");
  add_common(*chromatic, c);

  auto* examples = app.add_subcommand("examples", "Reproduce the worked examples (1, 2 or 3)");
  examples->add_option("which", c.example, "Example number")->check(CLI::Range(1, 3));
  add_common(*examples, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    throw HelpRequested(target->help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  c.command = app.get_subcommands().front()->get_name();
  canonicalize(c);
  return c;
}

std::vector<std::string> render_run_config(const RunConfig& c) {
  std::vector<std::string> out{c.command};
  auto opt = [&out](const std::string& name, const std::string& value) {
    out.push_back(name);
    out.push_back(value);
  };
  if (c.command == "matrix") out.push_back(c.matrix);
  if (c.command == "examples") out.push_back(std::to_string(c.example));
  if (c.command != "examples") opt("--v", std::to_string(c.v));
  if (uses_group(c.command)) {
    opt("--group", c.group);
    opt("--allowed", c.allowed);
    opt("--method", c.method);
    opt("--budget", std::to_string(c.budget));
  }
  if (c.command == "matrix") {
    if (c.r) opt("--r", *c.r);
    if (c.complete_first) out.emplace_back("--paper-order");
    if (c.blocks) out.emplace_back("--blocks");
    if (c.errata) out.emplace_back("--errata");
  }
  if (c.command == "gamma" && c.timing) out.emplace_back("--timing");
  if (c.command == "chromatic" && c.edges) opt("--edges", *c.edges);
  opt("--format", c.format);
  return out;
}

}  // namespace colrec::cli
