#include "colrec/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

namespace colrec {

BudgetExceeded::BudgetExceeded(const std::string& method, double required, std::uint64_t budget)
    : std::runtime_error(method + " needs about " + std::to_string(static_cast<long double>(required)) +
                         " work units, budget is " + std::to_string(budget) +
                         (method == "brute force" ? "; use the cycle-space method" : "")),
      required_(required) {}

namespace {

double power_estimate(std::size_t base, int exponent) { return std::pow(static_cast<double>(base), exponent); }

void check_budget(const std::string& method, double required, const Budget& budget) {
  if (required > static_cast<double>(budget.work_units)) throw BudgetExceeded(method, required, budget.work_units);
}

}  // namespace

CoboundaryContext::CoboundaryContext(const EdgeSet& edges, bool flip_orientation) : edges_(edges) {
  for (auto [i, j] : edges.edges()) oriented_.emplace_back(flip_orientation ? j : i, flip_orientation ? i : j);

  const int v = edges.vertex_count();
  const auto vn = static_cast<std::size_t>(v);
  // incident[u] = (edge id, other endpoint)
  std::vector<std::vector<std::pair<int, int>>> incident(vn);
  for (std::size_t t = 0; t < oriented_.size(); ++t) {
    auto [a, b] = oriented_[t];
    incident[static_cast<std::size_t>(a)].emplace_back(static_cast<int>(t), b);
    incident[static_cast<std::size_t>(b)].emplace_back(static_cast<int>(t), a);
  }
  std::vector<int> parent(vn, -1), parent_edge(vn, -1), depth(vn, -1);
  std::vector<bool> tree_edge(oriented_.size(), false);
  for (int s = 0; s < v; ++s) {
    if (depth[static_cast<std::size_t>(s)] >= 0) continue;
    roots_.push_back(s);
    depth[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [t, w] : incident[static_cast<std::size_t>(u)]) {
        auto wi = static_cast<std::size_t>(w);
        if (depth[wi] >= 0) continue;
        depth[wi] = depth[static_cast<std::size_t>(u)] + 1;
        parent[wi] = u;
        parent_edge[wi] = t;
        tree_edge[static_cast<std::size_t>(t)] = true;
        order_.push_back(w);
        q.push(w);
      }
    }
  }

  // Coefficient for traversing tree edge t from x towards y.
  auto step = [&](int t, int x) { return oriented_[static_cast<std::size_t>(t)].first == x ? 1 : -1; };
  for (std::size_t t = 0; t < oriented_.size(); ++t) {
    if (tree_edge[t]) continue;
    std::vector<int> z(oriented_.size(), 0);
    auto [a, b] = oriented_[t];
    z[t] = 1;  // a -> b, then return from b to a through the forest
    int x = b;
    int y = a;
    std::vector<std::pair<int, int>> down_path;  // edges from the meeting point down to a
    while (x != y) {
      if (depth[static_cast<std::size_t>(x)] >= depth[static_cast<std::size_t>(y)]) {
        int pe = parent_edge[static_cast<std::size_t>(x)];
        z[static_cast<std::size_t>(pe)] += step(pe, x);
        x = parent[static_cast<std::size_t>(x)];
      } else {
        int pe = parent_edge[static_cast<std::size_t>(y)];
        down_path.emplace_back(pe, parent[static_cast<std::size_t>(y)]);
        y = parent[static_cast<std::size_t>(y)];
      }
    }
    for (auto [pe, from] : down_path) z[static_cast<std::size_t>(pe)] += step(pe, from);
    cycles_.push_back(std::move(z));
  }
}

std::vector<ElementIndex> CoboundaryContext::coboundary(const FiniteAbelianGroup& group,
                                                        std::span<const ElementIndex> coloring) const {
  std::vector<ElementIndex> out;
  out.reserve(oriented_.size());
  for (auto [a, b] : oriented_) {
    out.push_back(group.sub(coloring[static_cast<std::size_t>(b)], coloring[static_cast<std::size_t>(a)]));
  }
  return out;
}

std::vector<ElementIndex> CoboundaryContext::boundary(const FiniteAbelianGroup& group,
                                                      std::span<const ElementIndex> edge_labels) const {
  std::vector<ElementIndex> out(static_cast<std::size_t>(edges_.vertex_count()), 0);
  for (std::size_t t = 0; t < oriented_.size(); ++t) {
    auto [a, b] = oriented_[t];
    out[static_cast<std::size_t>(b)] = group.add(out[static_cast<std::size_t>(b)], edge_labels[t]);
    out[static_cast<std::size_t>(a)] = group.sub(out[static_cast<std::size_t>(a)], edge_labels[t]);
  }
  return out;
}

Rational gamma_bruteforce(const EdgeSet& edges, const AllowedSet& allowed, Budget budget) {
  const FiniteAbelianGroup& group = allowed.group();
  const std::size_t f = group.order();
  const int v = edges.vertex_count();
  check_budget("brute force", power_estimate(f, v), budget);
  const auto pairs = edges.edges();
  std::vector<ElementIndex> x(static_cast<std::size_t>(v), 0);
  std::uint64_t good = 0;
  std::uint64_t total = 0;
  while (true) {
    ++total;
    bool ok = true;
    for (auto [i, j] : pairs) {
      if (!allowed.contains(group.sub(x[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(i)]))) {
        ok = false;
        break;
      }
    }
    good += ok;
    std::size_t pos = 0;
    while (pos < x.size() && ++x[pos] == f) x[pos++] = 0;
    if (pos == x.size()) break;
  }
  Rational out(Integer(static_cast<unsigned long>(good)), Integer(static_cast<unsigned long>(total)));
  out.canonicalize();
  return out;
}

namespace {

struct PrunedCounter {
  const FiniteAbelianGroup& group;
  const AllowedSet& allowed;
  const std::vector<int>& order;
  // back_edges[k]: (earlier vertex, sign) for edges from order[k] to vertices fixed before it;
  // sign +1 when the edge is oriented earlier -> order[k].
  std::vector<std::vector<std::pair<int, int>>> back_edges;
  std::vector<ElementIndex> colour;

  std::uint64_t count(std::size_t k) {
    if (k == order.size()) return 1;
    const auto u = static_cast<std::size_t>(order[k]);
    std::uint64_t total = 0;
    for (ElementIndex c = 0; c < group.order(); ++c) {
      bool ok = true;
      for (auto [w, sign] : back_edges[k]) {
        ElementIndex diff = sign > 0 ? group.sub(c, colour[static_cast<std::size_t>(w)])
                                     : group.sub(colour[static_cast<std::size_t>(w)], c);
        if (!allowed.contains(diff)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colour[u] = c;
      total += count(k + 1);
    }
    return total;
  }
};

}  // namespace

Rational gamma_cyclespace(const EdgeSet& edges, const AllowedSet& allowed, Budget budget) {
  CoboundaryContext ctx(edges);
  const FiniteAbelianGroup& group = allowed.group();
  const auto& order = ctx.search_order();
  check_budget("cycle space", power_estimate(group.order(), static_cast<int>(order.size())), budget);

  const auto vn = static_cast<std::size_t>(edges.vertex_count());
  std::vector<int> position(vn, -1);  // roots get -1: fixed to colour 0 before everything
  for (std::size_t k = 0; k < order.size(); ++k) position[static_cast<std::size_t>(order[k])] = static_cast<int>(k);

  PrunedCounter counter{group, allowed, order, std::vector<std::vector<std::pair<int, int>>>(order.size()),
                        std::vector<ElementIndex>(vn, 0)};
  for (auto [a, b] : ctx.oriented_edges()) {
    int pa = position[static_cast<std::size_t>(a)];
    int pb = position[static_cast<std::size_t>(b)];
    if (pa < 0 && pb < 0) {
      // Both endpoints are roots, which cannot share an edge.
      continue;
    }
    if (pa < pb) {
      counter.back_edges[static_cast<std::size_t>(pb)].emplace_back(a, +1);
    } else {
      counter.back_edges[static_cast<std::size_t>(pa)].emplace_back(b, -1);
    }
  }
  std::uint64_t hits = counter.count(0);
  Integer image_size = 1;
  for (std::size_t k = 0; k < order.size(); ++k) image_size *= static_cast<unsigned long>(group.order());
  Rational out(Integer(static_cast<unsigned long>(hits)), image_size);
  out.canonicalize();
  return out;
}

std::complex<double> gamma_fourier(const EdgeSet& edges, const AllowedSet& allowed, Budget budget) {
  return gamma_fourier(CoboundaryContext(edges), allowed, budget);
}

std::complex<double> gamma_fourier(const CoboundaryContext& ctx, const AllowedSet& allowed, Budget budget) {
  const FiniteAbelianGroup& group = allowed.group();
  const std::size_t f = group.order();
  const std::size_t e = ctx.oriented_edges().size();
  const int beta = ctx.cyclomatic_number();
  check_budget("fourier", power_estimate(f, beta) * static_cast<double>(std::max<std::size_t>(e, 1)) +
                              static_cast<double>(f) * static_cast<double>(allowed.size()),
               budget);

  // Character sums S(p) = sum_{q in A} <p, q>.
  const auto elements = allowed.elements();
  std::vector<std::complex<double>> char_sum(f);
  for (ElementIndex p = 0; p < f; ++p) {
    std::complex<double> s = 0.0;
    for (ElementIndex q : elements) s += group.pairing(p, q);
    char_sum[p] = s;
  }

  // Per edge, the (cycle, sign) pairs contributing to its label.
  std::vector<std::vector<std::pair<std::size_t, int>>> terms(e);
  for (std::size_t i = 0; i < ctx.cycle_basis().size(); ++i) {
    for (std::size_t t = 0; t < e; ++t) {
      int z = ctx.cycle_basis()[i][t];
      if (z != 0) terms[t].emplace_back(i, z);
    }
  }

  std::vector<ElementIndex> coeff(static_cast<std::size_t>(beta), 0);
  std::complex<double> total = 0.0;
  while (true) {
    std::complex<double> term = 1.0;
    for (std::size_t t = 0; t < e; ++t) {
      ElementIndex label = 0;
      for (auto [i, z] : terms[t]) label = group.add(label, group.scale(coeff[i], z));
      term *= char_sum[label];
    }
    total += term;
    std::size_t pos = 0;
    while (pos < coeff.size() && ++coeff[pos] == f) coeff[pos++] = 0;
    if (pos == coeff.size()) break;
  }
  return total / std::pow(static_cast<double>(f), static_cast<double>(e));
}

std::string to_string(GammaMethod method) {
  switch (method) {
    case GammaMethod::automatic:
      return "auto";
    case GammaMethod::brute:
      return "brute";
    case GammaMethod::cycle:
      return "cycle";
  }
  return "?";
}

GammaVector gamma_vector(PosetPtr poset, const AllowedSet& allowed, GammaMethod method, Budget budget) {
  GammaVector out{poset, {}, method};
  out.values.reserve(poset->size());
  for (const EdgeSet& e : poset->members()) {
    out.values.push_back(method == GammaMethod::brute ? gamma_bruteforce(e, allowed, budget)
                                                      : gamma_cyclespace(e, allowed, budget));
  }
  if (method == GammaMethod::automatic) out.method = GammaMethod::cycle;
  return out;
}

std::vector<std::complex<double>> fourier_vector(PosetPtr poset, const AllowedSet& allowed, Budget budget) {
  std::vector<std::complex<double>> out;
  out.reserve(poset->size());
  for (const EdgeSet& e : poset->members()) out.push_back(gamma_fourier(e, allowed, budget));
  return out;
}

RationalVector gamma_plus(const PosetMatrix<long>& mobius, const RationalVector& gamma, const Rational& alpha) {
  const SubgraphPoset& poset = mobius.poset();
  if (gamma.size() != poset.size()) throw std::invalid_argument("gamma vector length differs from poset size");
  RationalVector out(poset.size());
  for (std::size_t h = 0; h < poset.size(); ++h) {
    int eh = poset[h].edge_count();
    for (std::size_t e : poset.down_set(h)) {
      out[h] += Rational(mobius.at(h, e)) * pow(alpha, eh - poset[e].edge_count()) * gamma[e];
    }
  }
  return out;
}

RationalVector gamma_plus(const GammaVector& gamma, const Rational& alpha) {
  return gamma_plus(mobius_values(gamma.poset), gamma.values, alpha);
}

RationalVector gamma_from_plus(const SubgraphPoset& poset, const RationalVector& plus, const Rational& alpha) {
  RationalVector out(poset.size());
  for (std::size_t h = 0; h < poset.size(); ++h) {
    int eh = poset[h].edge_count();
    for (std::size_t e : poset.down_set(h)) out[h] += pow(alpha, eh - poset[e].edge_count()) * plus[e];
  }
  return out;
}

std::size_t ReciprocityReport::agree_count() const {
  return static_cast<std::size_t>(std::count(agrees.begin(), agrees.end(), true));
}

ReciprocityReport verify_reciprocity(PosetPtr poset, const AllowedSet& allowed, GammaMethod method, Budget budget) {
  const AllowedSet complement = allowed.complement();
  const auto mobius = mobius_values(poset);
  ReciprocityReport report;
  report.alpha = allowed.density();
  report.gamma = gamma_vector(poset, allowed, method, budget);
  report.gamma_bar = gamma_vector(poset, complement, method, budget);
  report.lhs = gamma_plus(mobius, report.gamma.values, allowed.density());
  report.rhs = gamma_plus(mobius, report.gamma_bar.values, complement.density());
  for (std::size_t i = 0; i < poset->size(); ++i) {
    if ((*poset)[i].edge_count() % 2 != 0) report.rhs[i] = -report.rhs[i];
    report.agrees.push_back(report.lhs[i] == report.rhs[i]);
  }
  return report;
}

RationalVector apply_m(PosetPtr poset, const Rational& alpha_bar, const RationalVector& gamma_bar) {
  return apply_matrix(m_at(poset, alpha_bar), gamma_bar);
}

std::vector<RationalPoly> m_row(const SubgraphPoset& poset, const PosetMatrix<long>& mobius, std::size_t index) {
  // M(E, H) = sum_{H <= G <= E} (1-r)^{|E|-|G|} (-1)^{|G|} mu(H, G) r^{|G|-|H|}
  const int ee = poset[index].edge_count();
  const RationalPoly one_minus_r(std::vector<Rational>{Rational(1), Rational(-1)});
  std::vector<RationalPoly> row(poset.size());
  for (std::size_t g : poset.down_set(index)) {
    const int eg = poset[g].edge_count();
    RationalPoly left = one_minus_r.pow(static_cast<unsigned>(ee - eg));
    if (eg % 2 != 0) left = -left;
    for (std::size_t h : poset.down_set(g)) {
      long mu = mobius.at(g, h);
      if (mu == 0) continue;
      row[h] += left * RationalPoly::monomial(Rational(mu), eg - poset[h].edge_count());
    }
  }
  return row;
}

RationalPoly main_term_poly(PosetPtr poset, std::size_t index) {
  // Only mu(empty, G) enters the empty column, so avoid the full Moebius table.
  const SubgraphPoset& p = *poset;
  const auto& below = p.down_set(index);
  std::map<std::size_t, long> mu_from_empty;
  for (std::size_t g : below) {
    if (g == 0) {
      mu_from_empty[g] = 1;
      continue;
    }
    long sum = 0;
    for (std::size_t x : p.down_set(g)) {
      if (x != g) sum += mu_from_empty.at(x);
    }
    mu_from_empty[g] = -sum;
  }
  const int ee = p[index].edge_count();
  const RationalPoly one_minus_r(std::vector<Rational>{Rational(1), Rational(-1)});
  RationalPoly out;
  for (std::size_t g : below) {
    const int eg = p[g].edge_count();
    RationalPoly term = one_minus_r.pow(static_cast<unsigned>(ee - eg)) *
                        RationalPoly::monomial(Rational(eg % 2 == 0 ? mu_from_empty[g] : -mu_from_empty[g]), eg);
    out += term;
  }
  return out;
}

Rational main_term(PosetPtr poset, std::size_t index, const Rational& alpha_bar) {
  return main_term_poly(std::move(poset), index).evaluate(alpha_bar);
}

Rational residual(PosetPtr poset, std::size_t index, const AllowedSet& allowed, GammaMethod method, Budget budget) {
  const EdgeSet& e = (*poset)[index];
  Rational gamma = method == GammaMethod::brute ? gamma_bruteforce(e, allowed, budget) : gamma_cyclespace(e, allowed, budget);
  return gamma - main_term(poset, index, allowed.co_density());
}

RationalPoly chromatic_via_m(PosetPtr poset, std::size_t index) {
  const SubgraphPoset& p = *poset;
  const auto row = m_row(p, mobius_values(poset), index);
  // sum_H M(E,H)(1/f) f^{c(H)}: collect as a Laurent polynomial in f.
  std::map<int, Rational> laurent;
  for (std::size_t h = 0; h < p.size(); ++h) {
    if (row[h].is_zero()) continue;
    const int c = components(p[h]);
    for (int k = 0; k <= row[h].degree(); ++k) {
      Rational a = row[h].coefficient(k);
      if (a != 0) laurent[c - k] += a;
    }
  }
  std::vector<Rational> coeffs;
  for (const auto& [exp, a] : laurent) {
    if (a == 0) continue;
    if (exp < 0) throw std::logic_error("M-based chromatic polynomial has a negative power of f");
    if (!is_integer(a)) throw std::logic_error("M-based chromatic polynomial has a non-integer coefficient");
    if (coeffs.size() <= static_cast<std::size_t>(exp)) coeffs.resize(static_cast<std::size_t>(exp) + 1);
    coeffs[static_cast<std::size_t>(exp)] = a;
  }
  return RationalPoly(std::move(coeffs));
}

std::pair<Rational, Rational> hamming_k3_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("hamming closed form needs n >= 1");
  const Rational two_n = pow(Rational(2), -n);
  const Rational four_n = pow(Rational(4), -n);
  Rational bar = Rational(3 * n + 1) * four_n;
  Rational allowed = Rational(1) - Rational(3 * n + 3) * two_n + Rational(3L * n * n + 3L * n) * four_n;
  return {bar, allowed};
}

std::pair<Rational, Rational> interval_k3_closed_form(int f, int k) {
  if (f < 2 || k < 0 || 2 * k + 1 > f) throw std::invalid_argument("interval closed form needs 0 <= k, 2k+1 <= f");
  const Rational ab = ratio(2 * k + 1, f);
  const Rational inv_f2 = pow(Rational(f), -2);
  if (ab > ratio(2, 3)) return {Rational(1) - 3 * ab + 3 * ab * ab, Rational(0)};
  Rational bar = ratio(3, 4) * ab * ab + ratio(1, 4) * inv_f2;
  Rational allowed = Rational(1) - 3 * ab + ratio(9, 4) * ab * ab - ratio(1, 4) * inv_f2;
  return {bar, allowed};
}

}  // namespace colrec
