#include "colrec/graphs.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace colrec {

int pair_count(int v) { return v * (v - 1) / 2; }

int edge_index(int v, int i, int j) {
  if (i == j) throw std::invalid_argument("loops are not edges");
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= v) throw std::out_of_range("vertex out of range");
  return i * (2 * v - i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> edge_endpoints(int v, int index) {
  for (int i = 0; i < v; ++i) {
    int row = v - i - 1;
    if (index < row) return {i, i + 1 + index};
    index -= row;
  }
  throw std::out_of_range("edge index out of range");
}

EdgeSet::EdgeSet(int v, EdgeMask bits) : v_(v), bits_(bits) {
  if (v < 1 || v > kMaxVertices) throw std::invalid_argument("vertex count must be in [1, 11]");
  int pairs = pair_count(v);
  if (pairs < 64 && (bits >> pairs) != 0) throw std::invalid_argument("edge mask has bits beyond C(v,2)");
}

EdgeSet EdgeSet::from_pairs(int v, const std::vector<std::pair<int, int>>& pairs) {
  EdgeMask bits = 0;
  for (auto [i, j] : pairs) bits |= EdgeMask{1} << edge_index(v, i, j);
  return EdgeSet(v, bits);
}

EdgeSet EdgeSet::complete(int v) {
  int pairs = pair_count(v);
  return EdgeSet(v, pairs == 64 ? ~EdgeMask{0} : (EdgeMask{1} << pairs) - 1);
}

int EdgeSet::edge_count() const { return std::popcount(bits_); }

bool EdgeSet::has_edge(int i, int j) const { return (bits_ >> edge_index(v_, i, j)) & 1U; }

std::vector<std::pair<int, int>> EdgeSet::edges() const {
  std::vector<std::pair<int, int>> out;
  for (EdgeMask b = bits_; b != 0; b &= b - 1) out.push_back(edge_endpoints(v_, std::countr_zero(b)));
  return out;
}

std::vector<std::uint32_t> EdgeSet::adjacency() const {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(v_), 0);
  for (auto [i, j] : edges()) {
    adj[static_cast<std::size_t>(i)] |= 1U << j;
    adj[static_cast<std::size_t>(j)] |= 1U << i;
  }
  return adj;
}

int components(const EdgeSet& edges) {
  const auto adj = edges.adjacency();
  const int v = edges.vertex_count();
  std::uint32_t seen = 0;
  int count = 0;
  for (int s = 0; s < v; ++s) {
    if (seen & (1U << s)) continue;
    ++count;
    std::uint32_t frontier = 1U << s;
    seen |= frontier;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      seen |= frontier;
    }
  }
  return count;
}

namespace {

// Low-link DFS; returns true as soon as a bridge is found.
bool has_bridge_from(int u, int parent, const std::vector<std::uint32_t>& adj, std::vector<int>& order,
                     std::vector<int>& low, int& clock) {
  order[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = clock++;
  for (std::uint32_t nb = adj[static_cast<std::size_t>(u)]; nb != 0; nb &= nb - 1) {
    int w = std::countr_zero(nb);
    if (w == parent) continue;  // simple graph: at most one parent edge
    auto wi = static_cast<std::size_t>(w);
    auto ui = static_cast<std::size_t>(u);
    if (order[wi] < 0) {
      if (has_bridge_from(w, u, adj, order, low, clock)) return true;
      low[ui] = std::min(low[ui], low[wi]);
      if (low[wi] > order[ui]) return true;
    } else {
      low[ui] = std::min(low[ui], order[wi]);
    }
  }
  return false;
}

}  // namespace

bool is_isthmus_free(const EdgeSet& edges) {
  const auto adj = edges.adjacency();
  const int v = edges.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(v), -1);
  std::vector<int> low(static_cast<std::size_t>(v), 0);
  int clock = 0;
  for (int s = 0; s < v; ++s) {
    if (order[static_cast<std::size_t>(s)] < 0 && has_bridge_from(s, -1, adj, order, low, clock)) return false;
  }
  return true;
}

std::optional<int> girth(const EdgeSet& edges) {
  const auto adj = edges.adjacency();
  const int v = edges.vertex_count();
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < v; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(v), -1);
    std::vector<int> parent(static_cast<std::size_t>(v), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (std::uint32_t nb = adj[static_cast<std::size_t>(u)]; nb != 0; nb &= nb - 1) {
        int w = std::countr_zero(nb);
        auto wi = static_cast<std::size_t>(w);
        auto ui = static_cast<std::size_t>(u);
        if (dist[wi] < 0) {
          dist[wi] = dist[ui] + 1;
          parent[wi] = u;
          q.push(w);
        } else if (parent[ui] != w) {
          best = std::min(best, dist[ui] + dist[wi] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

int to_int(std::string_view s, std::string_view whole) {
  s = strip(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "' in edge set '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

EdgeSet parse_edge_set(std::string_view text) {
  std::optional<int> v;
  std::optional<EdgeMask> mask;
  std::vector<std::pair<int, int>> pairs;
  bool have_edges = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto field = strip(text.substr(start, end - start));
    start = end + 1;
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value in '" + std::string(text) + "'");
    auto key = strip(field.substr(0, eq));
    auto value = strip(field.substr(eq + 1));
    if (key == "v") {
      v = to_int(value, text);
    } else if (key == "mask") {
      int base = 10;
      if (value.starts_with("0b")) {
        base = 2;
        value.remove_prefix(2);
      } else if (value.starts_with("0x")) {
        base = 16;
        value.remove_prefix(2);
      }
      EdgeMask m = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), m, base);
      if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
        throw std::invalid_argument("bad mask in '" + std::string(text) + "'");
      }
      mask = m;
    } else if (key == "edges") {
      have_edges = true;
      std::size_t s = 0;
      while (s <= value.size() && !value.empty()) {
        auto e = value.find(',', s);
        if (e == std::string_view::npos) e = value.size();
        auto tok = strip(value.substr(s, e - s));
        s = e + 1;
        if (tok.empty()) continue;
        auto dash = tok.find('-');
        if (dash != std::string_view::npos) {
          pairs.emplace_back(to_int(tok.substr(0, dash), text), to_int(tok.substr(dash + 1), text));
        } else if (tok.size() == 2) {
          pairs.emplace_back(tok[0] - '0', tok[1] - '0');
        } else {
          throw std::invalid_argument("edge token '" + std::string(tok) + "' must be two digits or i-j");
        }
      }
    } else {
      throw std::invalid_argument("unknown key '" + std::string(key) + "' in edge set");
    }
  }
  if (!v) throw std::invalid_argument("edge set needs v=<count>");
  if (mask && have_edges) throw std::invalid_argument("give either mask= or edges=, not both");
  if (mask) return EdgeSet(*v, *mask);
  return EdgeSet::from_pairs(*v, pairs);
}

std::string format_edges(const EdgeSet& edges) {
  std::string out = "v=" + std::to_string(edges.vertex_count()) + ";edges=";
  bool wide = edges.vertex_count() > 10;
  bool first = true;
  for (auto [i, j] : edges.edges()) {
    if (!first) out += ",";
    first = false;
    out += wide ? std::to_string(i) + "-" + std::to_string(j) : std::to_string(i) + std::to_string(j);
  }
  return out;
}

std::string format_mask(const EdgeSet& edges) {
  int pairs = pair_count(edges.vertex_count());
  std::string out = "v=" + std::to_string(edges.vertex_count()) + ";mask=0b";
  for (int k = pairs - 1; k >= 0; --k) out += ((edges.mask() >> k) & 1U) ? '1' : '0';
  return out;
}

SubgraphPoset::SubgraphPoset(int v, std::vector<EdgeSet> members) : v_(v), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), [](const EdgeSet& a, const EdgeSet& b) {
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return a.mask() < b.mask();
  });
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].vertex_count() != v) throw std::invalid_argument("poset member has the wrong vertex count");
    index_.emplace(members_[i].mask(), i);
  }
}

const std::vector<std::size_t>& SubgraphPoset::down_set(std::size_t i) const {
  std::call_once(down_->once, [this] {
    down_->sets.resize(members_.size());
    for (std::size_t h = 0; h < members_.size(); ++h) {
      for (std::size_t e = 0; e <= h; ++e) {
        if (members_[e].is_subset_of(members_[h])) down_->sets[h].push_back(e);
      }
    }
  });
  return down_->sets.at(i);
}

std::optional<std::size_t> SubgraphPoset::index_of(EdgeMask mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgraphPoset enumerate_poset(int v, int max_v) {
  max_v = std::min(max_v, kMaxPosetVertices);
  if (v < 2 || v > max_v) {
    throw std::invalid_argument("poset vertex count " + std::to_string(v) + " outside [2, " + std::to_string(max_v) + "]");
  }
  const EdgeMask limit = EdgeMask{1} << pair_count(v);
  std::vector<EdgeSet> members;
  for (EdgeMask m = 0; m < limit; ++m) {
    EdgeSet e(v, m);
    if (is_isthmus_free(e)) members.push_back(e);
  }
  return SubgraphPoset(v, std::move(members));
}

namespace {

std::vector<std::vector<int>> edge_permutations(int v) {
  std::vector<int> perm(static_cast<std::size_t>(v));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> maps;
  do {
    std::vector<int> edge_map(static_cast<std::size_t>(pair_count(v)));
    for (int k = 0; k < pair_count(v); ++k) {
      auto [i, j] = edge_endpoints(v, k);
      edge_map[static_cast<std::size_t>(k)] = edge_index(v, perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    maps.push_back(std::move(edge_map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

EdgeMask apply_edge_map(EdgeMask bits, const std::vector<int>& edge_map) {
  EdgeMask out = 0;
  for (EdgeMask b = bits; b != 0; b &= b - 1) out |= EdgeMask{1} << edge_map[static_cast<std::size_t>(std::countr_zero(b))];
  return out;
}

EdgeMask canonical_with(const EdgeSet& edges, const std::vector<std::vector<int>>& maps) {
  EdgeMask best = edges.mask();
  for (const auto& m : maps) best = std::min(best, apply_edge_map(edges.mask(), m));
  return best;
}

}  // namespace

EdgeMask canonical_form(const EdgeSet& edges) {
  if (edges.vertex_count() > 8) throw std::invalid_argument("canonical form is limited to v <= 8");
  return canonical_with(edges, edge_permutations(edges.vertex_count()));
}

std::string iso_label(const EdgeSet& edges) {
  if (edges.edge_count() == 0) return "empty";
  const auto adj = edges.adjacency();
  const int v = edges.vertex_count();
  std::vector<std::string> parts;
  std::uint32_t seen = 0;
  for (int s = 0; s < v; ++s) {
    if ((seen >> s) & 1U || adj[static_cast<std::size_t>(s)] == 0) continue;
    std::uint32_t comp = 1U << s;
    std::uint32_t frontier = comp;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    int n = std::popcount(comp);
    int m = 0;
    bool two_regular = true;
    std::vector<std::pair<int, int>> local;
    std::vector<int> relabel(static_cast<std::size_t>(v), -1);
    int next_label = 0;
    for (std::uint32_t c = comp; c != 0; c &= c - 1) relabel[static_cast<std::size_t>(std::countr_zero(c))] = next_label++;
    for (std::uint32_t c = comp; c != 0; c &= c - 1) {
      int u = std::countr_zero(c);
      int deg = std::popcount(adj[static_cast<std::size_t>(u)]);
      m += deg;
      two_regular = two_regular && deg == 2;
      for (std::uint32_t nb = adj[static_cast<std::size_t>(u)]; nb != 0; nb &= nb - 1) {
        int w = std::countr_zero(nb);
        if (u < w) local.emplace_back(relabel[static_cast<std::size_t>(u)], relabel[static_cast<std::size_t>(w)]);
      }
    }
    m /= 2;
    std::string name;
    if (m == pair_count(n)) {
      name = "K" + std::to_string(n);
    } else if (n >= 4 && m == pair_count(n) - 1) {
      name = "K" + std::to_string(n) + "-e";
    } else if (two_regular) {
      name = "C" + std::to_string(n);
    } else {
      EdgeSet sub = EdgeSet::from_pairs(n, local);
      name = "G" + std::to_string(n) + "." + std::to_string(m) + "#" + std::to_string(canonical_form(sub));
    }
    parts.push_back(std::move(name));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "+") + p;
  return out;
}

std::vector<IsoClass> iso_class_blocks(const SubgraphPoset& poset) {
  const auto maps = edge_permutations(poset.vertex_count());
  std::vector<IsoClass> classes;
  std::map<EdgeMask, std::size_t> by_canonical;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    EdgeMask canon = canonical_with(poset[i], maps);
    auto [it, inserted] = by_canonical.emplace(canon, classes.size());
    if (inserted) classes.push_back(IsoClass{iso_label(poset[i]), canon, {}});
    classes[it->second].members.push_back(i);
  }
  return classes;
}

ClassIncidence class_incidence(const SubgraphPoset& poset, const std::vector<IsoClass>& classes) {
  const std::size_t k = classes.size();
  ClassIncidence out{std::vector<std::vector<long>>(k, std::vector<long>(k, 0)),
                     std::vector<std::vector<long>>(k, std::vector<long>(k, 0))};
  auto uniform_count = [&](const IsoClass& fixed, const IsoClass& other, bool fixed_is_upper) {
    long expected = -2;
    for (std::size_t a : fixed.members) {
      long n = 0;
      for (std::size_t b : other.members) n += fixed_is_upper ? poset.leq(b, a) : poset.leq(a, b);
      if (expected == -2) expected = n;
      if (n != expected) return -1L;
    }
    return expected;
  };
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      out.down[x][y] = uniform_count(classes[x], classes[y], true);
      out.up[x][y] = uniform_count(classes[y], classes[x], false);
    }
  }
  return out;
}

namespace {

// Deletion-contraction over the vertices in `alive`.
RationalPoly chromatic_rec(std::uint32_t alive, std::vector<std::uint32_t> adj) {
  int u = -1;
  for (std::uint32_t a = alive; a != 0; a &= a - 1) {
    int x = std::countr_zero(a);
    if (adj[static_cast<std::size_t>(x)] != 0) {
      u = x;
      break;
    }
  }
  if (u < 0) return RationalPoly::monomial(Rational(1), std::popcount(alive));
  int w = std::countr_zero(adj[static_cast<std::size_t>(u)]);
  auto ui = static_cast<std::size_t>(u);
  auto wi = static_cast<std::size_t>(w);

  std::vector<std::uint32_t> deleted = adj;
  deleted[ui] &= ~(1U << w);
  deleted[wi] &= ~(1U << u);

  // Contract w into u: parallel edges collapse, the u-w edge disappears.
  std::vector<std::uint32_t> contracted = deleted;
  std::uint32_t moved = contracted[wi];
  contracted[ui] |= moved;
  for (std::uint32_t nb = moved; nb != 0; nb &= nb - 1) {
    auto x = static_cast<std::size_t>(std::countr_zero(nb));
    contracted[x] &= ~(1U << w);
    contracted[x] |= 1U << u;
  }
  contracted[wi] = 0;

  return chromatic_rec(alive, std::move(deleted)) - chromatic_rec(alive & ~(1U << w), std::move(contracted));
}

}  // namespace

RationalPoly chromatic_oracle(const EdgeSet& edges) {
  const std::uint32_t alive = (1U << edges.vertex_count()) - 1;
  return chromatic_rec(alive, edges.adjacency());
}

}  // namespace colrec
