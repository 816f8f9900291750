#pragma once

#include <colrec/poly.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace colrec {

/// Bit k set means the k-th unordered pair in lexicographic (i, j), i < j order.
using EdgeMask = std::uint64_t;

inline constexpr int kMaxVertices = 11;         // C(11,2) = 55 edge bits
inline constexpr int kDefaultPosetVertexCap = 6;
inline constexpr int kMaxPosetVertices = 7;     // 2^21 subsets

int pair_count(int v);
/// Index of {i, j} in the lexicographic pair order; requires i != j.
int edge_index(int v, int i, int j);
std::pair<int, int> edge_endpoints(int v, int index);

/// Edge set on the fixed vertex set {0, ..., v-1}.
class EdgeSet {
 public:
  EdgeSet(int v, EdgeMask bits);
  static EdgeSet from_pairs(int v, const std::vector<std::pair<int, int>>& pairs);
  static EdgeSet complete(int v);

  int vertex_count() const { return v_; }
  EdgeMask mask() const { return bits_; }
  int edge_count() const;
  bool has_edge(int i, int j) const;
  bool is_subset_of(const EdgeSet& other) const { return (bits_ & ~other.bits_) == 0; }
  EdgeSet without_edge(int index) const { return EdgeSet(v_, bits_ & ~(EdgeMask{1} << index)); }
  /// Edges in increasing index order, each oriented low -> high.
  std::vector<std::pair<int, int>> edges() const;
  /// Neighbour bitmask per vertex.
  std::vector<std::uint32_t> adjacency() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  int v_;
  EdgeMask bits_;
};

/// c(E), counting isolated vertices.
int components(const EdgeSet& edges);
/// True iff no edge is a bridge.
bool is_isthmus_free(const EdgeSet& edges);
/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const EdgeSet& edges);

/// "v=4;edges=01,02,12" (vertex pairs as two digits or "i-j") or
/// "v=4;mask=0b000111" (also decimal or 0x hex). Throws std::invalid_argument.
EdgeSet parse_edge_set(std::string_view text);
std::string format_edges(const EdgeSet& edges);
/// Binary mask with exactly C(v,2) digits, most significant edge first.
std::string format_mask(const EdgeSet& edges);

/// All isthmus-free edge sets on v labelled vertices, ordered by edge count
/// then mask value. This order is a linear extension of inclusion.
class SubgraphPoset {
 public:
  SubgraphPoset(int v, std::vector<EdgeSet> members);

  int vertex_count() const { return v_; }
  std::size_t size() const { return members_.size(); }
  const EdgeSet& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<EdgeSet>& members() const { return members_; }
  std::optional<std::size_t> index_of(EdgeMask mask) const;
  /// Member i is contained in member j.
  bool leq(std::size_t i, std::size_t j) const { return members_[i].is_subset_of(members_[j]); }
  /// Indices of members contained in member i, ascending. The first call
  /// builds every down set, quadratic in size().
  const std::vector<std::size_t>& down_set(std::size_t i) const;

 private:
  int v_;
  std::vector<EdgeSet> members_;
  std::unordered_map<EdgeMask, std::size_t> index_;
  struct DownCache {
    std::once_flag once;
    std::vector<std::vector<std::size_t>> sets;
  };
  std::shared_ptr<DownCache> down_ = std::make_shared<DownCache>();
};

/// Throws std::invalid_argument when v is outside [2, max_v].
SubgraphPoset enumerate_poset(int v, int max_v = kDefaultPosetVertexCap);

/// Minimum mask over all vertex relabellings.
EdgeMask canonical_form(const EdgeSet& edges);

struct IsoClass {
  std::string label;
  EdgeMask canonical = 0;
  std::vector<std::size_t> members;  // poset indices, ascending
};

/// Isomorphism classes of poset members, ordered by their first member.
std::vector<IsoClass> iso_class_blocks(const SubgraphPoset& poset);

/// Name such as "empty", "K3", "C4", "K4-e", "K3+K3"; falls back to a
/// canonical-mask tag for other shapes.
std::string iso_label(const EdgeSet& edges);

/// Containment counts between classes: down[x][y] is the number of members
/// of class y contained in one member of class x (-1 if that number is not
/// the same for every member of x); up[x][y] is the number of members of x
/// containing one member of y (-1 if not uniform).
struct ClassIncidence {
  std::vector<std::vector<long>> down;
  std::vector<std::vector<long>> up;
};
ClassIncidence class_incidence(const SubgraphPoset& poset, const std::vector<IsoClass>& classes);

/// Chromatic polynomial in f by deletion-contraction, isolated vertices
/// included. Works for any edge set, bridges allowed.
RationalPoly chromatic_oracle(const EdgeSet& edges);

}  // namespace colrec
