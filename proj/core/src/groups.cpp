#include "colrec/groups.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace colrec {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders, std::size_t max_order)
    : orders_(std::move(cyclic_orders)) {
  if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  for (int n : orders_) {
    if (n < 2) throw std::invalid_argument("cyclic order " + std::to_string(n) + " is below 2");
    if (order_ * static_cast<std::size_t>(n) > max_order) {
      throw std::invalid_argument("group order exceeds cap of " + std::to_string(max_order));
    }
    order_ *= static_cast<std::size_t>(n);
  }
  const std::size_t k = orders_.size();
  digits_.resize(order_ * k);
  for (std::size_t i = 0; i < order_; ++i) {
    std::size_t rest = i;
    for (std::size_t f = k; f-- > 0;) {
      digits_[i * k + f] = static_cast<int>(rest % static_cast<std::size_t>(orders_[f]));
      rest /= static_cast<std::size_t>(orders_[f]);
    }
  }
}

bool FiniteAbelianGroup::is_elementary_2_group() const {
  for (int n : orders_) {
    if (n != 2) return false;
  }
  return true;
}

ElementIndex FiniteAbelianGroup::add(ElementIndex a, ElementIndex b) const {
  if (is_cyclic()) return static_cast<ElementIndex>((a + b) % order_);
  const std::size_t k = orders_.size();
  std::size_t idx = 0;
  for (std::size_t f = 0; f < k; ++f) {
    int s = digits_[a * k + f] + digits_[b * k + f];
    if (s >= orders_[f]) s -= orders_[f];
    idx = idx * static_cast<std::size_t>(orders_[f]) + static_cast<std::size_t>(s);
  }
  return static_cast<ElementIndex>(idx);
}

ElementIndex FiniteAbelianGroup::sub(ElementIndex a, ElementIndex b) const {
  if (is_cyclic()) return static_cast<ElementIndex>((a + order_ - b) % order_);
  const std::size_t k = orders_.size();
  std::size_t idx = 0;
  for (std::size_t f = 0; f < k; ++f) {
    int s = digits_[a * k + f] - digits_[b * k + f];
    if (s < 0) s += orders_[f];
    idx = idx * static_cast<std::size_t>(orders_[f]) + static_cast<std::size_t>(s);
  }
  return static_cast<ElementIndex>(idx);
}

ElementIndex FiniteAbelianGroup::neg(ElementIndex a) const { return sub(0, a); }

ElementIndex FiniteAbelianGroup::scale(ElementIndex a, int k) const {
  ElementIndex base = k < 0 ? neg(a) : a;
  ElementIndex acc = 0;
  for (int i = 0; i < std::abs(k); ++i) acc = add(acc, base);
  return acc;
}

GroupElement FiniteAbelianGroup::element(ElementIndex i) const {
  if (i >= order_) throw std::out_of_range("element index out of range");
  const std::size_t k = orders_.size();
  return GroupElement{std::vector<int>(digits_.begin() + static_cast<std::ptrdiff_t>(i * k),
                                       digits_.begin() + static_cast<std::ptrdiff_t>((i + 1) * k))};
}

ElementIndex FiniteAbelianGroup::index_of(const GroupElement& x) const {
  if (x.residues.size() != orders_.size()) throw std::invalid_argument("residue tuple has wrong length for group");
  std::size_t idx = 0;
  for (std::size_t f = 0; f < orders_.size(); ++f) {
    int r = x.residues[f];
    if (r < 0 || r >= orders_[f]) throw std::invalid_argument("residue out of range for group factor");
    idx = idx * static_cast<std::size_t>(orders_[f]) + static_cast<std::size_t>(r);
  }
  return static_cast<ElementIndex>(idx);
}

std::complex<double> FiniteAbelianGroup::pairing(ElementIndex p, ElementIndex q) const {
  const std::size_t k = orders_.size();
  // Phase in turns, reduced per factor to keep the argument small.
  double turns = 0.0;
  for (std::size_t f = 0; f < k; ++f) {
    long prod = static_cast<long>(digits_[p * k + f]) * digits_[q * k + f] % orders_[f];
    turns += static_cast<double>(prod) / orders_[f];
  }
  turns -= std::floor(turns);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

FiniteAbelianGroup make_group(std::vector<int> cyclic_orders, std::size_t max_order) {
  return FiniteAbelianGroup(std::move(cyclic_orders), max_order);
}

AsymmetricSetError::AsymmetricSetError(ElementIndex present, ElementIndex missing_negative)
    : std::invalid_argument("allowed set is not symmetric: " + std::to_string(present) + " is in A but its negative " +
                            std::to_string(missing_negative) + " is not"),
      present_(present),
      missing_(missing_negative) {}

AllowedSet::AllowedSet(FiniteAbelianGroup group, std::vector<bool> membership)
    : group_(std::move(group)), member_(std::move(membership)) {
  if (member_.size() != group_.order()) throw std::invalid_argument("membership vector length differs from group order");
  for (ElementIndex x = 0; x < member_.size(); ++x) {
    if (!member_[x]) continue;
    ElementIndex nx = group_.neg(x);
    if (!member_[nx]) throw AsymmetricSetError(x, nx);
    ++size_;
  }
  density_ = ratio(static_cast<long>(size_), static_cast<long>(group_.order()));
}

AllowedSet AllowedSet::complement() const {
  std::vector<bool> flipped(member_.size());
  for (std::size_t i = 0; i < member_.size(); ++i) flipped[i] = !member_[i];
  return AllowedSet(group_, std::move(flipped));
}

std::vector<ElementIndex> AllowedSet::elements() const {
  std::vector<ElementIndex> out;
  out.reserve(size_);
  for (ElementIndex x = 0; x < member_.size(); ++x) {
    if (member_[x]) out.push_back(x);
  }
  return out;
}

AllowedSet allowed_interval(const FiniteAbelianGroup& group, int k) {
  if (!group.is_cyclic()) throw std::invalid_argument("interval allowed set needs a cyclic group");
  const auto f = static_cast<long>(group.order());
  if (k < 0) throw std::invalid_argument("interval parameter k must be >= 0");
  if (2L * k + 1 > f) throw std::invalid_argument("interval parameter needs 2k+1 <= f");
  std::vector<bool> member(group.order(), false);
  for (long x = k + 1; x < f - k; ++x) member[static_cast<std::size_t>(x)] = true;
  return AllowedSet(group, std::move(member));
}

AllowedSet allowed_hamming(int n, int k, std::size_t max_order) {
  if (n < 1) throw std::invalid_argument("hamming group needs n >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("hamming threshold needs 0 <= k <= n");
  FiniteAbelianGroup group(std::vector<int>(static_cast<std::size_t>(n), 2), max_order);
  std::vector<bool> member(group.order(), false);
  // With all factors of order 2 the mixed-radix index is the bit pattern.
  for (std::size_t x = 0; x < group.order(); ++x) member[x] = std::popcount(x) > k;
  return AllowedSet(std::move(group), std::move(member));
}

AllowedSet allowed_complement_identity(const FiniteAbelianGroup& group) {
  std::vector<bool> member(group.order(), true);
  member[0] = false;
  return AllowedSet(group, std::move(member));
}

AllowedSet allowed_explicit(const FiniteAbelianGroup& group, std::span<const ElementIndex> elements) {
  std::vector<bool> member(group.order(), false);
  for (ElementIndex x : elements) {
    if (x >= group.order()) throw std::invalid_argument("element " + std::to_string(x) + " is not in the group");
    member[x] = true;
  }
  return AllowedSet(group, std::move(member));
}

AllowedSet allowed_all(const FiniteAbelianGroup& group) {
  return AllowedSet(group, std::vector<bool>(group.order(), true));
}

AllowedSet allowed_none(const FiniteAbelianGroup& group) {
  return AllowedSet(group, std::vector<bool>(group.order(), false));
}

std::complex<double> pairing(const FiniteAbelianGroup& group, const Character& p, const GroupElement& q) {
  ElementIndex pi = group.index_of(GroupElement{p.residues});
  ElementIndex qi = group.index_of(q);
  return group.pairing(pi, qi);
}

}  // namespace colrec
