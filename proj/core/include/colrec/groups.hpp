#pragma once

#include <colrec/rational.hpp>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace colrec {

/// Elements are addressed by their mixed-radix index (most significant factor
/// first); index 0 is the identity.
using ElementIndex = std::uint32_t;

inline constexpr std::size_t kDefaultMaxGroupOrder = 4096;

/// Residue tuple r_i in [0, n_i).
struct GroupElement {
  std::vector<int> residues;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Pontryagin dual element, represented by the same kind of residue tuple.
/// The pairing is <p, q> = exp(2 pi i sum_i p_i q_i / n_i).
struct Character {
  std::vector<int> residues;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Z/n_1 x ... x Z/n_k with every n_i >= 2.
class FiniteAbelianGroup {
 public:
  /// Throws std::invalid_argument for an empty list, any order < 2, or a
  /// group order above max_order.
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders, std::size_t max_order = kDefaultMaxGroupOrder);

  const std::vector<int>& cyclic_orders() const { return orders_; }
  std::size_t order() const { return order_; }
  std::size_t rank() const { return orders_.size(); }
  bool is_cyclic() const { return orders_.size() == 1; }
  /// True for (Z/2)^n.
  bool is_elementary_2_group() const;

  ElementIndex add(ElementIndex a, ElementIndex b) const;
  ElementIndex sub(ElementIndex a, ElementIndex b) const;
  ElementIndex neg(ElementIndex a) const;
  /// Multiply by an integer (used for signed cycle coefficients).
  ElementIndex scale(ElementIndex a, int k) const;

  GroupElement element(ElementIndex i) const;
  ElementIndex index_of(const GroupElement& x) const;
  int residue(ElementIndex i, std::size_t factor) const { return digits_[i * orders_.size() + factor]; }

  /// Pairing of character index p with element index q.
  std::complex<double> pairing(ElementIndex p, ElementIndex q) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<int> orders_;
  std::size_t order_ = 1;
  std::vector<int> digits_;  // order_ x rank, row-major
};

FiniteAbelianGroup make_group(std::vector<int> cyclic_orders, std::size_t max_order = kDefaultMaxGroupOrder);

/// Raised by allowed_explicit when A != -A.
class AsymmetricSetError : public std::invalid_argument {
 public:
  AsymmetricSetError(ElementIndex present, ElementIndex missing_negative);
  ElementIndex present() const { return present_; }
  ElementIndex missing_negative() const { return missing_; }

 private:
  ElementIndex present_;
  ElementIndex missing_;
};

/// A symmetric subset A = -A of a group, the allowed edge differences.
class AllowedSet {
 public:
  /// Validates symmetry; throws AsymmetricSetError.
  AllowedSet(FiniteAbelianGroup group, std::vector<bool> membership);

  const FiniteAbelianGroup& group() const { return group_; }
  bool contains(ElementIndex x) const { return member_[x]; }
  std::size_t size() const { return size_; }
  /// alpha = |A| / f.
  const Rational& density() const { return density_; }
  /// 1 - alpha, the density of the complement.
  Rational co_density() const { return Rational(1) - density_; }
  AllowedSet complement() const;
  std::vector<ElementIndex> elements() const;
  const std::vector<bool>& membership() const { return member_; }

  friend bool operator==(const AllowedSet& a, const AllowedSet& b) {
    return a.group_ == b.group_ && a.member_ == b.member_;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<bool> member_;
  std::size_t size_ = 0;
  Rational density_;
};

/// A = {x : k < x < f - k} in Z/f; the complement is the 2k+1 elements nearest 0.
AllowedSet allowed_interval(const FiniteAbelianGroup& group, int k);
/// A = elements of (Z/2)^n with Hamming weight > k.
AllowedSet allowed_hamming(int n, int k, std::size_t max_order = kDefaultMaxGroupOrder);
/// A = F - {0}; corresponds to proper colorings.
AllowedSet allowed_complement_identity(const FiniteAbelianGroup& group);
AllowedSet allowed_explicit(const FiniteAbelianGroup& group, std::span<const ElementIndex> elements);
AllowedSet allowed_all(const FiniteAbelianGroup& group);
AllowedSet allowed_none(const FiniteAbelianGroup& group);

/// <p, q>; throws std::invalid_argument if either tuple does not fit the group.
std::complex<double> pairing(const FiniteAbelianGroup& group, const Character& p, const GroupElement& q);

}  // namespace colrec
