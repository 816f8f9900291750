#pragma once

#include <colrec/graphs.hpp>
#include <colrec/poly.hpp>
#include <colrec/rational.hpp>

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace colrec {

using PosetPtr = std::shared_ptr<const SubgraphPoset>;
using RationalVector = std::vector<Rational>;

inline bool is_zero_entry(const Rational& x) { return x == 0; }
inline bool is_zero_entry(const RationalPoly& p) { return p.is_zero(); }

/// Square matrix indexed by poset members. Acts on coordinate vectors by
/// [M x]_H = sum_E at(H, E) x_E.
template <class T>
class PosetMatrix {
 public:
  explicit PosetMatrix(PosetPtr poset) : poset_(std::move(poset)), n_(poset_->size()), entries_(n_ * n_) {}

  std::size_t size() const { return n_; }
  const SubgraphPoset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }

  T& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const T& at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

  friend bool operator==(const PosetMatrix& a, const PosetMatrix& b) {
    return a.poset_ == b.poset_ && a.entries_ == b.entries_;
  }

 private:
  PosetPtr poset_;
  std::size_t n_;
  std::vector<T> entries_;
};

using PolyMatrix = PosetMatrix<RationalPoly>;
using RationalMatrix = PosetMatrix<Rational>;

/// Largest poset for which full matrices are built.
inline constexpr std::size_t kMaxMatrixPosetSize = 4000;

void check_matrix_size(const SubgraphPoset& poset);

/// Containment indicator j: at(H, E) = 1 iff E is a subset of H.
PolyMatrix zeta_matrix(PosetPtr poset);
/// Exact inverse of j, built by the Moebius recursion; integer entries mu(E, H).
PolyMatrix mobius_matrix(PosetPtr poset);
/// mu(E, H) as integers, at(H, E) layout.
PosetMatrix<long> mobius_values(PosetPtr poset);
/// Diagonal (-1)^{|E|}.
PolyMatrix sign_matrix(PosetPtr poset);
/// J_r = r^e j r^{-e}: at(H, E) = r^{|H|-|E|} when E is a subset of H.
PolyMatrix j_matrix(PosetPtr poset);
/// J_r^{-1}: at(H, E) = mu(E, H) r^{|H|-|E|}.
PolyMatrix j_inverse_matrix(PosetPtr poset);
/// M_r = J_{1-r} (-1)^e J_r^{-1}, as exact polynomial products.
PolyMatrix m_matrix(PosetPtr poset);

/// Evaluated forms, built directly in rational arithmetic.
RationalMatrix j_at(PosetPtr poset, const Rational& r);
RationalMatrix j_inverse_at(PosetPtr poset, const Rational& r);
RationalMatrix m_at(PosetPtr poset, const Rational& r);

RationalMatrix evaluate(const PolyMatrix& m, const Rational& r);
/// Entrywise p(r) -> p(1 - r).
PolyMatrix reflect(const PolyMatrix& m);

template <class T>
PosetMatrix<T> identity_like(const PosetMatrix<T>& like) {
  PosetMatrix<T> out(like.poset_ptr());
  for (std::size_t i = 0; i < out.size(); ++i) out.at(i, i) = T(1);
  return out;
}

template <class T>
bool is_identity(const PosetMatrix<T>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j ? !(m.at(i, j) == T(1)) : !is_zero_entry(m.at(i, j))) return false;
    }
  }
  return true;
}

/// Product that skips zero entries; cheap for the triangular matrices here.
template <class T>
PosetMatrix<T> multiply(const PosetMatrix<T>& a, const PosetMatrix<T>& b) {
  if (a.poset_ptr() != b.poset_ptr()) throw std::invalid_argument("matrices are indexed by different posets");
  const std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> b_rows(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t e = 0; e < n; ++e) {
      if (!is_zero_entry(b.at(g, e))) b_rows[g].push_back(e);
    }
  }
  PosetMatrix<T> out(a.poset_ptr());
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t g = 0; g < n; ++g) {
      const T& left = a.at(h, g);
      if (is_zero_entry(left)) continue;
      for (std::size_t e : b_rows[g]) out.at(h, e) += left * b.at(g, e);
    }
  }
  return out;
}

RationalVector apply_matrix(const RationalMatrix& m, const RationalVector& x);

/// For each pair of iso classes (row class X, column class Y): the polynomial
/// p with at(H, E) = p [E subset of H] for all H in X, E in Y, or nullopt
/// when the block has no such form.
std::vector<std::vector<std::optional<RationalPoly>>> block_summary(const PolyMatrix& m,
                                                                   const std::vector<IsoClass>& classes);

}  // namespace colrec
