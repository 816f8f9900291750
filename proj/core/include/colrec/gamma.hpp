#pragma once

#include <colrec/graphs.hpp>
#include <colrec/groups.hpp>
#include <colrec/poset_matrix.hpp>

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colrec {

inline constexpr std::uint64_t kDefaultWorkBudget = 100'000'000;
inline constexpr double kFourierTolerance = 1e-9;

struct Budget {
  std::uint64_t work_units = kDefaultWorkBudget;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& method, double required, std::uint64_t budget);
  double required() const { return required_; }

 private:
  double required_;
};

/// Coboundary data for one edge set: edges oriented low -> high (or the
/// reverse when flipped), a BFS spanning forest with one root per component,
/// and the fundamental cycles of that forest as signed edge coefficients.
class CoboundaryContext {
 public:
  explicit CoboundaryContext(const EdgeSet& edges, bool flip_orientation = false);

  const EdgeSet& edges() const { return edges_; }
  /// (tail, head); the coboundary on edge t is X[head] - X[tail].
  const std::vector<std::pair<int, int>>& oriented_edges() const { return oriented_; }
  int component_count() const { return static_cast<int>(roots_.size()); }
  const std::vector<int>& roots() const { return roots_; }
  /// Non-root vertices in BFS order; each has its forest parent earlier.
  const std::vector<int>& search_order() const { return order_; }
  /// One circulation per non-tree edge, coefficients in {-1, 0, 1} per edge.
  const std::vector<std::vector<int>>& cycle_basis() const { return cycles_; }
  int cyclomatic_number() const { return static_cast<int>(cycles_.size()); }

  std::vector<ElementIndex> coboundary(const FiniteAbelianGroup& group, std::span<const ElementIndex> coloring) const;
  /// Signed sum at each vertex: incoming minus outgoing edge labels.
  std::vector<ElementIndex> boundary(const FiniteAbelianGroup& group, std::span<const ElementIndex> edge_labels) const;

 private:
  EdgeSet edges_;
  std::vector<std::pair<int, int>> oriented_;
  std::vector<int> roots_;
  std::vector<int> order_;
  std::vector<std::vector<int>> cycles_;
};

/// f^{-v} |{X in F^V : every edge difference lies in A}|, by enumerating F^V.
Rational gamma_bruteforce(const EdgeSet& edges, const AllowedSet& allowed, Budget budget = {});
/// f^{c-v} |A^E intersect Im(delta)|, enumerating Im(delta) with one root
/// colour fixed per component.
Rational gamma_cyclespace(const EdgeSet& edges, const AllowedSet& allowed, Budget budget = {});
/// Character double sum over the kernel of the boundary map, in floating point.
std::complex<double> gamma_fourier(const EdgeSet& edges, const AllowedSet& allowed, Budget budget = {});
/// Same, with the orientation reversed on every edge.
std::complex<double> gamma_fourier(const CoboundaryContext& context, const AllowedSet& allowed, Budget budget = {});

enum class GammaMethod { automatic, brute, cycle };

std::string to_string(GammaMethod method);

struct GammaVector {
  PosetPtr poset;
  RationalVector values;
  GammaMethod method = GammaMethod::automatic;
};

/// Gamma^A over every poset member. `automatic` picks the cheaper exact method.
GammaVector gamma_vector(PosetPtr poset, const AllowedSet& allowed, GammaMethod method = GammaMethod::automatic,
                         Budget budget = {});
std::vector<std::complex<double>> fourier_vector(PosetPtr poset, const AllowedSet& allowed, Budget budget = {});

/// J_alpha^{-1} gamma.
RationalVector gamma_plus(const PosetMatrix<long>& mobius, const RationalVector& gamma, const Rational& alpha);
RationalVector gamma_plus(const GammaVector& gamma, const Rational& alpha);
/// J_alpha gamma_plus (the inverse of gamma_plus).
RationalVector gamma_from_plus(const SubgraphPoset& poset, const RationalVector& plus, const Rational& alpha);

struct ReciprocityReport {
  Rational alpha;
  GammaVector gamma;            // Gamma^A
  GammaVector gamma_bar;        // Gamma^{complement of A}
  RationalVector lhs;           // J_alpha^{-1} Gamma^A
  RationalVector rhs;           // (-1)^e J_{1-alpha}^{-1} Gamma^{complement}
  std::vector<bool> agrees;

  std::size_t agree_count() const;
  bool passed() const { return agree_count() == agrees.size(); }
};

ReciprocityReport verify_reciprocity(PosetPtr poset, const AllowedSet& allowed,
                                     GammaMethod method = GammaMethod::automatic, Budget budget = {});

/// M_{alpha_bar} gamma_bar, i.e. Gamma^A recovered from the complement.
RationalVector apply_m(PosetPtr poset, const Rational& alpha_bar, const RationalVector& gamma_bar);

/// Row `index` of M_r as polynomials in r, without building the full matrix.
std::vector<RationalPoly> m_row(const SubgraphPoset& poset, const PosetMatrix<long>& mobius, std::size_t index);

/// [M_{alpha_bar}] at (E, empty), symbolic and evaluated.
RationalPoly main_term_poly(PosetPtr poset, std::size_t index);
Rational main_term(PosetPtr poset, std::size_t index, const Rational& alpha_bar);
/// Gamma^A_E minus the main term.
Rational residual(PosetPtr poset, std::size_t index, const AllowedSet& allowed,
                  GammaMethod method = GammaMethod::automatic, Budget budget = {});

/// Chromatic polynomial in f of poset member `index`, from M_{1/f} f^c.
/// Throws std::logic_error if the result is not an integer polynomial.
RationalPoly chromatic_via_m(PosetPtr poset, std::size_t index);

/// Printed closed forms for (Z/2)^n with k = 1 on a triangle:
/// ((3n+1) 4^{-n}, 1 - (3n+3) 2^{-n} + (3n^2+3n) 4^{-n}).
std::pair<Rational, Rational> hamming_k3_closed_form(int n);
/// Printed piecewise forms for Z/f with the interval set of parameter k on a
/// triangle: (Gamma^{complement}, Gamma^A).
std::pair<Rational, Rational> interval_k3_closed_form(int f, int k);

}  // namespace colrec
