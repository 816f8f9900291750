#include "colrec/poset_matrix.hpp"

#include <string>

namespace colrec {

void check_matrix_size(const SubgraphPoset& poset) {
  if (poset.size() > kMaxMatrixPosetSize) {
    throw std::invalid_argument("poset has " + std::to_string(poset.size()) + " members; full matrices are limited to " +
                                std::to_string(kMaxMatrixPosetSize));
  }
}

PolyMatrix zeta_matrix(PosetPtr poset) {
  check_matrix_size(*poset);
  PolyMatrix out(poset);
  for (std::size_t h = 0; h < out.size(); ++h) {
    for (std::size_t e : poset->down_set(h)) out.at(h, e) = RationalPoly(1L);
  }
  return out;
}

PosetMatrix<long> mobius_values(PosetPtr poset) {
  check_matrix_size(*poset);
  const SubgraphPoset& p = *poset;
  PosetMatrix<long> mu(poset);
  // mu(E, H) = -sum_{E <= G < H} mu(E, G); the down set of H is in linear-extension order.
  for (std::size_t h = 0; h < p.size(); ++h) {
    const auto& below = p.down_set(h);
    for (std::size_t e : below) {
      if (e == h) {
        mu.at(h, e) = 1;
        continue;
      }
      long sum = 0;
      for (std::size_t g : below) {
        if (g != h && p.leq(e, g)) sum += mu.at(g, e);
      }
      mu.at(h, e) = -sum;
    }
  }
  return mu;
}

PolyMatrix mobius_matrix(PosetPtr poset) {
  auto mu = mobius_values(poset);
  PolyMatrix out(poset);
  for (std::size_t h = 0; h < out.size(); ++h) {
    for (std::size_t e : poset->down_set(h)) out.at(h, e) = RationalPoly(mu.at(h, e));
  }
  return out;
}

PolyMatrix sign_matrix(PosetPtr poset) {
  check_matrix_size(*poset);
  PolyMatrix out(poset);
  for (std::size_t i = 0; i < out.size(); ++i) out.at(i, i) = RationalPoly((*poset)[i].edge_count() % 2 == 0 ? 1L : -1L);
  return out;
}

PolyMatrix j_matrix(PosetPtr poset) {
  check_matrix_size(*poset);
  PolyMatrix out(poset);
  for (std::size_t h = 0; h < out.size(); ++h) {
    int eh = (*poset)[h].edge_count();
    for (std::size_t e : poset->down_set(h)) out.at(h, e) = RationalPoly::monomial(Rational(1), eh - (*poset)[e].edge_count());
  }
  return out;
}

PolyMatrix j_inverse_matrix(PosetPtr poset) {
  auto mu = mobius_values(poset);
  PolyMatrix out(poset);
  for (std::size_t h = 0; h < out.size(); ++h) {
    int eh = (*poset)[h].edge_count();
    for (std::size_t e : poset->down_set(h)) {
      out.at(h, e) = RationalPoly::monomial(Rational(mu.at(h, e)), eh - (*poset)[e].edge_count());
    }
  }
  return out;
}

PolyMatrix reflect(const PolyMatrix& m) {
  PolyMatrix out(m.poset_ptr());
  for (std::size_t h = 0; h < m.size(); ++h) {
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (!m.at(h, e).is_zero()) out.at(h, e) = m.at(h, e).compose_affine(Rational(1), Rational(-1));
    }
  }
  return out;
}

PolyMatrix m_matrix(PosetPtr poset) {
  PolyMatrix j_one_minus = reflect(j_matrix(poset));
  return multiply(multiply(j_one_minus, sign_matrix(poset)), j_inverse_matrix(poset));
}

RationalMatrix j_at(PosetPtr poset, const Rational& r) {
  check_matrix_size(*poset);
  RationalMatrix out(poset);
  for (std::size_t h = 0; h < out.size(); ++h) {
    int eh = (*poset)[h].edge_count();
    for (std::size_t e : poset->down_set(h)) out.at(h, e) = pow(r, eh - (*poset)[e].edge_count());
  }
  return out;
}

RationalMatrix j_inverse_at(PosetPtr poset, const Rational& r) {
  auto mu = mobius_values(poset);
  RationalMatrix out(poset);
  for (std::size_t h = 0; h < out.size(); ++h) {
    int eh = (*poset)[h].edge_count();
    for (std::size_t e : poset->down_set(h)) out.at(h, e) = Rational(mu.at(h, e)) * pow(r, eh - (*poset)[e].edge_count());
  }
  return out;
}

RationalMatrix m_at(PosetPtr poset, const Rational& r) {
  RationalMatrix left = j_at(poset, Rational(1) - r);
  for (std::size_t h = 0; h < left.size(); ++h) {
    for (std::size_t g = 0; g < left.size(); ++g) {
      if ((*poset)[g].edge_count() % 2 != 0) left.at(h, g) = -left.at(h, g);
    }
  }
  return multiply(left, j_inverse_at(poset, r));
}

RationalMatrix evaluate(const PolyMatrix& m, const Rational& r) {
  RationalMatrix out(m.poset_ptr());
  for (std::size_t h = 0; h < m.size(); ++h) {
    for (std::size_t e = 0; e < m.size(); ++e) out.at(h, e) = m.at(h, e).evaluate(r);
  }
  return out;
}

RationalVector apply_matrix(const RationalMatrix& m, const RationalVector& x) {
  if (x.size() != m.size()) throw std::invalid_argument("vector length differs from matrix size");
  RationalVector out(m.size());
  for (std::size_t h = 0; h < m.size(); ++h) {
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (m.at(h, e) != 0) out[h] += m.at(h, e) * x[e];
    }
  }
  return out;
}

std::vector<std::vector<std::optional<RationalPoly>>> block_summary(const PolyMatrix& m,
                                                                   const std::vector<IsoClass>& classes) {
  const SubgraphPoset& p = m.poset();
  std::vector<std::vector<std::optional<RationalPoly>>> out(classes.size(),
                                                            std::vector<std::optional<RationalPoly>>(classes.size()));
  for (std::size_t x = 0; x < classes.size(); ++x) {
    for (std::size_t y = 0; y < classes.size(); ++y) {
      std::optional<RationalPoly> value;
      bool uniform = true;
      for (std::size_t h : classes[x].members) {
        for (std::size_t e : classes[y].members) {
          const RationalPoly& entry = m.at(h, e);
          if (!p.leq(e, h)) {
            uniform = uniform && entry.is_zero();
            continue;
          }
          if (!value) value = entry;
          uniform = uniform && entry == *value;
        }
      }
      if (uniform) out[x][y] = value.value_or(RationalPoly{});
    }
  }
  return out;
}

}  // namespace colrec
