#include <colrec/gamma.hpp>
#include <colrec/group_spec.hpp>

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

namespace colrec {
namespace {

PosetPtr poset(int v) { return std::make_shared<const SubgraphPoset>(enumerate_poset(v)); }

EdgeSet k3() { return EdgeSet::from_pairs(3, {{0, 1}, {0, 2}, {1, 2}}); }
EdgeSet c4() { return EdgeSet::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

std::size_t idx(const PosetPtr& p, const EdgeSet& e) { return p->index_of(e.mask()).value(); }

AllowedSet spec(const char* group, const char* allowed) { return parse_allowed_spec(parse_group_spec(group), allowed); }

Rational oracle_gamma(const EdgeSet& e, const AllowedSet& a) {
  const auto& orders = a.group().cyclic_orders();
  const auto& g = a.group();
  auto count = oracle::count_colourings(e.vertex_count(), e.edges(), orders, [&](const std::vector<int>& d) {
    return a.contains(g.index_of(GroupElement{d}));
  });
  Integer total = 1;
  for (int i = 0; i < e.vertex_count(); ++i) total *= static_cast<unsigned long>(g.order());
  Rational out(Integer(static_cast<unsigned long>(count)), total);
  out.canonicalize();
  return out;
}

TEST(GammaBruteforce, Examples) {
  auto z5bar = spec("Z5", "interval:1").complement();
  EXPECT_EQ(gamma_bruteforce(EdgeSet(3, 0), z5bar), Rational(1));
  EXPECT_EQ(gamma_bruteforce(k3(), z5bar), ratio(7, 25));
  EXPECT_EQ(gamma_bruteforce(k3(), z5bar), oracle_gamma(k3(), z5bar));
  for (int f = 3; f <= 9; ++f) {
    auto nz = allowed_complement_identity(make_group({f}));
    EXPECT_EQ(gamma_bruteforce(k3(), nz), (Rational(1) - ratio(1, f)) * (Rational(1) - ratio(2, f)));
  }
}

TEST(GammaBruteforce, BudgetExceeded) {
  auto big = allowed_complement_identity(make_group({4096}));
  EXPECT_THROW(gamma_bruteforce(k3(), big), BudgetExceeded);
  EXPECT_THROW(gamma_bruteforce(k3(), spec("Z5", "nonzero"), Budget{100}), BudgetExceeded);
  EXPECT_NO_THROW(gamma_bruteforce(k3(), spec("Z5", "nonzero"), Budget{125}));
}

TEST(GammaCyclespace, Examples) {
  EXPECT_EQ(gamma_cyclespace(EdgeSet::complete(4), spec("Z2", "nonzero")), Rational(0));
  EXPECT_EQ(gamma_cyclespace(k3(), allowed_hamming(3, 1).complement()), ratio(10, 64));
  EXPECT_EQ(gamma_cyclespace(EdgeSet(4, 0), spec("Z2", "nonzero")), Rational(1));
  // Within budget where brute force is not.
  auto big = allowed_complement_identity(make_group({4096}));
  EXPECT_EQ(gamma_cyclespace(k3(), big), (Rational(1) - ratio(1, 4096)) * (Rational(1) - ratio(2, 4096)));
}

TEST(GammaFourier, Examples) {
  auto z5bar = spec("Z5", "interval:1").complement();
  EXPECT_NEAR(std::abs(gamma_fourier(EdgeSet(3, 0), z5bar) - 1.0), 0.0, 1e-12);
  auto z = gamma_fourier(k3(), z5bar);
  EXPECT_NEAR(z.real(), 0.28, kFourierTolerance);
  EXPECT_NEAR(z.imag(), 0.0, kFourierTolerance);
  auto w = gamma_fourier(c4(), spec("Z3", "nonzero"));
  EXPECT_NEAR(w.real(), 18.0 / 81.0, kFourierTolerance);
  EXPECT_NEAR(w.imag(), 0.0, kFourierTolerance);
}

TEST(Coboundary, ImageHasExpectedSize) {
  auto g = make_group({3});
  const auto p = enumerate_poset(4);
  for (const auto& e : p.members()) {
    CoboundaryContext ctx(e);
    std::set<std::vector<ElementIndex>> image;
    for (ElementIndex a = 0; a < 3; ++a)
      for (ElementIndex b = 0; b < 3; ++b)
        for (ElementIndex c = 0; c < 3; ++c)
          for (ElementIndex d = 0; d < 3; ++d) {
            std::vector<ElementIndex> x{a, b, c, d};
            image.insert(ctx.coboundary(g, x));
          }
    std::size_t expected = 1;
    for (int k = 0; k < 4 - components(e); ++k) expected *= 3;
    EXPECT_EQ(image.size(), expected);
    EXPECT_EQ(ctx.cyclomatic_number(), e.edge_count() - 4 + components(e));
  }
}

TEST(Coboundary, CycleBasisLiesInKernelOfBoundary) {
  auto g = make_group({7});
  const auto p = enumerate_poset(5);
  for (bool flip : {false, true}) {
    for (const auto& e : p.members()) {
      CoboundaryContext ctx(e, flip);
      for (const auto& z : ctx.cycle_basis()) {
        std::vector<ElementIndex> labels;
        for (int c : z) labels.push_back(g.scale(3, c));
        for (ElementIndex b : ctx.boundary(g, labels)) ASSERT_EQ(b, 0U) << format_edges(e);
      }
    }
  }
}

// The pairing adjoint: <P, delta X>_E = <boundary P, X>_V.
TEST(Coboundary, BoundaryIsAdjointOfCoboundary) {
  auto g = make_group({5});
  CoboundaryContext ctx(EdgeSet::complete(4));
  std::vector<ElementIndex> p{1, 4, 2, 0, 3, 3};
  std::vector<ElementIndex> x{2, 0, 4, 1};
  auto dx = ctx.coboundary(g, x);
  auto bp = ctx.boundary(g, p);
  std::complex<double> lhs = 1.0, rhs = 1.0;
  for (std::size_t t = 0; t < p.size(); ++t) lhs *= g.pairing(p[t], dx[t]);
  for (std::size_t u = 0; u < x.size(); ++u) rhs *= g.pairing(bp[u], x[u]);
  EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
}

struct GroupCase {
  const char* group;
  const char* allowed;
};

const std::vector<GroupCase> kCases{
    {"Z5", "interval:1"}, {"Z7", "interval:1"}, {"Z2^3", "hamming:1"}, {"Z6", "set:{0,3}"},
    {"Z3xZ3", "nonzero"}, {"Z4xZ2", "set:{(2,0),(1,1),(3,1)}"}, {"Z9", "interval:2"}, {"Z2", "nonzero"},
};

// Brute force, cycle space, and the character sum agree on every member of P_4.
TEST(GammaMethods, AgreeOnFourVertices) {
  auto p = poset(4);
  for (const auto& c : kCases) {
    auto a = spec(c.group, c.allowed);
    for (const auto& set : {a, a.complement()}) {
      for (const auto& e : p->members()) {
        Rational brute = gamma_bruteforce(e, set);
        ASSERT_EQ(brute, gamma_cyclespace(e, set)) << c.group << " " << c.allowed << " " << format_edges(e);
        auto z = gamma_fourier(e, set);
        ASSERT_NEAR(z.real(), brute.get_d(), kFourierTolerance);
        ASSERT_NEAR(z.imag(), 0.0, kFourierTolerance);
      }
    }
  }
}

TEST(GammaMethods, AgreeWithOracleCount) {
  auto p = poset(4);
  for (const auto& c : {kCases[0], kCases[2], kCases[5]}) {
    auto a = spec(c.group, c.allowed);
    for (const auto& e : p->members()) ASSERT_EQ(gamma_cyclespace(e, a), oracle_gamma(e, a));
  }
}

TEST(GammaMethods, LargerGroupsCycleVersusFourier) {
  auto p = poset(4);
  for (const auto& a : {spec("Z64", "interval:10"), spec("Z2^6", "hamming:2"), spec("Z8^2", "nonzero")}) {
    for (const auto& e : p->members()) {
      auto z = gamma_fourier(e, a);
      ASSERT_NEAR(z.real(), gamma_cyclespace(e, a).get_d(), kFourierTolerance);
      ASSERT_NEAR(z.imag(), 0.0, kFourierTolerance);
    }
  }
}

TEST(GammaFourier, OrientationIndependent) {
  auto a = spec("Z7", "interval:1");
  const auto p = enumerate_poset(4);
  for (const auto& e : p.members()) {
    auto fwd = gamma_fourier(CoboundaryContext(e, false), a);
    auto rev = gamma_fourier(CoboundaryContext(e, true), a);
    EXPECT_NEAR(std::abs(fwd - rev), 0.0, 1e-12);
  }
}

TEST(GammaVector, Extremes) {
  auto p = poset(4);
  auto g = make_group({5});
  for (auto v : gamma_vector(p, allowed_all(g)).values) EXPECT_EQ(v, Rational(1));
  auto none = gamma_vector(p, allowed_none(g)).values;
  for (std::size_t i = 0; i < none.size(); ++i) EXPECT_EQ(none[i], Rational(i == 0 ? 1 : 0));
}

TEST(GammaVector, CyclicIntervalThreeVertices) {
  auto p = poset(3);
  auto a = spec("Z5", "interval:1");
  EXPECT_EQ(gamma_vector(p, a.complement()).values, (RationalVector{Rational(1), ratio(7, 25)}));
  // alpha_bar = 3/5: 1 - 3(3/5) + (9/4)(9/25) - (1/4)(1/25) = 0. No triangle fits in {2, 3}.
  EXPECT_EQ(gamma_vector(p, a, GammaMethod::brute).values, (RationalVector{Rational(1), Rational(0)}));
  EXPECT_EQ(interval_k3_closed_form(5, 1).second, Rational(0));
}

// Gamma values are probabilities and the complement obeys the forest bound.
TEST(GammaVector, BoundsHold) {
  auto p = poset(4);
  for (const auto& c : kCases) {
    auto a = spec(c.group, c.allowed);
    for (const auto& set : {a, a.complement()}) {
      auto gamma = gamma_vector(p, set).values;
      EXPECT_EQ(gamma[0], Rational(1));
      for (std::size_t i = 0; i < p->size(); ++i) {
        EXPECT_GE(gamma[i], 0);
        EXPECT_LE(gamma[i], 1);
        EXPECT_LE(gamma[i], pow(set.density(), 4 - components((*p)[i])));
      }
    }
  }
}

TEST(GammaPlus, Examples) {
  auto p4 = poset(4);
  auto g = make_group({7});
  auto plus = gamma_plus(gamma_vector(p4, allowed_all(g)), Rational(1));
  for (std::size_t i = 0; i < plus.size(); ++i) EXPECT_EQ(plus[i], Rational(i == 0 ? 1 : 0));

  auto p3 = poset(3);
  auto a = spec("Z7", "interval:2");
  auto gv = gamma_vector(p3, a);
  auto plus3 = gamma_plus(gv, a.density());
  EXPECT_EQ(plus3[0], Rational(1));
  EXPECT_EQ(plus3[1], gv.values[1] - pow(a.density(), 3));

  for (const auto& c : kCases) {
    auto set = spec(c.group, c.allowed);
    auto gamma = gamma_vector(p4, set);
    EXPECT_EQ(gamma_from_plus(*p4, gamma_plus(gamma, set.density()), set.density()), gamma.values);
  }
}

// Gamma_+ equals the character double sum restricted to nowhere-zero P.
TEST(GammaPlus, MatchesNowhereZeroCharacterSum) {
  auto p = poset(4);
  for (const auto& c : {kCases[1], kCases[2], kCases[3]}) {
    auto a = spec(c.group, c.allowed);
    const auto& g = a.group();
    auto plus = gamma_plus(gamma_vector(p, a), a.density());
    for (std::size_t i = 0; i < p->size(); ++i) {
      CoboundaryContext ctx((*p)[i]);
      const std::size_t e = ctx.oriented_edges().size();
      const std::size_t beta = ctx.cycle_basis().size();
      std::vector<ElementIndex> coeff(beta, 0);
      std::complex<double> total = 0.0;
      while (true) {
        std::vector<ElementIndex> label(e, 0);
        for (std::size_t b = 0; b < beta; ++b)
          for (std::size_t t = 0; t < e; ++t) label[t] = g.add(label[t], g.scale(coeff[b], ctx.cycle_basis()[b][t]));
        bool nowhere_zero = std::none_of(label.begin(), label.end(), [](ElementIndex x) { return x == 0; });
        if (nowhere_zero) {
          std::complex<double> term = 1.0;
          for (std::size_t t = 0; t < e; ++t) {
            std::complex<double> s = 0.0;
            for (ElementIndex q : a.elements()) s += g.pairing(label[t], q);
            term *= s;
          }
          total += term;
        }
        std::size_t pos = 0;
        while (pos < beta && ++coeff[pos] == g.order()) coeff[pos++] = 0;
        if (pos == beta) break;
      }
      total /= std::pow(static_cast<double>(g.order()), static_cast<double>(e));
      EXPECT_NEAR(total.real(), plus[i].get_d(), 1e-9) << c.group << " " << format_edges((*p)[i]);
      EXPECT_NEAR(total.imag(), 0.0, 1e-9);
    }
  }
}

TEST(Reciprocity, Examples) {
  auto r3 = verify_reciprocity(poset(3), spec("Z5", "interval:1"));
  EXPECT_TRUE(r3.passed());
  EXPECT_EQ(r3.agree_count(), 2U);
  auto r4 = verify_reciprocity(poset(4), spec("Z7", "interval:1"));
  EXPECT_TRUE(r4.passed());
  EXPECT_EQ(r4.agree_count(), 15U);
  auto h4 = verify_reciprocity(poset(4), spec("Z2^3", "hamming:1"), GammaMethod::brute);
  EXPECT_TRUE(h4.passed());
  EXPECT_EQ(h4.agree_count(), 15U);
}

TEST(Reciprocity, HoldsAcrossGroupsAndSets) {
  for (int v = 3; v <= 5; ++v) {
    auto p = poset(v);
    for (const auto& c : kCases) {
      auto a = spec(c.group, c.allowed);
      EXPECT_TRUE(verify_reciprocity(p, a).passed()) << v << " " << c.group << " " << c.allowed;
      EXPECT_TRUE(verify_reciprocity(p, a.complement()).passed());
    }
  }
}

// A deliberately wrong vector is caught, not thrown.
TEST(Reciprocity, ReportsFailuresAsData) {
  auto p = poset(4);
  auto a = spec("Z7", "interval:1");
  auto report = verify_reciprocity(p, a);
  auto mobius = mobius_values(p);
  auto tampered = report.gamma.values;
  tampered[3] += ratio(1, 1000);
  auto lhs = gamma_plus(mobius, tampered, a.density());
  std::size_t agree = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) agree += lhs[i] == report.rhs[i];
  EXPECT_LT(agree, lhs.size());
}

TEST(ApplyM, RecoversGammaFromComplement) {
  for (int v = 3; v <= 4; ++v) {
    auto p = poset(v);
    for (const auto& c : kCases) {
      auto a = spec(c.group, c.allowed);
      auto bar = a.complement();
      auto gamma = gamma_vector(p, a).values;
      auto gamma_bar = gamma_vector(p, bar).values;
      EXPECT_EQ(apply_m(p, a.co_density(), gamma_bar), gamma);
      EXPECT_EQ(apply_m(p, a.density(), gamma), gamma_bar);
      EXPECT_EQ(apply_m(p, a.density(), apply_m(p, a.co_density(), gamma_bar)), gamma_bar);
    }
  }
}

TEST(ApplyM, TriangleRow) {
  auto p = poset(3);
  auto a = spec("Z9", "interval:1");
  Rational ab = a.co_density();
  auto gamma_bar = gamma_vector(p, a.complement()).values;
  EXPECT_EQ(apply_m(p, ab, gamma_bar)[1], (1 - 3 * ab + 3 * ab * ab) - gamma_bar[1]);
}

TEST(ApplyM, ProperColouringsViaIdentityComplement) {
  auto p = poset(4);
  for (int f = 2; f <= 6; ++f) {
    auto a = allowed_complement_identity(make_group({f}));
    auto got = apply_m(p, a.co_density(), gamma_vector(p, a.complement()).values);
    for (std::size_t i = 0; i < p->size(); ++i) {
      EXPECT_EQ(got[i], chromatic_oracle((*p)[i]).evaluate(Rational(f)) / pow(Rational(f), 4));
    }
  }
}

TEST(MainTerm, ResidualOrders) {
  auto p3 = poset(3);
  auto p4 = poset(4);
  for (int f = 3; f <= 17; ++f) {
    auto a = allowed_complement_identity(make_group({f}));
    Rational ab = ratio(1, f);
    EXPECT_EQ(residual(p3, 1, a), -ab * ab);
    EXPECT_EQ(residual(p4, idx(p4, c4()), a), ab * ab * ab);
    EXPECT_EQ(residual(p4, 0, a), Rational(0));
  }
  EXPECT_EQ(main_term_poly(p4, idx(p4, c4())), RationalPoly::parse("1 - 4r + 6r^2 - 4r^3"));
}

TEST(ChromaticViaM, Examples) {
  auto p3 = poset(3);
  EXPECT_EQ(chromatic_via_m(p3, 1), RationalPoly::parse("f^3 - 3f^2 + 2f", "f"));
  EXPECT_EQ(chromatic_via_m(p3, 0), RationalPoly::parse("f^3", "f"));
  auto p4 = poset(4);
  EXPECT_EQ(chromatic_via_m(p4, p4->size() - 1), RationalPoly::parse("f^4 - 6f^3 + 11f^2 - 6f", "f"));
}

TEST(ChromaticViaM, AgreesWithDeletionContraction) {
  for (int v = 2; v <= 4; ++v) {
    auto p = poset(v);
    for (std::size_t i = 0; i < p->size(); ++i) EXPECT_EQ(chromatic_via_m(p, i), chromatic_oracle((*p)[i]));
  }
  auto p5 = poset(5);
  for (std::size_t i = 0; i < p5->size(); i += p5->size() / 10) EXPECT_EQ(chromatic_via_m(p5, i), chromatic_oracle((*p5)[i]));
}

TEST(IntervalClosedForm, PiecewiseLawOverSweep) {
  for (int f = 5; f <= 31; f += 2) {
    for (int k = 0; 2 * k + 1 <= f; ++k) {
      auto a = allowed_interval(make_group({f}), k);
      auto [bar, allowed] = interval_k3_closed_form(f, k);
      EXPECT_EQ(gamma_cyclespace(k3(), a.complement()), bar) << f << "," << k;
      EXPECT_EQ(gamma_cyclespace(k3(), a), allowed) << f << "," << k;
    }
  }
}

// 2/3 = (2k+1)/f needs 3(2k+1) = 2f, impossible since the left side is odd;
// so the boundary never arises and brute force is the only statement needed.
TEST(IntervalClosedForm, BoundaryNeverOccursForIntervals) {
  for (int f = 3; f <= 200; ++f)
    for (int k = 0; 2 * k + 1 <= f; ++k) EXPECT_NE(ratio(2 * k + 1, f), ratio(2, 3));
}

TEST(HammingClosedForm, ComplementValueMatches) {
  for (int n = 2; n <= 10; ++n) {
    auto a = allowed_hamming(n, 1);
    EXPECT_EQ(gamma_cyclespace(k3(), a.complement()), hamming_k3_closed_form(n).first) << n;
  }
  EXPECT_EQ(hamming_k3_closed_form(3).first, ratio(10, 64));
  EXPECT_EQ(hamming_k3_closed_form(4).first, ratio(13, 256));
  EXPECT_EQ(hamming_k3_closed_form(1).first, Rational(1));
}

// The printed allowed-set formula is short by exactly 2 * 4^{-n}; the value
// forced by M (and by direct enumeration) is 1 - (3n+3)2^{-n} + (3n^2+3n+2)4^{-n}.
TEST(HammingClosedForm, PrintedAllowedValueIsOffByTwoOverFourToTheN) {
  EXPECT_EQ(hamming_k3_closed_form(3).second, ratio(4, 64));
  for (int n = 1; n <= 10; ++n) {
    auto a = allowed_hamming(n, 1);
    Rational computed = gamma_cyclespace(k3(), a);
    Rational ab = a.co_density();
    EXPECT_EQ(computed, 1 - 3 * ab + 3 * ab * ab - hamming_k3_closed_form(n).first);
    EXPECT_EQ(computed - hamming_k3_closed_form(n).second, 2 * pow(Rational(4), -n)) << n;
  }
  EXPECT_EQ(gamma_bruteforce(k3(), allowed_hamming(3, 1)), ratio(6, 64));
  EXPECT_EQ(gamma_bruteforce(k3(), allowed_hamming(1, 1)), Rational(0));
}

}  // namespace
}  // namespace colrec
