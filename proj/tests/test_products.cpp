#include <gtest/gtest.h>

#include "asympoly/products.hpp"
#include "asympoly/sweeps.hpp"

using namespace asympoly;

namespace {

using W = WeakComposition;
using C = StrongComposition;
using P = Partition;

template <class I>
FormalSum<I> sum_of(std::initializer_list<std::pair<I, int>> terms) {
  FormalSum<I> s;
  for (const auto& [i, c] : terms) s.add(i, c);
  return s;
}

// A standard word with descent composition alpha: blocks increase inside,
// and each block sits above the next one.
std::vector<int> standard_word(const C& alpha, int shift) {
  std::vector<int> w;
  int top = alpha.total();
  for (int part : alpha) {
    for (int k = top - part + 1; k <= top; ++k) w.push_back(k + shift);
    top -= part;
  }
  return w;
}

C descent_comp(const std::vector<int>& w) {
  std::vector<int> parts{1};
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] < w[i - 1])
      parts.push_back(1);
    else
      ++parts.back();
  }
  return C(parts);
}

FormalSum<C> oracle_shuffle(const C& alpha, const C& beta) {
  auto u = standard_word(alpha, 0), v = standard_word(beta, alpha.total());
  std::size_t total = u.size() + v.size();
  FormalSum<C> out;
  for (unsigned mask = 0; mask < (1u << total); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != v.size()) continue;
    std::vector<int> w;
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < total; ++k) w.push_back(mask >> k & 1 ? v[j++] : u[i++]);
    out.add(descent_comp(w), 1);
  }
  return out;
}

// M_gamma coefficient of a quasisymmetric f is its coefficient on x^gamma.
FormalSum<C> oracle_oshuffle(const C& alpha, const C& beta) {
  std::size_t n = alpha.size() + beta.size();
  auto f = monomial_quasisymmetric(alpha, n) * monomial_quasisymmetric(beta, n);
  FormalSum<C> out;
  for (const auto& [e, c] : f)
    if (as_weak(positive_part(e), n) == e) out.add(positive_part(e), c);
  return out;
}

// s_nu coefficient of a symmetric f is the coefficient of x^(nu+delta) in f * a_delta.
Coeff oracle_lr(const P& l, const P& m, const P& nu) {
  std::size_t n = nu.size();
  if (l.size() > n || m.size() > n) return 0;
  auto f = schur(l, n) * schur(m, n) * vandermonde(n);
  auto shifted = as_weak(nu, n).parts();
  for (std::size_t i = 0; i < n; ++i) shifted[i] += static_cast<int>(n - 1 - i);
  return f.coefficient(W(shifted));
}

}  // namespace

// --- worked examples ---------------------------------------------------------------

TEST(Shuffle, OverlappingExample) {
  EXPECT_EQ(overlapping_shuffle_product(C{2}, C{1, 2}),
            sum_of<C>({{C{2, 1, 2}, 1}, {C{1, 2, 2}, 2}, {C{3, 2}, 1}, {C{1, 4}, 1}}));
  auto check = check_product(ProductRule::oshuffle_M, C{2}, C{1, 2}, 5);
  EXPECT_TRUE(check.agrees());
}

TEST(Shuffle, OrdinaryExample) {
  EXPECT_EQ(shuffle_word({2}, false), (std::vector<int>{1, 1}));
  EXPECT_EQ(shuffle_word({1, 2}, true), (std::vector<int>{4, 2, 2}));
  auto expect = sum_of<C>({{C{1, 2, 2}, 2}, {C{1, 1, 2, 1}, 1}, {C{1, 3, 1}, 1}, {C{2, 2, 1}, 1}, {C{1, 1, 3}, 1},
                           {C{2, 1, 2}, 1}, {C{1, 4}, 1}, {C{2, 3}, 1}, {C{3, 2}, 1}});
  EXPECT_EQ(shuffle_product(C{2}, C{1, 2}), expect);
  EXPECT_EQ(shuffle_product(C{2}, C{1, 2}).total(), 10);
  EXPECT_TRUE(check_product(ProductRule::shuffle_F, C{2}, C{1, 2}, 5).agrees());
}

TEST(Shuffle, Smallest) {
  EXPECT_EQ(shuffle_product(C{1}, C{1}), sum_of<C>({{C{2}, 1}, {C{1, 1}, 1}}));
  EXPECT_EQ(overlapping_shuffle_product(C{1}, C{1}), sum_of<C>({{C{2}, 1}, {C{1, 1}, 2}}));
  EXPECT_EQ(shuffle_product(C{}, C{1, 2}), sum_of<C>({{C{1, 2}, 1}}));
}

TEST(Slide, Example) {
  W a{0, 1, 0, 2}, b{1, 0, 0, 1};
  auto expect = sum_of<W>({{W{2, 0, 0, 3}, 1}, {W{1, 1, 0, 3}, 1}, {W{2, 0, 2, 1}, 1}, {W{1, 1, 2, 1}, 1},
                           {W{2, 0, 1, 2}, 1}, {W{1, 1, 1, 2}, 1}, {W{1, 2, 0, 2}, 1}});
  EXPECT_EQ(shuffle_word(a.parts(), false), (std::vector<int>{5, 1, 1}));
  EXPECT_EQ(shuffle_word(b.parts(), true), (std::vector<int>{8, 2}));
  EXPECT_EQ(slide_product(a, b), expect);
  EXPECT_EQ(overlapping_slide_product(a, b), expect);
  EXPECT_TRUE(check_product(ProductRule::slide_fslide, a, b, 4).agrees());
  EXPECT_TRUE(check_product(ProductRule::oslide_mslide, a, b, 4).agrees());
}

TEST(LittlewoodRichardson, Example) {
  EXPECT_EQ(lr_coefficient(P{2, 1}, P{2, 1}, P{3, 2, 1}), 2);
  EXPECT_EQ(lr_coefficient(P{1}, P{1}, P{2}), 1);
  EXPECT_EQ(lr_coefficient(P{2}, P{2}, P{2, 1, 1}), 0);
}

// --- oracles -------------------------------------------------------------------------

TEST(Shuffle, MatchesStandardWordShuffles) {
  for (int d = 1; d <= 3; ++d)
    for (int e = 1; e <= 3; ++e)
      for (const auto& x : strong_compositions_of(d))
        for (const auto& y : strong_compositions_of(e)) EXPECT_EQ(shuffle_product(x, y), oracle_shuffle(x, y));
}

TEST(Shuffle, OverlappingMatchesMonomialCoefficients) {
  for (int d = 1; d <= 3; ++d)
    for (int e = 1; e <= 3; ++e)
      for (const auto& x : strong_compositions_of(d))
        for (const auto& y : strong_compositions_of(e))
          EXPECT_EQ(overlapping_shuffle_product(x, y), oracle_oshuffle(x, y)) << to_string(x) << " " << to_string(y);
}

TEST(LittlewoodRichardson, MatchesAlternantCoefficients) {
  for (int d = 1; d <= 3; ++d)
    for (int e = 1; e <= 3; ++e)
      for (const auto& l : partitions_of(d))
        for (const auto& m : partitions_of(e))
          for (const auto& nu : partitions_of(d + e)) {
            EXPECT_EQ(lr_coefficient(l, m, nu), oracle_lr(l, m, nu));
            EXPECT_EQ(lr_coefficient(l, m, nu), lr_coefficient(m, l, nu));
          }
}

// --- algebraic properties ------------------------------------------------------------

TEST(Slide, Commutes) {
  for (const auto& a : bounded_weak_compositions(2, 3))
    for (const auto& b : bounded_weak_compositions(1, 3)) {
      EXPECT_EQ(slide_product(a, b), slide_product(b, a));
      EXPECT_EQ(overlapping_slide_product(a, b), overlapping_slide_product(b, a));
    }
}

TEST(Slide, EmptyIsUnit) {
  W zero{0, 0, 0};
  for (const auto& a : bounded_weak_compositions(2, 3)) {
    EXPECT_EQ(slide_product(a, zero), sum_of<W>({{a, 1}}));
    EXPECT_EQ(overlapping_slide_product(zero, a), sum_of<W>({{a, 1}}));
  }
}

TEST(Slide, QuasisymmetricIndicesCollapseToShuffle) {
  for (int d = 1; d <= 2; ++d)
    for (int e = 1; e <= 2; ++e)
      for (const auto& x : strong_compositions_of(d))
        for (const auto& y : strong_compositions_of(e)) {
          std::size_t n = static_cast<std::size_t>(d + e);
          auto a = prepend_zeros(as_weak(x), n - x.size()), b = prepend_zeros(as_weak(y), n - y.size());
          FormalSum<C> got, got_o;
          for (const auto& [g, c] : slide_product(a, b)) got.add(positive_part(g), c);
          for (const auto& [g, c] : overlapping_slide_product(a, b)) got_o.add(positive_part(g), c);
          EXPECT_EQ(got, shuffle_product(x, y));
          EXPECT_EQ(got_o, overlapping_shuffle_product(x, y));
        }
}

TEST(Structure, AssociativeInFundamentalSlides) {
  std::size_t n = 3;
  for (const auto& a : bounded_weak_compositions(1, 3))
    for (const auto& b : bounded_weak_compositions(1, 3)) {
      W c{0, 1, 0};
      auto left = cached_basis_polynomial(BasisId::fslide, a, n) * cached_basis_polynomial(BasisId::fslide, b, n);
      FormalSum<BasisIndex> lhs, rhs;
      for (const auto& [ab, k] : structure_constants(BasisId::fslide, a, b, n).terms)
        for (const auto& [g, k2] : structure_constants(BasisId::fslide, ab, c, n).terms) lhs.add(g, k * k2);
      for (const auto& [bc, k] : structure_constants(BasisId::fslide, b, c, n).terms)
        for (const auto& [g, k2] : structure_constants(BasisId::fslide, a, bc, n).terms) rhs.add(g, k * k2);
      EXPECT_EQ(lhs, rhs);
      EXPECT_EQ(to_polynomial(structure_constants(BasisId::fslide, a, b, n)), left);
    }
}

TEST(Structure, DefaultAmbient) {
  EXPECT_EQ(default_product_n(BasisId::M, C{2}, C{1, 2}), 5u);
  EXPECT_EQ(default_product_n(BasisId::key, W{0, 1}, W{1, 0, 1}), 3u);
  EXPECT_EQ(default_product_n(BasisId::schubert, Permutation{2, 1}, Permutation{1, 3, 2}), 3u);
  auto t = structure_table(BasisId::s, {P{1}, P{1, 1}}, 3);
  EXPECT_EQ((t.entries.at({P{1}, P{1}, P{2}})), 1);
  EXPECT_EQ((t.entries.at({P{1}, P{1, 1}, P{1, 1, 1}})), 1);
}

// --- sweeps --------------------------------------------------------------------------

TEST(Sweeps, ProductRules) {
  for (auto rule : {ProductRule::shuffle_F, ProductRule::oshuffle_M, ProductRule::slide_fslide,
                    ProductRule::oslide_mslide, ProductRule::lr_s}) {
    auto r = product_rule_sweep(rule, {});
    EXPECT_TRUE(r.ok()) << to_text(r);
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Sweeps, SchubertPositivity) {
  auto r = structure_positivity_sweep(BasisId::schubert);
  EXPECT_TRUE(r.ok()) << to_text(r);
}

TEST(Witness, QuasiSchurHasNegativeConstant) {
  auto w = negative_witness_search(BasisId::qs);
  ASSERT_TRUE(w.witness);
  EXPECT_EQ(w.witness->a, BasisIndex(C{1, 2}));
  EXPECT_EQ(w.witness->b, BasisIndex(C{1, 2}));
  EXPECT_EQ(w.witness->c, BasisIndex(C{2, 1, 1, 2}));
  EXPECT_EQ(w.witness->coefficient, -1);
  EXPECT_EQ(to_text(w), "witness qs checked 28 (1,2) * (1,2) n=6 has -1 at (2,1,1,2)\n");
  // the product really has that coefficient
  auto e = structure_constants(BasisId::qs, C{1, 2}, C{1, 2}, 6);
  EXPECT_EQ(e.terms.coefficient(C{2, 1, 1, 2}), -1);
}

TEST(Witness, AsymmetricBasesWithoutPositivity) {
  auto key = structure_constants(BasisId::key, W{0, 1, 0}, W{1, 0, 1}, 3);
  EXPECT_EQ(key.terms.coefficient(W{2, 1, 0}), -1);
  auto atom = structure_constants(BasisId::atom, W{0, 0, 1}, W{0, 0, 1}, 3);
  EXPECT_EQ(atom.terms.coefficient(W{0, 1, 1}), -1);
  auto qkey = structure_constants(BasisId::qkey, W{0, 1, 0}, W{0, 1, 2}, 3);
  EXPECT_EQ(qkey.terms.coefficient(W{2, 2, 0}), -1);
  auto particle = structure_constants(BasisId::particle, W{0, 0, 1}, W{0, 0, 1}, 3);
  EXPECT_EQ(particle.terms.coefficient(W{0, 1, 1}), -1);
}

TEST(Conjecture, KeyProductsArePositiveInAtoms) {
  auto r = reiner_shimozono(2, 3);
  EXPECT_EQ(r.pairs, 378u);
  EXPECT_TRUE(r.ok()) << to_text(r);
  EXPECT_EQ(r.max_coefficient, 2);
}
