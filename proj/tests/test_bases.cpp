#include <gtest/gtest.h>

#include <set>

#include "asympoly/bases.hpp"

using namespace asympoly;

namespace {

Polynomial poly(std::size_t n, std::initializer_list<std::pair<std::vector<int>, int>> terms) {
  Polynomial f(n);
  for (const auto& [e, c] : terms) f.add_term(WeakComposition(e), c);
  return f;
}

Polynomial one(std::size_t n) { return Polynomial::constant(n, 1); }

// Weakly increasing words of length k over [n].
template <class Visit>
void for_each_multiset(int k, int n, Visit visit) {
  std::vector<int> w(k, 1);
  auto rec = [&](auto& self, int pos, int lo) -> void {
    if (pos == k) {
      visit(w);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      w[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 1);
}

Polynomial monomial_of_word(const std::vector<int>& w, std::size_t n) {
  std::vector<int> e(n, 0);
  for (int x : w) ++e[x - 1];
  return Polynomial::monomial(WeakComposition(e));
}

Polynomial brute_m(const Partition& l, std::size_t n) {
  Polynomial f(n);
  if (l.size() > n) return f;
  for (const auto& b : rearrangements(padded(as_weak(l), n))) f += Polynomial::monomial(b);
  return f;
}

Polynomial brute_e(int k, std::size_t n) {
  Polynomial f(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (__builtin_popcount(mask) == k) {
      std::vector<int> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = mask >> i & 1;
      f += Polynomial::monomial(WeakComposition(e));
    }
  return f;
}

Polynomial brute_h(int k, std::size_t n) {
  Polynomial f(n);
  if (k < 0) return f;
  for_each_multiset(k, static_cast<int>(n), [&](const std::vector<int>& w) { f += monomial_of_word(w, n); });
  return f;
}

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}) by the Leibniz formula.
Polynomial jacobi_trudi(const Partition& l, std::size_t n) {
  std::size_t k = l.size();
  Polynomial det(n);
  if (k == 0) return one(n);
  for (const auto& p : all_permutations(k)) {
    Polynomial term = one(n);
    for (std::size_t i = 0; i < k; ++i) term = term * brute_h(l[i] - static_cast<int>(i) + p(static_cast<int>(i) + 1) - 1, n);
    if (p.length() % 2) term *= -1;
    det += term;
  }
  return det;
}

// M and F from strictly/weakly increasing index words.
Polynomial brute_M(const StrongComposition& a, std::size_t n) {
  Polynomial f(n);
  std::size_t k = a.size();
  for_each_multiset(static_cast<int>(k), static_cast<int>(n), [&](const std::vector<int>& idx) {
    for (std::size_t j = 1; j < k; ++j)
      if (idx[j] == idx[j - 1]) return;
    std::vector<int> e(n, 0);
    for (std::size_t j = 0; j < k; ++j) e[idx[j] - 1] = a[j];
    f += Polynomial::monomial(WeakComposition(e));
  });
  return f;
}

Polynomial brute_F(const StrongComposition& a, std::size_t n) {
  std::set<int> strict;  // positions (0-based, in the word) that must strictly increase
  int acc = 0;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) strict.insert(acc += a[j]);
  Polynomial f(n);
  for_each_multiset(a.total(), static_cast<int>(n), [&](const std::vector<int>& w) {
    for (int p : strict)
      if (w[p] == w[p - 1]) return;
    f += monomial_of_word(w, n);
  });
  return f;
}

// Compatible sequences of a word, by brute force over weakly increasing words.
std::vector<std::vector<int>> brute_compatible(const std::vector<int>& alpha) {
  std::vector<std::vector<int>> out;
  int top = *std::max_element(alpha.begin(), alpha.end());
  for_each_multiset(static_cast<int>(alpha.size()), top, [&](const std::vector<int>& b) {
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (b[j] > alpha[j]) return;
      if (j && alpha[j - 1] < alpha[j] && b[j - 1] == b[j]) return;
    }
    out.push_back(b);
  });
  return out;
}

// Two-variable closed forms for the divided difference and Demazure operators.
Polynomial oracle_op(std::size_t i, const Polynomial& f, int shift, int sign_id) {
  Polynomial out(f.nvars());
  for (const auto& [a, c] : f) {
    auto e = a.parts();
    int p = e[i - 1] + shift, q = e[i];
    auto put = [&](int u, int v, const Coeff& k) {
      e[i - 1] = u;
      e[i] = v;
      out.add_term(WeakComposition(e), k);
    };
    if (p > q)
      for (int j = 0; j < p - q; ++j) put(q + j, p - 1 - j, c);
    else if (p < q)
      for (int j = 0; j < q - p; ++j) put(p + j, q - 1 - j, -c);
  }
  if (sign_id) out -= f;
  return out;
}
Polynomial dd(std::size_t i, const Polynomial& f) { return oracle_op(i, f, 0, 0); }
Polynomial pi(std::size_t i, const Polynomial& f) { return oracle_op(i, f, 1, 0); }
Polynomial pibar(std::size_t i, const Polynomial& f) { return oracle_op(i, f, 1, 1); }

// D_a = pi_i D_{s_i a} when a_i < a_{i+1}; the same with pibar for atoms.
Polynomial oracle_key(const WeakComposition& a, bool atom) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] < a[i + 1]) {
      auto v = a.parts();
      std::swap(v[i], v[i + 1]);
      auto g = oracle_key(WeakComposition(v), atom);
      return atom ? pibar(i + 1, g) : pi(i + 1, g);
    }
  return Polynomial::monomial(a);
}

// S_p from the longest element by divided differences, inside S_m.
Polynomial oracle_schubert(const Permutation& p, std::size_t m) {
  auto w = p.padded(m);
  for (std::size_t i = 1; i < m; ++i)
    if (w(static_cast<int>(i)) < w(static_cast<int>(i) + 1)) return dd(i, oracle_schubert(w * Permutation::simple(i, m), m));
  return Polynomial::monomial(staircase(m));
}

}  // namespace

// --- worked examples ---------------------------------------------------------------

TEST(Examples, SchurTwoOne) {
  EXPECT_EQ(schur(Partition{2, 1}, 2), poly(2, {{{2, 1}, 1}, {{1, 2}, 1}}));
  EXPECT_TRUE(schur_alternatives(Partition{2, 1}, 2).agree());
  EXPECT_EQ(schur(Partition{}, 3), one(3));
}

TEST(Examples, QuasisymmetricOneThree) {
  auto m13 = poly(3, {{{1, 3, 0}, 1}, {{1, 0, 3}, 1}, {{0, 1, 3}, 1}});
  EXPECT_EQ(monomial_quasisymmetric(StrongComposition{1, 3}, 3), m13);
  EXPECT_EQ(fundamental_quasisymmetric(StrongComposition{1, 3}, 3), m13 + poly(3, {{{1, 1, 2}, 1}, {{1, 2, 1}, 1}}));
  EXPECT_EQ(quasi_schur(StrongComposition{1, 3}, 3),
            poly(3, {{{1, 3, 0}, 1}, {{2, 2, 0}, 1}, {{1, 0, 3}, 1}, {{2, 0, 2}, 1}, {{1, 1, 2}, 2},
                     {{1, 2, 1}, 1}, {{2, 1, 1}, 1}, {{0, 1, 3}, 1}, {{0, 2, 2}, 1}}));
}

TEST(Examples, AtomQuasikeyParticle) {
  WeakComposition a{1, 0, 3};
  EXPECT_EQ(demazure_atom(a, 3), poly(3, {{{1, 0, 3}, 1}, {{1, 1, 2}, 1}, {{2, 0, 2}, 1}, {{1, 2, 1}, 1}, {{2, 1, 1}, 1}}));
  EXPECT_EQ(quasikey(a, 3), poly(3, {{{1, 3, 0}, 1}, {{2, 2, 0}, 1}, {{1, 0, 3}, 1}, {{1, 1, 2}, 1}, {{2, 0, 2}, 1},
                                     {{1, 2, 1}, 1}, {{2, 1, 1}, 1}}));
  EXPECT_EQ(fundamental_particle(a, 3), poly(3, {{{1, 0, 3}, 1}, {{1, 1, 2}, 1}, {{1, 2, 1}, 1}}));
}

TEST(Examples, KeyZeroTwoOne) {
  auto expect = poly(3, {{{0, 2, 1}, 1}, {{1, 1, 1}, 1}, {{2, 0, 1}, 1}, {{2, 1, 0}, 1}, {{1, 2, 0}, 1}});
  auto alts = key_alternatives(WeakComposition{0, 2, 1}, 3);
  EXPECT_EQ(alts.kohnert, expect);
  EXPECT_EQ(alts.demazure, expect);
  EXPECT_EQ(alts.skyline, expect);
}

TEST(Examples, Schubert) {
  auto w0 = schubert_alternatives(Permutation{3, 2, 1}, 3);
  EXPECT_EQ(w0.bjs, poly(3, {{{2, 1, 0}, 1}}));
  EXPECT_TRUE(w0.agree());
  // the 7 pipe dreams and 7 Kohnert diagrams of 15324, symmetric in x1, x2
  auto expect = poly(3, {{{0, 3, 1}, 1}, {{1, 2, 1}, 1}, {{2, 1, 1}, 1}, {{3, 0, 1}, 1}, {{3, 1, 0}, 1},
                         {{1, 3, 0}, 1}, {{2, 2, 0}, 1}});
  auto alts = schubert_alternatives(Permutation{1, 5, 3, 2, 4}, 3);
  EXPECT_EQ(alts.bjs, expect);
  EXPECT_EQ(alts.divided_difference, expect);
  EXPECT_EQ(alts.pipe_dreams, expect);
  EXPECT_EQ(alts.kohnert, expect);
  EXPECT_EQ(swap_variables(1, expect), expect);
  EXPECT_EQ(schubert_bjs(Permutation::identity(4), 2), one(2));
}

TEST(Examples, MonomialIsSingleTerm) {
  EXPECT_EQ(basis_polynomial(BasisId::x, WeakComposition{0, 0}, 2), one(2));
  EXPECT_EQ(basis_polynomial(BasisId::x, WeakComposition{2, 0, 1}, 3).term_count(), 1u);
}

// --- oracles --------------------------------------------------------------------------

TEST(Symmetric, MonomialElementaryComplete) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d)
      for (const auto& l : partitions_of(d)) {
        EXPECT_EQ(monomial_symmetric(l, n), brute_m(l, n));
        Polynomial e = one(n), h = one(n);
        for (int part : l) {
          e = e * brute_e(part, n);
          h = h * brute_h(part, n);
        }
        EXPECT_EQ(elementary(l, n), e) << to_string(l);
        EXPECT_EQ(complete_homogeneous(l, n), h) << to_string(l);
      }
}

TEST(Symmetric, SchurIsJacobiTrudi) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d)
      for (const auto& l : partitions_of(d)) EXPECT_EQ(schur(l, n), jacobi_trudi(l, n)) << to_string(l) << " n=" << n;
}

TEST(Symmetric, SchurAlternativesAgree) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d)
      for (const auto& l : partitions_of(d))
        if (l.size() <= n) {
          EXPECT_TRUE(schur_alternatives(l, n).agree()) << to_string(l) << " n=" << n;
        }
}

TEST(Quasisymmetric, MonomialAndFundamental) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d)
      for (const auto& a : strong_compositions_of(d)) {
        EXPECT_EQ(monomial_quasisymmetric(a, n), brute_M(a, n));
        EXPECT_EQ(fundamental_quasisymmetric(a, n), brute_F(a, n));
      }
}

TEST(Quasisymmetric, QuasiSchurSumsToSchur) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d)
      for (const auto& l : partitions_of(d)) {
        Polynomial sum(n);
        for (const auto& a : strong_compositions_of(d))
          if (sort_decreasing(a) == l) sum += quasi_schur(a, n);
        EXPECT_EQ(sum, schur(l, n));
      }
}

TEST(Slides, FundamentalFromCompatibleSequences) {
  // every word with letters <= 4 and length <= 4
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& w : bounded_weak_compositions(4, k)) {
      if (std::count(w.begin(), w.end(), 0)) continue;
      auto comp = brute_compatible(w.parts());
      if (comp.empty()) continue;
      Polynomial f(4);
      for (const auto& b : comp) f += monomial_of_word(b, 4);
      std::vector<int> a(4, 0);
      for (int x : comp.back()) ++a[x - 1];  // termwise maximal is last in lex order
      EXPECT_EQ(fundamental_slide(WeakComposition(a), 4), f) << to_string(w);
    }
}

TEST(Slides, MonomialSlideDefinition) {
  for (const auto& a : bounded_weak_compositions(2, 4)) {
    Polynomial f(4);
    for (const auto& b : weak_compositions_of(a.total(), 4))
      if (positive_part(b) == positive_part(a) && dominance_leq(a, b)) f += Polynomial::monomial(b);
    EXPECT_EQ(monomial_slide(a, 4), f) << to_string(a);
  }
}

TEST(Slides, LiftQuasisymmetric) {
  for (int d = 1; d <= 4; ++d)
    for (const auto& a : strong_compositions_of(d, 4)) {
      auto padded_left = prepend_zeros(as_weak(a), 4 - a.size());
      EXPECT_EQ(fundamental_slide(padded_left, 4), fundamental_quasisymmetric(a, 4));
      EXPECT_EQ(monomial_slide(padded_left, 4), monomial_quasisymmetric(a, 4));
    }
}

TEST(Keys, OperatorRecursion) {
  for (const auto& a : bounded_weak_compositions(3, 4)) {
    EXPECT_EQ(key_kohnert(a, 4), oracle_key(a, false)) << to_string(a);
    EXPECT_EQ(demazure_atom(a, 4), oracle_key(a, true)) << to_string(a);
  }
}

TEST(Keys, AlternativesAgree) {
  for (const auto& a : bounded_weak_compositions(3, 4)) EXPECT_TRUE(key_alternatives(a, 4).agree()) << to_string(a);
}

TEST(Keys, QuasikeyIsSumOfAtoms) {
  for (const auto& a : bounded_weak_compositions(2, 4)) {
    Polynomial f(4);
    for (const auto& b : zero_insertions(positive_part(a), 4))
      if (dominance_leq(a, b)) f += oracle_key(b, true);
    EXPECT_EQ(quasikey(a, 4), f) << to_string(a);
  }
}

TEST(Keys, PartitionIndexIsLeadingMonomial) {
  // a weakly decreasing key is a single monomial
  EXPECT_EQ(key_kohnert(WeakComposition{3, 1, 0}, 3), poly(3, {{{3, 1, 0}, 1}}));
  EXPECT_EQ(key_kohnert(WeakComposition{2}, 1), poly(1, {{{2}, 1}}));
}

TEST(Schubert, DividedDifferenceOracle) {
  for (std::size_t m = 1; m <= 5; ++m)
    for (const auto& p : all_permutations(m)) {
      auto expect = oracle_schubert(p, m);
      auto alts = schubert_alternatives(p, m);
      EXPECT_EQ(alts.bjs, expect) << to_string(p);
      EXPECT_TRUE(alts.agree()) << to_string(p);
    }
}

TEST(Schubert, SchurAsGrassmannian) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d)
      for (const auto& l : partitions_of(d, -1, static_cast<int>(n))) {
        auto p = grassmannian_permutation(l, n);
        EXPECT_LE(p.descents().size(), 1u);
        for (std::size_t i = 1; i <= n; ++i)
          EXPECT_EQ(p(static_cast<int>(i)), l.entry(n - i) + static_cast<int>(i));
      }
}

// --- plumbing --------------------------------------------------------------------------

TEST(Indices, ParseAndSpecies) {
  EXPECT_EQ(parse_index(BasisId::key, "(0,2,1)"), BasisIndex(WeakComposition{0, 2, 1}));
  EXPECT_EQ(parse_index(BasisId::schubert, "15324"), BasisIndex(Permutation{1, 5, 3, 2, 4}));
  EXPECT_EQ(parse_index(BasisId::s, "(2,1)"), BasisIndex(Partition{2, 1}));
  EXPECT_EQ(parse_basis_id("fslide"), BasisId::fslide);
  auto code_of = [](auto f) {
    try {
      f();
    } catch (const error& e) {
      return e.code();
    }
    return errc::internal_error;
  };
  EXPECT_EQ(code_of([] { parse_basis_id("nope"); }), errc::parse_error);
  EXPECT_EQ(code_of([] { basis_polynomial(BasisId::s, WeakComposition{1}, 2); }), errc::species_mismatch);
  EXPECT_EQ(code_of([] { basis_polynomial(BasisId::key, WeakComposition{0, 0, 1}, 2); }), errc::n_too_small);
  EXPECT_EQ(code_of([] { basis_polynomial(BasisId::schubert, Permutation{1, 3, 2}, 1); }), errc::n_too_small);
  EXPECT_EQ(code_of([] { basis_polynomial(BasisId::key, WeakComposition{1}, 1, "bogus"); }), errc::invalid_argument);
}

TEST(Indices, ShortWeakIndicesArePadded) {
  EXPECT_EQ(basis_polynomial(BasisId::key, WeakComposition{0, 1}, 3), key_kohnert(WeakComposition{0, 1, 0}, 3));
  EXPECT_EQ(default_n(BasisIndex(Permutation{1, 5, 3, 2, 4})), 3u);
  EXPECT_EQ(default_n(BasisIndex(WeakComposition{0, 2, 1})), 3u);
}

TEST(Cache, ReturnsSamePolynomial) {
  const auto& a = cached_basis_polynomial(BasisId::key, WeakComposition{0, 2, 1}, 3);
  const auto& b = cached_basis_polynomial(BasisId::key, WeakComposition{0, 2, 1}, 3);
  EXPECT_EQ(&a, &b);
  EXPECT_EQ(a, key_kohnert(WeakComposition{0, 2, 1}, 3));
}
