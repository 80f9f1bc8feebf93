#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "expand.hpp"
#include "parallel.hpp"

namespace asympoly {

// --- shuffle words ------------------------------------------------------------------

// a_1 copies of 2l-1, a_2 copies of 2l-3, ..., with l = length of a (zeros count).
// The even word uses 2l, 2l-2, ... instead.
inline std::vector<int> shuffle_word(const std::vector<int>& a, bool even) {
  std::vector<int> w;
  int l = static_cast<int>(a.size());
  for (int i = 0; i < l; ++i) w.insert(w.end(), a[i], 2 * (l - i) - (even ? 0 : 1));
  return w;
}

// Every interleaving of A and B, as (word, mask) with mask[k] true for B letters.
template <class Visit>
void for_each_shuffle(const std::vector<int>& A, const std::vector<int>& B, Visit&& visit) {
  std::size_t total = A.size() + B.size();
  std::vector<int> word(total);
  std::vector<char> fromB(total, 0);
  auto rec = [&](auto& self, std::size_t i, std::size_t j) -> void {
    if (i + j == total) {
      visit(static_cast<const std::vector<int>&>(word), static_cast<const std::vector<char>&>(fromB));
      return;
    }
    if (i < A.size()) {
      word[i + j] = A[i];
      fromB[i + j] = 0;
      self(self, i + 1, j);
    }
    if (j < B.size()) {
      word[i + j] = B[j];
      fromB[i + j] = 1;
      self(self, i, j + 1);
    }
  };
  rec(rec, 0, 0);
}

// --- quasisymmetric products ----------------------------------------------------------

// Quasi-shuffle: each step takes the next part of alpha, of beta, or their sum.
inline FormalSum<StrongComposition> overlapping_shuffle_product(const StrongComposition& alpha,
                                                                const StrongComposition& beta) {
  FormalSum<StrongComposition> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, std::size_t i, std::size_t j) -> void {
    if (i == alpha.size() && j == beta.size()) {
      out.add(StrongComposition(cur), 1);
      return;
    }
    if (i < alpha.size()) {
      cur.push_back(alpha[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < beta.size()) {
      cur.push_back(beta[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
    if (i < alpha.size() && j < beta.size()) {
      cur.push_back(alpha[i] + beta[j]);
      self(self, i + 1, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline FormalSum<StrongComposition> shuffle_product(const StrongComposition& alpha, const StrongComposition& beta) {
  FormalSum<StrongComposition> out;
  for_each_shuffle(shuffle_word(alpha.parts(), false), shuffle_word(beta.parts(), true),
                   [&](const std::vector<int>& c, const std::vector<char>&) { out.add(descent_composition(c), 1); });
  return out;
}

// --- slide products ---------------------------------------------------------------------

namespace detail {

// Among candidates, the one dominated by all others; throws if there is none.
inline WeakComposition unique_dominance_least(const std::vector<WeakComposition>& cands, const char* what) {
  for (const auto& c : cands)
    if (std::all_of(cands.begin(), cands.end(), [&](const auto& d) { return dominance_leq(c, d); })) return c;
  throw error(errc::bump_nonunique, std::string(what) + " has no unique dominance-least choice");
}

// Increasing position choices of k items among N slots.
template <class Visit>
void for_each_placement(std::size_t k, std::size_t N, Visit&& visit) {
  std::vector<std::size_t> pos(k);
  auto rec = [&](auto& self, std::size_t i, std::size_t from) -> void {
    if (i == k) {
      visit(static_cast<const std::vector<std::size_t>&>(pos));
      return;
    }
    for (std::size_t p = from; p + (k - i) <= N; ++p) {
      pos[i] = p;
      self(self, i + 1, p + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

// Slide product of weak compositions; results have length max(len a, len b).
inline FormalSum<WeakComposition> slide_product(const WeakComposition& a, const WeakComposition& b) {
  std::size_t N = std::max(a.size(), b.size());
  FormalSum<WeakComposition> out;
  for_each_shuffle(shuffle_word(a.parts(), false), shuffle_word(b.parts(), true),
                   [&](const std::vector<int>& c, const std::vector<char>& fromB) {
                     // run boundaries with A/B letter counts per run
                     std::vector<int> ca, cb;
                     for (std::size_t k = 0; k < c.size(); ++k) {
                       if (k == 0 || c[k] < c[k - 1]) {
                         ca.push_back(0);
                         cb.push_back(0);
                       }
                       (fromB[k] ? cb : ca).back() += 1;
                     }
                     if (!dominance_leq(a, WeakComposition(ca)) || !dominance_leq(b, WeakComposition(cb))) return;
                     std::vector<WeakComposition> admissible;
                     detail::for_each_placement(ca.size(), N, [&](const std::vector<std::size_t>& pos) {
                       std::vector<int> pa(N, 0), pb(N, 0), pz(N, 0);
                       for (std::size_t r = 0; r < pos.size(); ++r) {
                         pa[pos[r]] = ca[r];
                         pb[pos[r]] = cb[r];
                         pz[pos[r]] = ca[r] + cb[r];
                       }
                       if (dominance_leq(a, WeakComposition(pa)) && dominance_leq(b, WeakComposition(pb)))
                         admissible.emplace_back(std::move(pz));
                     });
                     out.add(detail::unique_dominance_least(admissible, "BumpRuns"), 1);
                   });
  return out;
}

// Overlapping slide product; results have length max(len a, len b).
inline FormalSum<WeakComposition> overlapping_slide_product(const WeakComposition& a, const WeakComposition& b) {
  std::size_t N = std::max(a.size(), b.size());
  auto ap = positive_part(a), bp = positive_part(b);
  FormalSum<WeakComposition> out;
  for (std::size_t k = 0; k <= N; ++k) {
    auto a_choices = zero_insertions(ap, k);
    auto b_choices = zero_insertions(bp, k);
    for (const auto& a1 : a_choices) {
      if (!dominance_leq(a, a1)) continue;
      for (const auto& b1 : b_choices) {
        if (!dominance_leq(b, b1)) continue;
        std::vector<int> sum(k);
        bool covered = true;
        for (std::size_t i = 0; i < k; ++i) {
          sum[i] = a1[i] + b1[i];
          if (sum[i] == 0) covered = false;
        }
        if (!covered) continue;
        std::vector<WeakComposition> admissible;
        detail::for_each_placement(k, N, [&](const std::vector<std::size_t>& pos) {
          std::vector<int> pa(N, 0), pb(N, 0), pz(N, 0);
          for (std::size_t r = 0; r < k; ++r) {
            pa[pos[r]] = a1[r];
            pb[pos[r]] = b1[r];
            pz[pos[r]] = sum[r];
          }
          if (dominance_leq(a, WeakComposition(pa)) && dominance_leq(b, WeakComposition(pb)))
            admissible.emplace_back(std::move(pz));
        });
        out.add(detail::unique_dominance_least(admissible, "Bump"), 1);
      }
    }
  }
  return out;
}

// --- Littlewood-Richardson --------------------------------------------------------------

// Yamanouchi skew tableaux of shape nu/lambda with content mu.
inline Coeff lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.total() + mu.total() != nu.total()) return 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > nu.entry(i)) return 0;
  auto content = as_weak(mu);
  Coeff count = 0;
  for (const auto& t : enumerate_ssyt(nu, lambda, static_cast<int>(mu.size())))
    if (t.weight(mu.size()) == content && t.is_yamanouchi()) ++count;
  return count;
}

inline FormalSum<Partition> lr_product(const Partition& lambda, const Partition& mu) {
  FormalSum<Partition> out;
  for (const auto& nu : partitions_of(lambda.total() + mu.total())) out.add(nu, lr_coefficient(lambda, mu, nu));
  return out;
}

// --- structure constants ------------------------------------------------------------------

inline BasisExpansion structure_constants(BasisId basis, const BasisIndex& a, const BasisIndex& b, std::size_t n) {
  const auto& fa = cached_basis_polynomial(basis, a, n);
  const auto& fb = cached_basis_polynomial(basis, b, n);
  return expand_via_solver(fa * fb, basis, n);
}

// Default ambient size for products: total degree for Sym and QSym, longest
// index for weak compositions, largest permutation for Schubert.
inline std::size_t default_product_n(BasisId basis, const BasisIndex& a, const BasisIndex& b) {
  switch (species_of(basis)) {
    case Species::partition:
    case Species::strong: return std::max<std::size_t>(1, index_degree(a) + index_degree(b));
    case Species::weak:
      return std::max<std::size_t>({1, std::get<WeakComposition>(a).size(), std::get<WeakComposition>(b).size()});
    case Species::permutation:
      return std::max<std::size_t>({1, std::get<Permutation>(a).trimmed().size(), std::get<Permutation>(b).trimmed().size()});
  }
  return 1;
}

struct StructureTable {
  BasisId basis;
  std::size_t n;
  std::map<std::tuple<BasisIndex, BasisIndex, BasisIndex>, Coeff> entries;
};

inline StructureTable structure_table(BasisId basis, const std::vector<BasisIndex>& indices, std::size_t n) {
  StructureTable t{basis, n, {}};
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j)
      for (const auto& [c, k] : structure_constants(basis, indices[i], indices[j], n).terms)
        t.entries[{indices[i], indices[j], c}] = k;
  return t;
}

// --- rule verification ------------------------------------------------------------------------

enum class ProductRule { shuffle_F, oshuffle_M, slide_fslide, oslide_mslide, lr_s };

inline std::string_view rule_name(ProductRule r) {
  switch (r) {
    case ProductRule::shuffle_F: return "shuffle->F";
    case ProductRule::oshuffle_M: return "oshuffle->M";
    case ProductRule::slide_fslide: return "slide->fslide";
    case ProductRule::oslide_mslide: return "oslide->mslide";
    case ProductRule::lr_s: return "LR->s";
  }
  return "?";
}

inline BasisId rule_basis(ProductRule r) {
  switch (r) {
    case ProductRule::shuffle_F: return BasisId::F;
    case ProductRule::oshuffle_M: return BasisId::M;
    case ProductRule::slide_fslide: return BasisId::fslide;
    case ProductRule::oslide_mslide: return BasisId::mslide;
    case ProductRule::lr_s: return BasisId::s;
  }
  return BasisId::x;
}

// The combinatorial product as an expansion in n variables (terms vanishing there dropped).
inline BasisExpansion combinatorial_product(ProductRule rule, const BasisIndex& a, const BasisIndex& b, std::size_t n) {
  BasisExpansion out{rule_basis(rule), n, {}};
  switch (rule) {
    case ProductRule::shuffle_F:
    case ProductRule::oshuffle_M: {
      const auto& x = std::get<StrongComposition>(a);
      const auto& y = std::get<StrongComposition>(b);
      auto sum = rule == ProductRule::shuffle_F ? shuffle_product(x, y) : overlapping_shuffle_product(x, y);
      for (const auto& [g, c] : sum)
        if (g.size() <= n) out.terms.add(g, c);
      break;
    }
    case ProductRule::slide_fslide:
    case ProductRule::oslide_mslide: {
      auto x = padded(std::get<WeakComposition>(a), n);
      auto y = padded(std::get<WeakComposition>(b), n);
      auto sum = rule == ProductRule::slide_fslide ? slide_product(x, y) : overlapping_slide_product(x, y);
      for (const auto& [g, c] : sum) out.terms.add(g, c);
      break;
    }
    case ProductRule::lr_s:
      for (const auto& [nu, c] : lr_product(std::get<Partition>(a), std::get<Partition>(b)))
        if (nu.size() <= n) out.terms.add(nu, c);
      break;
  }
  return out;
}

struct ProductCheck {
  BasisIndex a, b;
  std::size_t n;
  BasisExpansion combinatorial, solver;
  bool agrees() const { return combinatorial == solver; }
};

struct ProductRuleReport {
  ProductRule rule;
  std::size_t checked = 0;
  std::vector<ProductCheck> mismatches;
  bool ok() const { return mismatches.empty(); }
};

inline ProductCheck check_product(ProductRule rule, const BasisIndex& a, const BasisIndex& b, std::size_t n) {
  return {a, b, n, combinatorial_product(rule, a, b, n), structure_constants(rule_basis(rule), a, b, n)};
}

// Sweep sizes: QSym and LR rules use all indices of size at most max_size with
// n = |a|+|b|; slide rules use entries at most max_entry and length max_len.
struct ProductSweep {
  int max_size = 3;
  int max_entry = 2;
  std::size_t max_len = 3;
};

inline std::vector<std::pair<BasisIndex, BasisIndex>> product_sweep_pairs(ProductRule rule, const ProductSweep& s) {
  std::vector<BasisIndex> idx;
  switch (rule) {
    case ProductRule::shuffle_F:
    case ProductRule::oshuffle_M:
      for (int d = 1; d <= s.max_size; ++d)
        for (auto& c : strong_compositions_of(d)) idx.emplace_back(c);
      break;
    case ProductRule::lr_s:
      for (int d = 1; d <= s.max_size; ++d)
        for (auto& p : partitions_of(d)) idx.emplace_back(p);
      break;
    default:
      for (auto& a : bounded_weak_compositions(s.max_entry, s.max_len)) idx.emplace_back(a);
  }
  std::vector<std::pair<BasisIndex, BasisIndex>> pairs;
  for (const auto& x : idx)
    for (const auto& y : idx) pairs.emplace_back(x, y);
  return pairs;
}

inline ProductRuleReport verify_product_rule(ProductRule rule, const ProductSweep& s = {}) {
  auto pairs = product_sweep_pairs(rule, s);
  auto checks = parallel_map(pairs.size(), [&](std::size_t i) {
    const auto& [a, b] = pairs[i];
    std::size_t n = species_of(rule_basis(rule)) == Species::weak ? s.max_len : default_product_n(rule_basis(rule), a, b);
    return check_product(rule, a, b, n);
  });
  ProductRuleReport r{rule, checks.size(), {}};
  for (auto& c : checks)
    if (!c.agrees()) r.mismatches.push_back(std::move(c));
  return r;
}

// --- conjecture harness -----------------------------------------------------------------------

struct ConjectureReport {
  std::size_t pairs = 0;
  Coeff max_coefficient = 0;
  // (a, b, atom index, coefficient) for every negative coefficient found
  std::vector<std::tuple<WeakComposition, WeakComposition, BasisIndex, Coeff>> negatives;
  bool ok() const { return negatives.empty(); }
};

// Key products expanded in Demazure atoms, all unordered pairs with entries
// at most max_entry and length max_len.
inline ConjectureReport reiner_shimozono(int max_entry, std::size_t max_len) {
  auto comps = bounded_weak_compositions(max_entry, max_len);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i; j < comps.size(); ++j) pairs.emplace_back(i, j);
  auto results = parallel_map(pairs.size(), [&](std::size_t k) {
    const auto& a = comps[pairs[k].first];
    const auto& b = comps[pairs[k].second];
    auto f = cached_basis_polynomial(BasisId::key, a, max_len) * cached_basis_polynomial(BasisId::key, b, max_len);
    return positivity_report(expand_via_solver(f, BasisId::atom, max_len));
  });
  ConjectureReport r;
  r.pairs = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    r.max_coefficient = std::max(r.max_coefficient, results[k].max_coefficient);
    for (const auto& [i, c] : results[k].negatives)
      r.negatives.emplace_back(comps[pairs[k].first], comps[pairs[k].second], i, c);
  }
  return r;
}

struct NegativeWitness {
  BasisIndex a, b, c;
  Coeff coefficient;
};

// First product (in sweep order) with a negative structure constant.
inline std::optional<NegativeWitness> find_negative_structure_constant(BasisId basis,
                                                                       const std::vector<BasisIndex>& indices,
                                                                       std::function<std::size_t(const BasisIndex&, const BasisIndex&)> ambient) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i; j < indices.size(); ++j) pairs.emplace_back(i, j);
  auto results = parallel_map(pairs.size(), [&](std::size_t k) {
    const auto& a = indices[pairs[k].first];
    const auto& b = indices[pairs[k].second];
    return positivity_report(structure_constants(basis, a, b, ambient(a, b)));
  });
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (!results[k].positive()) {
      const auto& [c, coeff] = results[k].negatives.front();
      return NegativeWitness{indices[pairs[k].first], indices[pairs[k].second], c, coeff};
    }
  return std::nullopt;
}

}  // namespace asympoly
