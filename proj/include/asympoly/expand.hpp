#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bases.hpp"

namespace asympoly {

struct BasisExpansion {
  BasisId basis = BasisId::x;
  std::size_t n = 0;
  FormalSum<BasisIndex> terms;

  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

// "basis index coefficient" per line, indices in increasing order.
inline std::string to_text(const BasisExpansion& e) {
  std::string out;
  for (const auto& [i, c] : e.terms) {
    out += basis_name(e.basis);
    out += ' ';
    out += to_string(i);
    out += ' ';
    out += c.str();
    out += '\n';
  }
  return out;
}

inline Polynomial to_polynomial(const BasisExpansion& e) {
  Polynomial f(e.n);
  for (const auto& [i, c] : e.terms) f += cached_basis_polynomial(e.basis, i, e.n) * c;
  return f;
}

// --- solver ---------------------------------------------------------------------

enum class Direction { min, max };

inline Direction natural_direction(BasisId id) {
  return world_of(id) == World::asymmetric ? Direction::min : Direction::max;
}

namespace detail {

// Sorted part first, then the monomial itself, both by prefix-sum-lex.
inline bool sorted_then_pslex_less(const WeakComposition& a, const WeakComposition& b) {
  auto sa = as_weak(sort_decreasing(a), a.size()), sb = as_weak(sort_decreasing(b), b.size());
  if (auto c = term_order_compare(sa, sb); c != 0) return c < 0;
  return term_order_compare(a, b) < 0;
}

inline bool extraction_less(BasisId target, const WeakComposition& a, const WeakComposition& b) {
  if (world_of(target) == World::asymmetric) return term_order_compare(a, b) < 0;
  return sorted_then_pslex_less(a, b);
}

inline BasisIndex leading_index(BasisId target, const WeakComposition& b) {
  switch (world_of(target)) {
    case World::asymmetric:
      if (target == BasisId::schubert) return code_to_permutation(b);
      return b;
    case World::symmetric: {
      auto lambda = sort_decreasing(b);
      if (as_weak(lambda, b.size()) != b)
        throw error(errc::not_in_span, "extreme monomial " + to_string(b) + " is not partition shaped");
      if (target == BasisId::e) return conjugate(lambda);
      return lambda;
    }
    case World::quasisymmetric: {
      auto alpha = positive_part(b);
      if (as_weak(alpha, b.size()) != b)
        throw error(errc::not_in_span, "extreme monomial " + to_string(b) + " is not left justified");
      return alpha;
    }
  }
  throw error(errc::internal_error, "unreachable");
}

inline void solve_component(Polynomial r, BasisId target, Direction dir, BasisExpansion& out) {
  std::size_t n = r.nvars();
  while (!r.is_zero()) {
    const WeakComposition* pick = nullptr;
    for (const auto& [e, c] : r) {
      if (!pick) {
        pick = &e;
        continue;
      }
      bool better = dir == Direction::min ? extraction_less(target, e, *pick) : extraction_less(target, *pick, e);
      if (better) pick = &e;
    }
    WeakComposition b = *pick;
    Coeff c = r.coefficient(b);
    auto index = leading_index(target, b);
    const auto& B = cached_basis_polynomial(target, index, n);
    if (B.coefficient(b) != 1)
      throw error(errc::triangularity_violation,
                  std::string(basis_name(target)) + " " + to_string(index) + " does not have leading coefficient 1");
    for (const auto& [e, k] : B) {
      if (e == b) continue;
      bool beyond = dir == Direction::min ? extraction_less(target, b, e) : extraction_less(target, e, b);
      if (!beyond)
        throw error(errc::triangularity_violation,
                    std::string(basis_name(target)) + " " + to_string(index) + " has term " + to_string(e) +
                        " on the wrong side of " + to_string(b));
    }
    out.terms.add(index, c);
    r -= B * c;
    if (r.coefficient(b) != 0) throw error(errc::triangularity_violation, "selected monomial survived subtraction");
  }
}

// The h basis is not unitriangular in finitely many variables; solve densely.
inline void solve_complete_homogeneous(const Polynomial& f, int degree, BasisExpansion& out) {
  using Rational = boost::multiprecision::cpp_rational;
  std::size_t n = f.nvars();
  if (!is_symmetric(f)) throw error(errc::not_in_span, "input is not symmetric");
  auto rows = partitions_of(degree, -1, static_cast<int>(n));
  auto cols = partitions_of(degree, static_cast<int>(n));
  std::size_t R = rows.size(), C = cols.size();
  std::vector<std::vector<Rational>> A(R, std::vector<Rational>(C + 1));
  for (std::size_t j = 0; j < C; ++j) {
    const auto& H = cached_basis_polynomial(BasisId::h, cols[j], n);
    for (std::size_t i = 0; i < R; ++i) A[i][j] = Rational(H.coefficient(as_weak(rows[i], n)));
  }
  for (std::size_t i = 0; i < R; ++i) A[i][C] = Rational(f.coefficient(as_weak(rows[i], n)));
  std::size_t rank = 0;
  for (std::size_t j = 0; j < C && rank < R; ++j) {
    std::size_t piv = rank;
    while (piv < R && A[piv][j] == 0) ++piv;
    if (piv == R) continue;
    std::swap(A[piv], A[rank]);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == rank || A[i][j] == 0) continue;
      Rational factor = A[i][j] / A[rank][j];
      for (std::size_t k = j; k <= C; ++k) A[i][k] -= factor * A[rank][k];
    }
    ++rank;
  }
  if (rank != C) throw error(errc::triangularity_violation, "h basis is singular in this degree");
  Polynomial check(n);
  for (std::size_t j = 0; j < C; ++j) {
    Rational v = A[j][C] / A[j][j];
    if (denominator(v) != 1) throw error(errc::not_in_span, "non-integral h coefficient");
    Coeff c = numerator(v);
    out.terms.add(cols[j], c);
    check += cached_basis_polynomial(BasisId::h, cols[j], n) * c;
  }
  if (check != f) throw error(errc::not_in_span, "input is not in the span of the h basis");
}

}  // namespace detail

// Expands f in the target basis by repeatedly peeling the extreme monomial.
inline BasisExpansion expand_via_solver(const Polynomial& f, BasisId target, std::size_t n,
                                        std::optional<Direction> direction = std::nullopt) {
  if (f.nvars() != n) throw error(errc::ambient_mismatch, "polynomial variable count differs from n");
  BasisExpansion out{target, n, {}};
  for (const auto& [d, part] : f.homogeneous_components()) {
    if (target == BasisId::h)
      detail::solve_complete_homogeneous(part, d, out);
    else
      detail::solve_component(part, target, direction.value_or(natural_direction(target)), out);
  }
  return out;
}

// --- combinatorial rules ----------------------------------------------------------

// Number of semistandard tableaux of shape lambda and content mu, peeling the
// largest label as a horizontal strip.
inline Coeff kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.total() != mu.total()) return 0;
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  int k = mu[mu.size() - 1];
  Partition rest(std::vector<int>(mu.begin(), mu.end() - 1));
  std::vector<int> rho(lambda.size());
  Coeff count = 0;
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i == lambda.size()) {
      if (left != 0) return;
      auto v = rho;
      while (!v.empty() && v.back() == 0) v.pop_back();
      count += kostka(Partition(std::move(v)), rest);
      return;
    }
    int lo = lambda.entry(i + 1);
    for (int r = lambda[i]; r >= lo && lambda[i] - r <= left; --r) {
      rho[i] = r;
      self(self, i + 1, left - (lambda[i] - r));
    }
  };
  rec(rec, 0, k);
  return count;
}

inline const std::vector<std::pair<BasisId, BasisId>>& supported_rules() {
  static const std::vector<std::pair<BasisId, BasisId>> rules{
      {BasisId::F, BasisId::M},           {BasisId::m, BasisId::M},
      {BasisId::s, BasisId::qs},          {BasisId::qs, BasisId::F},
      {BasisId::schubert, BasisId::fslide}, {BasisId::qkey, BasisId::atom},
      {BasisId::qkey, BasisId::fslide},   {BasisId::key, BasisId::atom},
      {BasisId::key, BasisId::qkey},      {BasisId::atom, BasisId::particle},
      {BasisId::fslide, BasisId::particle}, {BasisId::fslide, BasisId::mslide},
      {BasisId::mslide, BasisId::x},      {BasisId::fslide, BasisId::x},
      {BasisId::particle, BasisId::x},    {BasisId::s, BasisId::m},
      {BasisId::e, BasisId::s},           {BasisId::h, BasisId::s},
  };
  return rules;
}

inline bool has_rule(BasisId source, BasisId target) {
  for (const auto& [s, t] : supported_rules())
    if (s == source && t == target) return true;
  return false;
}

inline BasisExpansion combinatorial_expansion(BasisId source, const BasisIndex& index0, BasisId target, std::size_t n) {
  if (!has_rule(source, target))
    throw error(errc::unsupported_pair, "no combinatorial rule from " + std::string(basis_name(source)) + " to " +
                                            std::string(basis_name(target)));
  auto index = normalize_index(source, index0, n);
  BasisExpansion out{target, n, {}};
  auto add_strong = [&](const StrongComposition& beta, const Coeff& c) {
    if (beta.size() <= n) out.terms.add(beta, c);
  };
  auto add_partition = [&](const Partition& lambda, const Coeff& c) {
    if (lambda.size() <= n) out.terms.add(lambda, c);
  };

  switch (source) {
    case BasisId::F:
      for (const auto& beta : refinements(std::get<StrongComposition>(index))) add_strong(beta, 1);
      break;
    case BasisId::m: {
      const auto& lambda = std::get<Partition>(index);
      if (lambda.size() > n) break;
      for (const auto& b : rearrangements(as_weak(lambda))) add_strong(StrongComposition(b.parts()), 1);
      break;
    }
    case BasisId::s: {
      const auto& lambda = std::get<Partition>(index);
      if (lambda.size() > n) break;
      if (target == BasisId::qs) {
        for (const auto& b : rearrangements(as_weak(lambda))) add_strong(StrongComposition(b.parts()), 1);
      } else {
        for (const auto& mu : partitions_of(lambda.total(), -1, static_cast<int>(n))) add_partition(mu, kostka(lambda, mu));
      }
      break;
    }
    case BasisId::e:
    case BasisId::h: {
      const auto& lambda = std::get<Partition>(index);
      for (const auto& nu : partitions_of(lambda.total(), -1, static_cast<int>(n))) {
        auto shape = source == BasisId::e ? conjugate(nu) : nu;
        add_partition(nu, kostka(shape, lambda));
      }
      break;
    }
    case BasisId::qs: {
      for (const auto& b : zero_insertions(std::get<StrongComposition>(index), n))
        for (const auto& t : enumerate_composition_tableaux(b, n))
          if (is_initial(t) && is_quasi_yamanouchi(t)) add_strong(positive_part(t.weight(n)), 1);
      break;
    }
    case BasisId::schubert:
      for (const auto& d : enumerate_pipe_dreams(std::get<Permutation>(index)))
        if (is_quasi_yamanouchi(d)) out.terms.add(d.weight(n), 1);
      break;
    case BasisId::qkey: {
      const auto& a = std::get<WeakComposition>(index);
      if (target == BasisId::atom) {
        for (const auto& b : dominating_rearrangements(a)) out.terms.add(b, 1);
      } else {
        std::set<int> need;
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] > 0) need.insert(static_cast<int>(i) + 1);
        for (const auto& b : dominating_rearrangements(a))
          for (const auto& t : enumerate_composition_tableaux(b, n)) {
            auto sup = t.support();
            if (is_quasi_yamanouchi(t) && std::includes(sup.begin(), sup.end(), need.begin(), need.end()))
              out.terms.add(t.weight(n), 1);
          }
      }
      break;
    }
    case BasisId::key: {
      const auto& a = std::get<WeakComposition>(index);
      for (const auto& b : target == BasisId::atom ? lswap_closure(a) : qlswap(a)) out.terms.add(b, 1);
      break;
    }
    case BasisId::atom:
      for (const auto& t : enumerate_composition_tableaux(std::get<WeakComposition>(index), n))
        if (is_particle_highest(t)) out.terms.add(t.weight(n), 1);
      break;
    case BasisId::fslide: {
      const auto& a = std::get<WeakComposition>(index);
      if (target == BasisId::particle) {
        for (const auto& b : dominating_rearrangements(a)) out.terms.add(b, 1);
      } else if (target == BasisId::x) {
        for (const auto& [b, c] : fundamental_slide(a, n)) out.terms.add(b, c);
      } else {
        // b with b+ refining a+, b >= a, minimal in its positive-part class above a
        for (const auto& beta : refinements(positive_part(a))) {
          std::vector<WeakComposition> above;
          for (const auto& c : zero_insertions(beta, n))
            if (dominance_leq(a, c)) above.push_back(c);
          for (const auto& b : above)
            if (std::all_of(above.begin(), above.end(), [&](const auto& c) { return dominance_leq(b, c); }))
              out.terms.add(b, 1);
        }
      }
      break;
    }
    case BasisId::mslide:
      for (const auto& b : dominating_rearrangements(std::get<WeakComposition>(index))) out.terms.add(b, 1);
      break;
    case BasisId::particle:
      for (const auto& t : enumerate_particle_tableaux(std::get<WeakComposition>(index), n))
        out.terms.add(t.weight(n), 1);
      break;
    default:
      throw error(errc::unsupported_pair, "no combinatorial rule for this source");
  }
  return out;
}

// Pushes every term of e through the rule e.basis -> target.
inline BasisExpansion compose(const BasisExpansion& e, BasisId target) {
  BasisExpansion out{target, e.n, {}};
  for (const auto& [i, c] : e.terms)
    for (const auto& [j, k] : combinatorial_expansion(e.basis, i, target, e.n).terms) out.terms.add(j, c * k);
  return out;
}

// --- reports ------------------------------------------------------------------------

struct ExpansionCheck {
  BasisId source, target;
  BasisIndex index;
  std::size_t n;
  BasisExpansion combinatorial, solver;

  bool agrees() const { return combinatorial == solver; }

  // Indices whose coefficients differ.
  std::size_t mismatches() const {
    auto diff = combinatorial.terms - solver.terms;
    return diff.size();
  }
};

inline ExpansionCheck verify_expansion(BasisId source, const BasisIndex& index, BasisId target, std::size_t n) {
  auto comb = combinatorial_expansion(source, index, target, n);
  auto solved = expand_via_solver(basis_polynomial(source, index, n), target, n);
  return {source, target, index, n, std::move(comb), std::move(solved)};
}

inline std::string status_line(std::size_t mismatches) {
  return mismatches == 0 ? "OK\n" : "MISMATCH " + std::to_string(mismatches) + " entries\n";
}

inline std::string to_text(const ExpansionCheck& c) { return to_text(c.combinatorial) + status_line(c.mismatches()); }

struct PositivityReport {
  std::vector<std::pair<BasisIndex, Coeff>> negatives;
  Coeff max_coefficient = 0;
  bool positive() const { return negatives.empty(); }
};

inline PositivityReport positivity_report(const BasisExpansion& e) {
  PositivityReport r;
  for (const auto& [i, c] : e.terms) {
    if (c < 0) r.negatives.emplace_back(i, c);
    r.max_coefficient = std::max(r.max_coefficient, c);
  }
  return r;
}

enum class StableFamily { key, quasikey };

struct StableLimitReport {
  struct Step {
    std::size_t m;
    Polynomial window;  // in the window variables
    bool matches_limit;
    bool matches_previous;
  };
  Polynomial limit;
  std::vector<Step> steps;
  std::optional<std::size_t> stabilized_at;  // first m from which every later step equals the limit
  bool stable() const { return stabilized_at.has_value(); }
};

// Compares the 0^m a family member, cut to monomials in the first w variables,
// with the symmetric (key) or quasisymmetric (quasikey) limit in w variables.
inline StableLimitReport stable_limit_probe(StableFamily family, const WeakComposition& a, std::size_t m_max,
                                            std::size_t w) {
  StableLimitReport r;
  r.limit = family == StableFamily::key ? schur(sort_decreasing(a), w) : quasi_schur(positive_part(a), w);
  std::optional<Polynomial> prev;
  for (std::size_t m = 0; m <= m_max; ++m) {
    auto b = prepend_zeros(a, m);
    std::size_t n = b.size();
    auto f = family == StableFamily::key ? key_kohnert(b, n) : quasikey(b, n);
    auto win = n >= w ? f.window(w).with_nvars(w) : f.with_nvars(w);
    bool same_prev = prev && *prev == win;
    r.steps.push_back({m, win, win == r.limit, same_prev});
    prev = win;
  }
  for (std::size_t k = r.steps.size(); k-- > 0;) {
    if (!r.steps[k].matches_limit) break;
    r.stabilized_at = r.steps[k].m;
  }
  return r;
}

}  // namespace asympoly
