#pragma once

#include <string>
#include <vector>

#include "products.hpp"

namespace asympoly {

struct SweepReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// "name checked N" plus the status, then one indented line per failure.
inline std::string to_text(const SweepReport& r) {
  std::string out = r.name + " checked " + std::to_string(r.checked) + " " + status_line(r.failures.size());
  for (const auto& f : r.failures) out += "  " + f + "\n";
  return out;
}

struct SweepBounds {
  int max_entry = 3;
  std::size_t max_len = 4;
  std::size_t max_perm = 5;
  int max_size = 5;  // Schur agreement
  std::size_t max_n = 4;
};

namespace detail {

template <class T, class F>
SweepReport run_sweep(std::string name, const std::vector<T>& items, F check) {
  auto results = parallel_map(items.size(), [&](std::size_t i) { return check(items[i]); });
  SweepReport r{std::move(name), items.size(), {}};
  for (auto& res : results)
    if (!res.empty()) r.failures.push_back(std::move(res));
  return r;
}

inline std::string describe(const BasisExpansion& e) { return to_string(e.terms); }

// Sweep index sets derived from bounded weak compositions.
inline std::vector<BasisIndex> sweep_indices(Species s, int max_entry, std::size_t max_len) {
  auto weak = bounded_weak_compositions(max_entry, max_len);
  std::set<BasisIndex> out;
  for (const auto& a : weak) switch (s) {
      case Species::weak: out.insert(a); break;
      case Species::strong:
        if (a.total() > 0) out.insert(positive_part(a));
        break;
      case Species::partition:
        if (a.total() > 0) out.insert(sort_decreasing(a));
        break;
      case Species::permutation: break;
    }
  if (s == Species::permutation)
    for (const auto& p : all_permutations(max_len)) out.insert(p);
  return {out.begin(), out.end()};
}

}  // namespace detail

// --- agreement of alternative constructions ----------------------------------------

inline SweepReport schubert_agreement_sweep(std::size_t max_perm) {
  return detail::run_sweep("schubert-constructions", all_permutations(max_perm), [&](const Permutation& p) {
    return schubert_alternatives(p, max_perm).agree() ? std::string{} : "schubert " + to_string(p);
  });
}

inline SweepReport key_agreement_sweep(int max_entry, std::size_t max_len) {
  return detail::run_sweep("key-constructions", bounded_weak_compositions(max_entry, max_len),
                           [&](const WeakComposition& a) {
                             return key_alternatives(a, max_len).agree() ? std::string{} : "key " + to_string(a);
                           });
}

inline SweepReport schur_agreement_sweep(int max_size, std::size_t max_n) {
  std::vector<std::pair<Partition, std::size_t>> items;
  for (int d = 0; d <= max_size; ++d)
    for (const auto& l : partitions_of(d))
      for (std::size_t n = std::max<std::size_t>(1, l.size()); n <= max_n; ++n) items.emplace_back(l, n);
  return detail::run_sweep("schur-constructions", items, [](const std::pair<Partition, std::size_t>& it) {
    return schur_alternatives(it.first, it.second).agree()
               ? std::string{}
               : "schur " + to_string(it.first) + " n=" + std::to_string(it.second);
  });
}

// --- expansion rules -------------------------------------------------------------------

// Every combinatorial rule against the solver, n = max_len.
inline SweepReport expansion_rule_sweep(int max_entry, std::size_t max_len) {
  std::vector<std::pair<std::pair<BasisId, BasisId>, BasisIndex>> items;
  for (const auto& rule : supported_rules())
    for (const auto& i : detail::sweep_indices(species_of(rule.first), max_entry, max_len)) items.emplace_back(rule, i);
  return detail::run_sweep("expansion-rules", items, [&](const auto& it) {
    auto [s, t] = it.first;
    auto c = verify_expansion(s, it.second, t, max_len);
    if (c.agrees()) return std::string{};
    return std::string(basis_name(s)) + to_string(it.second) + " -> " + std::string(basis_name(t)) +
           " rule " + detail::describe(c.combinatorial) + " solver " + detail::describe(c.solver);
  });
}

// All rule paths of length at least two from each source must agree with the
// solver expansion in the final basis.
inline SweepReport composed_rule_sweep(int max_entry, std::size_t max_len) {
  std::set<BasisId> sources;
  for (const auto& [s, t] : supported_rules()) sources.insert(s);
  std::vector<std::pair<BasisId, BasisIndex>> items;
  for (auto s : sources)
    for (const auto& i : detail::sweep_indices(species_of(s), max_entry, max_len)) items.emplace_back(s, i);
  return detail::run_sweep("composed-rules", items, [&](const std::pair<BasisId, BasisIndex>& it) {
    std::string bad;
    const auto& f = cached_basis_polynomial(it.first, it.second, max_len);
    auto walk = [&](auto& self, const BasisExpansion& e, std::string path, int depth) -> void {
      for (const auto& [s, t] : supported_rules()) {
        if (s != e.basis) continue;
        auto next = compose(e, t);
        auto p = path + "->" + std::string(basis_name(t));
        if (depth >= 1 && next != expand_via_solver(f, t, max_len) && bad.empty())
          bad = p + " at " + to_string(it.second) + " gives " + detail::describe(next);
        self(self, next, p, depth + 1);
      }
    };
    BasisExpansion start{it.first, max_len, {}};
    start.terms.add(normalize_index(it.first, it.second, max_len), 1);
    walk(walk, start, std::string(basis_name(it.first)), 0);
    return bad;
  });
}

// Solver-only Schubert to key expansion, coefficients checked nonnegative.
inline SweepReport schubert_key_positivity_sweep(std::size_t k) {
  return detail::run_sweep("schubert-key-positivity", all_permutations(k), [&](const Permutation& p) {
    auto e = expand_via_solver(cached_basis_polynomial(BasisId::schubert, p, k), BasisId::key, k);
    return positivity_report(e).positive() ? std::string{} : "schubert " + to_string(p) + " " + detail::describe(e);
  });
}

// --- products ----------------------------------------------------------------------------

inline SweepReport product_rule_sweep(ProductRule rule, const ProductSweep& s) {
  auto r = verify_product_rule(rule, s);
  SweepReport out{"product " + std::string(rule_name(rule)), r.checked, {}};
  for (const auto& m : r.mismatches)
    out.failures.push_back(to_string(m.a) + " * " + to_string(m.b) + " rule " + detail::describe(m.combinatorial) +
                           " solver " + detail::describe(m.solver));
  return out;
}

// Index pairs for structure-constant sweeps of one basis.
struct ProductPairs {
  std::vector<std::pair<BasisIndex, BasisIndex>> pairs;
  std::vector<std::size_t> n;
};

// QSym/Sym: sizes at most max_size with n = |a|+|b|; weak: entries at most
// max_entry, length max_len; Schubert: S_k pairs with total length at most max_degree.
inline ProductPairs structure_sweep_pairs(BasisId basis, int max_size, int max_entry, std::size_t max_len,
                                          std::size_t k, int max_degree) {
  std::vector<BasisIndex> idx;
  switch (species_of(basis)) {
    case Species::partition:
      for (int d = 1; d <= max_size; ++d)
        for (auto& l : partitions_of(d)) idx.emplace_back(l);
      break;
    case Species::strong:
      for (int d = 1; d <= max_size; ++d)
        for (auto& c : strong_compositions_of(d)) idx.emplace_back(c);
      break;
    case Species::weak:
      for (auto& a : bounded_weak_compositions(max_entry, max_len)) idx.emplace_back(a);
      break;
    case Species::permutation:
      for (auto& p : all_permutations(k)) idx.emplace_back(p);
      break;
  }
  ProductPairs out;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i; j < idx.size(); ++j) {
      std::size_t n = max_len;
      switch (species_of(basis)) {
        case Species::partition:
        case Species::strong: n = default_product_n(basis, idx[i], idx[j]); break;
        case Species::permutation:
          if (index_degree(idx[i]) + index_degree(idx[j]) > max_degree) continue;
          n = k;
          break;
        case Species::weak: break;
      }
      out.pairs.emplace_back(idx[i], idx[j]);
      out.n.push_back(n);
    }
  return out;
}

inline std::vector<PositivityReport> structure_positivity(BasisId basis, const ProductPairs& pp) {
  return parallel_map(pp.pairs.size(), [&](std::size_t i) {
    return positivity_report(structure_constants(basis, pp.pairs[i].first, pp.pairs[i].second, pp.n[i]));
  });
}

struct StructureSweepBounds {
  int max_size = 3;
  int max_entry = 2;
  std::size_t max_len = 3;
  std::size_t perm_size = 4;
  int max_degree = 6;
};

// Structure constants of a basis expected to be positive.
inline SweepReport structure_positivity_sweep(BasisId basis, const StructureSweepBounds& b = {}) {
  auto pp = structure_sweep_pairs(basis, b.max_size, b.max_entry, b.max_len, b.perm_size, b.max_degree);
  auto reports = structure_positivity(basis, pp);
  SweepReport r{"positivity " + std::string(basis_name(basis)), pp.pairs.size(), {}};
  for (std::size_t i = 0; i < reports.size(); ++i)
    if (!reports[i].positive()) {
      const auto& [c, k] = reports[i].negatives.front();
      r.failures.push_back(to_string(pp.pairs[i].first) + " * " + to_string(pp.pairs[i].second) + " has " + k.str() +
                           " at " + to_string(c));
    }
  return r;
}

struct WitnessReport {
  BasisId basis;
  std::size_t checked = 0;
  std::optional<NegativeWitness> witness;
  std::size_t n = 0;
};

// First pair in sweep order whose product has a negative coefficient.
inline WitnessReport negative_witness_search(BasisId basis, const StructureSweepBounds& b = {}) {
  auto pp = structure_sweep_pairs(basis, b.max_size, b.max_entry, b.max_len, b.perm_size, b.max_degree);
  auto reports = structure_positivity(basis, pp);
  WitnessReport w{basis, pp.pairs.size(), std::nullopt, 0};
  for (std::size_t i = 0; i < reports.size(); ++i)
    if (!reports[i].positive()) {
      const auto& [c, k] = reports[i].negatives.front();
      w.witness = NegativeWitness{pp.pairs[i].first, pp.pairs[i].second, c, k};
      w.n = pp.n[i];
      break;
    }
  return w;
}

inline std::string to_text(const WitnessReport& w) {
  std::string out = "witness " + std::string(basis_name(w.basis)) + " checked " + std::to_string(w.checked) + " ";
  if (!w.witness) return out + "none\n";
  return out + to_string(w.witness->a) + " * " + to_string(w.witness->b) + " n=" + std::to_string(w.n) + " has " +
         w.witness->coefficient.str() + " at " + to_string(w.witness->c) + "\n";
}

inline std::string to_text(const ConjectureReport& r) {
  std::string out = "pairs " + std::to_string(r.pairs) + "\nmax-coefficient " + r.max_coefficient.str() + "\n";
  for (const auto& [a, b, c, k] : r.negatives)
    out += "negative " + to_string(a) + " * " + to_string(b) + " at " + to_string(c) + " " + k.str() + "\n";
  return out + status_line(r.negatives.size());
}

// --- suites --------------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"schubert", "key",      "schur",    "expansions",
                                              "composed", "schubert-key", "products", "positivity"};
  return names;
}

inline std::vector<SweepReport> run_suite(const std::string& name, const SweepBounds& b) {
  std::vector<SweepReport> out;
  auto want = [&](const char* s) { return name == "all" || name == s; };
  bool known = name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
  if (!known) throw error(errc::invalid_argument, "unknown suite " + name);
  if (want("schubert")) out.push_back(schubert_agreement_sweep(b.max_perm));
  if (want("key")) out.push_back(key_agreement_sweep(b.max_entry, b.max_len));
  if (want("schur")) out.push_back(schur_agreement_sweep(b.max_size, b.max_n));
  if (want("expansions")) out.push_back(expansion_rule_sweep(b.max_entry, b.max_len));
  if (want("composed")) out.push_back(composed_rule_sweep(b.max_entry, b.max_len));
  if (want("schubert-key")) out.push_back(schubert_key_positivity_sweep(b.max_len));
  if (want("products")) {
    ProductSweep ps;
    for (auto r : {ProductRule::shuffle_F, ProductRule::oshuffle_M, ProductRule::slide_fslide,
                   ProductRule::oslide_mslide, ProductRule::lr_s})
      out.push_back(product_rule_sweep(r, ps));
  }
  if (want("positivity"))
    for (auto id : {BasisId::x, BasisId::m, BasisId::e, BasisId::h, BasisId::s, BasisId::M, BasisId::F,
                    BasisId::fslide, BasisId::mslide, BasisId::schubert})
      out.push_back(structure_positivity_sweep(id));
  return out;
}

}  // namespace asympoly
