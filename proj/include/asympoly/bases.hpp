#pragma once

#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>

#include "polynomial.hpp"
#include "tableaux.hpp"

namespace asympoly {

enum class BasisId { x, m, e, h, s, M, F, qs, fslide, mslide, particle, atom, qkey, key, schubert };

enum class World { symmetric, quasisymmetric, asymmetric };

enum class Species { partition, strong, weak, permutation };

inline constexpr std::array<BasisId, 15> all_bases{
    BasisId::x,      BasisId::m,        BasisId::e,    BasisId::h,    BasisId::s,
    BasisId::M,      BasisId::F,        BasisId::qs,   BasisId::fslide, BasisId::mslide,
    BasisId::particle, BasisId::atom,   BasisId::qkey, BasisId::key,  BasisId::schubert};

inline std::string_view basis_name(BasisId id) {
  switch (id) {
    case BasisId::x: return "x";
    case BasisId::m: return "m";
    case BasisId::e: return "e";
    case BasisId::h: return "h";
    case BasisId::s: return "s";
    case BasisId::M: return "M";
    case BasisId::F: return "F";
    case BasisId::qs: return "qs";
    case BasisId::fslide: return "fslide";
    case BasisId::mslide: return "mslide";
    case BasisId::particle: return "particle";
    case BasisId::atom: return "atom";
    case BasisId::qkey: return "qkey";
    case BasisId::key: return "key";
    case BasisId::schubert: return "schubert";
  }
  return "?";
}

inline BasisId parse_basis_id(std::string_view name) {
  for (auto id : all_bases)
    if (basis_name(id) == name) return id;
  throw error(errc::parse_error, "unknown basis '" + std::string(name) + "'");
}

inline World world_of(BasisId id) {
  switch (id) {
    case BasisId::m:
    case BasisId::e:
    case BasisId::h:
    case BasisId::s: return World::symmetric;
    case BasisId::M:
    case BasisId::F:
    case BasisId::qs: return World::quasisymmetric;
    default: return World::asymmetric;
  }
}

inline Species species_of(BasisId id) {
  switch (world_of(id)) {
    case World::symmetric: return Species::partition;
    case World::quasisymmetric: return Species::strong;
    case World::asymmetric: return id == BasisId::schubert ? Species::permutation : Species::weak;
  }
  return Species::weak;
}

using BasisIndex = std::variant<Partition, StrongComposition, WeakComposition, Permutation>;

inline std::string to_string(const BasisIndex& i) {
  return std::visit([](const auto& v) { return to_string(v); }, i);
}

inline Species species_of(const BasisIndex& i) { return static_cast<Species>(i.index()); }

inline BasisIndex parse_index(BasisId id, std::string_view text) {
  switch (species_of(id)) {
    case Species::partition: return parse_partition(text);
    case Species::strong: return parse_strong_composition(text);
    case Species::weak: return parse_weak_composition(text);
    case Species::permutation: return parse_permutation(text);
  }
  throw error(errc::internal_error, "unreachable");
}

inline void check_species(BasisId id, const BasisIndex& i) {
  if (species_of(i) != species_of(id))
    throw error(errc::species_mismatch, "index " + to_string(i) + " does not fit basis " + std::string(basis_name(id)));
}

// Degree of the basis element.
inline int index_degree(const BasisIndex& i) {
  return std::visit(
      [](const auto& v) -> int {
        if constexpr (requires { v.total(); })
          return v.total();
        else
          return static_cast<int>(v.length());
      },
      i);
}

namespace detail {

template <class Range>
Polynomial sum_of_weights(const Range& objects, std::size_t n) {
  Polynomial f(n);
  for (const auto& o : objects) f.add_term(o.weight(n), 1);
  return f;
}

inline WeakComposition fit_weak(const WeakComposition& a, std::size_t n) {
  if (a.size() > n) throw error(errc::n_too_small, "index " + to_string(a) + " is longer than n");
  return padded(a, n);
}

}  // namespace detail

// --- symmetric world ----------------------------------------------------------

inline Polynomial monomial_symmetric(const Partition& lambda, std::size_t n) {
  Polynomial f(n);
  if (lambda.size() > n) return f;
  for (const auto& b : rearrangements(as_weak(lambda, n))) f.add_term(b, 1);
  return f;
}

// Littlewood: sum over semistandard tableaux of shape lambda.
inline Polynomial schur(const Partition& lambda, std::size_t n) {
  return detail::sum_of_weights(enumerate_ssyt(lambda, static_cast<int>(n)), n);
}

// Standard convention: e_k = s_{1^k}, h_k = s_{(k)}.
inline Polynomial elementary(const Partition& lambda, std::size_t n) {
  auto f = Polynomial::constant(n, 1);
  for (int part : lambda) f *= schur(Partition(std::vector<int>(part, 1)), n);
  return f;
}

inline Polynomial complete_homogeneous(const Partition& lambda, std::size_t n) {
  auto f = Polynomial::constant(n, 1);
  for (int part : lambda) f *= schur(Partition{part}, n);
  return f;
}

inline Polynomial schur_bialternant(const Partition& lambda, std::size_t n) {
  if (lambda.size() > n) return Polynomial(n);
  auto d = staircase(n).parts();
  for (std::size_t i = 0; i < n; ++i) d[i] += lambda.entry(i);
  return exact_divide(alternant(WeakComposition(d)), vandermonde(n));
}

// --- quasisymmetric world -------------------------------------------------------

inline Polynomial monomial_quasisymmetric(const StrongComposition& alpha, std::size_t n) {
  Polynomial f(n);
  for (const auto& b : zero_insertions(alpha, n)) f.add_term(b, 1);
  return f;
}

inline Polynomial fundamental_quasisymmetric(const StrongComposition& alpha, std::size_t n) {
  Polynomial f(n);
  for (const auto& beta : refinements(alpha)) f += monomial_quasisymmetric(beta, n);
  return f;
}

inline Polynomial quasi_schur(const StrongComposition& alpha, std::size_t n) {
  Polynomial f(n);
  for (const auto& b : zero_insertions(alpha, n)) f += detail::sum_of_weights(enumerate_composition_tableaux(b, n), n);
  return f;
}

// --- asymmetric world -----------------------------------------------------------

// x^b over b >= a with b+ refining a+.
inline Polynomial fundamental_slide(const WeakComposition& a0, std::size_t n) {
  auto a = detail::fit_weak(a0, n);
  Polynomial f(n);
  for (const auto& beta : refinements(positive_part(a)))
    for (const auto& b : zero_insertions(beta, n))
      if (dominance_leq(a, b)) f.add_term(b, 1);
  return f;
}

// x^b over b >= a with b+ = a+.
inline Polynomial monomial_slide(const WeakComposition& a0, std::size_t n) {
  auto a = detail::fit_weak(a0, n);
  Polynomial f(n);
  for (const auto& b : zero_insertions(positive_part(a), n))
    if (dominance_leq(a, b)) f.add_term(b, 1);
  return f;
}

inline Polynomial fundamental_particle(const WeakComposition& a, std::size_t n) {
  return detail::sum_of_weights(enumerate_particle_tableaux(detail::fit_weak(a, n), n), n);
}

inline Polynomial demazure_atom(const WeakComposition& a, std::size_t n) {
  return detail::sum_of_weights(enumerate_composition_tableaux(detail::fit_weak(a, n), n), n);
}

// Weak compositions b >= a with b+ = a+.
inline std::vector<WeakComposition> dominating_rearrangements(const WeakComposition& a) {
  std::vector<WeakComposition> out;
  for (const auto& b : zero_insertions(positive_part(a), a.size()))
    if (dominance_leq(a, b)) out.push_back(b);
  return out;
}

inline Polynomial quasikey(const WeakComposition& a0, std::size_t n) {
  auto a = detail::fit_weak(a0, n);
  Polynomial f(n);
  for (const auto& b : dominating_rearrangements(a)) f += demazure_atom(b, n);
  return f;
}

inline Polynomial key_kohnert(const WeakComposition& a, std::size_t n) {
  return detail::sum_of_weights(kohnert_closure(composition_diagram(detail::fit_weak(a, n))), n);
}

inline Polynomial key_demazure(const WeakComposition& a0, std::size_t n) {
  auto a = detail::fit_weak(a0, n);
  auto data = sorting_data(a);
  auto word = canonical_reduced_word(data.w);
  return apply_operator_word(word, OperatorKind::demazure, Polynomial::monomial(as_weak(data.sorted, n)));
}

inline Polynomial key_skyline(const WeakComposition& a, std::size_t n) {
  return detail::sum_of_weights(enumerate_key_skylines(detail::fit_weak(a, n), n), n);
}

namespace detail {

inline Permutation fit_permutation(const Permutation& p, std::size_t n) {
  auto q = p.trimmed();
  auto d = q.descents();
  if (!d.empty() && static_cast<std::size_t>(d.back()) > n)
    throw error(errc::n_too_small, "Schubert polynomial of " + to_string(p) + " needs more than n variables");
  return q;
}

}  // namespace detail

// Billey-Jockusch-Stanley: reduced words with compatible sequences.
inline Polynomial schubert_bjs(const Permutation& p0, std::size_t n) {
  auto p = detail::fit_permutation(p0, n);
  Polynomial f(n);
  for (const auto& word : reduced_words(p))
    for (const auto& beta : enumerate_compatible(word)) f.add_term(weight_of_labels(beta.parts(), n), 1);
  return f;
}

// Divided differences down from the staircase monomial.
inline Polynomial schubert_divided_difference(const Permutation& p0, std::size_t n) {
  auto p = detail::fit_permutation(p0, n);
  std::size_t m = std::max<std::size_t>(p.size(), 1);
  std::vector<int> rev(m);
  for (std::size_t i = 0; i < m; ++i) rev[i] = static_cast<int>(m - i);
  Permutation w0(std::move(rev));
  auto word = canonical_reduced_word(p.padded(m).inverse() * w0);
  auto f = apply_operator_word(word, OperatorKind::divided_difference, Polynomial::monomial(staircase(m)));
  return f.with_nvars(n);
}

inline Polynomial schubert_pipe_dreams(const Permutation& p0, std::size_t n) {
  auto p = detail::fit_permutation(p0, n);
  return detail::sum_of_weights(enumerate_pipe_dreams(p), n);
}

inline Polynomial schubert_kohnert(const Permutation& p0, std::size_t n) {
  auto p = detail::fit_permutation(p0, n);
  return detail::sum_of_weights(kohnert_closure(rothe_box_diagram(p)), n);
}

// The permutation whose code is the reverse of lambda padded to n.
inline Permutation grassmannian_permutation(const Partition& lambda, std::size_t n) {
  return code_to_permutation(reversed(as_weak(lambda, n)));
}

inline Polynomial schur_schubert(const Partition& lambda, std::size_t n) {
  if (lambda.size() > n) return Polynomial(n);
  return schubert_bjs(grassmannian_permutation(lambda, n), n);
}

inline Polynomial schur_key(const Partition& lambda, std::size_t n) {
  if (lambda.size() > n) return Polynomial(n);
  return key_kohnert(reversed(as_weak(lambda, n)), n);
}

struct SchubertAlternatives {
  Polynomial divided_difference, bjs, pipe_dreams, kohnert;
  bool agree() const { return bjs == divided_difference && bjs == pipe_dreams && bjs == kohnert; }
};

inline SchubertAlternatives schubert_alternatives(const Permutation& p, std::size_t n) {
  return {schubert_divided_difference(p, n), schubert_bjs(p, n), schubert_pipe_dreams(p, n), schubert_kohnert(p, n)};
}

struct KeyAlternatives {
  Polynomial kohnert, demazure, skyline;
  bool agree() const { return kohnert == demazure && kohnert == skyline; }
};

inline KeyAlternatives key_alternatives(const WeakComposition& a, std::size_t n) {
  return {key_kohnert(a, n), key_demazure(a, n), key_skyline(a, n)};
}

struct SchurAlternatives {
  Polynomial littlewood, bialternant, schubert, key;
  bool agree() const { return littlewood == bialternant && littlewood == schubert && littlewood == key; }
};

inline SchurAlternatives schur_alternatives(const Partition& lambda, std::size_t n) {
  return {schur(lambda, n), schur_bialternant(lambda, n), schur_schubert(lambda, n), schur_key(lambda, n)};
}

// Default constructor for each basis.
inline Polynomial basis_polynomial(BasisId id, const BasisIndex& index, std::size_t n) {
  check_species(id, index);
  switch (id) {
    case BasisId::x: return Polynomial::monomial(detail::fit_weak(std::get<WeakComposition>(index), n));
    case BasisId::m: return monomial_symmetric(std::get<Partition>(index), n);
    case BasisId::e: return elementary(std::get<Partition>(index), n);
    case BasisId::h: return complete_homogeneous(std::get<Partition>(index), n);
    case BasisId::s: return schur(std::get<Partition>(index), n);
    case BasisId::M: return monomial_quasisymmetric(std::get<StrongComposition>(index), n);
    case BasisId::F: return fundamental_quasisymmetric(std::get<StrongComposition>(index), n);
    case BasisId::qs: return quasi_schur(std::get<StrongComposition>(index), n);
    case BasisId::fslide: return fundamental_slide(std::get<WeakComposition>(index), n);
    case BasisId::mslide: return monomial_slide(std::get<WeakComposition>(index), n);
    case BasisId::particle: return fundamental_particle(std::get<WeakComposition>(index), n);
    case BasisId::atom: return demazure_atom(std::get<WeakComposition>(index), n);
    case BasisId::qkey: return quasikey(std::get<WeakComposition>(index), n);
    case BasisId::key: return key_kohnert(std::get<WeakComposition>(index), n);
    case BasisId::schubert: return schubert_bjs(std::get<Permutation>(index), n);
  }
  throw error(errc::internal_error, "unreachable");
}

// Named alternative constructions: key (kohnert, demazure, skyline), schubert
// (bjs, divided-difference, pipe-dreams, kohnert), s (littlewood, bialternant,
// schubert, key). "default" means basis_polynomial.
inline Polynomial basis_polynomial(BasisId id, const BasisIndex& index, std::size_t n, std::string_view method) {
  if (method == "default") return basis_polynomial(id, index, n);
  check_species(id, index);
  if (id == BasisId::key) {
    const auto& a = std::get<WeakComposition>(index);
    if (method == "kohnert") return key_kohnert(a, n);
    if (method == "demazure") return key_demazure(a, n);
    if (method == "skyline") return key_skyline(a, n);
  } else if (id == BasisId::schubert) {
    const auto& p = std::get<Permutation>(index);
    if (method == "bjs") return schubert_bjs(p, n);
    if (method == "divided-difference") return schubert_divided_difference(p, n);
    if (method == "pipe-dreams") return schubert_pipe_dreams(p, n);
    if (method == "kohnert") return schubert_kohnert(p, n);
  } else if (id == BasisId::s) {
    const auto& l = std::get<Partition>(index);
    if (method == "littlewood") return schur(l, n);
    if (method == "bialternant") return schur_bialternant(l, n);
    if (method == "schubert") return schur_schubert(l, n);
    if (method == "key") return schur_key(l, n);
  }
  throw error(errc::invalid_argument,
              "unknown method " + std::string(method) + " for basis " + std::string(basis_name(id)));
}

// Smallest sensible ambient size for an index: its length, or the last
// descent of a permutation (at least 1).
inline std::size_t default_n(const BasisIndex& index) {
  if (auto p = std::get_if<Permutation>(&index)) {
    auto d = p->descents();
    return d.empty() ? 1 : static_cast<std::size_t>(*std::max_element(d.begin(), d.end()));
  }
  return std::visit([](const auto& s) { return std::max<std::size_t>(1, s.size()); }, index);
}

// Canonical form used as a cache key: weak indices padded to n, permutations trimmed.
inline BasisIndex normalize_index(BasisId id, const BasisIndex& index, std::size_t n) {
  check_species(id, index);
  if (auto a = std::get_if<WeakComposition>(&index)) return detail::fit_weak(*a, n);
  if (auto p = std::get_if<Permutation>(&index)) return detail::fit_permutation(*p, n);
  return index;
}

// Memo table keyed by (basis, index, n); readers share the lock.
class BasisCache {
 public:
  const Polynomial& get(BasisId id, const BasisIndex& index, std::size_t n) {
    Key key{id, normalize_index(id, index, n), n};
    {
      std::shared_lock lock(mu_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    auto f = basis_polynomial(id, std::get<1>(key), n);
    std::unique_lock lock(mu_);
    return table_.try_emplace(std::move(key), std::move(f)).first->second;
  }

  // Not safe while other threads hold references from get().
  void clear() {
    std::unique_lock lock(mu_);
    table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return table_.size();
  }

 private:
  using Key = std::tuple<BasisId, BasisIndex, std::size_t>;
  mutable std::shared_mutex mu_;
  std::map<Key, Polynomial> table_;
};

inline BasisCache& basis_cache() {
  static BasisCache cache;
  return cache;
}

inline const Polynomial& cached_basis_polynomial(BasisId id, const BasisIndex& index, std::size_t n) {
  return basis_cache().get(id, index, n);
}

}  // namespace asympoly
