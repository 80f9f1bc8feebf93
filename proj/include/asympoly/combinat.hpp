#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace asympoly {

using Coeff = boost::multiprecision::cpp_int;

namespace detail {

struct WeakKind {
  static constexpr const char* name = "weak composition";
  static void check(const std::vector<int>& v) {
    for (int x : v)
      if (x < 0) throw error(errc::invalid_argument, std::string(name) + " has a negative entry");
  }
};

struct StrongKind {
  static constexpr const char* name = "strong composition";
  static void check(const std::vector<int>& v) {
    for (int x : v)
      if (x < 1) throw error(errc::invalid_argument, std::string(name) + " has a nonpositive entry");
  }
};

struct PartitionKind {
  static constexpr const char* name = "partition";
  static void check(const std::vector<int>& v) {
    StrongKind::check(v);
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] > v[i - 1]) throw error(errc::invalid_argument, "partition entries must weakly decrease");
  }
};

}  // namespace detail

// A finite integer sequence with a validity check fixed by Kind.
template <class Kind>
class Sequence {
 public:
  using const_iterator = std::vector<int>::const_iterator;

  Sequence() = default;
  Sequence(std::initializer_list<int> parts) : Sequence(std::vector<int>(parts)) {}
  explicit Sequence(std::vector<int> parts) : parts_(std::move(parts)) { Kind::check(parts_); }

  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  // Zero past the end, so shorter sequences read as zero-padded.
  int entry(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  const_iterator begin() const noexcept { return parts_.begin(); }
  const_iterator end() const noexcept { return parts_.end(); }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  friend auto operator<=>(const Sequence&, const Sequence&) = default;
  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<int> parts_;
};

using WeakComposition = Sequence<detail::WeakKind>;
using StrongComposition = Sequence<detail::StrongKind>;
using Partition = Sequence<detail::PartitionKind>;

// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}
  explicit Permutation(std::vector<int> images) : w_(std::move(images)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (int x : w_) {
      if (x < 1 || x > static_cast<int>(w_.size()) || seen[x])
        throw error(errc::invalid_argument, "not a permutation");
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  // Simple transposition s_i in S_n, 1 <= i < n.
  static Permutation simple(std::size_t i, std::size_t n) {
    auto p = identity(std::max(n, i + 1));
    std::swap(p.w_[i - 1], p.w_[i]);
    return p;
  }

  std::size_t size() const noexcept { return w_.size(); }
  // Image of i (1-based); fixed past the end.
  int operator()(int i) const { return i <= static_cast<int>(w_.size()) ? w_[i - 1] : i; }
  const std::vector<int>& one_line() const noexcept { return w_; }

  Permutation inverse() const {
    std::vector<int> v(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) v[w_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(v));
  }

  Permutation padded(std::size_t n) const {
    if (n <= w_.size()) return *this;
    auto v = w_;
    for (std::size_t i = w_.size(); i < n; ++i) v.push_back(static_cast<int>(i) + 1);
    return Permutation(std::move(v));
  }

  // Drops trailing fixed points.
  Permutation trimmed() const {
    auto v = w_;
    while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
    return Permutation(std::move(v));
  }

  std::size_t length() const {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (std::size_t j = i + 1; j < w_.size(); ++j)
        if (w_[i] > w_[j]) ++inv;
    return inv;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  // Right descents: positions i with p(i) > p(i+1).
  std::vector<int> descents() const {
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < w_.size(); ++i)
      if (w_[i] > w_[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
  }

  // Composition as functions: (p*q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    std::size_t n = std::max(p.size(), q.size());
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = p(q(static_cast<int>(i) + 1));
    return Permutation(std::move(v));
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

// --- conversions ------------------------------------------------------------

inline WeakComposition padded(const WeakComposition& a, std::size_t n) {
  if (a.size() > n) {
    for (std::size_t i = n; i < a.size(); ++i)
      if (a[i] != 0) throw error(errc::n_too_small, "composition does not fit in the given length");
    return WeakComposition(std::vector<int>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n)));
  }
  auto v = a.parts();
  v.resize(n, 0);
  return WeakComposition(std::move(v));
}

inline WeakComposition trimmed(const WeakComposition& a) {
  auto v = a.parts();
  while (!v.empty() && v.back() == 0) v.pop_back();
  return WeakComposition(std::move(v));
}

inline WeakComposition reversed(const WeakComposition& a) {
  return WeakComposition(std::vector<int>(a.parts().rbegin(), a.parts().rend()));
}

inline WeakComposition prepend_zeros(const WeakComposition& a, std::size_t m) {
  std::vector<int> v(m, 0);
  v.insert(v.end(), a.begin(), a.end());
  return WeakComposition(std::move(v));
}

template <class Kind>
WeakComposition as_weak(const Sequence<Kind>& s, std::size_t n) {
  return padded(WeakComposition(s.parts()), n);
}

template <class Kind>
WeakComposition as_weak(const Sequence<Kind>& s) {
  return WeakComposition(s.parts());
}

inline StrongComposition positive_part(const WeakComposition& a) {
  std::vector<int> v;
  for (int x : a)
    if (x > 0) v.push_back(x);
  return StrongComposition(std::move(v));
}

inline Partition sort_decreasing(const WeakComposition& a) {
  auto v = positive_part(a).parts();
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

inline Partition sort_decreasing(const StrongComposition& a) { return sort_decreasing(as_weak(a)); }

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> v;
  for (int j = 1; j <= lambda.entry(0); ++j) {
    int c = 0;
    for (int x : lambda)
      if (x >= j) ++c;
    v.push_back(c);
  }
  return Partition(std::move(v));
}

inline std::vector<int> prefix_sums(const WeakComposition& a) {
  std::vector<int> s(a.size());
  std::partial_sum(a.begin(), a.end(), s.begin());
  return s;
}

inline bool is_weakly_increasing(const WeakComposition& a) {
  return std::is_sorted(a.begin(), a.end());
}

// --- orders -----------------------------------------------------------------

// a <= b in dominance: every prefix sum of a is at most that of b (shorter padded).
inline bool dominance_leq(const WeakComposition& a, const WeakComposition& b) {
  std::size_t n = std::max(a.size(), b.size());
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += a.entry(i);
    sb += b.entry(i);
    if (sa > sb) return false;
  }
  return true;
}

enum class TermOrder { prefix_sum_lex, lex, revlex };

inline std::strong_ordering term_order_compare(const WeakComposition& a, const WeakComposition& b,
                                               TermOrder order = TermOrder::prefix_sum_lex) {
  if (a.size() != b.size()) throw error(errc::ambient_mismatch, "compared compositions differ in length");
  if (a.total() != b.total()) throw error(errc::degree_mismatch, "compared compositions differ in degree");
  switch (order) {
    case TermOrder::prefix_sum_lex: {
      int sa = 0, sb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa != sb) return sa <=> sb;
      }
      return std::strong_ordering::equal;
    }
    case TermOrder::lex:
      return a.parts() <=> b.parts();
    case TermOrder::revlex:
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

// b refines a: a is obtained by summing consecutive entries of b.
inline bool refines(const StrongComposition& b, const StrongComposition& a) {
  if (b.total() != a.total()) return false;
  std::size_t j = 0;
  for (int part : a) {
    int acc = 0;
    while (acc < part && j < b.size()) acc += b[j++];
    if (acc != part) return false;
  }
  return j == b.size();
}

// All strong compositions refining a.
inline std::vector<StrongComposition> refinements(const StrongComposition& a) {
  std::vector<std::vector<int>> out{{}};
  for (int part : a) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      // compositions of `part`: choose cut points among part-1 gaps
      for (unsigned mask = 0; mask < (1u << (part - 1)); ++mask) {
        auto v = prefix;
        int run = 1;
        for (int g = 0; g < part - 1; ++g) {
          if (mask & (1u << g)) {
            v.push_back(run);
            run = 1;
          } else {
            ++run;
          }
        }
        v.push_back(run);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  std::vector<StrongComposition> res;
  for (auto& v : out) res.emplace_back(std::move(v));
  std::sort(res.begin(), res.end());
  return res;
}

// --- enumeration helpers ----------------------------------------------------

inline std::vector<Partition> partitions_of(int d, int max_part = -1, int max_len = -1) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int rem, int cap) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(rem, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, max_part < 0 ? d : max_part);
  return out;
}

inline std::vector<StrongComposition> strong_compositions_of(int d, int max_len = -1) {
  std::vector<StrongComposition> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int rem) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      self(self, rem - p);
      cur.pop_back();
    }
  };
  rec(rec, d);
  return out;
}

// Weak compositions of length n and total d.
inline std::vector<WeakComposition> weak_compositions_of(int d, std::size_t n) {
  std::vector<WeakComposition> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto& self, std::size_t i, int rem) -> void {
    if (i + 1 == n) {
      cur[i] = rem;
      out.emplace_back(cur);
      return;
    }
    for (int x = rem; x >= 0; --x) {
      cur[i] = x;
      self(self, i + 1, rem - x);
    }
  };
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, d);
  return out;
}

// All weak compositions of length n with entries in [0, max_entry].
inline std::vector<WeakComposition> bounded_weak_compositions(int max_entry, std::size_t n) {
  std::vector<WeakComposition> out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == max_entry) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// Weak compositions b of length n with b+ = alpha, in lex order.
inline std::vector<WeakComposition> zero_insertions(const StrongComposition& alpha, std::size_t n) {
  std::vector<WeakComposition> out;
  if (alpha.size() > n) return out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto& self, std::size_t pos, std::size_t k) -> void {
    if (k == alpha.size()) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t p = pos; p + (alpha.size() - k) <= n; ++p) {
      cur[p] = alpha[k];
      self(self, p + 1, k + 1);
      cur[p] = 0;
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Distinct rearrangements of a weak composition.
inline std::vector<WeakComposition> rearrangements(const WeakComposition& a) {
  auto v = a.parts();
  std::sort(v.begin(), v.end());
  std::vector<WeakComposition> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// --- permutations and codes -------------------------------------------------

inline WeakComposition lehmer_code(const Permutation& p) {
  const auto& w = p.one_line();
  std::vector<int> c(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c[i];
  return WeakComposition(std::move(c));
}

// Minimal permutation whose code starts with a (and is zero afterwards).
inline Permutation code_to_permutation(const WeakComposition& a) {
  std::size_t m = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, i + 1 + static_cast<std::size_t>(a[i]));
  std::vector<int> remaining(m);
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> w;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t c = static_cast<std::size_t>(a.entry(i));
    if (c >= remaining.size()) throw error(errc::invalid_code, "no permutation has this code");
    w.push_back(remaining[c]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(c));
  }
  return Permutation(std::move(w)).trimmed();
}

// Product s_{i1} * ... * s_{ik}.
inline Permutation word_to_permutation(const std::vector<int>& word, std::size_t n = 0) {
  for (int i : word) n = std::max(n, static_cast<std::size_t>(i) + 1);
  auto p = Permutation::identity(n);
  std::vector<int> v = p.one_line();
  // right multiplication by s_i swaps positions i, i+1
  for (int i : word) std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

inline std::set<StrongComposition> reduced_words(const Permutation& p) {
  std::set<StrongComposition> out;
  std::vector<int> w = p.one_line();
  std::vector<int> word;
  // peel a right descent: p = (p s_i) s_i
  auto rec = [&](auto& self) -> void {
    bool any = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        any = true;
        std::swap(w[i], w[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        self(self);
        word.pop_back();
        std::swap(w[i], w[i + 1]);
      }
    }
    if (!any) out.emplace(std::vector<int>(word.rbegin(), word.rend()));
  };
  rec(rec);
  return out;
}

// Lexicographically first reduced word.
inline StrongComposition canonical_reduced_word(const Permutation& p) {
  std::vector<int> w = p.one_line();
  std::vector<int> word;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = w.size(); i-- > 1;) {
      if (w[i - 1] > w[i]) {
        std::swap(w[i - 1], w[i]);
        word.push_back(static_cast<int>(i));
        found = true;
        break;
      }
    }
  }
  return StrongComposition(std::vector<int>(word.rbegin(), word.rend()));
}

// u <= v in strong Bruhat order via the subword property.
inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
  std::size_t n = std::max(u.size(), v.size());
  auto uu = u.padded(n), vv = v.padded(n);
  if (uu.length() > vv.length()) return false;
  auto word = canonical_reduced_word(vv).parts();
  // Walk the word building all products of subwords, keeping the reachable set.
  std::set<std::vector<int>> reach{Permutation::identity(n).one_line()};
  for (int i : word) {
    std::set<std::vector<int>> next = reach;
    for (auto w : reach) {
      std::swap(w[i - 1], w[i]);
      next.insert(std::move(w));
    }
    reach = std::move(next);
  }
  return reach.count(uu.one_line()) > 0;
}

// Rothe diagram of p as (row, column) pairs, 1-based.
inline std::vector<std::pair<int, int>> rothe_diagram(const Permutation& p) {
  std::vector<std::pair<int, int>> boxes;
  auto inv = p.inverse();
  int n = static_cast<int>(p.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < p(i); ++j)
      if (inv(j) > i) boxes.emplace_back(i, j);
  return boxes;
}

struct SortingData {
  Partition sorted;
  Permutation w;  // sort(a)_j = a_{w(j)}
  Permutation v;  // v(i) is the rank of a_i in decreasing order, ties by position
};

inline SortingData sorting_data(const WeakComposition& a) {
  std::size_t n = a.size();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return a[i] > a[j]; });
  std::vector<int> w(n), v(n);
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = idx[j] + 1;
    v[idx[j]] = static_cast<int>(j) + 1;
  }
  return {sort_decreasing(a), Permutation(std::move(w)), Permutation(std::move(v))};
}

// Closure of a under swapping a_i < a_j with i < j.
inline std::set<WeakComposition> lswap_closure(const WeakComposition& a) {
  std::set<WeakComposition> seen{a};
  std::vector<WeakComposition> stack{a};
  while (!stack.empty()) {
    auto b = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (b[i] < b[j]) {
          auto v = b.parts();
          std::swap(v[i], v[j]);
          WeakComposition c(std::move(v));
          if (seen.insert(c).second) stack.push_back(std::move(c));
        }
  }
  return seen;
}

inline std::set<WeakComposition> qlswap(const WeakComposition& a) {
  auto closure = lswap_closure(a);
  std::set<WeakComposition> out;
  for (const auto& b : closure) {
    auto bp = positive_part(b);
    bool minimal = true;
    for (const auto& c : closure)
      if (positive_part(c) == bp && !dominance_leq(b, c)) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(b);
  }
  return out;
}

// --- formal sums ------------------------------------------------------------

template <class Index>
class FormalSum {
 public:
  using map_type = std::map<Index, Coeff>;

  FormalSum() = default;

  void add(const Index& i, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coefficient(const Index& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  Coeff total() const {
    Coeff s = 0;
    for (const auto& [i, c] : terms_) s += c;
    return s;
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [i, c] : o.terms_) add(i, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [i, c] : o.terms_) add(i, -c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  map_type terms_;
};

// --- text -------------------------------------------------------------------

template <class Kind>
std::string to_string(const Sequence<Kind>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + ")";
}

inline std::string to_string(const Permutation& p) {
  bool wide = p.size() > 9;
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(p.one_line()[i]);
  }
  return out;
}

template <class Index>
std::string to_string(const FormalSum<Index>& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : f) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + to_string(i);
  }
  return out;
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text) {
  std::string_view s = text;
  auto trim = [](std::string_view& v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  };
  trim(s);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw error(errc::parse_error, "unbalanced parentheses in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    trim(s);
  }
  std::vector<int> out;
  if (s.empty()) return out;
  while (true) {
    auto comma = s.find(',');
    auto tok = s.substr(0, comma);
    trim(tok);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw error(errc::parse_error, "bad integer '" + std::string(tok) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

inline WeakComposition parse_weak_composition(std::string_view s) {
  return WeakComposition(detail::parse_int_list(s));
}
inline StrongComposition parse_strong_composition(std::string_view s) {
  return StrongComposition(detail::parse_int_list(s));
}
inline Partition parse_partition(std::string_view s) { return Partition(detail::parse_int_list(s)); }

// Bare digits ("2413") or comma separated ("2,4,1,3"), optionally parenthesized.
inline Permutation parse_permutation(std::string_view s) {
  bool has_sep = s.find(',') != std::string_view::npos;
  if (has_sep) return Permutation(detail::parse_int_list(s));
  std::vector<int> v;
  for (char ch : s) {
    if (ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch < '0' || ch > '9') throw error(errc::parse_error, "bad permutation '" + std::string(s) + "'");
    v.push_back(ch - '0');
  }
  return Permutation(std::move(v));
}

}  // namespace asympoly
