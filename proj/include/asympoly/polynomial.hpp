#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "combinat.hpp"

namespace asympoly {

namespace detail {

// Descending graded prefix-sum-lex, so map iteration is canonical output order.
struct CanonicalTermOrder {
  bool operator()(const WeakComposition& a, const WeakComposition& b) const {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      sa += a[i];
      sb += b[i];
      if (sa != sb) return sa > sb;
    }
    return false;
  }
};

}  // namespace detail

// Sparse polynomial in Z[x_1..x_n].
class Polynomial {
 public:
  using TermMap = std::map<WeakComposition, Coeff, detail::CanonicalTermOrder>;

  explicit Polynomial(std::size_t nvars = 0) : n_(nvars) {}

  static Polynomial monomial(const WeakComposition& exponent, const Coeff& c = 1) {
    Polynomial p(exponent.size());
    p.add_term(exponent, c);
    return p;
  }

  static Polynomial constant(std::size_t n, const Coeff& c) {
    return monomial(WeakComposition(std::vector<int>(n, 0)), c);
  }

  // x_i, 1-based.
  static Polynomial variable(std::size_t n, std::size_t i) {
    std::vector<int> e(n, 0);
    e.at(i - 1) = 1;
    return monomial(WeakComposition(std::move(e)));
  }

  std::size_t nvars() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Coeff coefficient(const WeakComposition& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const WeakComposition& e, const Coeff& c) {
    if (e.size() != n_) throw error(errc::ambient_mismatch, "monomial length differs from variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_ambient(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_ambient(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Coeff& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Coeff(-1); }
  friend Polynomial operator*(Polynomial a, const Coeff& k) { return a *= k; }
  friend Polynomial operator*(const Coeff& k, Polynomial a) { return a *= k; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ambient(b);
    Polynomial out(a.n_);
    std::vector<int> e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(WeakComposition(e), ca * cb);
      }
    return out;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total();
    for (const auto& [e, c] : terms_)
      if (e.total() != d) return false;
    return true;
  }

  std::map<int, Polynomial> homogeneous_components() const {
    std::map<int, Polynomial> out;
    for (const auto& [e, c] : terms_) {
      auto [it, ins] = out.try_emplace(e.total(), n_);
      it->second.add_term(e, c);
    }
    return out;
  }

  // Same polynomial viewed in m variables; fails if a dropped variable occurs.
  Polynomial with_nvars(std::size_t m) const {
    Polynomial out(m);
    for (const auto& [e, c] : terms_) out.add_term(padded(e, m), c);
    return out;
  }

  // Terms supported in the first w variables only.
  Polynomial window(std::size_t w) const {
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) {
      bool inside = true;
      for (std::size_t i = w; i < n_; ++i)
        if (e[i] != 0) inside = false;
      if (inside) out.add_term(e, c);
    }
    return out;
  }

  Coeff coefficient_sum() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

 private:
  void check_ambient(const Polynomial& o) const {
    if (o.n_ != n_) throw error(errc::ambient_mismatch, "polynomials live in different variable counts");
  }

  std::size_t n_;
  TermMap terms_;
};

// x_i -> x_{p(i)}.
inline Polynomial act_permutation(const Permutation& p, const Polynomial& f) {
  std::size_t n = f.nvars();
  if (p.size() > n) {
    for (std::size_t i = n + 1; i <= p.size(); ++i)
      if (p(static_cast<int>(i)) != static_cast<int>(i))
        throw error(errc::ambient_mismatch, "permutation moves a variable outside the ambient ring");
  }
  Polynomial out(n);
  std::vector<int> e(n);
  for (const auto& [a, c] : f) {
    for (std::size_t i = 0; i < n; ++i) e[p(static_cast<int>(i) + 1) - 1] = a[i];
    out.add_term(WeakComposition(e), c);
  }
  return out;
}

inline Polynomial swap_variables(std::size_t i, const Polynomial& f) {
  if (i < 1 || i >= f.nvars()) throw error(errc::invalid_argument, "simple transposition index out of range");
  Polynomial out(f.nvars());
  for (const auto& [a, c] : f) {
    auto v = a.parts();
    std::swap(v[i - 1], v[i]);
    out.add_term(WeakComposition(std::move(v)), c);
  }
  return out;
}

// Exact quotient f / g by leading-term elimination; throws inexact-division.
inline Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw error(errc::invalid_argument, "division by zero polynomial");
  if (f.nvars() != g.nvars()) throw error(errc::ambient_mismatch, "division across variable counts");
  std::size_t n = f.nvars();
  const auto& [ge, gc] = *g.begin();
  Polynomial r = f, q(n);
  std::vector<int> e(n);
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.begin();
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = re[i] - ge[i];
      if (e[i] < 0) throw error(errc::inexact_division, "leading monomial not divisible");
    }
    if (rc % gc != 0) throw error(errc::inexact_division, "leading coefficient not divisible");
    auto t = Polynomial::monomial(WeakComposition(e), rc / gc);
    q += t;
    r -= t * g;
  }
  return q;
}

inline Polynomial divided_difference(std::size_t i, const Polynomial& f) {
  std::size_t n = f.nvars();
  auto num = f - swap_variables(i, f);
  auto den = Polynomial::variable(n, i) - Polynomial::variable(n, i + 1);
  try {
    return exact_divide(num, den);
  } catch (const error&) {
    throw error(errc::internal_error, "divided difference left a remainder");
  }
}

inline Polynomial demazure_operator(std::size_t i, const Polynomial& f) {
  return divided_difference(i, Polynomial::variable(f.nvars(), i) * f);
}

enum class OperatorKind { divided_difference, demazure };

// Word (i1..ik) applies as O_{i1} O_{i2} ... O_{ik}, rightmost first.
inline Polynomial apply_operator_word(const StrongComposition& word, OperatorKind kind, Polynomial f) {
  for (std::size_t k = word.size(); k-- > 0;) {
    auto i = static_cast<std::size_t>(word[k]);
    f = kind == OperatorKind::divided_difference ? divided_difference(i, f) : demazure_operator(i, f);
  }
  return f;
}

inline bool is_symmetric(const Polynomial& f) {
  for (const auto& [a, c] : f) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      auto v = a.parts();
      std::swap(v[i], v[i + 1]);
      if (f.coefficient(WeakComposition(std::move(v))) != c) return false;
    }
  }
  return true;
}

// Coefficients agree on x^b, x^b' whenever b+ = b'+.
inline bool is_quasisymmetric(const Polynomial& f) {
  std::map<StrongComposition, Coeff> seen;
  for (const auto& [a, c] : f) {
    auto [it, ins] = seen.try_emplace(positive_part(a), c);
    if (!ins && it->second != c) return false;
  }
  for (const auto& [alpha, c] : seen)
    for (const auto& b : zero_insertions(alpha, f.nvars()))
      if (f.coefficient(b) != c) return false;
  return true;
}

// Sum over sigma of sgn(sigma) x^{sigma(a)}.
inline Polynomial alternant(const WeakComposition& a) {
  std::size_t n = a.size();
  Polynomial out(n);
  for (const auto& p : all_permutations(n)) {
    std::vector<int> e(n);
    for (std::size_t i = 0; i < n; ++i) e[p(static_cast<int>(i) + 1) - 1] = a[i];
    out.add_term(WeakComposition(std::move(e)), p.length() % 2 ? -1 : 1);
  }
  return out;
}

inline WeakComposition staircase(std::size_t n) {
  std::vector<int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<int>(n - 1 - i);
  return WeakComposition(std::move(d));
}

inline Polynomial vandermonde(std::size_t n) { return alternant(staircase(n)); }

// One term per line: "coeff<TAB>e1,...,en", canonical order.
inline std::string to_text(const Polynomial& f) {
  std::string out;
  for (const auto& [e, c] : f) {
    out += c.str();
    out += '\t';
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

inline Polynomial from_text(std::string_view text, std::size_t n) {
  Polynomial f(n);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw error(errc::parse_error, "missing tab in polynomial line");
    Coeff c;
    try {
      c = Coeff(line.substr(0, tab));
    } catch (const std::exception&) {
      throw error(errc::parse_error, "bad coefficient '" + line.substr(0, tab) + "'");
    }
    f.add_term(parse_weak_composition(line.substr(tab + 1)), c);
  }
  return f;
}

}  // namespace asympoly
