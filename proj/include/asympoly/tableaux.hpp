#pragma once

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "combinat.hpp"

namespace asympoly {

// (row, column), both 1-based; column 0 is a basement column where one exists.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline WeakComposition weight_of_labels(const std::vector<int>& labels, std::size_t n) {
  std::vector<int> w(n, 0);
  for (int x : labels) {
    if (x < 1 || static_cast<std::size_t>(x) > n) throw error(errc::n_too_small, "label exceeds variable count");
    ++w[x - 1];
  }
  return WeakComposition(std::move(w));
}

// --- words ------------------------------------------------------------------

// Maximal weakly increasing runs.
inline std::vector<std::vector<int>> runs(const std::vector<int>& word) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i == 0 || word[i] < word[i - 1]) out.emplace_back();
    out.back().push_back(word[i]);
  }
  return out;
}

inline StrongComposition descent_composition(const std::vector<int>& word) {
  std::vector<int> v;
  for (const auto& r : runs(word)) v.push_back(static_cast<int>(r.size()));
  return StrongComposition(std::move(v));
}

// Every prefix has at least as many i as i+1.
inline bool is_yamanouchi(const std::vector<int>& word) {
  std::map<int, int> count;
  for (int x : word) {
    ++count[x];
    if (x > 1 && count[x] > count[x - 1]) return false;
  }
  return true;
}

// --- semistandard Young tableaux --------------------------------------------

class Ssyt {
 public:
  Ssyt(Partition outer, Partition inner, std::vector<std::vector<int>> rows)
      : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {}

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  // rows()[r] lists the labels of row r+1 from column inner_r+1 rightwards.
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  WeakComposition weight(std::size_t n) const {
    std::vector<int> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
    return weight_of_labels(all, n);
  }

  // Right to left along rows, top to bottom.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.rbegin(), r.rend());
    return w;
  }

  bool is_yamanouchi() const { return asympoly::is_yamanouchi(reading_word()); }

 private:
  Partition outer_, inner_;
  std::vector<std::vector<int>> rows_;
};

inline std::vector<Ssyt> enumerate_ssyt(const Partition& outer, const Partition& inner, int max_label) {
  std::size_t nrows = outer.size();
  for (std::size_t r = 0; r < std::max(nrows, inner.size()); ++r)
    if (inner.entry(r) > outer.entry(r)) throw error(errc::invalid_argument, "inner shape not contained in outer");
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < nrows; ++r)
    for (int c = inner.entry(r) + 1; c <= outer[r]; ++c) cells.push_back({static_cast<int>(r) + 1, c});
  std::vector<std::vector<int>> grid(nrows);
  for (std::size_t r = 0; r < nrows; ++r) grid[r].assign(static_cast<std::size_t>(outer[r]) + 1, 0);
  std::vector<Ssyt> out;
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == cells.size()) {
      std::vector<std::vector<int>> rows(nrows);
      for (std::size_t r = 0; r < nrows; ++r)
        rows[r].assign(grid[r].begin() + inner.entry(r) + 1, grid[r].end());
      out.emplace_back(outer, inner, std::move(rows));
      return;
    }
    auto [row, col] = cells[k];
    std::size_t r = static_cast<std::size_t>(row) - 1;
    int lo = 1;
    if (col - 1 > inner.entry(r)) lo = std::max(lo, grid[r][col - 1]);
    if (r > 0 && col > inner.entry(r - 1)) lo = std::max(lo, grid[r - 1][col] + 1);
    for (int x = lo; x <= max_label; ++x) {
      grid[r][col] = x;
      self(self, k + 1);
    }
    grid[r][col] = 0;
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Ssyt> enumerate_ssyt(const Partition& shape, int max_label) {
  return enumerate_ssyt(shape, Partition{}, max_label);
}

// --- composition tableaux and skyline fillings ------------------------------

namespace detail {

// Row-major filling of rows with given lengths. Each row carries a slot 0
// holding the basement label (or 0 when there is no basement).
class DiagramFiller {
 public:
  DiagramFiller(std::vector<int> lengths, std::vector<int> basement, bool fixed_first_column, int max_label)
      : len_(std::move(lengths)),
        base_(std::move(basement)),
        fixed_first_(fixed_first_column),
        max_label_(max_label) {
    int nrows = static_cast<int>(len_.size());
    bool with_basement = !base_.empty();
    for (int r = 1; r <= nrows; ++r)
      for (int c = 1; c <= len_[r - 1]; ++c) cells_.push_back({r, c});
    for (const auto& t : triples(len_, with_basement)) ending_[std::max({t[0], t[1], t[2]})].push_back(t);
  }

  // The configurations for rows i < j: if row i is weakly longer, Z=(i,k),
  // X=(i,k+1), Y=(j,k+1); otherwise Y=(i,k), Z=(j,k), X=(j,k+1). Returned as
  // {X, Y, Z}.
  static std::vector<std::array<Cell, 3>> triples(const std::vector<int>& len, bool with_basement) {
    std::vector<std::array<Cell, 3>> out;
    int nrows = static_cast<int>(len.size());
    int start = with_basement ? 0 : 1;
    for (int i = 1; i <= nrows; ++i)
      for (int j = i + 1; j <= nrows; ++j) {
        int li = len[i - 1], lj = len[j - 1];
        if (li >= lj) {
          for (int k = start; k + 1 <= lj; ++k) out.push_back({Cell{i, k + 1}, Cell{j, k + 1}, Cell{i, k}});
        } else {
          for (int k = start; k <= li && k + 1 <= lj; ++k) out.push_back({Cell{j, k + 1}, Cell{i, k}, Cell{j, k}});
        }
      }
    return out;
  }

  template <class Visit>
  void run(Visit&& visit) {
    grid_.assign(len_.size(), {});
    for (std::size_t r = 0; r < len_.size(); ++r) {
      grid_[r].assign(static_cast<std::size_t>(len_[r]) + 1, 0);
      if (!base_.empty()) grid_[r][0] = base_[r];
    }
    rec(0, visit);
  }

 private:
  int at(Cell c) const { return grid_[c.row - 1][c.col]; }

  template <class Visit>
  void rec(std::size_t k, Visit& visit) {
    if (k == cells_.size()) {
      visit(static_cast<const std::vector<std::vector<int>>&>(grid_));
      return;
    }
    Cell cell = cells_[k];
    auto& row = grid_[cell.row - 1];
    int hi = max_label_;
    if (cell.col > 1 || !base_.empty()) hi = std::min(hi, row[cell.col - 1]);
    int lo = 1;
    if (fixed_first_ && cell.col == 1) {
      lo = cell.row;
      hi = std::min(hi, cell.row);
    }
    auto it = ending_.find(cell);
    for (int x = lo; x <= hi; ++x) {
      bool ok = true;
      for (int r = 1; r < cell.row && ok; ++r)
        if (len_[r - 1] >= cell.col && grid_[r - 1][cell.col] == x) ok = false;
      if (!ok) continue;
      row[cell.col] = x;
      if (it != ending_.end())
        for (const auto& t : it->second) {
          int X = at(t[0]), Y = at(t[1]), Z = at(t[2]);
          if (X <= Y && Y <= Z) {
            ok = false;
            break;
          }
        }
      if (ok) rec(k + 1, visit);
    }
    row[cell.col] = 0;
  }

  std::vector<int> len_;
  std::vector<int> base_;
  bool fixed_first_;
  int max_label_;
  std::vector<Cell> cells_;
  std::map<Cell, std::vector<std::array<Cell, 3>>> ending_;
  std::vector<std::vector<int>> grid_;
};

}  // namespace detail

// Filling of the diagram of a weak composition (row i has a_i boxes).
class CompositionTableau {
 public:
  CompositionTableau(WeakComposition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {}

  const WeakComposition& shape() const noexcept { return shape_; }
  // rows()[r][c] is the label in row r+1, column c+1.
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int label(Cell c) const { return rows_[c.row - 1][c.col - 1]; }

  std::vector<int> labels() const {
    std::vector<int> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
    return all;
  }

  std::set<int> support() const {
    auto l = labels();
    return {l.begin(), l.end()};
  }

  WeakComposition weight(std::size_t n) const { return weight_of_labels(labels(), n); }

  friend auto operator<=>(const CompositionTableau&, const CompositionTableau&) = default;
  friend bool operator==(const CompositionTableau&, const CompositionTableau&) = default;

 private:
  WeakComposition shape_;
  std::vector<std::vector<int>> rows_;
};

inline std::vector<std::array<Cell, 3>> composition_triples(const WeakComposition& shape, bool with_basement) {
  return detail::DiagramFiller::triples(shape.parts(), with_basement);
}

inline bool is_inversion_triple(int x, int y, int z) { return !(x <= y && y <= z); }

// Rows weakly decrease, columns have no repeats, every triple is inversion,
// first column equals the row index.
inline std::vector<CompositionTableau> enumerate_composition_tableaux(const WeakComposition& shape, std::size_t n) {
  if (shape.size() != n) throw error(errc::n_too_small, "composition tableau shape must have length n");
  std::vector<CompositionTableau> out;
  detail::DiagramFiller filler(shape.parts(), {}, true, static_cast<int>(n));
  filler.run([&](const std::vector<std::vector<int>>& grid) {
    std::vector<std::vector<int>> rows;
    for (const auto& r : grid) rows.emplace_back(r.begin() + 1, r.end());
    out.emplace_back(shape, std::move(rows));
  });
  return out;
}

// Each label i occurs in the first column or has an i+1 weakly right of some i.
// With next_present, i+1 is replaced by the next larger label that occurs.
namespace detail {
inline bool yamanouchi_like(const CompositionTableau& t, bool next_present) {
  std::map<int, std::vector<int>> cols;
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) cols[t.rows()[r][c]].push_back(static_cast<int>(c) + 1);
  for (auto it = cols.begin(); it != cols.end(); ++it) {
    const auto& mine = it->second;
    int min_col = *std::min_element(mine.begin(), mine.end());
    if (min_col == 1) continue;
    auto nx = next_present ? std::next(it) : cols.find(it->first + 1);
    if (nx == cols.end()) return false;
    int max_next = *std::max_element(nx->second.begin(), nx->second.end());
    if (max_next < min_col) return false;
  }
  return true;
}
}  // namespace detail

inline bool is_quasi_yamanouchi(const CompositionTableau& t) { return detail::yamanouchi_like(t, false); }

inline bool is_particle_highest(const CompositionTableau& t) { return detail::yamanouchi_like(t, true); }

// Labels form {1..k}.
inline bool is_initial(const CompositionTableau& t) {
  auto s = t.support();
  int expect = 1;
  for (int x : s)
    if (x != expect++) return false;
  return true;
}

// Labels of an earlier nonempty row are all below labels of a later one.
inline bool has_increasing_row_blocks(const CompositionTableau& t) {
  int prev_max = 0;
  for (const auto& r : t.rows()) {
    if (r.empty()) continue;
    int lo = *std::min_element(r.begin(), r.end());
    if (lo <= prev_max) return false;
    prev_max = *std::max_element(r.begin(), r.end());
  }
  return true;
}

inline std::vector<CompositionTableau> enumerate_particle_tableaux(const WeakComposition& shape, std::size_t n) {
  std::vector<CompositionTableau> out;
  for (auto& t : enumerate_composition_tableaux(shape, n))
    if (has_increasing_row_blocks(t)) out.push_back(std::move(t));
  return out;
}

// Filling of rev(a) with basement n+1-i in row i.
class SkylineFilling {
 public:
  SkylineFilling(WeakComposition a, std::vector<std::vector<int>> rows) : a_(std::move(a)), rows_(std::move(rows)) {}

  const WeakComposition& index() const noexcept { return a_; }
  // rows()[r][0] is the basement; rows()[r][c] the label in column c.
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  WeakComposition weight(std::size_t n) const {
    std::vector<int> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin() + 1, r.end());
    return weight_of_labels(all, n);
  }

 private:
  WeakComposition a_;
  std::vector<std::vector<int>> rows_;
};

inline std::vector<SkylineFilling> enumerate_key_skylines(const WeakComposition& a, std::size_t n) {
  if (a.size() != n) throw error(errc::n_too_small, "skyline index must have length n");
  std::vector<int> basement(n);
  for (std::size_t i = 0; i < n; ++i) basement[i] = static_cast<int>(n - i);
  std::vector<SkylineFilling> out;
  detail::DiagramFiller filler(reversed(a).parts(), basement, false, static_cast<int>(n));
  filler.run([&](const std::vector<std::vector<int>>& grid) { out.emplace_back(a, grid); });
  return out;
}

// --- pipe dreams --------------------------------------------------------------

class PipeDream {
 public:
  explicit PipeDream(std::vector<Cell> crosses) : crosses_(std::move(crosses)) {
    std::sort(crosses_.begin(), crosses_.end());
  }

  const std::vector<Cell>& crosses() const noexcept { return crosses_; }

  bool has_cross(int row, int col) const {
    return std::binary_search(crosses_.begin(), crosses_.end(), Cell{row, col});
  }

  WeakComposition weight(std::size_t n) const {
    std::vector<int> w(n, 0);
    for (const auto& c : crosses_) {
      if (static_cast<std::size_t>(c.row) > n) throw error(errc::n_too_small, "pipe dream row exceeds n");
      ++w[c.row - 1];
    }
    return WeakComposition(std::move(w));
  }

  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;
  friend bool operator==(const PipeDream&, const PipeDream&) = default;

 private:
  std::vector<Cell> crosses_;
};

// Traces pipes through the size-m staircase; the pipe entering row i on the left
// leaves the top in column p(i). Returns nothing when two pipes cross twice.
inline std::optional<Permutation> pipe_dream_permutation(const std::vector<Cell>& crosses, std::size_t m) {
  int n = static_cast<int>(m);
  std::set<Cell> cx(crosses.begin(), crosses.end());
  for (const auto& c : cx)
    if (c.row < 1 || c.col < 1 || c.row + c.col > n) return std::nullopt;
  std::vector<int> up_below(n + 2, 0);  // pipes leaving the row below through the top
  std::set<std::pair<int, int>> crossed;
  for (int r = n; r >= 1; --r) {
    std::vector<int> up(n + 2, 0);
    int from_left = r;
    for (int c = 1; c + r <= n + 1; ++c) {
      int from_below = (r + 1 + c <= n + 1) ? up_below[c] : 0;
      if (cx.count({r, c})) {
        std::pair<int, int> key = std::minmax(from_left, from_below);
        if (!crossed.insert(key).second) return std::nullopt;
        up[c] = from_below;
      } else {
        up[c] = from_left;
        from_left = from_below;
      }
    }
    up_below = std::move(up);
  }
  std::vector<int> w(n);
  for (int c = 1; c <= n; ++c) w[up_below[c] - 1] = c;
  return Permutation(std::move(w));
}

// Reduced pipe dreams of p, by a depth-first walk over the staircase with
// incremental pipe tracing.
inline std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& p) {
  auto perm = p.trimmed();
  int n = std::max<int>(1, static_cast<int>(perm.size()));
  std::size_t need = perm.length();
  std::vector<PipeDream> out;
  std::vector<Cell> chosen;
  std::set<std::pair<int, int>> crossed;
  // State per row: pipes leaving through the top of each column.
  std::vector<std::vector<int>> up(n + 2, std::vector<int>(n + 2, 0));
  auto cells_after = [&](int r, int c) {
    // staircase cells (r', c') with r'+c' <= n strictly after (r, c) in walk order
    int count = std::max(0, n - r - c);
    for (int rr = r - 1; rr >= 1; --rr) count += n - rr;
    return count;
  };
  auto rec = [&](auto& self, int r, int c, int from_left) -> void {
    if (r == 0) {
      if (chosen.size() != need) return;
      std::vector<int> w(n);
      for (int col = 1; col <= n; ++col) w[up[1][col] - 1] = col;
      if (Permutation(w) == perm.padded(n)) out.emplace_back(chosen);
      return;
    }
    if (c + r > n + 1) {
      self(self, r - 1, 1, r - 1);
      return;
    }
    int from_below = (r + 1 + c <= n + 1) ? up[r + 1][c] : 0;
    bool tail = r + c == n + 1;
    // elbow
    up[r][c] = from_left;
    if (chosen.size() + static_cast<std::size_t>(tail ? 0 : cells_after(r, c)) >= need || tail)
      self(self, r, c + 1, from_below);
    if (!tail && chosen.size() < need) {
      std::pair<int, int> key = std::minmax(from_left, from_below);
      if (!crossed.count(key)) {
        crossed.insert(key);
        chosen.push_back({r, c});
        up[r][c] = from_below;
        self(self, r, c + 1, from_left);
        chosen.pop_back();
        crossed.erase(key);
      }
    }
    up[r][c] = 0;
  };
  rec(rec, n, 1, n);
  std::sort(out.begin(), out.end());
  return out;
}

// In every row the leftmost cross is in column 1 or weakly left of some cross
// in the row below.
inline bool is_quasi_yamanouchi(const PipeDream& d) {
  std::map<int, std::vector<int>> by_row;
  for (const auto& c : d.crosses()) by_row[c.row].push_back(c.col);
  for (const auto& [r, cols] : by_row) {
    int leftmost = *std::min_element(cols.begin(), cols.end());
    if (leftmost == 1) continue;
    auto below = by_row.find(r + 1);
    if (below == by_row.end()) return false;
    if (*std::max_element(below->second.begin(), below->second.end()) < leftmost) return false;
  }
  return true;
}

// --- box diagrams and Kohnert moves ------------------------------------------

class BoxDiagram {
 public:
  BoxDiagram() = default;
  explicit BoxDiagram(std::vector<Cell> boxes) : boxes_(std::move(boxes)) {
    std::sort(boxes_.begin(), boxes_.end());
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
  }

  const std::vector<Cell>& boxes() const noexcept { return boxes_; }
  bool contains(Cell c) const { return std::binary_search(boxes_.begin(), boxes_.end(), c); }

  WeakComposition weight(std::size_t n) const {
    std::vector<int> w(n, 0);
    for (const auto& c : boxes_) {
      if (static_cast<std::size_t>(c.row) > n) throw error(errc::n_too_small, "diagram row exceeds n");
      ++w[c.row - 1];
    }
    return WeakComposition(std::move(w));
  }

  friend auto operator<=>(const BoxDiagram&, const BoxDiagram&) = default;
  friend bool operator==(const BoxDiagram&, const BoxDiagram&) = default;

 private:
  std::vector<Cell> boxes_;
};

inline BoxDiagram composition_diagram(const WeakComposition& a) {
  std::vector<Cell> boxes;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int c = 1; c <= a[i]; ++c) boxes.push_back({static_cast<int>(i) + 1, c});
  return BoxDiagram(std::move(boxes));
}

inline BoxDiagram rothe_box_diagram(const Permutation& p) {
  std::vector<Cell> boxes;
  for (auto [r, c] : rothe_diagram(p)) boxes.push_back({r, c});
  return BoxDiagram(std::move(boxes));
}

// Rightmost box of the row moves to the nearest empty cell above it.
inline std::optional<BoxDiagram> kohnert_move(const BoxDiagram& d, int row) {
  const Cell* right = nullptr;
  for (const auto& c : d.boxes())
    if (c.row == row) right = &c;
  if (!right) return std::nullopt;
  for (int r = row - 1; r >= 1; --r) {
    if (!d.contains({r, right->col})) {
      auto boxes = d.boxes();
      for (auto& c : boxes)
        if (c == *right) c.row = r;
      return BoxDiagram(std::move(boxes));
    }
  }
  return std::nullopt;
}

inline std::vector<BoxDiagram> kohnert_closure(const BoxDiagram& d) {
  std::set<BoxDiagram> seen{d};
  std::deque<BoxDiagram> queue{d};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    std::set<int> rows;
    for (const auto& c : cur.boxes()) rows.insert(c.row);
    for (int r : rows)
      if (auto next = kohnert_move(cur, r); next && seen.insert(*next).second) queue.push_back(*next);
  }
  return {seen.begin(), seen.end()};
}

// --- compatible sequences -----------------------------------------------------

// beta weakly increasing, beta_j <= alpha_j, strict where alpha ascends.
inline std::vector<StrongComposition> enumerate_compatible(const StrongComposition& alpha) {
  std::vector<StrongComposition> out;
  std::vector<int> beta(alpha.size());
  auto rec = [&](auto& self, std::size_t j) -> void {
    if (j == alpha.size()) {
      out.emplace_back(beta);
      return;
    }
    int lo = 1;
    if (j > 0) lo = beta[j - 1] + (alpha[j - 1] < alpha[j] ? 1 : 0);
    for (int x = lo; x <= alpha[j]; ++x) {
      beta[j] = x;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace asympoly
