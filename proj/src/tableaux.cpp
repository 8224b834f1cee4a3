#include "irreps/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace irreps {

int YoungDiagram::boxes() const {
  int n = 0;
  for (int r : rows) n += r;
  return n;
}

bool is_valid_diagram(const YoungDiagram& d) {
  if (d.rows.empty()) return false;
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    if (d.rows[i] <= 0) return false;
    if (i > 0 && d.rows[i] > d.rows[i - 1]) return false;
  }
  return true;
}

void validate_diagram(const YoungDiagram& d) {
  if (!is_valid_diagram(d))
    throw std::invalid_argument("diagram: rows must be weakly decreasing and positive");
}

YoungDiagram conjugate_diagram(const YoungDiagram& d) {
  validate_diagram(d);
  YoungDiagram c;
  c.rows.resize(d.rows[0]);
  for (int i = 0; i < d.rows[0]; ++i) {
    int count = 0;
    for (int r : d.rows)
      if (r >= i + 1) ++count;
    c.rows[i] = count;
  }
  return c;
}

bool is_self_conjugate(const YoungDiagram& d) { return conjugate_diagram(d) == d; }

int diagonal_length(const YoungDiagram& d) {
  validate_diagram(d);
  int len = 0;
  while (len < d.row_count() && d.rows[len] >= len + 1) ++len;
  return len;
}

bool is_valid_tableau(const StandardTableau& t) {
  if (!is_valid_diagram(t.shape)) return false;
  const int n = t.shape.boxes();
  if (static_cast<int>(t.entries.size()) != t.shape.row_count()) return false;
  std::vector<bool> seen(n, false);
  for (int r = 0; r < t.shape.row_count(); ++r) {
    if (static_cast<int>(t.entries[r].size()) != t.shape.rows[r]) return false;
    for (int c = 0; c < t.shape.rows[r]; ++c) {
      const int v = t.entries[r][c];
      if (v < 1 || v > n || seen[v - 1]) return false;
      seen[v - 1] = true;
      if (c > 0 && t.entries[r][c - 1] >= v) return false;
      if (r > 0 && t.entries[r - 1][c] >= v) return false;
    }
  }
  return true;
}

void validate_tableau(const StandardTableau& t) {
  if (!is_valid_tableau(t)) throw std::invalid_argument("tableau: not a standard filling");
}

std::vector<std::pair<int, int>> cell_positions(const StandardTableau& t) {
  std::vector<std::pair<int, int>> pos(t.shape.boxes());
  for (int r = 0; r < t.shape.row_count(); ++r)
    for (int c = 0; c < t.shape.rows[r]; ++c) pos[t.entries[r][c] - 1] = {r, c};
  return pos;
}

std::vector<int> row_reading_word(const StandardTableau& t) {
  std::vector<int> word;
  word.reserve(t.shape.boxes());
  for (const auto& row : t.entries) word.insert(word.end(), row.begin(), row.end());
  return word;
}

StandardTableau tableau_from_row_word(const YoungDiagram& shape, const std::vector<int>& word) {
  validate_diagram(shape);
  if (static_cast<int>(word.size()) != shape.boxes())
    throw std::invalid_argument("row word: length must equal box count");
  StandardTableau t;
  t.shape = shape;
  std::size_t k = 0;
  for (int r = 0; r < shape.row_count(); ++r) {
    t.entries.emplace_back(word.begin() + k, word.begin() + k + shape.rows[r]);
    k += shape.rows[r];
  }
  validate_tableau(t);
  return t;
}

namespace {

void enumerate_rec(const YoungDiagram& shape, std::vector<int>& fill_count, int next_label,
                   StandardTableau& partial, std::vector<StandardTableau>& out) {
  const int n = shape.boxes();
  if (next_label > n) {
    out.push_back(partial);
    return;
  }
  for (int r = 0; r < shape.row_count(); ++r) {
    const int c = fill_count[r];
    if (c >= shape.rows[r]) continue;
    if (r > 0 && fill_count[r - 1] <= c) continue;
    partial.entries[r][c] = next_label;
    ++fill_count[r];
    enumerate_rec(shape, fill_count, next_label + 1, partial, out);
    --fill_count[r];
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape, int cap) {
  validate_diagram(shape);
  if (shape.boxes() > cap) throw std::length_error("enumerate_syt: box count exceeds cap");
  StandardTableau partial;
  partial.shape = shape;
  for (int r : shape.rows) partial.entries.emplace_back(r, 0);
  std::vector<int> fill_count(shape.row_count(), 0);
  std::vector<StandardTableau> out;
  enumerate_rec(shape, fill_count, 1, partial, out);
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return row_reading_word(a) < row_reading_word(b);
  });
  return out;
}

std::uint64_t syt_count(const YoungDiagram& shape) {
  validate_diagram(shape);
  const YoungDiagram conj = conjugate_diagram(shape);
  const int n = shape.boxes();
  // n! / prod(hooks), accumulated as an exact alternating product.
  long double acc = 1.0L;
  int factor = 1;
  std::vector<long double> hooks;
  for (int r = 0; r < shape.row_count(); ++r)
    for (int c = 0; c < shape.rows[r]; ++c)
      hooks.push_back(static_cast<long double>((shape.rows[r] - c) + (conj.rows[c] - r) - 1));
  for (int k = 0; k < n; ++k) {
    acc *= static_cast<long double>(factor++);
    acc /= hooks[k];
  }
  return static_cast<std::uint64_t>(acc + 0.5L);
}

StandardTableau hook_walk_sample(const YoungDiagram& shape, Rng& rng) {
  validate_diagram(shape);
  StandardTableau t;
  t.shape = shape;
  for (int r : shape.rows) t.entries.emplace_back(r, 0);
  std::vector<int> rows = shape.rows;  // shrinking diagram
  int remaining = shape.boxes();
  auto col_len = [&rows](int c) {
    int len = 0;
    while (len < static_cast<int>(rows.size()) && rows[len] > c) ++len;
    return len;
  };
  for (int label = shape.boxes(); label >= 1; --label) {
    // Uniform start cell in the current diagram.
    std::uint64_t pick = rng.uniform_below(static_cast<std::uint64_t>(remaining));
    int r = 0;
    while (pick >= static_cast<std::uint64_t>(rows[r])) {
      pick -= static_cast<std::uint64_t>(rows[r]);
      ++r;
    }
    int c = static_cast<int>(pick);
    // Walk to uniform cells of the strict hook until at a corner.
    for (;;) {
      const int arm = rows[r] - c - 1;
      const int leg = col_len(c) - r - 1;
      if (arm + leg == 0) break;
      const int step = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(arm + leg)));
      if (step < arm)
        c += step + 1;
      else
        r += step - arm + 1;
    }
    t.entries[r][c] = label;
    --rows[r];
    if (rows[r] == 0) rows.pop_back();
    --remaining;
  }
  return t;
}

int axial_distance(const StandardTableau& t, int i) {
  const int n = t.shape.boxes();
  if (i < 1 || i > n - 1) throw std::invalid_argument("axial_distance: index out of range");
  const auto pos = cell_positions(t);
  const auto [r0, c0] = pos[i - 1];
  const auto [r1, c1] = pos[i];
  return (c1 - r1) - (c0 - r0);
}

StandardTableau conjugate_tableau(const StandardTableau& t) {
  validate_tableau(t);
  StandardTableau out;
  out.shape = conjugate_diagram(t.shape);
  for (int r : out.shape.rows) out.entries.emplace_back(r, 0);
  for (int r = 0; r < t.shape.row_count(); ++r)
    for (int c = 0; c < t.shape.rows[r]; ++c) out.entries[c][r] = t.entries[r][c];
  return out;
}

StandardTableau typewriter_tableau(const YoungDiagram& shape) {
  validate_diagram(shape);
  StandardTableau t;
  t.shape = shape;
  int label = 1;
  for (int r : shape.rows) {
    std::vector<int> row(r);
    for (int c = 0; c < r; ++c) row[c] = label++;
    t.entries.push_back(std::move(row));
  }
  return t;
}

TypewriterData typewriter_data(const StandardTableau& t) {
  validate_tableau(t);
  const int n = t.shape.boxes();
  std::vector<int> row_offset(t.shape.row_count(), 0);
  for (int r = 1; r < t.shape.row_count(); ++r)
    row_offset[r] = row_offset[r - 1] + t.shape.rows[r - 1];
  Permutation w;
  w.images.resize(n);
  for (int r = 0; r < t.shape.row_count(); ++r)
    for (int c = 0; c < t.shape.rows[r]; ++c)
      w.images[t.entries[r][c] - 1] = row_offset[r] + c + 1;
  return TypewriterData{w, perm_stats(w).sign};
}

}  // namespace irreps
