#include "irreps/gelfand.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace irreps {

namespace {

int floor_div2(int q) { return q / 2; }

int row_length(GroupTag g, int level) {
  return g == GroupTag::gl ? level : floor_div2(level);
}

bool same_parity(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (((v[i] ^ v[0]) & 1) != 0) return false;
  return true;
}

// Constraints tying the row at `level` to the row above it.
bool row_pair_ok(GroupTag g, int level, const std::vector<int>& row,
                 const std::vector<int>& above) {
  const int len = static_cast<int>(row.size());
  if (g == GroupTag::gl) {
    for (int j = 0; j < len; ++j)
      if (!(above[j] >= row[j] && row[j] >= above[j + 1])) return false;
    return true;
  }
  if (level % 2 == 0) {
    // Row 2p below row 2p+1, both with p entries; the last entry may run
    // negative, down to the mirror of the entry above it.
    for (int j = 0; j + 1 < len; ++j)
      if (!(above[j] >= row[j] && row[j] >= above[j + 1])) return false;
    return above[len - 1] >= row[len - 1] && row[len - 1] >= -above[len - 1];
  }
  // Row 2p+1 below row 2p+2 with p+1 entries; bounded below by |last above|.
  for (int j = 0; j + 1 < len; ++j)
    if (!(above[j] >= row[j] && row[j] >= above[j + 1])) return false;
  return above[len - 1] >= row[len - 1] && row[len - 1] >= std::abs(above[len]);
}

// l values in units for the row at `level` of pattern m (1-based entry j).
double l_value(const GelfandPattern& m, int level, int j) {
  const double entry = 0.5 * m.row_at_level(level)[j - 1];
  if (m.group == GroupTag::gl) return entry - j;
  const int p = level / 2;
  if (level % 2 == 0) return entry + p - j;
  return entry + p - j + 1;
}

struct FactorRatio {
  std::vector<double> num;
  std::vector<double> den;

  bool num_has_zero() const {
    for (double f : num)
      if (f == 0.0) return true;
    return false;
  }
  bool den_has_zero() const {
    for (double f : den)
      if (f == 0.0) return true;
    return false;
  }
  double abs_ratio() const {
    double r = 1.0;
    for (double f : num) r *= f;
    for (double f : den) r /= f;
    return std::abs(r);
  }
};

// Applies one raise/lower term: validates the target pattern, inserts the
// coefficient, and enforces the vanishing-coefficient guard on dropped terms.
void add_term(SparseOperator& op, const PatternBasis& basis, const GelfandPattern& target,
              int source_index, const FactorRatio& ratio, double prefactor, cplx scale) {
  const bool valid = is_valid_pattern(target);
  if (!valid) {
    if (!ratio.num_has_zero())
      throw std::logic_error("gelfand action: invalid target with nonvanishing coefficient");
    return;
  }
  if (ratio.den_has_zero())
    throw std::logic_error("gelfand action: vanishing denominator on a valid target");
  const int t = basis.index_of(target);
  if (t < 0) throw std::logic_error("gelfand action: target pattern missing from basis");
  op.add(t, source_index, scale * (prefactor * std::sqrt(ratio.abs_ratio())));
}

}  // namespace

int GTWeight::width() const {
  const int k = static_cast<int>(twice_entries.size());
  switch (group) {
    case GroupTag::gl: return k;
    case GroupTag::so_odd: return 2 * k + 1;
    default: return 2 * k;
  }
}

GTWeight gl_weight(const std::vector<int>& entries) {
  GTWeight w;
  w.group = GroupTag::gl;
  for (int e : entries) w.twice_entries.push_back(2 * e);
  return w;
}

bool is_valid_weight(const GTWeight& w) {
  const auto& v = w.twice_entries;
  if (v.empty()) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) {
      if (w.group != GroupTag::so_even || i + 1 != v.size()) return false;
    }
  switch (w.group) {
    case GroupTag::gl:
      for (int e : v)
        if (e % 2 != 0) return false;
      return true;
    case GroupTag::so_odd:
      return same_parity(v) && v.back() >= 0;
    default:
      if (!same_parity(v)) return false;
      if (v.size() < 2) return v.size() == 1;  // SO(2) weight: a single entry
      return v[v.size() - 2] >= std::abs(v.back());
  }
}

void validate_weight(const GTWeight& w) {
  if (!is_valid_weight(w)) throw std::invalid_argument("weight: constraint violation");
}

std::vector<int> GelfandPattern::flatten() const {
  std::vector<int> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

bool is_valid_pattern(const GelfandPattern& m) {
  const int base = m.base_level();
  for (int level = m.width; level >= base; --level) {
    const auto& row = m.row_at_level(level);
    if (static_cast<int>(row.size()) != row_length(m.group, level)) return false;
    if (level < m.width && !row_pair_ok(m.group, level, row, m.row_at_level(level + 1)))
      return false;
  }
  return true;
}

int PatternBasis::index_of(const GelfandPattern& m) const {
  auto it = index.find(m.flatten());
  return it == index.end() ? -1 : it->second;
}

namespace {

void enumerate_rec(const GTWeight& w, GelfandPattern& partial, int level, int cap,
                   std::vector<GelfandPattern>& out) {
  const int base = partial.base_level();
  if (level < base) {
    if (static_cast<int>(out.size()) >= cap)
      throw std::length_error("enumerate_patterns: pattern count exceeds cap");
    out.push_back(partial);
    return;
  }
  const auto& above = partial.row_at_level(level + 1);
  const int len = row_length(w.group, level);
  std::vector<int> row(len);
  // Nested descending scans in steps of one unit (two in doubled storage)
  // produce the patterns in descending lexicographic order.
  auto scan = [&](auto&& self, int j) -> void {
    if (j == len) {
      partial.row_at_level(level) = row;
      enumerate_rec(w, partial, level - 1, cap, out);
      return;
    }
    int hi, lo;
    if (w.group == GroupTag::gl) {
      hi = above[j];
      lo = above[j + 1];
    } else if (level % 2 == 0) {
      hi = above[j];
      lo = (j + 1 < len) ? above[j + 1] : -above[j];
    } else {
      hi = above[j];
      lo = (j + 1 < len) ? above[j + 1] : std::abs(above[len]);
    }
    for (int v = hi; v >= lo; v -= 2) {
      row[j] = v;
      self(self, j + 1);
    }
  };
  scan(scan, 0);
}

}  // namespace

PatternBasis enumerate_patterns(const GTWeight& w, int cap) {
  validate_weight(w);
  PatternBasis basis;
  basis.weight = w;
  GelfandPattern partial;
  partial.group = w.group;
  partial.width = w.width();
  const int base = partial.base_level();
  partial.rows.resize(partial.width - base + 1);
  partial.row_at_level(partial.width) = w.twice_entries;
  enumerate_rec(w, partial, partial.width - 1, cap, basis.patterns);
  for (int i = 0; i < basis.dim(); ++i) basis.index.emplace(basis.patterns[i].flatten(), i);
  return basis;
}

long long gt_dimension(const GTWeight& w, int cap) {
  return enumerate_patterns(w, cap).dim();
}

std::vector<double> gl_pattern_weight(const GelfandPattern& m) {
  if (m.group != GroupTag::gl) throw std::invalid_argument("gl_pattern_weight: gl patterns only");
  std::vector<double> out(m.width);
  double below = 0.0;
  for (int p = 1; p <= m.width; ++p) {
    double sum = 0.0;
    for (int v : m.row_at_level(p)) sum += 0.5 * v;
    out[p - 1] = sum - below;
    below = sum;
  }
  return out;
}

namespace {

FactorRatio gl_raise_ratio(const GelfandPattern& m, int p, int j) {
  FactorRatio r;
  const double lj = l_value(m, p - 1, j);
  for (int i = 1; i <= p; ++i) r.num.push_back(l_value(m, p, i) - lj);
  if (p - 2 >= 1)
    for (int i = 1; i <= p - 2; ++i) r.num.push_back(l_value(m, p - 2, i) - lj - 1.0);
  for (int i = 1; i <= p - 1; ++i) {
    if (i == j) continue;
    const double li = l_value(m, p - 1, i);
    r.den.push_back(li - lj);
    r.den.push_back(li - lj - 1.0);
  }
  return r;
}

FactorRatio gl_lower_ratio(const GelfandPattern& m, int p, int j) {
  FactorRatio r;
  const double lj = l_value(m, p - 1, j);
  for (int i = 1; i <= p; ++i) r.num.push_back(l_value(m, p, i) - lj + 1.0);
  if (p - 2 >= 1)
    for (int i = 1; i <= p - 2; ++i) r.num.push_back(l_value(m, p - 2, i) - lj);
  for (int i = 1; i <= p - 1; ++i) {
    if (i == j) continue;
    const double li = l_value(m, p - 1, i);
    r.den.push_back(li - lj);
    r.den.push_back(li - lj + 1.0);
  }
  return r;
}

}  // namespace

SparseOperator gl_action(const PatternBasis& basis, GlGenerator g, int p) {
  if (basis.weight.group != GroupTag::gl)
    throw std::invalid_argument("gl_action: gl weight required");
  const int n = basis.weight.width();
  if (g == GlGenerator::diagonal) {
    if (p < 1 || p > n) throw std::invalid_argument("gl_action: index out of range");
  } else if (p < 2 || p > n) {
    throw std::invalid_argument("gl_action: index out of range");
  }
  SparseOperator op(basis.dim());
  for (int c = 0; c < basis.dim(); ++c) {
    const GelfandPattern& m = basis.patterns[c];
    if (g == GlGenerator::diagonal) {
      double sum = 0.0;
      for (int v : m.row_at_level(p)) sum += 0.5 * v;
      if (p >= 2)
        for (int v : m.row_at_level(p - 1)) sum -= 0.5 * v;
      op.add(c, c, sum);
      continue;
    }
    for (int j = 1; j <= p - 1; ++j) {
      GelfandPattern target = m;
      if (g == GlGenerator::raising) {
        target.row_at_level(p - 1)[j - 1] += 2;
        add_term(op, basis, target, c, gl_raise_ratio(m, p, j), 1.0, 1.0);
      } else {
        target.row_at_level(p - 1)[j - 1] -= 2;
        add_term(op, basis, target, c, gl_lower_ratio(m, p, j), 1.0, 1.0);
      }
    }
  }
  return op;
}

SparseOperator gl_action(const GTWeight& w, GlGenerator g, int p, int cap) {
  return gl_action(enumerate_patterns(w, cap), g, p);
}

SparseOperator gl_action_general(const PatternBasis& basis, int i, int j) {
  const int n = basis.weight.width();
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("gl_action_general: indices out of range");
  if (i == j) return gl_action(basis, GlGenerator::diagonal, i);
  if (j == i + 1) return gl_action(basis, GlGenerator::raising, j);
  if (i == j + 1) return gl_action(basis, GlGenerator::lowering, i);
  if (i < j) return commutator(gl_action_general(basis, i, j - 1),
                               gl_action_general(basis, j - 1, j));
  return commutator(gl_action_general(basis, i, j + 1), gl_action_general(basis, j + 1, j));
}

SparseOperator gl_action_general(const GTWeight& w, int i, int j, int cap) {
  return gl_action_general(enumerate_patterns(w, cap), i, j);
}

SparseOperator gl_algebra_element(const PatternBasis& basis, const DenseMatrix& h, int p) {
  const int n = basis.weight.width();
  if (h.rows() != 2 || h.cols() != 2)
    throw std::invalid_argument("gl_algebra_element: block must be 2x2");
  if (p < 0 || p > n - 2) throw std::invalid_argument("gl_algebra_element: offset out of range");
  SparseOperator op(basis.dim());
  op.axpy(h(0, 0), gl_action(basis, GlGenerator::diagonal, p + 1));
  op.axpy(h(0, 1), gl_action(basis, GlGenerator::raising, p + 2));
  op.axpy(h(1, 0), gl_action(basis, GlGenerator::lowering, p + 2));
  op.axpy(h(1, 1), gl_action(basis, GlGenerator::diagonal, p + 2));
  return op;
}

SparseOperator gl_algebra_element(const GTWeight& w, const DenseMatrix& h, int p, int cap) {
  return gl_algebra_element(enumerate_patterns(w, cap), h, p);
}

namespace {

FactorRatio so_a_ratio(const GelfandPattern& m, int p, int j) {
  FactorRatio r;
  const double lj = l_value(m, 2 * p, j);
  for (int q = 1; q <= p - 1; ++q) {
    const double lr = l_value(m, 2 * p - 1, q);
    r.num.push_back((lr - 0.5) * (lr - 0.5) - (lj + 0.5) * (lj + 0.5));
  }
  for (int q = 1; q <= p; ++q) {
    const double lr = l_value(m, 2 * p + 1, q);
    r.num.push_back((lr - 0.5) * (lr - 0.5) - (lj + 0.5) * (lj + 0.5));
  }
  for (int q = 1; q <= p; ++q) {
    if (q == j) continue;
    const double lr = l_value(m, 2 * p, q);
    r.den.push_back(lr * lr - lj * lj);
    r.den.push_back(lr * lr - (lj + 1.0) * (lj + 1.0));
  }
  return r;
}

FactorRatio so_b_ratio(const GelfandPattern& m, int p, int j) {
  FactorRatio r;
  const double lj = l_value(m, 2 * p + 1, j);
  for (int q = 1; q <= p; ++q) {
    const double lr = l_value(m, 2 * p, q);
    r.num.push_back(lr * lr - lj * lj);
  }
  for (int q = 1; q <= p + 1; ++q) {
    const double lr = l_value(m, 2 * p + 2, q);
    r.num.push_back(lr * lr - lj * lj);
  }
  r.den.push_back(lj * lj);
  r.den.push_back(4.0 * lj * lj - 1.0);
  for (int q = 1; q <= p; ++q) {
    if (q == j) continue;
    const double lr = l_value(m, 2 * p + 1, q);
    r.den.push_back(lr * lr - lj * lj);
    r.den.push_back(lj * lj - (lr - 1.0) * (lr - 1.0));
  }
  return r;
}

// Diagonal coefficient C_{2p}. The raw ratio degenerates to 0/0 exactly when
// the last entry of row 2p+1 vanishes; the value is then 0, forced by the
// vanishing factor from row 2p+2.
double so_c_value(const GelfandPattern& m, int p) {
  FactorRatio r;
  for (int q = 1; q <= p; ++q) r.num.push_back(l_value(m, 2 * p, q));
  for (int q = 1; q <= p + 1; ++q) r.num.push_back(l_value(m, 2 * p + 2, q));
  for (int q = 1; q <= p; ++q) {
    const double lr = l_value(m, 2 * p + 1, q);
    r.den.push_back(lr);
    r.den.push_back(lr - 1.0);
  }
  if (r.den_has_zero()) {
    if (!r.num_has_zero())
      throw std::logic_error("so_action: diagonal 0/0 with nonvanishing numerator");
    return 0.0;
  }
  double v = 1.0;
  for (double f : r.num) v *= f;
  for (double f : r.den) v /= f;
  return v;
}

}  // namespace

SparseOperator so_action(const PatternBasis& basis, int q) {
  if (basis.weight.group == GroupTag::gl)
    throw std::invalid_argument("so_action: so weight required");
  const int n = basis.weight.width();
  if (q < 1 || q > n - 1) throw std::invalid_argument("so_action: index out of range");
  SparseOperator op(basis.dim());
  for (int c = 0; c < basis.dim(); ++c) {
    const GelfandPattern& m = basis.patterns[c];
    if (q % 2 == 0) {
      const int p = q / 2;
      for (int j = 1; j <= p; ++j) {
        GelfandPattern raised = m;
        raised.row_at_level(2 * p)[j - 1] += 2;
        add_term(op, basis, raised, c, so_a_ratio(m, p, j), 0.5, 1.0);
        GelfandPattern lowered = m;
        lowered.row_at_level(2 * p)[j - 1] -= 2;
        add_term(op, basis, lowered, c, so_a_ratio(lowered, p, j), 0.5, -1.0);
      }
    } else {
      const int p = (q - 1) / 2;
      for (int j = 1; j <= p; ++j) {
        GelfandPattern raised = m;
        raised.row_at_level(2 * p + 1)[j - 1] += 2;
        add_term(op, basis, raised, c, so_b_ratio(m, p, j), 1.0, 1.0);
        GelfandPattern lowered = m;
        lowered.row_at_level(2 * p + 1)[j - 1] -= 2;
        add_term(op, basis, lowered, c, so_b_ratio(lowered, p, j), 1.0, -1.0);
      }
      op.add(c, c, cplx(0.0, 1.0) * so_c_value(m, p));
    }
  }
  return op;
}

SparseOperator so_action(const GTWeight& w, int q, int cap) {
  return so_action(enumerate_patterns(w, cap), q);
}

}  // namespace irreps
