#pragma once
// Box-shift morphisms between Specht lattices: double-path and d-fold place
// operations, weight multiplicities, the reduced coefficient table with its
// redundancy factor, and the resulting morphism with its modulus.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "specht/homsolver.hpp"
#include "specht/lattices.hpp"

namespace specht {

// ---------------------------------------------------------------------------
// Shapes: move two boxes from column k+1 to column g (general), or d boxes
// from column g+1 to column g (adjacent columns)
// ---------------------------------------------------------------------------

// Target shape with conjugate column g grown by `boxes` and column `from`
// shrunk by `boxes`; throws if the result is not a partition.
inline Partition shifted_shape(const Partition& lambda, long g, long from,
                               long boxes) {
  Partition conj = transpose_partition(lambda);
  std::vector<long> cols;
  long width = std::max(lambda.cols(), g);
  for (long j = 1; j <= width; ++j) cols.push_back(conj.part(j));
  cols[g - 1] += boxes;
  cols[from - 1] -= boxes;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] < 0 || (i > 0 && cols[i] > cols[i - 1]))
      throw SpechtError("shifted_shape: result is not a partition");
  }
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  std::vector<long> parts;
  for (long i = 1; i <= (cols.empty() ? 0 : cols[0]); ++i) {
    long c = 0;
    while (c < static_cast<long>(cols.size()) && cols[c] >= i) ++c;
    parts.push_back(c);
  }
  return Partition(parts);
}

inline Partition two_box_target(const Partition& lambda, long g, long k) {
  return shifted_shape(lambda, g, k + 1, 2);
}

inline Partition dfold_target(const Partition& lambda, long g, long d) {
  return shifted_shape(lambda, g, g + 1, d);
}

// Column offsets measured against column k+1.
inline long x_value(const Partition& lambda, long k, long i) {
  Partition conj = transpose_partition(lambda);
  return (conj.part(i) - i) - (conj.part(k + 1) - (k + 1));
}

// ---------------------------------------------------------------------------
// Double paths (two boxes, columns g .. k+1)
// ---------------------------------------------------------------------------

// Marked rows per column, index 0 <-> column g; row 0 means the path skips
// the column.  Both paths mark column g (rows lambda'_g+1, lambda'_g+2) and
// column k+1 (rows v < w).
struct DoublePath {
  long g = 0, k = 0;
  std::vector<std::array<long, 2>> rows;  // size k + 2 - g

  long row(long j, int path) const { return rows[j - g][path - 1]; }
  bool marks(long j, int path) const { return row(j, path) != 0; }

  int sign() const {
    long v = rows.back()[0], w = rows.back()[1];
    return ((v + w) % 2 == 0) ? 1 : -1;
  }

  bool ordered() const {
    for (long t = 1; t + 1 < static_cast<long>(rows.size()); ++t)
      if (rows[t][0] != 0 && rows[t][1] != 0 && rows[t][0] > rows[t][1])
        return false;
    return true;
  }

  // Per-column membership states: bit (i-1) set iff path i marks the column.
  std::vector<int> pattern() const {
    std::vector<int> p;
    for (const auto& r : rows)
      p.push_back((r[0] != 0 ? 1 : 0) | (r[1] != 0 ? 2 : 0));
    return p;
  }
};

inline std::vector<DoublePath> enumerate_double_paths(
    const Partition& lambda, long g, long k,
    long guard = kEnumerationGuard) {
  Partition conj = transpose_partition(lambda);
  Int count = Int(conj.part(k + 1)) * (conj.part(k + 1) - 1) / 2;
  for (long j = g + 1; j <= k; ++j)
    count *= Int(conj.part(j) + 1) * (conj.part(j) + 1);
  if (count > guard) throw GuardError("double path enumeration exceeds guard");

  std::vector<DoublePath> out;
  DoublePath gamma;
  gamma.g = g;
  gamma.k = k;
  gamma.rows.assign(k + 2 - g, {0, 0});
  gamma.rows[0] = {conj.part(g) + 1, conj.part(g) + 2};
  std::function<void(long)> rec = [&](long j) {
    if (j == k + 1) {
      for (long v = 1; v <= conj.part(k + 1); ++v)
        for (long w = v + 1; w <= conj.part(k + 1); ++w) {
          gamma.rows[j - g] = {v, w};
          out.push_back(gamma);
        }
      return;
    }
    for (long r1 = 0; r1 <= conj.part(j); ++r1)
      for (long r2 = 0; r2 <= conj.part(j); ++r2) {
        if (r1 != 0 && r1 == r2) continue;
        gamma.rows[j - g] = {r1, r2};
        rec(j + 1);
      }
  };
  rec(g + 1);
  return out;
}

// The place operation: push entries down the two paths into the moved boxes
// and close up column k+1.
inline Tableau apply_double_path(const Tableau& a, const DoublePath& gamma) {
  const Partition& lambda = a.shape();
  Partition mu = two_box_target(lambda, gamma.g, gamma.k);
  Partition conj = transpose_partition(lambda);
  Partition mu_conj = transpose_partition(mu);

  // column-major copy of the source, extended by the two new cells
  std::vector<std::vector<long>> col(mu.cols() + 1);
  for (long j = 1; j <= mu.cols(); ++j) {
    col[j].assign(mu_conj.part(j) + 1, 0);
    for (long i = 1; i <= std::min(conj.part(j), mu_conj.part(j)); ++i)
      col[j][i] = a.at(j, i);
  }
  for (int path = 1; path <= 2; ++path) {
    for (long j = gamma.g; j <= gamma.k; ++j) {
      if (!gamma.marks(j, path)) continue;
      long jp = j + 1;
      while (!gamma.marks(jp, path)) ++jp;
      col[j][gamma.row(j, path)] = a.at(jp, gamma.row(jp, path));
    }
  }
  long v = gamma.row(gamma.k + 1, 1), w = gamma.row(gamma.k + 1, 2);
  if (gamma.k + 1 <= mu.cols()) {
    long out_i = 0;
    for (long i = 1; i <= conj.part(gamma.k + 1); ++i) {
      if (i == v || i == w) continue;
      col[gamma.k + 1][++out_i] = a.at(gamma.k + 1, i);
    }
  }
  std::vector<std::vector<long>> out_rows(mu.rows());
  for (long i = 1; i <= mu.rows(); ++i)
    for (long j = 1; j <= mu.part(i); ++j)
      out_rows[i - 1].push_back(col[j][i]);
  return Tableau(mu, std::move(out_rows));
}

// Sort every column ascending; returns the sign of the sorting permutation.
inline std::pair<Tableau, int> column_sorted(const Tableau& t) {
  const Partition& shape = t.shape();
  Partition conj = transpose_partition(shape);
  std::vector<std::vector<long>> col(shape.cols() + 1);
  int sign = 1;
  for (long j = 1; j <= shape.cols(); ++j) {
    col[j] = t.column_values(j);
    for (size_t x = 0; x < col[j].size(); ++x)
      for (size_t y = x + 1; y < col[j].size(); ++y)
        if (col[j][x] > col[j][y]) sign = -sign;
    std::sort(col[j].begin(), col[j].end());
  }
  std::vector<std::vector<long>> out_rows(shape.rows());
  for (long i = 1; i <= shape.rows(); ++i)
    for (long j = 1; j <= shape.part(i); ++j)
      out_rows[i - 1].push_back(col[j][i - 1]);
  return {Tableau(shape, std::move(out_rows)), sign};
}

// ---------------------------------------------------------------------------
// Step classes and the reduced coefficient table
// ---------------------------------------------------------------------------

// step_class(j) = 0 or 1 when column j+1 is shorter by that amount and
// j lies strictly inside [g+1, k-1]; 2 otherwise ("free" step).
inline int step_class(const Partition& lambda, long g, long k, long j) {
  if (j < g + 1 || j > k - 1) return 2;
  Partition conj = transpose_partition(lambda);
  long diff = conj.part(j) - conj.part(j + 1);
  return (diff == 0 || diff == 1) ? static_cast<int>(diff) : 2;
}

// Transition factor appending column r+1 in state `next` after state `cur`,
// for a 0-step (columns of equal length); zero marks a bulky transition.
inline Int step0_factor(const Int& x, int cur, int next) {
  bool cur2 = cur == 3, cur1 = cur == 1 || cur == 2, cur0 = cur == 0;
  bool nxt2 = next == 3, nxt0 = next == 0;
  bool same1 = cur1 && next == cur;
  if (cur2 && nxt2) return x * (x + 1);
  if (cur1 && nxt2) return x + 1;
  if (same1) return (x - 1) * (x + 1);
  if (cur0 && nxt2) return 2;
  if (cur0 && (next == 1 || next == 2)) return x - 1;
  if (cur0 && nxt0) return (x - 1) * x;
  return 0;  // bulky
}

// Transition factor for a 1-step (next column shorter by one).
inline Int step1_factor(const Int& x, int cur, int next) {
  bool cur2 = cur == 3;
  bool nxt2 = next == 3, nxt1 = next == 1 || next == 2, nxt0 = next == 0;
  if (cur2 && nxt2) return -x * (x - 3);
  if (cur2 && nxt1) return x * (x - 2);
  if (cur2 && nxt0) return 0;  // bulky
  if (nxt2) return 2;
  if (nxt1) return x - 2;
  return (x - 2) * (x - 1);  // nxt0
}

// Reduced coefficients, keyed by the interior states (columns g+1 .. k);
// the two outer columns always carry both paths.
inline std::map<std::vector<int>, Int> theta_table(const Partition& lambda,
                                                   long g, long k) {
  std::map<std::vector<int>, Int> table;
  long interior = k - g;
  std::vector<int> states(interior, 0);
  std::function<void(long)> rec = [&](long t) {
    if (t == interior) {
      Int theta = 1;
      int cur = 3;  // column g
      for (long r = g; r <= k - 1; ++r) {
        int next = states[r - g];
        Int x = x_value(lambda, k, r);
        switch (step_class(lambda, g, k, r)) {
          case 0:
            theta *= step0_factor(x, cur, next);
            break;
          case 1:
            theta *= step1_factor(x, cur, next);
            break;
          default: {
            int bits = (next == 3) ? 2 : (next == 0 ? 0 : 1);
            theta *= factorial(bits) *
                     rising_factorial(x_value(lambda, k, r + 1), 2 - bits);
            break;
          }
        }
        cur = next;
      }
      table[states] = theta;
      return;
    }
    for (int s = 0; s <= 3; ++s) {
      states[t] = s;
      rec(t + 1);
    }
  };
  rec(0);
  return table;
}

// Product of step contributions over an interval of columns.
inline Int r_interval(const Partition& lambda, long g, long k, long lo,
                      long hi) {
  Int r = 1;
  for (long j = lo; j <= hi; ++j) {
    Int x = x_value(lambda, k, j);
    int c = step_class(lambda, g, k, j);
    if (c == 0) r *= x * (x + 1);
    if (c == 1) r *= x;
  }
  return r;
}

// Redundancy: the greatest common divisor of the reduced coefficients.
inline Int redundancy_factor(const Partition& lambda, long g, long k) {
  Int r = r_interval(lambda, g, k, g + 1, k);
  // components: maximal runs [p, q] in [g+1, k] whose inner steps are all
  // 0- or 1-steps; a run consisting of 1-steps only contributes gcd(2, X_q)
  long p = g + 1;
  while (p <= k) {
    long q = p;
    bool all_one_steps = true;
    while (q < k && step_class(lambda, g, k, q) != 2) {
      if (step_class(lambda, g, k, q) != 1) all_one_steps = false;
      ++q;
    }
    if (all_one_steps) r *= specht::gcd(Int(2), x_value(lambda, k, q));
    p = q + 1;
  }
  return r;
}

// gcd(binom(x,1), ..., binom(x,d)) in closed form.
inline Int gcd_binomials(const Int& x, long d) {
  if (x <= 0 || d <= 0) throw SpechtError("gcd_binomials: need x, d >= 1");
  Int m = x;
  for (const auto& [p, e] : factorize(x)) {
    int drop = std::min(e, ilog(p, d));
    for (int i = 0; i < drop; ++i) m /= p;
  }
  return m;
}

// Order of the induced morphism into the reduced target (two-box case).
inline Int two_box_modulus(const Partition& lambda, long g, long k) {
  Int m0 = x_value(lambda, k, g) + 2;
  if (g == k) return gcd_binomials(m0, 2);
  // first component of [g+1, k]
  long q = g + 1;
  bool all_one_steps = true;
  while (q < k && step_class(lambda, g, k, q) != 2) {
    if (step_class(lambda, g, k, q) != 1) all_one_steps = false;
    ++q;
  }
  if (!all_one_steps) return m0;
  Int d = specht::gcd(Int(2), specht::gcd(x_value(lambda, k, g),
                                          x_value(lambda, k, g + 1)));
  return m0 / d;
}

// Order of the induced morphism in the adjacent-column d-box case.
inline Int dfold_modulus(const Partition& lambda, long g, long d) {
  Partition conj = transpose_partition(lambda);
  Int m0 = Int(conj.part(g) - conj.part(g + 1)) + d + 1;
  return gcd_binomials(m0, d);
}

// ---------------------------------------------------------------------------
// Images of a tableau under the unreduced morphism
// ---------------------------------------------------------------------------

// Accumulated coefficients on column-sorted target tableaux.
using TableauSum = std::map<Tableau, Int>;

inline void add_term(TableauSum& acc, const Tableau& t, const Int& c) {
  auto [sorted, sign] = column_sorted(t);
  Int v = c * sign;
  auto it = acc.find(sorted);
  if (it == acc.end()) {
    acc.emplace(sorted, v);
  } else {
    it->second += v;
    if (it->second == 0) acc.erase(it);
  }
}

// Sum over all double paths with the rising-factorial weight multiplicities.
inline TableauSum two_box_image_by_weights(const Tableau& a, long g, long k) {
  TableauSum acc;
  for (const auto& gamma : enumerate_double_paths(a.shape(), g, k)) {
    Int mult = 1;
    auto pat = gamma.pattern();
    for (long j = g + 1; j <= k; ++j) {
      int bits = pat[j - g] == 3 ? 2 : (pat[j - g] == 0 ? 0 : 1);
      mult *= rising_factorial(x_value(a.shape(), k, j), 2 - bits);
    }
    add_term(acc, apply_double_path(a, gamma), mult * gamma.sign());
  }
  return acc;
}

// Sum over ordered double paths weighted by the reduced coefficients.
inline TableauSum two_box_image_by_theta(const Tableau& a, long g, long k) {
  auto table = theta_table(a.shape(), g, k);
  TableauSum acc;
  for (const auto& gamma : enumerate_double_paths(a.shape(), g, k)) {
    if (!gamma.ordered()) continue;
    auto pat = gamma.pattern();
    std::vector<int> interior(pat.begin() + 1, pat.end() - 1);
    const Int& theta = table.at(interior);
    if (theta == 0) continue;
    add_term(acc, apply_double_path(a, gamma), theta * gamma.sign());
  }
  return acc;
}

// ---------------------------------------------------------------------------
// d-fold place operation (adjacent columns)
// ---------------------------------------------------------------------------

inline TableauSum dfold_image(const Tableau& a, long g, long d,
                              long guard = kEnumerationGuard) {
  const Partition& lambda = a.shape();
  Partition mu = dfold_target(lambda, g, d);
  Partition conj = transpose_partition(lambda);
  Partition mu_conj = transpose_partition(mu);
  long h = conj.part(g + 1);
  if (binomial(h, d) > guard)
    throw GuardError("d-fold enumeration exceeds guard");
  TableauSum acc;
  std::vector<long> zeta(d);
  std::function<void(long, long)> rec = [&](long pos, long lo) {
    if (pos == d) {
      long parity = 0;
      for (long z : zeta) parity += z;
      Int sign = (parity % 2 == 0) ? 1 : -1;
      std::vector<std::vector<long>> col(mu.cols() + 1);
      for (long j = 1; j <= mu.cols(); ++j) {
        col[j].assign(mu_conj.part(j) + 1, 0);
        for (long i = 1; i <= std::min(conj.part(j), mu_conj.part(j)); ++i)
          col[j][i] = a.at(j, i);
      }
      for (long i = 1; i <= d; ++i)
        col[g][conj.part(g) + i] = a.at(g + 1, zeta[i - 1]);
      long out_i = 0;
      for (long i = 1; i <= h; ++i) {
        if (std::find(zeta.begin(), zeta.end(), i) != zeta.end()) continue;
        col[g + 1][++out_i] = a.at(g + 1, i);
      }
      std::vector<std::vector<long>> out_rows(mu.rows());
      for (long i = 1; i <= mu.rows(); ++i)
        for (long j = 1; j <= mu.part(i); ++j)
          out_rows[i - 1].push_back(col[j][i]);
      add_term(acc, Tableau(mu, std::move(out_rows)), sign);
      return;
    }
    for (long z = lo; z <= h; ++z) {
      zeta[pos] = z;
      rec(pos + 1, z + 1);
    }
  };
  rec(0, 1);
  return acc;
}

// ---------------------------------------------------------------------------
// From tableau sums to morphisms
// ---------------------------------------------------------------------------

inline FreeElement expand_polytabloids(const Partition& mu,
                                       const TableauSum& sum) {
  FreeElement out(mu);
  for (const auto& [t, c] : sum) out = out + polytabloid(t) * c;
  return out;
}

struct BoxShiftResult {
  Partition source;
  Partition target;
  Int redundancy;
  Int modulus;
  Morphism morphism;  // S^source -> S^target / modulus, the generator f
};

// The reduced two-box-shift morphism out of the canonical generator; the
// image is divided by the redundancy factor before reduction.
inline BoxShiftResult two_box_morphism(const Partition& lambda, long g,
                                       long k, bool verify = true) {
  Tableau a = Tableau::canonical(lambda);
  Partition mu = two_box_target(lambda, g, k);
  TableauSum sum = two_box_image_by_weights(a, g, k);
  FreeElement elem = expand_polytabloids(mu, sum);
  std::vector<Int> coords = SpechtBasis::get(mu).straighten(elem);
  Int r = redundancy_factor(lambda, g, k);
  Int m = two_box_modulus(lambda, g, k);
  for (auto& c : coords) c = mod_reduce(checked_div(c, r), m);
  BoxShiftResult res;
  res.source = lambda;
  res.target = mu;
  res.redundancy = r;
  res.modulus = m;
  res.morphism = morphism_from_image(
      lambda, TargetDesc{TargetKind::Specht, mu}, m, coords, verify);
  return res;
}

inline BoxShiftResult dfold_morphism(const Partition& lambda, long g, long d,
                                     bool verify = true) {
  Tableau a = Tableau::canonical(lambda);
  Partition mu = dfold_target(lambda, g, d);
  FreeElement elem = expand_polytabloids(mu, dfold_image(a, g, d));
  std::vector<Int> coords = SpechtBasis::get(mu).straighten(elem);
  Int m = dfold_modulus(lambda, g, d);
  for (auto& c : coords) c = mod_reduce(c, m);
  BoxShiftResult res;
  res.source = lambda;
  res.target = mu;
  res.redundancy = 1;
  res.modulus = m;
  res.morphism = morphism_from_image(
      lambda, TargetDesc{TargetKind::Specht, mu}, m, coords, verify);
  return res;
}

// Serialization of a coefficient table: one line per pattern keyed by the
// membership bit-string over cells ordered by (path, column), followed by
// the redundancy and modulus trailers.
inline std::string theta_table_to_text(const Partition& lambda, long g,
                                       long k) {
  auto table = theta_table(lambda, g, k);
  Int r = redundancy_factor(lambda, g, k);
  Int m = two_box_modulus(lambda, g, k);
  std::string out;
  std::vector<std::pair<std::string, Int>> lines;
  for (const auto& [interior, theta] : table) {
    std::vector<int> full;
    full.push_back(3);
    full.insert(full.end(), interior.begin(), interior.end());
    full.push_back(3);
    std::string bits;
    for (int path = 1; path <= 2; ++path)
      for (int s : full) bits += ((s >> (path - 1)) & 1) ? '1' : '0';
    lines.push_back({bits, theta});
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [bits, theta] : lines)
    out += bits + ": " + theta.get_str() + "\n";
  out += "R=" + r.get_str() + "\n";
  out += "m=" + m.get_str() + "\n";
  return out;
}

}  // namespace specht
