#pragma once
// Correspondoids (fillings of one shape by row indices of another), the
// row-averaged tabloid maps they induce, dualization matrices between a
// Specht lattice and the signed dual of its conjugate, transposition of
// morphisms, and the mod-2 one-dimensional morphisms.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "specht/homsolver.hpp"
#include "specht/lattices.hpp"
#include "specht/zlinalg.hpp"

namespace specht {

// ---------------------------------------------------------------------------
// Correspondoids
// ---------------------------------------------------------------------------

// A filling of the diagram of `lambda` in which the value j occurs exactly
// mu_j times; cell (row i, column j) carries values[i-1][j-1].
struct Correspondoid {
  Partition lambda;
  Partition mu;
  std::vector<std::vector<long>> values;

  long value(long i, long j) const { return values[i - 1][j - 1]; }

  static Correspondoid identity(const Partition& shape) {
    Correspondoid c;
    c.lambda = shape;
    c.mu = shape;
    for (long i = 1; i <= shape.rows(); ++i)
      c.values.push_back(std::vector<long>(shape.part(i), i));
    return c;
  }

  static Correspondoid parse(const std::string& s) {
    Correspondoid c;
    std::vector<long> parts;
    long max_value = 0;
    for (const auto& rowtok : split(s, ';')) {
      std::vector<long> row;
      for (const auto& tok : split(rowtok, ',')) {
        row.push_back(parse_long(tok));
        if (row.back() < 1) throw ParseError("correspondoid value < 1");
        max_value = std::max(max_value, row.back());
      }
      parts.push_back(static_cast<long>(row.size()));
      c.values.push_back(std::move(row));
    }
    c.lambda = Partition(std::move(parts));
    std::vector<long> counts(max_value, 0);
    for (const auto& row : c.values)
      for (long v : row) ++counts[v - 1];
    try {
      c.mu = Partition(std::move(counts));
    } catch (SpechtError&) {
      throw ParseError("correspondoid value counts do not form a partition");
    }
    return c;
  }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
      if (i) out += ';';
      for (size_t j = 0; j < values[i].size(); ++j) {
        if (j) out += ',';
        out += std::to_string(values[i][j]);
      }
    }
    return out;
  }

  bool operator==(const Correspondoid& o) const {
    return lambda == o.lambda && values == o.values;
  }
  bool operator<(const Correspondoid& o) const { return values < o.values; }
};

// All fillings of [lambda] in which the value j occurs mu_j times.
inline std::vector<Correspondoid> enumerate_correspondoids(
    const Partition& mu, const Partition& lambda,
    long guard = kEnumerationGuard) {
  if (mu.n() != lambda.n())
    throw SpechtError("enumerate_correspondoids: size mismatch");
  Int count = factorial(lambda.n());
  for (long j = 1; j <= mu.rows(); ++j) count /= factorial(mu.part(j));
  if (count > guard)
    throw GuardError("correspondoid enumeration exceeds guard");

  std::vector<Correspondoid> out;
  Correspondoid c;
  c.lambda = lambda;
  c.mu = mu;
  for (long i = 1; i <= lambda.rows(); ++i)
    c.values.push_back(std::vector<long>(lambda.part(i), 0));
  std::vector<long> remaining;
  for (long j = 1; j <= mu.rows(); ++j) remaining.push_back(mu.part(j));
  std::function<void(long, long)> rec = [&](long i, long j) {
    if (i > lambda.rows()) {
      out.push_back(c);
      return;
    }
    long ni = j < lambda.part(i) ? i : i + 1;
    long nj = j < lambda.part(i) ? j + 1 : 1;
    for (long v = 1; v <= mu.rows(); ++v) {
      if (remaining[v - 1] == 0) continue;
      c.values[i - 1][j - 1] = v;
      --remaining[v - 1];
      rec(ni, nj);
      ++remaining[v - 1];
    }
  };
  rec(1, 1);
  return out;
}

// Weakly increasing along rows, strictly increasing down columns.
inline bool is_semistandard(const Correspondoid& c) {
  const Partition& l = c.lambda;
  for (long i = 1; i <= l.rows(); ++i)
    for (long j = 2; j <= l.part(i); ++j)
      if (c.value(i, j) < c.value(i, j - 1)) return false;
  for (long j = 1; j <= l.cols(); ++j)
    for (long i = 2; i <= l.col_len(j); ++i)
      if (c.value(i, j) <= c.value(i - 1, j)) return false;
  return true;
}

inline long count_semistandard(const Partition& mu, const Partition& lambda,
                               long guard = kEnumerationGuard) {
  long count = 0;
  for (const auto& c : enumerate_correspondoids(mu, lambda, guard))
    if (is_semistandard(c)) ++count;
  return count;
}

// The correspondoid of an inverse correspondence: cell p of row j of the
// value shape records the row of the p-th cell (in reading order) carrying
// the value j.
inline Correspondoid inverse_correspondoid(const Correspondoid& c) {
  Correspondoid inv;
  inv.lambda = c.mu;
  inv.mu = c.lambda;
  inv.values.resize(c.mu.rows());
  for (long i = 1; i <= c.lambda.rows(); ++i)
    for (long j = 1; j <= c.lambda.part(i); ++j)
      inv.values[c.value(i, j) - 1].push_back(i);
  return inv;
}

// Order of the stabilizer intersection: row permutations of the domain that
// also preserve the value classes, a product of factorials of the per-row
// value multiplicities.
inline Int r_phi(const Correspondoid& c) {
  Int r = 1;
  for (const auto& row : c.values) {
    std::map<long, long> counts;
    for (long v : row) ++counts[v];
    for (const auto& [v, k] : counts) r *= factorial(k);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Column distributions and their total order
// ---------------------------------------------------------------------------

// counts[(value j, column k)] = number of cells in column k carrying j.
struct ColumnDistribution {
  std::map<std::pair<long, long>, long> counts;

  bool operator==(const ColumnDistribution& o) const {
    return counts == o.counts;
  }
};

inline ColumnDistribution column_distribution(const Correspondoid& c) {
  ColumnDistribution d;
  for (long i = 1; i <= c.lambda.rows(); ++i)
    for (long k = 1; k <= c.lambda.part(i); ++k)
      ++d.counts[{c.value(i, k), k}];
  return d;
}

// Comparison at the smallest (value, column) position where the counts
// differ; returns -1, 0 or +1.
inline int compare(const ColumnDistribution& x, const ColumnDistribution& y) {
  auto it = x.counts.begin();
  auto jt = y.counts.begin();
  while (it != x.counts.end() || jt != y.counts.end()) {
    if (jt == y.counts.end() || (it != x.counts.end() && it->first < jt->first))
      return 1;  // x has cells at a position y lacks
    if (it == x.counts.end() || jt->first < it->first) return -1;
    if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
    ++it;
    ++jt;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// The row-averaged tabloid map attached to a correspondoid
// ---------------------------------------------------------------------------

// Image of a single tabloid: distribute the entries of each row of the
// tabloid over the values prescribed for that row, in all distinct ways.
inline FreeElement theta_apply(const Correspondoid& c, const Tabloid& a) {
  const Partition& lambda = c.lambda;
  FreeElement out(c.mu);
  std::vector<long> row_of_mu(lambda.n(), 0);
  std::function<void(long)> rec_row = [&](long i) {
    if (i > lambda.rows()) {
      out.add(Tabloid(c.mu, row_of_mu), 1);
      return;
    }
    std::vector<long> entries = a.row_values(i);
    std::map<long, long> quota;
    for (long v : c.values[i - 1]) ++quota[v];
    std::function<void(size_t, std::map<long, long>&)> rec_entry =
        [&](size_t pos, std::map<long, long>& left) {
          if (pos == entries.size()) {
            rec_row(i + 1);
            return;
          }
          for (auto& [v, k] : left) {
            if (k == 0) continue;
            --k;
            row_of_mu[entries[pos] - 1] = v;
            rec_entry(pos + 1, left);
            ++k;
          }
        };
    rec_entry(0, quota);
    return;
  };
  rec_row(1);
  return out;
}

inline FreeElement theta_apply(const Correspondoid& c, const FreeElement& x) {
  FreeElement out(c.mu);
  for (const auto& [t, coeff] : x.terms()) {
    FreeElement img = theta_apply(c, t);
    for (const auto& [u, d] : img.terms()) out.add(u, coeff * d);
  }
  return out;
}

// Full matrix over the tabloid bases, rows indexed by domain tabloids.
inline IntMatrix theta_matrix(const Correspondoid& c,
                              long guard = kEnumerationGuard) {
  std::vector<Tabloid> dom = all_tabloids(c.lambda, guard);
  std::vector<Tabloid> cod = all_tabloids(c.mu, guard);
  std::map<Tabloid, long> index;
  for (size_t i = 0; i < cod.size(); ++i) index[cod[i]] = i;
  IntMatrix m(dom.size(), cod.size());
  for (size_t i = 0; i < dom.size(); ++i) {
    FreeElement img = theta_apply(c, dom[i]);
    for (const auto& [t, coeff] : img.terms()) m.at(i, index.at(t)) = coeff;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Dualization matrices and transposition of morphisms
// ---------------------------------------------------------------------------

// Sign of the permutation carrying the column-consecutive filling of the
// shape to the transposed column-consecutive filling of the conjugate.
inline int conjugation_sign(const Partition& lambda) {
  Tableau a = Tableau::canonical(lambda);
  Tableau b = Tableau::canonical(transpose_partition(lambda)).transpose();
  std::vector<long> im(lambda.n());
  for (long i = 1; i <= lambda.rows(); ++i)
    for (long j = 1; j <= lambda.part(i); ++j) im[a.at(j, i) - 1] = b.at(j, i);
  return Permutation(std::move(im)).sign();
}

// Matrix of the pairing of the conjugate-shape standard basis against the
// standard basis: entry (b, c) is the signed coefficient of the tabloid of
// the transposed-conjugate-canonical tableau moved by b's companion in the
// polytabloid of c.  Normalized so that the matrix of the conjugate shape
// is exactly the transpose.
inline IntMatrix dualization_matrix(const Partition& lambda) {
  Partition conj = transpose_partition(lambda);
  const SpechtBasis& rows = SpechtBasis::get(conj);
  const SpechtBasis& cols = SpechtBasis::get(lambda);
  Tableau base = Tableau::canonical(conj).transpose();
  IntMatrix e(rows.dim(), cols.dim());
  for (long b = 0; b < rows.dim(); ++b) {
    const Permutation& tau = rows.companions()[b];
    Tabloid t = tabloid_of(act(base, tau));
    Int sign = tau.sign();
    for (long c = 0; c < cols.dim(); ++c)
      e.at(b, c) = sign * cols.expansions()[c].coeff(t);
  }
  if (conj < lambda) {
    int s = conjugation_sign(lambda);
    for (long b = 0; b < e.rows; ++b)
      for (long c = 0; c < e.cols; ++c) e.at(b, c) *= s;
  }
  return e;
}

// Inverse of a matrix with determinant +-1.
inline IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows != a.cols) throw SpechtError("unimodular_inverse: not square");
  SmithForm s = snf(a);
  for (long i = 0; i < a.rows; ++i)
    if (s.d.at(i, i) != 1)
      throw SpechtError("unimodular_inverse: matrix is not unimodular");
  return s.v * s.u;
}

// Transpose of a morphism between reduced Specht lattices: conjugate the
// transposed matrix by the two dualization matrices.
inline Morphism transpose_morphism(const Morphism& f) {
  if (f.target.kind != TargetKind::Specht)
    throw SpechtError("transpose_morphism: target must be a Specht lattice");
  if (f.modulus < 2) throw SpechtError("transpose_morphism: need modulus >= 2");
  Partition lambda = f.source;
  Partition mu = f.target.shape;
  IntMatrix fm(f.matrix.size(), f.matrix.empty() ? 0 : f.matrix[0].size());
  for (long i = 0; i < fm.rows; ++i)
    for (long j = 0; j < fm.cols; ++j) fm.at(i, j) = f.matrix[i][j];
  IntMatrix t = dualization_matrix(mu) * fm.transposed() *
                unimodular_inverse(dualization_matrix(lambda));
  Morphism out;
  out.source = transpose_partition(mu);
  out.target = TargetDesc{TargetKind::Specht, transpose_partition(lambda)};
  out.modulus = f.modulus;
  out.matrix.assign(t.rows, std::vector<Int>(t.cols));
  for (long i = 0; i < t.rows; ++i)
    for (long j = 0; j < t.cols; ++j)
      out.matrix[i][j] = mod_reduce(t.at(i, j), f.modulus);
  return out;
}

// ---------------------------------------------------------------------------
// Mod 2: convergence predicate and one-dimensional morphisms
// ---------------------------------------------------------------------------

inline bool is_2_convergent(const Partition& lambda) {
  Partition conj = transpose_partition(lambda);
  for (long p = 1; p < lambda.part(1); ++p) {
    long two_part = 1;
    long a = conj.part(p) + 1;
    while (a % 2 == 0) {
      two_part *= 2;
      a /= 2;
    }
    if (conj.part(p + 1) >= two_part) return false;
  }
  return true;
}

// Membership in the column-stabilizer-times-row-stabilizer of the
// column-consecutive filling: the rows hit by each column's entries must be
// pairwise distinct and fit inside the column.
inline bool in_column_row_product(const Partition& lambda,
                                  const Permutation& sigma) {
  Tableau a = Tableau::canonical(lambda);
  Tabloid t = tabloid_of(a);
  for (long j = 1; j <= lambda.cols(); ++j) {
    std::vector<bool> seen(lambda.col_len(j), false);
    for (long i = 1; i <= lambda.col_len(j); ++i) {
      long r = t.row_of(sigma(a.at(j, i)));
      if (r > lambda.col_len(j) || seen[r - 1]) return false;
      seen[r - 1] = true;
    }
  }
  return true;
}

// 0/1 matrix (tau, sigma) -> [tau sigma^{-1} lands in the product set],
// indexed by the standard-basis companions.
inline std::vector<std::vector<int>> chi_matrix(const Partition& lambda) {
  const SpechtBasis& sb = SpechtBasis::get(lambda);
  long d = sb.dim();
  std::vector<std::vector<int>> m(d, std::vector<int>(d, 0));
  for (long t = 0; t < d; ++t)
    for (long s = 0; s < d; ++s) {
      Permutation w = sb.companions()[t] * sb.companions()[s].inverse();
      m[t][s] = in_column_row_product(lambda, w) ? 1 : 0;
    }
  return m;
}

// Solve u * M = 1 (all-ones) over GF(2); M must be invertible.
inline std::vector<int> u_vector(const Partition& lambda) {
  std::vector<std::vector<int>> m = chi_matrix(lambda);
  long d = static_cast<long>(m.size());
  // Gaussian elimination on M^T u^T = 1^T over GF(2)
  std::vector<std::vector<int>> aug(d, std::vector<int>(d + 1, 0));
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) aug[i][j] = m[j][i];
    aug[i][d] = 1;
  }
  for (long col = 0; col < d; ++col) {
    long pivot = -1;
    for (long r = col; r < d; ++r)
      if (aug[r][col]) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SpechtError("u_vector: matrix is singular mod 2");
    std::swap(aug[col], aug[pivot]);
    for (long r = 0; r < d; ++r) {
      if (r == col || !aug[r][col]) continue;
      for (long j = col; j <= d; ++j) aug[r][j] ^= aug[col][j];
    }
  }
  std::vector<int> u(d);
  for (long i = 0; i < d; ++i) u[i] = aug[i][d];
  return u;
}

// The unique nonzero morphism from the one-row Specht lattice mod 2, with
// generator image the u-combination of standard polytabloids.
inline Morphism u_morphism(const Partition& lambda) {
  std::vector<int> u = u_vector(lambda);
  std::vector<Int> image(u.begin(), u.end());
  Partition row_shape({lambda.n()});
  return morphism_from_image(row_shape, TargetDesc{TargetKind::Specht, lambda},
                             2, image, /*verify=*/true);
}

}  // namespace specht
