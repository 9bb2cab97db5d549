#pragma once
// Exact integer linear algebra: Smith normal form with transform tracking,
// left kernels modulo m, element orders and invariant-factor bookkeeping.

#include <algorithm>
#include <vector>

#include "specht/core.hpp"

namespace specht {

struct IntMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(long r, long c) : rows(r), cols(c), a(r * c, Int(0)) {}

  Int& at(long i, long j) { return a[i * cols + j]; }
  const Int& at(long i, long j) const { return a[i * cols + j]; }

  static IntMatrix identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols != o.rows) throw SpechtError("matrix product: shape mismatch");
    IntMatrix r(rows, o.cols);
    for (long i = 0; i < rows; ++i)
      for (long k = 0; k < cols; ++k) {
        if (at(i, k) == 0) continue;
        for (long j = 0; j < o.cols; ++j)
          r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  IntMatrix transposed() const {
    IntMatrix r(cols, rows);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  IntMatrix reduced_mod(const Int& m) const {
    IntMatrix r = *this;
    if (m != 0)
      for (auto& x : r.a) x = mod_reduce(x, m);
    return r;
  }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline std::vector<Int> row_times_matrix(const std::vector<Int>& x,
                                         const IntMatrix& m,
                                         const Int& mod = 0) {
  if (static_cast<long>(x.size()) != m.rows)
    throw SpechtError("row_times_matrix: shape mismatch");
  std::vector<Int> y(m.cols, Int(0));
  for (long i = 0; i < m.rows; ++i) {
    if (x[i] == 0) continue;
    for (long j = 0; j < m.cols; ++j) y[j] += x[i] * m.at(i, j);
  }
  if (mod != 0)
    for (auto& v : y) v = mod_reduce(v, mod);
  return y;
}

struct SmithForm {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix d;  // diagonal, rows x cols, d_1 | d_2 | ...
  IntMatrix v;  // unimodular, cols x cols;  u * a * v == d
  std::vector<Int> diagonal() const {
    std::vector<Int> out;
    for (long i = 0; i < std::min(d.rows, d.cols); ++i)
      out.push_back(d.at(i, i));
    return out;
  }
};

namespace detail {

// Core elimination.  When track_v is false and mod > 0, entries of d are
// kept reduced modulo mod; this amounts to untracked column operations
// against an implicit [a | mod*I] block and leaves u exact over the
// integers, which is all the kernel computation needs.
struct SnfWorker {
  IntMatrix d, u, v;
  bool track_v;
  Int mod;

  SnfWorker(const IntMatrix& a, bool tv, Int m)
      : d(a), u(IntMatrix::identity(a.rows)),
        v(tv ? IntMatrix::identity(a.cols) : IntMatrix()),
        track_v(tv), mod(std::move(m)) {}

  void swap_rows(long i, long j) {
    if (i == j) return;
    for (long k = 0; k < d.cols; ++k) std::swap(d.at(i, k), d.at(j, k));
    for (long k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
  }
  void swap_cols(long i, long j) {
    if (i == j) return;
    for (long k = 0; k < d.rows; ++k) std::swap(d.at(k, i), d.at(k, j));
    if (track_v)
      for (long k = 0; k < v.rows; ++k) std::swap(v.at(k, i), v.at(k, j));
  }
  void add_row(long dst, long src, const Int& f) {  // row_dst += f * row_src
    for (long k = 0; k < d.cols; ++k) {
      d.at(dst, k) += f * d.at(src, k);
      if (mod != 0) d.at(dst, k) = mod_reduce(d.at(dst, k), mod);
    }
    for (long k = 0; k < u.cols; ++k) u.at(dst, k) += f * u.at(src, k);
  }
  void add_col(long dst, long src, const Int& f) {
    for (long k = 0; k < d.rows; ++k) {
      d.at(k, dst) += f * d.at(k, src);
      if (mod != 0) d.at(k, dst) = mod_reduce(d.at(k, dst), mod);
    }
    if (track_v)
      for (long k = 0; k < v.rows; ++k) v.at(k, dst) += f * v.at(k, src);
  }
  void negate_row(long i) {
    for (long k = 0; k < d.cols; ++k) d.at(i, k) = -d.at(i, k);
    for (long k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
    if (mod != 0)
      for (long k = 0; k < d.cols; ++k) d.at(i, k) = mod_reduce(d.at(i, k), mod);
  }

  void run() {
    long t = 0;
    long lim = std::min(d.rows, d.cols);
    while (t < lim) {
      // Find a nonzero entry of smallest absolute value in the region.
      long pi = -1, pj = -1;
      Int best = 0;
      for (long i = t; i < d.rows; ++i)
        for (long j = t; j < d.cols; ++j) {
          if (d.at(i, j) == 0) continue;
          Int mag = abs(d.at(i, j));
          if (pi < 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // region is zero
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = false;
      while (!clean) {
        clean = true;
        for (long i = t + 1; i < d.rows; ++i) {
          if (d.at(i, t) == 0) continue;
          Int q = d.at(i, t) / d.at(t, t);  // truncated division
          if (q != 0) add_row(i, t, -q);
          if (d.at(i, t) != 0) {
            // remainder smaller than pivot: swap up and restart
            swap_rows(t, i);
            clean = false;
          }
        }
        for (long j = t + 1; j < d.cols; ++j) {
          if (d.at(t, j) == 0) continue;
          Int q = d.at(t, j) / d.at(t, t);
          if (q != 0) add_col(j, t, -q);
          if (d.at(t, j) != 0) {
            swap_cols(t, j);
            clean = false;
          }
        }
      }
      // Enforce that the pivot divides the remaining region (needed for the
      // divisibility chain of the public form).
      bool redo = false;
      for (long i = t + 1; i < d.rows && !redo; ++i)
        for (long j = t + 1; j < d.cols && !redo; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            add_row(t, i, 1);
            redo = true;
          }
      if (redo) continue;
      if (d.at(t, t) < 0) negate_row(t);
      ++t;
    }
  }
};

}  // namespace detail

inline SmithForm snf(const IntMatrix& a) {
  detail::SnfWorker w(a, /*track_v=*/true, Int(0));
  w.run();
  SmithForm f;
  f.u = std::move(w.u);
  f.d = std::move(w.d);
  f.v = std::move(w.v);
  return f;
}

// ---------------------------------------------------------------------------
// Left kernel modulo m, with generators and cyclic orders
// ---------------------------------------------------------------------------

// Solutions of x * a == 0 (mod m), m > 0: a finite abelian group given by
// generator rows and their orders; for m == 0, the free integral kernel.
struct KernelMod {
  Int modulus;
  std::vector<std::vector<Int>> generators;  // rows of length a.rows
  std::vector<Int> orders;  // per generator; 0 means infinite (m == 0)
};

inline KernelMod kernel_mod(const IntMatrix& a, const Int& m) {
  if (m < 0) throw SpechtError("kernel_mod: negative modulus");
  detail::SnfWorker w(a, /*track_v=*/false, m);
  w.run();
  KernelMod k;
  k.modulus = m;
  long lim = std::min(a.rows, a.cols);
  for (long i = 0; i < a.rows; ++i) {
    Int di = (i < lim) ? w.d.at(i, i) : Int(0);
    if (m == 0) {
      if (di != 0) continue;  // constrained direction
      std::vector<Int> gen(a.rows);
      for (long j = 0; j < a.rows; ++j) gen[j] = w.u.at(i, j);
      k.generators.push_back(std::move(gen));
      k.orders.push_back(0);
    } else {
      Int g = specht::gcd(di, m);
      Int order = g;      // order of the generator scale * u_i
      if (order == 1) continue;
      Int scale = m / g;  // smallest positive multiple with scale*di == 0 mod m
      std::vector<Int> gen(a.rows);
      for (long j = 0; j < a.rows; ++j)
        gen[j] = mod_reduce(scale * w.u.at(i, j), m);
      k.generators.push_back(std::move(gen));
      k.orders.push_back(order);
    }
  }
  return k;
}

// Additive order of a vector in (Z/m)^k: least c >= 1 with c*x == 0 mod m.
inline Int vector_order_mod(const std::vector<Int>& x, const Int& m) {
  if (m <= 0) throw SpechtError("vector_order_mod: modulus must be positive");
  Int g = m;
  for (const auto& v : x) g = specht::gcd(g, v);
  return m / g;
}

// Invariant factors (ascending divisibility chain, each > 1) of the abelian
// group with the given cyclic orders.
inline std::vector<Int> invariant_factors(const std::vector<Int>& orders) {
  std::map<long, std::vector<int>> primary;  // prime -> exponents (desc later)
  for (const auto& o : orders) {
    if (o <= 1) continue;
    for (const auto& [p, e] : factorize(o)) primary[p].push_back(e);
  }
  size_t k = 0;
  for (auto& [p, es] : primary) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    k = std::max(k, es.size());
  }
  std::vector<Int> factors(k, Int(1));
  for (const auto& [p, es] : primary)
    for (size_t i = 0; i < es.size(); ++i) {
      Int pw = 1;
      for (int e = 0; e < es[i]; ++e) pw *= p;
      factors[i] *= pw;  // factors[0] is the largest
    }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

// Multiset of prime-power cyclic components, sorted; a canonical form for
// comparing abelian groups given by any generator decomposition.
inline std::vector<Int> primary_decomposition(const std::vector<Int>& orders) {
  std::vector<Int> out;
  for (const auto& o : orders) {
    if (o <= 1) continue;
    for (const auto& [p, e] : factorize(o)) {
      Int pw = 1;
      for (int i = 0; i < e; ++i) pw *= p;
      out.push_back(pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Dense elimination over GF(p) for fast nullity counts (p prime, fits long)
// ---------------------------------------------------------------------------

class GFpEliminator {
 public:
  GFpEliminator(long dim, long p) : dim_(dim), p_(p) {}

  // Reduce a constraint row against the current basis; keep it if it adds
  // rank.  Returns the current rank.
  long add_constraint(std::vector<long> row) {
    for (auto& v : row) v %= p_;
    for (const auto& r : rows_) {
      long v = row[r.pivot] % p_;
      if (v == 0) continue;
      long f = p_ - v;
      for (long j = r.pivot; j < dim_; ++j)
        row[j] = (row[j] + f * r.data[j]) % p_;
    }
    long piv = -1;
    for (long j = 0; j < dim_; ++j)
      if (row[j] % p_ != 0) {
        piv = j;
        break;
      }
    if (piv >= 0) {
      long inv = mod_inverse(row[piv], p_);
      for (long j = piv; j < dim_; ++j) row[j] = (row[j] * inv) % p_;
      rows_.push_back({piv, std::move(row)});
      std::sort(rows_.begin(), rows_.end(),
                [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
    }
    return rank();
  }

  long rank() const { return static_cast<long>(rows_.size()); }
  long nullity() const { return dim_ - rank(); }
  bool full() const { return rank() == dim_; }

 private:
  struct Row {
    long pivot;
    std::vector<long> data;
  };
  long dim_, p_;
  std::vector<Row> rows_;

  static long mod_inverse(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
      long q = r / newr;
      std::swap(t -= q * newt, newt);
      std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += p;
    return t;
  }
};

}  // namespace specht
