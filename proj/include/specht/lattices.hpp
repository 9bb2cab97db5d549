#pragma once
// Integral permutation-module elements (signed sums of tabloids),
// polytabloids, the standard basis of the Specht lattice, two independent
// straightening routes, and Garnir-type evaluators.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "specht/combinatorics.hpp"
#include "specht/core.hpp"

namespace specht {

// ---------------------------------------------------------------------------
// FreeElement: an integer combination of tabloids of one shape.  With
// `alternated` set, the right action picks up the sign of the permutation.
// ---------------------------------------------------------------------------

class FreeElement {
 public:
  FreeElement() = default;
  explicit FreeElement(Partition shape, bool alternated = false)
      : shape_(std::move(shape)), alternated_(alternated) {}

  const Partition& shape() const { return shape_; }
  bool alternated() const { return alternated_; }
  const std::map<Tabloid, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const Tabloid& t, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(t, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int coeff(const Tabloid& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Int(0) : it->second;
  }

  FreeElement& operator+=(const FreeElement& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  FreeElement operator+(const FreeElement& o) const {
    FreeElement r = *this;
    r += o;
    return r;
  }
  FreeElement operator-() const {
    FreeElement r(shape_, alternated_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
  }
  FreeElement operator-(const FreeElement& o) const { return *this + (-o); }
  FreeElement operator*(const Int& k) const {
    FreeElement r(shape_, alternated_);
    if (k == 0) return r;
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, c * k);
    return r;
  }

  // Every coefficient divisible by m (used for congruence checks).
  bool divisible_by(const Int& m) const {
    for (const auto& [t, c] : terms_)
      if (c % m != 0) return false;
    return true;
  }

  // Exact division of all coefficients.
  FreeElement divided_by(const Int& k) const {
    FreeElement r(shape_, alternated_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, checked_div(c, k));
    return r;
  }

  FreeElement reduced_mod(const Int& m) const {
    FreeElement r(shape_, alternated_);
    for (const auto& [t, c] : terms_) r.add(t, mod_reduce(c, m));
    return r;
  }

  bool operator==(const FreeElement& o) const {
    return shape_ == o.shape_ && alternated_ == o.alternated_ &&
           terms_ == o.terms_;
  }

 private:
  Partition shape_;
  bool alternated_ = false;
  std::map<Tabloid, Int> terms_;
};

inline FreeElement act(const FreeElement& x, const Permutation& s) {
  FreeElement r(x.shape(), x.alternated());
  Int sg = (x.alternated() && s.sign() < 0) ? -1 : 1;
  for (const auto& [t, c] : x.terms()) r.add(act(t, s), c * sg);
  return r;
}

inline FreeElement apply_word(const FreeElement& x, const FormalPermSum& w) {
  FreeElement r(x.shape(), x.alternated());
  for (const auto& [s, c] : w.terms()) {
    Int sg = (x.alternated() && s.sign() < 0) ? -1 : 1;
    for (const auto& [t, d] : x.terms()) r.add(act(t, s), c * d * sg);
  }
  return r;
}

inline FreeElement tabloid_element(const Tableau& a) {
  FreeElement r(a.shape());
  r.add(tabloid_of(a), 1);
  return r;
}

// Polytabloid: the signed column-group orbit sum of the tabloid of a.
inline FreeElement polytabloid(const Tableau& a,
                               long guard = kEnumerationGuard) {
  FreeElement r(a.shape());
  Tabloid base = tabloid_of(a);
  for (const auto& k : column_stabilizer(a, guard))
    r.add(act(base, k), k.sign());
  return r;
}

// x alternated over the symmetric group on a value set: sum of x s sgn(s).
inline FreeElement column_alternate(const FreeElement& x,
                                    const std::vector<long>& values,
                                    long guard = kEnumerationGuard) {
  FreeElement r(x.shape(), x.alternated());
  long n = x.shape().n();
  for (const auto& s : symmetric_group_on(n, values, guard))
    r += act(x, s) * Int(s.sign());
  return r;
}

// Product of disjoint transpositions matching two equal-size value sets via
// the order-preserving bijection.
inline Permutation matching_transpositions(long n, std::vector<long> phi,
                                           std::vector<long> psi) {
  if (phi.size() != psi.size())
    throw SpechtError("multitranspose: size mismatch");
  std::sort(phi.begin(), phi.end());
  std::sort(psi.begin(), psi.end());
  Permutation p = Permutation::identity(n);
  for (size_t i = 0; i < phi.size(); ++i)
    p = p * Permutation::transposition(n, phi[i], psi[i]);
  return p;
}

// Polytabloid of a, multiplied by the pairwise transposition product of phi
// (inside one column of a) against psi; independent of the chosen bijection.
inline FreeElement multitranspose(const Tableau& a,
                                  const std::vector<long>& phi,
                                  const std::vector<long>& psi) {
  return act(polytabloid(a), matching_transpositions(a.n(), phi, psi));
}

inline Int inner_product(const FreeElement& x, const FreeElement& y) {
  Int r = 0;
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& big = x.size() <= y.size() ? y : x;
  for (const auto& [t, c] : small.terms()) r += c * big.coeff(t);
  return r;
}

// ---------------------------------------------------------------------------
// Subset and coset-representative helpers
// ---------------------------------------------------------------------------

inline std::vector<std::vector<long>> subsets_of_size(
    const std::vector<long>& values, long k) {
  std::vector<std::vector<long>> out;
  if (k < 0 || k > static_cast<long>(values.size())) return out;
  std::vector<long> idx(k);
  std::function<void(long, long)> rec = [&](long start, long depth) {
    if (depth == k) {
      std::vector<long> sub;
      for (long i : idx) sub.push_back(values[i]);
      out.push_back(std::move(sub));
      return;
    }
    for (long i = start; i < static_cast<long>(values.size()); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

inline std::vector<long> set_difference_sorted(std::vector<long> a,
                                               std::vector<long> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<long> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

// Minimal representatives of the right cosets of S_xi x S_eta in the
// symmetric group on xi-union-eta: for each |xi|-subset A of the union, the
// permutation carrying xi to A and eta to the complement order-preservingly.
inline std::vector<Permutation> garnir_coset_reps(long n,
                                                  std::vector<long> xi,
                                                  std::vector<long> eta) {
  std::sort(xi.begin(), xi.end());
  std::sort(eta.begin(), eta.end());
  std::vector<long> uni = xi;
  uni.insert(uni.end(), eta.begin(), eta.end());
  std::sort(uni.begin(), uni.end());
  std::vector<Permutation> out;
  for (const auto& a : subsets_of_size(uni, static_cast<long>(xi.size()))) {
    std::vector<long> comp = set_difference_sorted(uni, a);
    std::vector<long> im(n);
    std::iota(im.begin(), im.end(), 1);
    for (size_t i = 0; i < xi.size(); ++i) im[xi[i] - 1] = a[i];
    for (size_t i = 0; i < eta.size(); ++i) im[eta[i] - 1] = comp[i];
    out.push_back(Permutation(std::move(im)));
  }
  return out;
}

// Signed sum over the Garnir coset representatives for the bottom s entries
// of column p and the top t entries of column p+1 of the given tableau.
inline FormalPermSum garnir_word_at(const Tableau& a, long p, long s, long t) {
  const Partition& sh = a.shape();
  long cp = sh.col_len(p), cq = sh.col_len(p + 1);
  if (s < 1 || t < 1 || s > cp || t > cq)
    throw SpechtError("garnir_word: bad segment sizes");
  std::vector<long> xi = a.column_segment(p, cp - s + 1, cp);
  std::vector<long> eta = a.column_segment(p + 1, 1, t);
  FormalPermSum w;
  for (const auto& rep : garnir_coset_reps(a.n(), xi, eta))
    w.add(rep, rep.sign());
  return w;
}

inline FormalPermSum garnir_word(const Partition& shape, long p, long s,
                                 long t) {
  return garnir_word_at(Tableau::canonical(shape), p, s, t);
}

// ---------------------------------------------------------------------------
// Coordinate vectors over the standard basis
// ---------------------------------------------------------------------------

struct SpechtVector {
  Partition shape;
  Int modulus = 0;  // 0 means integral (no reduction)
  std::vector<Int> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }

  std::string str() const {
    std::string out = modulus.get_str() + "; ";
    for (size_t i = 0; i < coords.size(); ++i) {
      if (i) out += ',';
      out += coords[i].get_str();
    }
    return out;
  }

  static SpechtVector parse(const Partition& shape, const std::string& s) {
    auto parts = split(s, ';');
    if (parts.size() != 2) throw ParseError("bad vector: " + s);
    SpechtVector v;
    v.shape = shape;
    std::string mtok = parts[0];
    v.modulus = parse_int(mtok);
    std::string rest = parts[1];
    size_t start = rest.find_first_not_of(' ');
    if (start != std::string::npos) rest = rest.substr(start);
    if (!rest.empty())
      for (const auto& tok : split(rest, ',')) v.coords.push_back(parse_int(tok));
    return v;
  }
};

// ---------------------------------------------------------------------------
// Standard basis with cached straightening data
// ---------------------------------------------------------------------------

namespace detail {

// Exact inverse of a square integer matrix that must be unimodular up to
// sign; computed over the rationals and verified integral.
inline std::vector<std::vector<Int>> integral_inverse(
    const std::vector<std::vector<Int>>& mat) {
  size_t n = mat.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = mat[i][j];
    a[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw SpechtError("integral_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    mpq_class d = a[col][col];
    for (size_t j = 0; j < 2 * n; ++j) a[col][j] /= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (size_t j = col; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Int>> inv(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      mpq_class v = a[i][n + j];
      v.canonicalize();
      if (v.get_den() != 1)
        throw SpechtError("integral_inverse: inverse is not integral");
      inv[i][j] = v.get_num();
    }
  return inv;
}

}  // namespace detail

class SpechtBasis {
 public:
  static const SpechtBasis& get(const Partition& shape) {
    static std::map<Partition, std::unique_ptr<SpechtBasis>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(shape);
    if (it == cache.end())
      it = cache.emplace(shape, std::unique_ptr<SpechtBasis>(
                                    new SpechtBasis(shape)))
               .first;
    return *it->second;
  }

  const Partition& shape() const { return shape_; }
  long dim() const { return static_cast<long>(tableaux_.size()); }
  // Standard tableaux in lexicographic row-word order.
  const std::vector<Tableau>& tableaux() const { return tableaux_; }
  // Companion permutations: canonical * companion[i] == tableaux[i].
  const std::vector<Permutation>& companions() const { return companions_; }
  const std::vector<FreeElement>& expansions() const { return expansions_; }
  const Tableau& tableau(long i) const { return tableaux_[i]; }

  long index_of(const Tableau& standard) const {
    auto it = index_.find(tabloid_of(standard));
    if (it == index_.end())
      throw SpechtError("index_of: tableau is not standard for this shape");
    return it->second;
  }

  long index_of_canonical() const { return canonical_index_; }

  // Straightening oracle: solve on the pivot tabloids via the cached
  // integral inverse, then verify the full tabloid expansion (exactly, or
  // modulo m when m > 0).  Throws NotInLatticeError on failure.
  std::vector<Int> straighten(const FreeElement& x, const Int& m = 0) const {
    std::vector<Int> xj(dim());
    for (long i = 0; i < dim(); ++i) xj[i] = x.coeff(pivots_[i]);
    std::vector<Int> c(dim(), 0);
    for (long j = 0; j < dim(); ++j) {
      Int acc = 0;
      for (long i = 0; i < dim(); ++i) acc += xj[i] * pivot_inverse_[i][j];
      c[j] = (m == 0) ? acc : mod_reduce(acc, m);
    }
    // Verification against the full expansion.
    FreeElement rebuilt(shape_);
    for (long j = 0; j < dim(); ++j)
      if (c[j] != 0) rebuilt += expansions_[j] * c[j];
    FreeElement diff = rebuilt - x;
    if (m == 0) {
      if (!diff.is_zero())
        throw NotInLatticeError("straighten: element is outside the lattice");
    } else {
      if (!diff.divisible_by(m))
        throw NotInLatticeError(
            "straighten: element is outside the lattice modulo " + m.get_str());
    }
    return c;
  }

  // Independent straightening of a single polytabloid by repeated Garnir
  // rewriting (column sort, then eliminate the first row violation).
  std::vector<Int> straighten_by_rewriting(const Tableau& a) const {
    std::vector<Int> out(dim(), 0);
    rewrite(a, 1, out);
    return out;
  }

  FreeElement element_from_coords(const std::vector<Int>& c) const {
    FreeElement r(shape_);
    for (long j = 0; j < dim(); ++j)
      if (c[j] != 0) r += expansions_[j] * c[j];
    return r;
  }

 private:
  Partition shape_;
  std::vector<Tableau> tableaux_;
  std::vector<Permutation> companions_;
  std::vector<FreeElement> expansions_;
  std::vector<Tabloid> pivots_;
  std::map<Tabloid, long> index_;
  std::vector<std::vector<Int>> pivot_inverse_;
  long canonical_index_ = -1;

  explicit SpechtBasis(const Partition& shape) : shape_(shape) {
    enumerate_standard();
    std::sort(tableaux_.begin(), tableaux_.end(),
              [](const Tableau& a, const Tableau& b) {
                return tabloid_of(a).word() < tabloid_of(b).word();
              });
    Tableau canon = Tableau::canonical(shape_);
    std::vector<std::vector<Int>> pivot(tableaux_.size(),
                                        std::vector<Int>(tableaux_.size(), 0));
    for (size_t i = 0; i < tableaux_.size(); ++i) {
      companions_.push_back(tableaux_[i].companion());
      expansions_.push_back(polytabloid(tableaux_[i]));
      pivots_.push_back(tabloid_of(tableaux_[i]));
      index_[pivots_.back()] = static_cast<long>(i);
      if (tableaux_[i] == canon) canonical_index_ = static_cast<long>(i);
    }
    for (size_t i = 0; i < tableaux_.size(); ++i)
      for (size_t j = 0; j < tableaux_.size(); ++j)
        pivot[i][j] = expansions_[i].coeff(pivots_[j]);
    pivot_inverse_ = detail::integral_inverse(pivot);
    if (canonical_index_ < 0)
      throw SpechtError("canonical tableau not found among standard tableaux");
  }

  void enumerate_standard() {
    long n = shape_.n();
    std::vector<std::vector<long>> rows(shape_.rows());
    std::vector<long> fill(shape_.rows(), 0);
    std::function<void(long)> rec = [&](long v) {
      if (v > n) {
        std::vector<std::vector<long>> r = rows;
        tableaux_.push_back(Tableau(shape_, std::move(r)));
        return;
      }
      for (long i = 1; i <= shape_.rows(); ++i) {
        if (fill[i - 1] >= shape_.part(i)) continue;
        if (i > 1 && fill[i - 1] >= fill[i - 2]) continue;
        rows[i - 1].push_back(v);
        ++fill[i - 1];
        rec(v + 1);
        --fill[i - 1];
        rows[i - 1].pop_back();
      }
    };
    rec(1);
  }

  void rewrite(const Tableau& a, const Int& coeff,
               std::vector<Int>& out) const {
    // Sort columns ascending, tracking the sign of the rearrangement.
    std::vector<std::vector<long>> rows = a.rows();
    int sign = 1;
    for (long j = 1; j <= shape_.cols(); ++j) {
      std::vector<long> col;
      for (long i = 1; i <= shape_.col_len(j); ++i)
        col.push_back(rows[i - 1][j - 1]);
      // Count inversions for the sort sign.
      for (size_t x = 0; x < col.size(); ++x)
        for (size_t y = x + 1; y < col.size(); ++y)
          if (col[x] > col[y]) sign = -sign;
      std::sort(col.begin(), col.end());
      for (long i = 1; i <= shape_.col_len(j); ++i)
        rows[i - 1][j - 1] = col[i - 1];
    }
    Tableau b(shape_, std::move(rows));
    // Find the first row violation between adjacent columns.
    long vp = 0, vi = 0;
    for (long j = 1; j < shape_.cols() && vp == 0; ++j)
      for (long i = 1; i <= shape_.col_len(j + 1); ++i)
        if (b.at(j, i) > b.at(j + 1, i)) {
          vp = j;
          vi = i;
          break;
        }
    if (vp == 0) {
      auto it = index_.find(tabloid_of(b));
      if (it == index_.end()) throw SpechtError("rewrite: lost a standard tableau");
      out[it->second] += coeff * sign;
      return;
    }
    long s = shape_.col_len(vp) - vi + 1;
    long t = vi;
    FormalPermSum w = garnir_word_at(b, vp, s, t);
    for (const auto& [sig, c] : w.terms()) {
      if (sig.is_identity()) continue;
      rewrite(act(b, sig), -coeff * sign * c, out);
    }
  }
};

inline std::vector<Int> straighten(const FreeElement& x, const Int& m = 0) {
  return SpechtBasis::get(x.shape()).straighten(x, m);
}

// ---------------------------------------------------------------------------
// Garnir-type sums
// ---------------------------------------------------------------------------

// B(i0): alternating sum of multitranspositions of subsets of the bottom
// segment xi of column p against subsets of eta and of column q minus eta.
inline FreeElement eval_garnir_B(const Tableau& a, long q,
                                 const std::vector<long>& xi,
                                 const std::vector<long>& eta, long i0) {
  long s = static_cast<long>(xi.size());
  std::vector<long> etabar = set_difference_sorted(a.column_values(q), eta);
  FreeElement acc(a.shape());
  FreeElement pa = polytabloid(a);
  for (long s0 = i0; s0 <= s; ++s0) {
    Int outer_sign = (s0 % 2 == 0) ? 1 : -1;
    for (const auto& xi0 : subsets_of_size(xi, s0))
      for (const auto& eta0 : subsets_of_size(eta, s0 - i0))
        for (const auto& phi0 : subsets_of_size(etabar, i0)) {
          std::vector<long> target = eta0;
          target.insert(target.end(), phi0.begin(), phi0.end());
          acc += act(pa, matching_transpositions(a.n(), xi0, target)) *
                 outer_sign;
        }
  }
  return acc;
}

// C(i): sum over i-subsets phi of column q minus eta of the alternation of
// the polytabloid over xi, eta and phi together.
inline FreeElement eval_garnir_C(const Tableau& a, long q,
                                 const std::vector<long>& xi,
                                 const std::vector<long>& eta, long i) {
  std::vector<long> etabar = set_difference_sorted(a.column_values(q), eta);
  FreeElement acc(a.shape());
  FreeElement pa = polytabloid(a);
  for (const auto& phi : subsets_of_size(etabar, i)) {
    std::vector<long> uni = xi;
    uni.insert(uni.end(), eta.begin(), eta.end());
    uni.insert(uni.end(), phi.begin(), phi.end());
    acc += column_alternate(pa, uni);
  }
  return acc;
}

// B'(i0): as B but with transposed subsets drawn from xi minus psi against
// subsets of eta, followed by alternation over psi and eta; the stated
// normalization (division by |psi|! |eta|!) is exact.
inline FreeElement eval_garnir_Bp(const Tableau& a,
                                  const std::vector<long>& xi,
                                  const std::vector<long>& psi,
                                  const std::vector<long>& eta, long i0) {
  std::vector<long> ximinus = set_difference_sorted(xi, psi);
  FreeElement acc(a.shape());
  FreeElement pa = polytabloid(a);
  std::vector<long> alt = psi;
  alt.insert(alt.end(), eta.begin(), eta.end());
  for (const auto& xi0 : subsets_of_size(ximinus, i0))
    for (const auto& phi0 : subsets_of_size(eta, i0))
      acc += column_alternate(
          act(pa, matching_transpositions(a.n(), xi0, phi0)), alt);
  Int denom = factorial(static_cast<long>(psi.size())) *
              factorial(static_cast<long>(eta.size()));
  if (i0 % 2 == 1) denom = -denom;
  return acc.divided_by(denom);
}

// C'(i): sum over i-subsets phi of eta of the double alternation of the
// polytabloid, over xi with phi and over psi with eta.
inline FreeElement eval_garnir_Cp(const Tableau& a,
                                  const std::vector<long>& xi,
                                  const std::vector<long>& psi,
                                  const std::vector<long>& eta, long i) {
  FreeElement acc(a.shape());
  FreeElement pa = polytabloid(a);
  std::vector<long> alt2 = psi;
  alt2.insert(alt2.end(), eta.begin(), eta.end());
  for (const auto& phi : subsets_of_size(eta, i)) {
    std::vector<long> alt1 = xi;
    alt1.insert(alt1.end(), phi.begin(), phi.end());
    acc += column_alternate(column_alternate(pa, alt1), alt2);
  }
  return acc;
}

}  // namespace specht
