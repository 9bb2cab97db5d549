#pragma once
// Partitions, permutations, Young tableaux, tabloids and signed formal sums
// of permutations, together with the standard right actions.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "specht/core.hpp"

namespace specht {

// Enumeration guard shared by the stabilizer / group enumerations below.
inline constexpr long kEnumerationGuard = 10'000'000L;

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    validate();
  }

  static Partition parse(const std::string& s) {
    if (s.empty()) return Partition();
    std::vector<long> p;
    for (const auto& tok : split(s, ',')) p.push_back(parse_long(tok));
    try {
      return Partition(std::move(p));
    } catch (SpechtError& e) {
      throw ParseError(std::string("bad partition '") + s + "': " + e.what());
    }
  }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  const std::vector<long>& parts() const { return parts_; }
  long n() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
  long rows() const { return static_cast<long>(parts_.size()); }
  // Part i, 1-based; 0 beyond the last row.
  long part(long i) const {
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }
  long cols() const { return parts_.empty() ? 0 : parts_[0]; }
  // Length of column j, 1-based (the transposed part).
  long col_len(long j) const {
    long c = 0;
    for (long p : parts_)
      if (p >= j) ++c;
    return c;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<long> parts_;

  void validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw SpechtError("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1])
        throw SpechtError("partition parts must be weakly decreasing");
    }
  }
};

inline Partition transpose_partition(const Partition& p) {
  std::vector<long> t;
  for (long j = 1; j <= p.cols(); ++j) t.push_back(p.col_len(j));
  return Partition(std::move(t));
}

// All partitions of n, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(long n) {
  std::vector<Partition> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long rest, long maxpart) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (long p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Permutation of [1, n].  Composition is in right-action order:
// (s * t)(i) = t(s(i)), so acting by s*t means acting by s, then by t.
// ---------------------------------------------------------------------------

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<long> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (long v : img_) {
      if (v < 1 || v > static_cast<long>(img_.size()) || seen[v - 1])
        throw SpechtError("invalid permutation image list");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(long n) {
    std::vector<long> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }

  static Permutation transposition(long n, long u, long v) {
    Permutation p = identity(n);
    p.img_[u - 1] = v;
    p.img_[v - 1] = u;
    return p;
  }

  // Cycles given as lists of points, e.g. {{2,4,5,3}} for (2 4 5 3).
  static Permutation from_cycles(long n,
                                 const std::vector<std::vector<long>>& cycles) {
    Permutation p = identity(n);
    for (const auto& c : cycles)
      for (size_t i = 0; i < c.size(); ++i)
        p.img_[c[i] - 1] = c[(i + 1) % c.size()];
    // Re-validate.
    return Permutation(std::move(p.img_));
  }

  long n() const { return static_cast<long>(img_.size()); }
  long operator()(long i) const { return img_[i - 1]; }

  Permutation operator*(const Permutation& t) const {
    std::vector<long> im(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) im[i] = t.img_[img_[i] - 1];
    Permutation r;
    r.img_ = std::move(im);
    return r;
  }

  Permutation inverse() const {
    std::vector<long> im(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) im[img_[i] - 1] = i + 1;
    Permutation r;
    r.img_ = std::move(im);
    return r;
  }

  int sign() const {
    std::vector<bool> seen(img_.size(), false);
    int s = 1;
    for (size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      long len = 0;
      for (size_t j = i; !seen[j]; j = img_[j] - 1) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  bool is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<long>(i) + 1) return false;
    return true;
  }

  const std::vector<long>& images() const { return img_; }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<long> img_;
};

// Signed integer combination of permutations (an integral group-algebra
// element), e.g. 1 - (3 4).
class FormalPermSum {
 public:
  FormalPermSum() = default;

  static FormalPermSum unit(long n) {
    FormalPermSum s;
    s.add(Permutation::identity(n), 1);
    return s;
  }

  void add(const Permutation& p, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Permutation, Int>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  FormalPermSum operator*(const FormalPermSum& o) const {
    FormalPermSum r;
    for (const auto& [p, c] : terms_)
      for (const auto& [q, d] : o.terms_) r.add(p * q, c * d);
    return r;
  }

  FormalPermSum operator+(const FormalPermSum& o) const {
    FormalPermSum r = *this;
    for (const auto& [q, d] : o.terms_) r.add(q, d);
    return r;
  }

  FormalPermSum operator-() const {
    FormalPermSum r;
    for (const auto& [p, c] : terms_) r.add(p, -c);
    return r;
  }

  bool operator==(const FormalPermSum& o) const { return terms_ == o.terms_; }

 private:
  std::map<Permutation, Int> terms_;
};

// ---------------------------------------------------------------------------
// Tableau: a bijective filling of the Young diagram of a partition by 1..n.
// Stored row-major; at(j, i) addresses column j, row i.
// ---------------------------------------------------------------------------

class Tableau {
 public:
  Tableau() = default;
  Tableau(Partition shape, std::vector<std::vector<long>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    validate();
  }

  // The canonical tableau: columns filled consecutively top to bottom,
  // left to right (1..n running down column 1, then column 2, ...).
  static Tableau canonical(const Partition& shape) {
    std::vector<std::vector<long>> rows(shape.rows());
    for (long i = 1; i <= shape.rows(); ++i)
      rows[i - 1].resize(shape.part(i));
    long v = 1;
    for (long j = 1; j <= shape.cols(); ++j)
      for (long i = 1; i <= shape.col_len(j); ++i) rows[i - 1][j - 1] = v++;
    return Tableau(shape, std::move(rows));
  }

  static Tableau parse(const std::string& s) {
    std::vector<std::vector<long>> rows;
    std::vector<long> parts;
    for (const auto& rowtok : split(s, ';')) {
      std::vector<long> row;
      for (const auto& tok : split(rowtok, ',')) row.push_back(parse_long(tok));
      parts.push_back(static_cast<long>(row.size()));
      rows.push_back(std::move(row));
    }
    try {
      return Tableau(Partition(std::move(parts)), std::move(rows));
    } catch (SpechtError& e) {
      throw ParseError(std::string("bad tableau '") + s + "': " + e.what());
    }
  }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i) out += ';';
      for (size_t j = 0; j < rows_[i].size(); ++j) {
        if (j) out += ',';
        out += std::to_string(rows_[i][j]);
      }
    }
    return out;
  }

  const Partition& shape() const { return shape_; }
  long n() const { return shape_.n(); }
  // Entry in column j, row i (both 1-based).
  long at(long j, long i) const { return rows_[i - 1][j - 1]; }
  const std::vector<std::vector<long>>& rows() const { return rows_; }

  std::vector<long> row_values(long i) const { return rows_[i - 1]; }
  std::vector<long> column_values(long j) const {
    std::vector<long> col;
    for (long i = 1; i <= shape_.col_len(j); ++i) col.push_back(at(j, i));
    return col;
  }
  // Column segment a_{p,[lo,hi]} (inclusive, 1-based rows).
  std::vector<long> column_segment(long j, long lo, long hi) const {
    std::vector<long> col;
    for (long i = lo; i <= hi; ++i) col.push_back(at(j, i));
    return col;
  }

  bool is_standard() const {
    for (long i = 1; i <= shape_.rows(); ++i)
      for (long j = 2; j <= shape_.part(i); ++j)
        if (at(j, i) <= at(j - 1, i)) return false;
    for (long j = 1; j <= shape_.cols(); ++j)
      for (long i = 2; i <= shape_.col_len(j); ++i)
        if (at(j, i) <= at(j, i - 1)) return false;
    return true;
  }

  Tableau transpose() const {
    Partition tshape = transpose_partition(shape_);
    std::vector<std::vector<long>> rows(tshape.rows());
    for (long i = 1; i <= tshape.rows(); ++i) rows[i - 1].resize(tshape.part(i));
    for (long i = 1; i <= shape_.rows(); ++i)
      for (long j = 1; j <= shape_.part(i); ++j) rows[j - 1][i - 1] = at(j, i);
    return Tableau(tshape, std::move(rows));
  }

  // The permutation t with canonical * t == *this, i.e. t maps the canonical
  // entry of each cell to this tableau's entry.
  Permutation companion() const {
    Tableau c = canonical(shape_);
    std::vector<long> im(n());
    for (long i = 1; i <= shape_.rows(); ++i)
      for (long j = 1; j <= shape_.part(i); ++j)
        im[c.at(j, i) - 1] = at(j, i);
    return Permutation(std::move(im));
  }

  bool operator==(const Tableau& o) const {
    return shape_ == o.shape_ && rows_ == o.rows_;
  }
  bool operator<(const Tableau& o) const {
    if (!(shape_ == o.shape_)) return shape_ < o.shape_;
    return rows_ < o.rows_;
  }

 private:
  Partition shape_;
  std::vector<std::vector<long>> rows_;

  void validate() const {
    long n = shape_.n();
    std::vector<bool> seen(n, false);
    for (long i = 1; i <= shape_.rows(); ++i) {
      if (static_cast<long>(rows_[i - 1].size()) != shape_.part(i))
        throw SpechtError("tableau row length mismatch");
      for (long v : rows_[i - 1]) {
        if (v < 1 || v > n || seen[v - 1])
          throw SpechtError("tableau entries must be a bijection with 1..n");
        seen[v - 1] = true;
      }
    }
  }
};

// Right action on tableaux: entries are mapped through the permutation.
inline Tableau act(const Tableau& t, const Permutation& s) {
  std::vector<std::vector<long>> rows = t.rows();
  for (auto& row : rows)
    for (long& v : row) v = s(v);
  return Tableau(t.shape(), std::move(rows));
}

// ---------------------------------------------------------------------------
// Tabloid: a tableau up to reordering within rows; stored as the map
// value -> row index ("row word").
// ---------------------------------------------------------------------------

class Tabloid {
 public:
  Tabloid() = default;
  Tabloid(Partition shape, std::vector<long> row_of)
      : shape_(std::move(shape)), row_of_(std::move(row_of)) {
    std::vector<long> counts(shape_.rows(), 0);
    if (static_cast<long>(row_of_.size()) != shape_.n())
      throw SpechtError("tabloid word length mismatch");
    for (long r : row_of_) {
      if (r < 1 || r > shape_.rows()) throw SpechtError("tabloid row out of range");
      ++counts[r - 1];
    }
    for (long i = 1; i <= shape_.rows(); ++i)
      if (counts[i - 1] != shape_.part(i))
        throw SpechtError("tabloid row sizes do not match shape");
  }

  static Tabloid parse(const Partition& shape, const std::string& word) {
    std::vector<long> row_of;
    if (word.find(',') != std::string::npos) {
      for (const auto& tok : split(word, ',')) row_of.push_back(parse_long(tok));
    } else {
      for (char c : word) {
        if (c < '1' || c > '9') throw ParseError("bad tabloid word digit");
        row_of.push_back(c - '0');
      }
    }
    try {
      return Tabloid(shape, std::move(row_of));
    } catch (SpechtError& e) {
      throw ParseError(std::string("bad tabloid word '") + word + "': " + e.what());
    }
  }

  // Row word: i-th character is the row containing value i.  Rows beyond 9
  // fall back to a comma-separated form.
  std::string str() const {
    if (shape_.rows() <= 9) {
      std::string out;
      for (long r : row_of_) out += static_cast<char>('0' + r);
      return out;
    }
    std::string out;
    for (size_t i = 0; i < row_of_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(row_of_[i]);
    }
    return out;
  }

  const Partition& shape() const { return shape_; }
  long row_of(long value) const { return row_of_[value - 1]; }
  const std::vector<long>& word() const { return row_of_; }

  // Values in row i, ascending.
  std::vector<long> row_values(long i) const {
    std::vector<long> vals;
    for (size_t v = 0; v < row_of_.size(); ++v)
      if (row_of_[v] == i) vals.push_back(static_cast<long>(v) + 1);
    return vals;
  }

  // The row-sorted tableau representative.
  Tableau representative() const {
    std::vector<std::vector<long>> rows(shape_.rows());
    for (long i = 1; i <= shape_.rows(); ++i) rows[i - 1] = row_values(i);
    return Tableau(shape_, std::move(rows));
  }

  bool operator==(const Tabloid& o) const { return row_of_ == o.row_of_; }
  bool operator!=(const Tabloid& o) const { return !(*this == o); }
  bool operator<(const Tabloid& o) const { return row_of_ < o.row_of_; }

 private:
  Partition shape_;
  std::vector<long> row_of_;
};

inline Tabloid tabloid_of(const Tableau& t) {
  std::vector<long> row_of(t.n());
  for (long i = 1; i <= t.shape().rows(); ++i)
    for (long v : t.rows()[i - 1]) row_of[v - 1] = i;
  return Tabloid(t.shape(), std::move(row_of));
}

// Right action on tabloids: value i lands in the row previously holding the
// preimage of i.
inline Tabloid act(const Tabloid& t, const Permutation& s) {
  Permutation si = s.inverse();
  std::vector<long> row_of(t.word().size());
  for (size_t v = 1; v <= row_of.size(); ++v)
    row_of[v - 1] = t.row_of(si(static_cast<long>(v)));
  return Tabloid(t.shape(), std::move(row_of));
}

// All tabloids of the given shape, in lexicographic row-word order.
inline std::vector<Tabloid> all_tabloids(const Partition& shape,
                                         long guard = kEnumerationGuard) {
  // Count: multinomial n! / prod(parts!).
  Int count = factorial(shape.n());
  for (long i = 1; i <= shape.rows(); ++i) count /= factorial(shape.part(i));
  if (count > guard) throw GuardError("tabloid enumeration exceeds guard");
  std::vector<Tabloid> out;
  std::vector<long> word(shape.n());
  std::vector<long> remaining(shape.rows());
  for (long i = 1; i <= shape.rows(); ++i) remaining[i - 1] = shape.part(i);
  std::function<void(long)> rec = [&](long v) {
    if (v > shape.n()) {
      out.push_back(Tabloid(shape, word));
      return;
    }
    for (long r = 1; r <= shape.rows(); ++r) {
      if (remaining[r - 1] == 0) continue;
      word[v - 1] = r;
      --remaining[r - 1];
      rec(v + 1);
      ++remaining[r - 1];
    }
  };
  rec(1);
  return out;
}

// ---------------------------------------------------------------------------
// Row and column stabilizers
// ---------------------------------------------------------------------------

namespace detail {

// All permutations of [1,n] that permute each given block of values within
// itself; product of the blocks' symmetric groups.
inline std::vector<Permutation> block_group(
    long n, const std::vector<std::vector<long>>& blocks, long guard) {
  Int order = 1;
  for (const auto& b : blocks) order *= factorial(static_cast<long>(b.size()));
  if (order > guard) throw GuardError("stabilizer enumeration exceeds guard");
  std::vector<Permutation> out;
  out.push_back(Permutation::identity(n));
  for (const auto& b : blocks) {
    if (b.size() < 2) continue;
    std::vector<long> perm(b.begin(), b.end());
    std::sort(perm.begin(), perm.end());
    std::vector<long> base = perm;
    std::vector<Permutation> block_perms;
    do {
      std::vector<long> im(n);
      std::iota(im.begin(), im.end(), 1);
      for (size_t i = 0; i < base.size(); ++i) im[base[i] - 1] = perm[i];
      block_perms.push_back(Permutation(std::move(im)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Permutation> next;
    next.reserve(out.size() * block_perms.size());
    for (const auto& p : out)
      for (const auto& q : block_perms) next.push_back(p * q);
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

inline std::vector<Permutation> row_stabilizer(const Tableau& t,
                                               long guard = kEnumerationGuard) {
  std::vector<std::vector<long>> blocks;
  for (long i = 1; i <= t.shape().rows(); ++i) blocks.push_back(t.row_values(i));
  return detail::block_group(t.n(), blocks, guard);
}

inline std::vector<Permutation> column_stabilizer(
    const Tableau& t, long guard = kEnumerationGuard) {
  std::vector<std::vector<long>> blocks;
  for (long j = 1; j <= t.shape().cols(); ++j)
    blocks.push_back(t.column_values(j));
  return detail::block_group(t.n(), blocks, guard);
}

inline Int row_stabilizer_order(const Partition& shape) {
  Int r = 1;
  for (long i = 1; i <= shape.rows(); ++i) r *= factorial(shape.part(i));
  return r;
}

inline Int column_stabilizer_order(const Partition& shape) {
  Int r = 1;
  for (long j = 1; j <= shape.cols(); ++j) r *= factorial(shape.col_len(j));
  return r;
}

// All permutations of the given value set, as permutations of [1,n].
inline std::vector<Permutation> symmetric_group_on(
    long n, const std::vector<long>& values, long guard = kEnumerationGuard) {
  return detail::block_group(n, {values}, guard);
}

}  // namespace specht
