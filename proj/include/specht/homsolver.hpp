#pragma once
// Homomorphism groups out of an integral Specht module: presentation of the
// module by relation words, action matrices on target modules, kernel-based
// solving over Z/m, and morphism objects with serialization.

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "specht/lattices.hpp"
#include "specht/zlinalg.hpp"

namespace specht {

// ---------------------------------------------------------------------------
// Target modules
// ---------------------------------------------------------------------------

enum class TargetKind {
  Specht,       // standard polytabloid basis
  Tabloid,      // all tabloids (permutation module)
  TabloidAlt,   // all tabloids, action twisted by the sign character
};

struct TargetDesc {
  TargetKind kind = TargetKind::Specht;
  Partition shape;

  std::string str() const {
    switch (kind) {
      case TargetKind::Specht: return "S:" + shape.str();
      case TargetKind::Tabloid: return "M:" + shape.str();
      case TargetKind::TabloidAlt: return "M-:" + shape.str();
    }
    throw SpechtError("unreachable");
  }

  static TargetDesc parse(const std::string& s) {
    auto pos = s.find(':');
    if (pos == std::string::npos) throw ParseError("bad target: " + s);
    std::string tag = s.substr(0, pos);
    TargetDesc t;
    t.shape = Partition::parse(s.substr(pos + 1));
    if (tag == "S") t.kind = TargetKind::Specht;
    else if (tag == "M") t.kind = TargetKind::Tabloid;
    else if (tag == "M-") t.kind = TargetKind::TabloidAlt;
    else throw ParseError("bad target tag: " + tag);
    return t;
  }

  bool operator==(const TargetDesc& o) const {
    return kind == o.kind && shape == o.shape;
  }
};

// A concrete basis for a target module, with coordinate maps and the right
// group action expressed in coordinates.
class TargetModule {
 public:
  explicit TargetModule(TargetDesc desc, const Int& modulus = 0)
      : desc_(std::move(desc)), modulus_(modulus) {
    if (desc_.kind == TargetKind::Specht) {
      dim_ = SpechtBasis::get(desc_.shape).dim();
    } else {
      tabloids_ = all_tabloids(desc_.shape);
      for (size_t i = 0; i < tabloids_.size(); ++i)
        index_[tabloids_[i]] = static_cast<long>(i);
      dim_ = static_cast<long>(tabloids_.size());
    }
  }

  const TargetDesc& desc() const { return desc_; }
  const Int& modulus() const { return modulus_; }
  long dim() const { return dim_; }
  long n() const { return desc_.shape.n(); }

  // Coordinates of a free element (tabloid expansion) in this basis.
  std::vector<Int> coords_of(const FreeElement& x) const {
    if (x.shape() != desc_.shape)
      throw SpechtError("coords_of: shape mismatch");
    if (desc_.kind == TargetKind::Specht)
      return SpechtBasis::get(desc_.shape).straighten(x, modulus_);
    std::vector<Int> c(dim_, 0);
    for (const auto& [t, v] : x.terms()) c[index_.at(t)] = v;
    if (modulus_ != 0)
      for (auto& v : c) v = mod_reduce(v, modulus_);
    return c;
  }

  // Basis element i as a free element on tabloids.
  FreeElement basis_element(long i) const {
    if (desc_.kind == TargetKind::Specht)
      return SpechtBasis::get(desc_.shape).expansions()[i];
    FreeElement x(desc_.shape, desc_.kind == TargetKind::TabloidAlt);
    x.add(tabloids_[i], 1);
    return x;
  }

  // Coordinate vector after acting by a formal sum of permutations.
  std::vector<Int> act_coords(const std::vector<Int>& x,
                              const FormalPermSum& w) const {
    std::vector<Int> out(dim_, 0);
    for (long i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      auto row = action_row(i, w);
      for (long j = 0; j < dim_; ++j) out[j] += x[i] * row[j];
    }
    if (modulus_ != 0)
      for (auto& v : out) v = mod_reduce(v, modulus_);
    return out;
  }

  // Row i of the action matrix of w: coordinates of (basis_i) . w.
  std::vector<Int> action_row(long i, const FormalPermSum& w) const {
    if (desc_.kind == TargetKind::Specht)
      return coords_of(apply_word(basis_element(i), w));
    // Tabloid bases act tabloid-by-tabloid without expansion machinery.
    std::vector<Int> out(dim_, 0);
    bool alt = desc_.kind == TargetKind::TabloidAlt;
    for (const auto& [s, c] : w.terms()) {
      Tabloid img = act(tabloids_[i], s);
      Int v = c;
      if (alt && s.sign() < 0) v = -v;
      out[index_.at(img)] += v;
    }
    if (modulus_ != 0)
      for (auto& v : out) v = mod_reduce(v, modulus_);
    return out;
  }

 private:
  TargetDesc desc_;
  Int modulus_;
  long dim_ = 0;
  std::vector<Tabloid> tabloids_;
  std::map<Tabloid, long> index_;
};

// ---------------------------------------------------------------------------
// Presentation of the Specht module by relation words
// ---------------------------------------------------------------------------

// Words w in the integral group ring with <canonical> . w == 0, generating
// the annihilator of the cyclic generator: the signed transposition words
// 1 + (u, v) for u, v in the same column, and the signed coset sums over
// bottom/top column segments for every adjacent column pair and every
// admissible segment split.
inline std::vector<FormalPermSum> specht_relation_words(const Partition& shape) {
  std::vector<FormalPermSum> words;
  Tableau a = Tableau::canonical(shape);
  long n = shape.n();
  Partition conj = transpose_partition(shape);
  for (long j = 1; j <= shape.cols(); ++j) {
    auto col = a.column_values(j);
    for (size_t x = 0; x < col.size(); ++x)
      for (size_t y = x + 1; y < col.size(); ++y) {
        FormalPermSum w = FormalPermSum::unit(n);
        w.add(Permutation::transposition(n, col[x], col[y]), 1);
        words.push_back(std::move(w));
      }
  }
  for (long p = 1; p < shape.cols(); ++p) {
    long lp = conj.part(p), lq = conj.part(p + 1);
    for (long t = 1; t <= lq; ++t) {
      long s = lp + 1 - t;
      if (s < 1 || s > lp) continue;
      words.push_back(garnir_word_at(a, p, s, t));
    }
  }
  return words;
}

// ---------------------------------------------------------------------------
// Hom groups
// ---------------------------------------------------------------------------

// Hom(S^lambda, T/m) for m > 0: each morphism is determined by the image of
// the canonical generator, constrained to be annihilated by every relation
// word.  Returned as generator image vectors with their additive orders.
struct HomGroup {
  Partition source;
  TargetDesc target;
  Int modulus;
  std::vector<std::vector<Int>> generators;  // images of <canonical>
  std::vector<Int> orders;

  std::vector<Int> invariants() const { return invariant_factors(orders); }
  std::vector<Int> primary() const { return primary_decomposition(orders); }
};

inline HomGroup hom_group(const Partition& source, const TargetDesc& target,
                          const Int& m) {
  if (m <= 0) throw SpechtError("hom_group: modulus must be positive");
  if (source.n() != target.shape.n())
    throw SpechtError("hom_group: source and target sizes differ");
  TargetModule tm(target, m);
  auto words = specht_relation_words(source);
  long dim = tm.dim();
  IntMatrix a(dim, dim * static_cast<long>(words.size()));
  for (long i = 0; i < dim; ++i)
    for (size_t w = 0; w < words.size(); ++w) {
      auto row = tm.action_row(i, words[w]);
      for (long j = 0; j < dim; ++j)
        a.at(i, static_cast<long>(w) * dim + j) = row[j];
    }
  KernelMod k = kernel_mod(a, m);
  HomGroup h;
  h.source = source;
  h.target = target;
  h.modulus = m;
  h.generators = std::move(k.generators);
  h.orders = std::move(k.orders);
  return h;
}

// Dimension of Hom(S^lambda, T/p) over the field with p elements (p prime):
// the nullity of the stacked relation constraints, with early exit.
inline long hom_dim_mod_p(const Partition& source, const TargetDesc& target,
                          long p) {
  TargetModule tm(target, p);
  auto words = specht_relation_words(source);
  long dim = tm.dim();
  GFpEliminator el(dim, p);
  // Constraint for coordinate j of word w: sum_i x_i * row_i(w)[j] == 0.
  // Build rows of the action matrix once per word, then feed columns.
  for (const auto& w : words) {
    std::vector<std::vector<long>> rows(dim);
    for (long i = 0; i < dim; ++i) {
      auto r = tm.action_row(i, w);
      rows[i].resize(dim);
      for (long j = 0; j < dim; ++j) rows[i][j] = r[j].get_si();
    }
    for (long j = 0; j < dim; ++j) {
      std::vector<long> constraint(dim);
      for (long i = 0; i < dim; ++i) constraint[i] = rows[i][j];
      el.add_constraint(std::move(constraint));
      if (el.full()) return 0;
    }
  }
  return el.nullity();
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

// A module map S^lambda -> T/m, stored as the full matrix over the standard
// bases: row i is the image of the i-th standard basis vector of the source.
struct Morphism {
  Partition source;
  TargetDesc target;
  Int modulus = 0;
  std::vector<std::vector<Int>> matrix;

  long source_dim() const { return static_cast<long>(matrix.size()); }
  long target_dim() const {
    return matrix.empty() ? 0 : static_cast<long>(matrix[0].size());
  }

  // Image of the canonical generator.
  const std::vector<Int>& generator_image() const {
    return matrix[SpechtBasis::get(source).index_of_canonical()];
  }

  // Least c >= 1 with c . f == 0.
  Int order() const {
    Int g = modulus;
    for (const auto& row : matrix)
      for (const auto& v : row) g = specht::gcd(g, v);
    return modulus / g;
  }

  std::vector<Int> apply(const std::vector<Int>& coords) const {
    std::vector<Int> out(target_dim(), 0);
    for (long i = 0; i < source_dim(); ++i) {
      if (coords[i] == 0) continue;
      for (long j = 0; j < target_dim(); ++j)
        out[j] += coords[i] * matrix[i][j];
    }
    for (auto& v : out) v = mod_reduce(v, modulus);
    return out;
  }

  bool operator==(const Morphism& o) const {
    return source == o.source && target == o.target && modulus == o.modulus &&
           matrix == o.matrix;
  }
};

// Build the full matrix from the image of the canonical generator, verifying
// that the image is annihilated by every relation word (throws otherwise).
inline Morphism morphism_from_image(const Partition& source,
                                    const TargetDesc& target, const Int& m,
                                    const std::vector<Int>& image,
                                    bool verify = true) {
  TargetModule tm(target, m);
  if (static_cast<long>(image.size()) != tm.dim())
    throw SpechtError("morphism_from_image: image dimension mismatch");
  if (verify) {
    for (const auto& w : specht_relation_words(source)) {
      auto y = tm.act_coords(image, w);
      for (const auto& v : y)
        if (v != 0)
          throw SpechtError(
              "morphism_from_image: image violates a module relation");
    }
  }
  const SpechtBasis& sb = SpechtBasis::get(source);
  Morphism f;
  f.source = source;
  f.target = target;
  f.modulus = m;
  f.matrix.resize(sb.dim());
  for (long i = 0; i < sb.dim(); ++i) {
    FormalPermSum w;
    w.add(sb.companions()[i], 1);
    f.matrix[i] = tm.act_coords(image, w);
  }
  return f;
}

inline Morphism morphism_from_hom_generator(const HomGroup& h, size_t g) {
  return morphism_from_image(h.source, h.target, h.modulus, h.generators[g]);
}

// Equality of coordinate vectors up to multiplication by a unit of Z/m.
inline bool equal_up_to_unit(const std::vector<Int>& u,
                             const std::vector<Int>& v, const Int& m) {
  if (u.size() != v.size()) return false;
  for (Int c = 1; c < m; ++c) {
    if (specht::gcd(c, m) != 1) continue;
    bool ok = true;
    for (size_t i = 0; i < u.size() && ok; ++i)
      if (mod_reduce(c * v[i] - u[i], m) != 0) ok = false;
    if (ok) return true;
  }
  return false;
}

inline bool equal_up_to_unit(const Morphism& f, const Morphism& g) {
  if (f.source != g.source || !(f.target == g.target) ||
      f.modulus != g.modulus || f.matrix.size() != g.matrix.size())
    return false;
  std::vector<Int> fu, gu;
  for (const auto& row : f.matrix) fu.insert(fu.end(), row.begin(), row.end());
  for (const auto& row : g.matrix) gu.insert(gu.end(), row.begin(), row.end());
  return equal_up_to_unit(fu, gu, f.modulus);
}

// ---------------------------------------------------------------------------
// Text serialization: header lines, one CSV row per source basis vector,
// followed by a single-line JSON mirror of the same data.
// ---------------------------------------------------------------------------

inline std::string morphism_to_text(const Morphism& f) {
  std::ostringstream os;
  os << "SRC " << f.source.str() << "\n";
  os << "TGT " << f.target.str() << "\n";
  os << "MOD " << f.modulus.get_str() << "\n";
  os << "BASIS " << f.source_dim() << "x" << f.target_dim() << "\n";
  for (const auto& row : f.matrix) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ",";
      os << row[j].get_str();
    }
    os << "\n";
  }
  os << "JSON {\"src\":\"" << f.source.str() << "\",\"tgt\":\""
     << f.target.str() << "\",\"mod\":" << f.modulus.get_str()
     << ",\"matrix\":[";
  for (long i = 0; i < f.source_dim(); ++i) {
    if (i) os << ",";
    os << "[";
    for (long j = 0; j < f.target_dim(); ++j) {
      if (j) os << ",";
      os << f.matrix[i][j].get_str();
    }
    os << "]";
  }
  os << "]}\n";
  return os.str();
}

inline Morphism morphism_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Morphism f;
  long rows = -1, cols = -1;
  std::vector<std::vector<Int>> matrix;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("SRC ", 0) == 0) f.source = Partition::parse(line.substr(4));
    else if (line.rfind("TGT ", 0) == 0)
      f.target = TargetDesc::parse(line.substr(4));
    else if (line.rfind("MOD ", 0) == 0) f.modulus = parse_int(line.substr(4));
    else if (line.rfind("BASIS ", 0) == 0) {
      auto xpos = line.find('x', 6);
      if (xpos == std::string::npos) throw ParseError("bad BASIS line");
      rows = parse_long(line.substr(6, xpos - 6));
      cols = parse_long(line.substr(xpos + 1));
    } else if (line.rfind("JSON", 0) == 0) {
      break;  // mirror of the CSV block; the CSV is authoritative on read
    } else {
      auto toks = split(line, ',');
      std::vector<Int> row;
      for (const auto& t : toks) row.push_back(parse_int(t));
      matrix.push_back(std::move(row));
    }
  }
  if (rows < 0) throw ParseError("missing BASIS line");
  if (static_cast<long>(matrix.size()) != rows)
    throw ParseError("matrix row count disagrees with BASIS line");
  for (const auto& row : matrix)
    if (static_cast<long>(row.size()) != cols)
      throw ParseError("matrix column count disagrees with BASIS line");
  f.matrix = std::move(matrix);
  return f;
}

}  // namespace specht
