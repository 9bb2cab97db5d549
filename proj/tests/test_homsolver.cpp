#include <catch2/catch_amalgamated.hpp>

#include "specht/homsolver.hpp"

using namespace specht;

namespace {

// Independent route to "is this generator image a module map": extend the
// image over the standard basis by companions, then check that the extended
// linear map commutes with every Coxeter generator of the group action.
// This tests well-definedness directly and does not use the relation words.
bool is_hom_by_equivariance(const Partition& source, const TargetDesc& target,
                            const Int& m, const std::vector<Int>& image) {
  Morphism f = morphism_from_image(source, target, m, image, /*verify=*/false);
  TargetModule tm(target, m);
  const SpechtBasis& sb = SpechtBasis::get(source);
  long n = source.n();
  for (long g = 1; g < n; ++g) {
    Permutation s = Permutation::transposition(n, g, g + 1);
    FormalPermSum ws;
    ws.add(s, 1);
    for (long b = 0; b < sb.dim(); ++b) {
      auto moved = sb.straighten(act(sb.expansions()[b], s), m);
      auto lhs = f.apply(moved);
      auto rhs = tm.act_coords(f.matrix[b], ws);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

// All generator images in (Z/m)^dim passing the equivariance test.
long brute_hom_count(const Partition& source, const TargetDesc& target,
                     long m) {
  TargetModule tm(target, m);
  long dim = tm.dim();
  std::vector<Int> x(dim, 0);
  long count = 0;
  while (true) {
    if (is_hom_by_equivariance(source, target, m, x)) ++count;
    long i = 0;
    while (i < dim && x[i] == m - 1) x[i++] = 0;
    if (i == dim) break;
    x[i] += 1;
  }
  return count;
}

Int group_size(const HomGroup& h) {
  Int s = 1;
  for (const auto& o : h.orders) s *= o;
  return s;
}

}  // namespace

TEST_CASE("relation words annihilate the canonical generator") {
  for (const char* s : {"2,1", "2,2", "3,1", "2,2,1", "4", "1,1,1,1"}) {
    Partition shape = Partition::parse(s);
    FreeElement gen = polytabloid(Tableau::canonical(shape));
    for (const auto& w : specht_relation_words(shape)) {
      FreeElement img = apply_word(gen, w);
      auto coords = straighten(img);
      for (const auto& c : coords) REQUIRE(c == 0);
    }
  }
}

TEST_CASE("target modules: coordinates and action") {
  Partition mu = Partition::parse("2,1");
  SECTION("tabloid basis") {
    TargetModule tm(TargetDesc{TargetKind::Tabloid, mu});
    REQUIRE(tm.dim() == 3);
    // acting by a 3-cycle permutes the basis without signs
    FormalPermSum w;
    w.add(Permutation::from_cycles(3, {{1, 2, 3}}), 1);
    for (long i = 0; i < 3; ++i) {
      auto row = tm.action_row(i, w);
      Int total = 0, nonneg = 1;
      for (const auto& v : row) {
        total += v;
        if (v < 0) nonneg = 0;
      }
      REQUIRE(total == 1);
      REQUIRE(nonneg == 1);
    }
  }
  SECTION("sign-twisted tabloid basis differs by the sign character") {
    TargetModule plain(TargetDesc{TargetKind::Tabloid, mu});
    TargetModule alt(TargetDesc{TargetKind::TabloidAlt, mu});
    FormalPermSum w;
    w.add(Permutation::transposition(3, 1, 2), 1);
    for (long i = 0; i < 3; ++i) {
      auto a = plain.action_row(i, w);
      auto b = alt.action_row(i, w);
      for (long j = 0; j < 3; ++j) REQUIRE(a[j] == -b[j]);
    }
  }
  SECTION("specht basis round trip") {
    TargetModule tm(TargetDesc{TargetKind::Specht, mu});
    REQUIRE(tm.dim() == 2);
    for (long i = 0; i < 2; ++i) {
      auto c = tm.coords_of(tm.basis_element(i));
      for (long j = 0; j < 2; ++j) REQUIRE(c[j] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("hom group sizes match the equivariance brute force") {
  struct Case {
    const char* source;
    TargetKind kind;
    const char* target;
    long m;
  };
  const Case cases[] = {
      {"2,1", TargetKind::Specht, "2,1", 2},
      {"2,1", TargetKind::Specht, "2,1", 3},
      {"2,1", TargetKind::Specht, "2,1", 4},
      {"2,1", TargetKind::Specht, "1,1,1", 6},
      {"2,1", TargetKind::Tabloid, "2,1", 2},
      {"2,1", TargetKind::Tabloid, "2,1", 4},
      {"2,1", TargetKind::TabloidAlt, "2,1", 2},
      {"2,1", TargetKind::TabloidAlt, "2,1", 3},
      {"3", TargetKind::Tabloid, "2,1", 6},
      {"1,1,1", TargetKind::TabloidAlt, "2,1", 4},
      {"2,2", TargetKind::Specht, "2,2", 4},
      {"2,2", TargetKind::Specht, "1,1,1,1", 6},
  };
  for (const auto& c : cases) {
    Partition src = Partition::parse(c.source);
    TargetDesc tgt{c.kind, Partition::parse(c.target)};
    HomGroup h = hom_group(src, tgt, c.m);
    // every solver generator passes the independent equivariance route
    for (const auto& g : h.generators)
      REQUIRE(is_hom_by_equivariance(src, tgt, c.m, g));
    REQUIRE(group_size(h) == Int(brute_hom_count(src, tgt, c.m)));
  }
}

TEST_CASE("hom groups with known structure") {
  SECTION("maps out of the trivial module hit invariant vectors") {
    HomGroup h = hom_group(Partition::parse("3"),
                           TargetDesc{TargetKind::Tabloid, Partition::parse("3")},
                           6);
    REQUIRE(h.invariants() == std::vector<Int>{6});
  }
  SECTION("identity map always present") {
    for (long m : {2, 3, 4, 5}) {
      Partition lam = Partition::parse("3,2");
      HomGroup h =
          hom_group(lam, TargetDesc{TargetKind::Specht, lam}, m);
      // the canonical unit vector must lie in the span: find it among
      // unit multiples of a single generator when the group is cyclic
      std::vector<Int> unit(SpechtBasis::get(lam).dim(), 0);
      unit[SpechtBasis::get(lam).index_of_canonical()] = 1;
      // it is annihilated by all relations, so it extends to a morphism
      REQUIRE_NOTHROW(
          morphism_from_image(lam, TargetDesc{TargetKind::Specht, lam}, m, unit));
    }
  }
  SECTION("large prime semisimplicity separates distinct shapes") {
    REQUIRE(hom_dim_mod_p(Partition::parse("2,1"),
                          TargetDesc{TargetKind::Specht, Partition::parse("3")},
                          5) == 0);
    REQUIRE(hom_dim_mod_p(
                Partition::parse("2,1"),
                TargetDesc{TargetKind::Specht, Partition::parse("1,1,1")}, 5) ==
            0);
    REQUIRE(hom_dim_mod_p(
                Partition::parse("2,1"),
                TargetDesc{TargetKind::Specht, Partition::parse("2,1")}, 5) ==
            1);
  }
}

TEST_CASE("hom dimension over a large prime counts semistandard fillings") {
  // For p > n, dim Hom(S^lambda, M^mu / p) is the Kostka number.
  struct Case {
    const char* lam;
    const char* mu;
    long kostka;
  };
  const Case cases[] = {
      {"2,1", "2,1", 1},  {"2,1", "1,1,1", 2}, {"3", "2,1", 1},
      {"2,2", "2,2", 1},  {"3,1", "2,2", 1},   {"2,2", "3,1", 0},
      {"3,1", "2,1,1", 2}, {"4", "2,2", 1},
  };
  for (const auto& c : cases) {
    REQUIRE(hom_dim_mod_p(
                Partition::parse(c.lam),
                TargetDesc{TargetKind::Tabloid, Partition::parse(c.mu)}, 7) ==
            c.kostka);
  }
}

TEST_CASE("dimension over GF(p) is consistent with the kernel solver") {
  for (long p : {2, 3, 5}) {
    for (const char* lam : {"2,1", "2,2", "3,1"}) {
      Partition src = Partition::parse(lam);
      TargetDesc tgt{TargetKind::Specht, src};
      long d = hom_dim_mod_p(src, tgt, p);
      HomGroup h = hom_group(src, tgt, p);
      Int expected = 1;
      for (long i = 0; i < d; ++i) expected *= p;
      REQUIRE(group_size(h) == expected);
    }
  }
}

TEST_CASE("morphism construction, order, and application") {
  Partition lam = Partition::parse("2,2");
  TargetDesc tgt{TargetKind::Specht, lam};
  std::vector<Int> unit(SpechtBasis::get(lam).dim(), 0);
  unit[SpechtBasis::get(lam).index_of_canonical()] = 1;
  Morphism id = morphism_from_image(lam, tgt, 4, unit);
  REQUIRE(id.source_dim() == 2);
  REQUIRE(id.target_dim() == 2);
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j) REQUIRE(id.matrix[i][j] == (i == j ? 1 : 0));
  REQUIRE(id.order() == 4);
  REQUIRE(id.apply({Int(3), Int(1)}) == (std::vector<Int>{3, 1}));

  // doubling drops the order
  std::vector<Int> twice = unit;
  twice[SpechtBasis::get(lam).index_of_canonical()] = 2;
  Morphism f2 = morphism_from_image(lam, tgt, 4, twice);
  REQUIRE(f2.order() == 2);

  // a generator image violating the relations is rejected
  TargetDesc tab{TargetKind::Tabloid, Partition::parse("2,1")};
  std::vector<Int> bad = {Int(1), Int(0), Int(0)};
  REQUIRE_THROWS_AS(
      morphism_from_image(Partition::parse("2,1"), tab, 3, bad),
      SpechtError);
}

TEST_CASE("comparison up to a unit of the modulus") {
  REQUIRE(equal_up_to_unit({Int(1), Int(2)}, {Int(3), Int(2)}, 4));
  REQUIRE_FALSE(equal_up_to_unit({Int(1), Int(2)}, {Int(2), Int(0)}, 4));
  REQUIRE(equal_up_to_unit({Int(2), Int(4)}, {Int(4), Int(2)}, 6));  // x5
  REQUIRE_FALSE(equal_up_to_unit({Int(1), Int(0)}, {Int(0), Int(1)}, 5));

  Partition lam = Partition::parse("2,2");
  TargetDesc tgt{TargetKind::Specht, lam};
  std::vector<Int> unit(2, 0);
  unit[SpechtBasis::get(lam).index_of_canonical()] = 1;
  std::vector<Int> tripled(2, 0);
  tripled[SpechtBasis::get(lam).index_of_canonical()] = 3;
  Morphism a = morphism_from_image(lam, tgt, 4, unit);
  Morphism b = morphism_from_image(lam, tgt, 4, tripled);
  REQUIRE(equal_up_to_unit(a, b));
  std::vector<Int> doubled(2, 0);
  doubled[SpechtBasis::get(lam).index_of_canonical()] = 2;
  Morphism c = morphism_from_image(lam, tgt, 4, doubled);
  REQUIRE_FALSE(equal_up_to_unit(a, c));
}

TEST_CASE("morphism text round trip") {
  Partition lam = Partition::parse("2,1");
  TargetDesc tgt{TargetKind::Tabloid, Partition::parse("2,1")};
  HomGroup h = hom_group(lam, tgt, 4);
  REQUIRE_FALSE(h.generators.empty());
  Morphism f = morphism_from_hom_generator(h, 0);
  std::string text = morphism_to_text(f);
  REQUIRE(text.find("SRC 2,1\n") != std::string::npos);
  REQUIRE(text.find("TGT M:2,1\n") != std::string::npos);
  REQUIRE(text.find("MOD 4\n") != std::string::npos);
  REQUIRE(text.find("BASIS 2x3\n") != std::string::npos);
  REQUIRE(text.find("JSON {") != std::string::npos);
  Morphism g = morphism_from_text(text);
  REQUIRE(f == g);

  REQUIRE(TargetDesc::parse("S:3,2").str() == "S:3,2");
  REQUIRE(TargetDesc::parse("M-:2,2").kind == TargetKind::TabloidAlt);
  REQUIRE_THROWS_AS(TargetDesc::parse("bogus"), ParseError);
}
