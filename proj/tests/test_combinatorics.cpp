#include <catch2/catch_amalgamated.hpp>

#include "specht/combinatorics.hpp"

using namespace specht;

TEST_CASE("partition parsing, transpose and column lengths") {
  Partition p = Partition::parse("5,4,4,2,1,1");
  CHECK(p.n() == 17);
  CHECK(p.rows() == 6);
  CHECK(p.cols() == 5);
  CHECK(transpose_partition(p) == Partition::parse("6,4,3,3,1"));
  CHECK(transpose_partition(transpose_partition(p)) == p);
  CHECK(p.col_len(1) == 6);
  CHECK(p.col_len(5) == 1);
  CHECK(p.str() == "5,4,4,2,1,1");

  CHECK_THROWS_AS(Partition::parse("2,3"), ParseError);
  CHECK_THROWS_AS(Partition::parse("3,0"), ParseError);
  CHECK_THROWS_AS(Partition::parse("3,x"), ParseError);
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(8).size() == 22);
  CHECK(partitions_of(9).size() == 30);
}

TEST_CASE("permutation composition follows right-action order") {
  // (s * t)(i) = t(s(i))
  Permutation s = Permutation::transposition(3, 1, 2);
  Permutation t = Permutation::transposition(3, 2, 3);
  Permutation st = s * t;
  CHECK(st(1) == 3);
  CHECK(st(2) == 1);
  CHECK(st(3) == 2);
  CHECK(st.sign() == 1);
  CHECK((st * st.inverse()).is_identity());
  CHECK(Permutation::from_cycles(5, {{2, 4, 5, 3}}) ==
        Permutation({1, 4, 2, 5, 3}));
  CHECK(Permutation::from_cycles(5, {{2, 4, 5, 3}}).sign() == -1);
}

TEST_CASE("canonical tableau fills columns consecutively") {
  Tableau c = Tableau::canonical(Partition::parse("3,3"));
  CHECK(c.str() == "1,3,5;2,4,6");
  CHECK(Tableau::canonical(Partition::parse("3,2,2")).str() == "1,4,7;2,5;3,6");
  CHECK(Tableau::canonical(Partition::parse("7,7,7,4")).str() ==
        "1,5,9,13,17,20,23;2,6,10,14,18,21,24;3,7,11,15,19,22,25;4,8,12,16");
  CHECK(c.is_standard());
  CHECK(c.at(2, 1) == 3);   // column 2, row 1
  CHECK(c.at(1, 2) == 2);
  CHECK(c.column_values(2) == std::vector<long>{3, 4});
}

TEST_CASE("tableau parse, transpose, companion and action") {
  Tableau t = Tableau::parse("1,3,5;2,4");
  CHECK(t.shape() == Partition::parse("3,2"));
  CHECK(t.is_standard());
  CHECK(t.transpose().str() == "1,2;3,4;5");
  CHECK_FALSE(Tableau::parse("2,1,5;3,4").is_standard());
  CHECK_THROWS_AS(Tableau::parse("1,2;3,3"), ParseError);
  CHECK_THROWS_AS(Tableau::parse("1;2,3"), ParseError);

  // canonical * companion == tableau
  Tableau u = Tableau::parse("1,2,5;3,4");
  Permutation tau = u.companion();
  CHECK(act(Tableau::canonical(u.shape()), tau) == u);
  // companion of the canonical tableau is the identity
  CHECK(Tableau::canonical(Partition::parse("3,2")).companion().is_identity());
}

TEST_CASE("tabloids: words, actions, enumeration") {
  Tableau t = Tableau::parse("1,3,5;2,4,6");
  Tabloid tb = tabloid_of(t);
  CHECK(tb.str() == "121212");
  CHECK(tb.row_values(1) == std::vector<long>{1, 3, 5});
  CHECK(Tabloid::parse(t.shape(), "121212") == tb);

  // Action consistency: tabloid_of(act(t, s)) == act(tabloid_of(t), s)
  Permutation s = Permutation::from_cycles(6, {{1, 4, 2}, {5, 6}});
  CHECK(tabloid_of(act(t, s)) == act(tb, s));

  auto all = all_tabloids(Partition::parse("2,2"));
  CHECK(all.size() == 6);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all_tabloids(Partition::parse("3,3")).size() == 20);
}

TEST_CASE("row and column stabilizers") {
  Tableau t = Tableau::canonical(Partition::parse("3,2"));
  auto rows = row_stabilizer(t);
  auto cols = column_stabilizer(t);
  CHECK(rows.size() == 12);  // 3! * 2!
  CHECK(cols.size() == 4);   // 2! * 2! * 1!
  CHECK(row_stabilizer_order(t.shape()) == 12);
  CHECK(column_stabilizer_order(t.shape()) == 4);
  // Every member preserves rows of the tabloid.
  Tabloid tb = tabloid_of(t);
  for (const auto& p : rows) CHECK(act(tb, p) == tb);
  // Column stabilizer members preserve each column as a set.
  for (const auto& p : cols) {
    for (long j = 1; j <= t.shape().cols(); ++j) {
      auto col = t.column_values(j);
      std::vector<long> mapped;
      for (long v : col) mapped.push_back(p(v));
      std::sort(mapped.begin(), mapped.end());
      std::sort(col.begin(), col.end());
      CHECK(mapped == col);
    }
  }
  // Guard triggers on an over-large enumeration.
  CHECK_THROWS_AS(row_stabilizer(Tableau::canonical(Partition::parse("14")), 1000000),
                  GuardError);
}

TEST_CASE("formal permutation sums") {
  FormalPermSum w = FormalPermSum::unit(4);
  FormalPermSum t;
  t.add(Permutation::transposition(4, 3, 4), -1);
  FormalPermSum u = w + t;  // 1 - (3 4)
  CHECK(u.size() == 2);
  FormalPermSum sq = u * u;  // 2 - 2 (3 4)
  CHECK(sq.terms().at(Permutation::identity(4)) == 2);
  CHECK(sq.terms().at(Permutation::transposition(4, 3, 4)) == -2);
}
