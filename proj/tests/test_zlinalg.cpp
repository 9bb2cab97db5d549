#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "specht/zlinalg.hpp"

using namespace specht;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<long>(rows.size()),
              rows.empty() ? 0 : static_cast<long>(rows[0].size()));
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

Int det(const IntMatrix& a) {
  // fraction-free Gaussian elimination (Bareiss)
  IntMatrix m = a;
  Int sign = 1, prev = 1;
  for (long k = 0; k < m.rows - 1; ++k) {
    if (m.at(k, k) == 0) {
      long s = -1;
      for (long i = k + 1; i < m.rows; ++i)
        if (m.at(i, k) != 0) {
          s = i;
          break;
        }
      if (s < 0) return 0;
      for (long j = 0; j < m.cols; ++j) std::swap(m.at(k, j), m.at(s, j));
      sign = -sign;
    }
    for (long i = k + 1; i < m.rows; ++i)
      for (long j = k + 1; j < m.cols; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(m.rows - 1, m.rows - 1);
}

// Brute-force left kernel mod m for tiny matrices: all x in (Z/m)^rows.
std::set<std::vector<Int>> brute_kernel(const IntMatrix& a, long m) {
  std::set<std::vector<Int>> out;
  std::vector<Int> x(a.rows, Int(0));
  while (true) {
    bool zero = true;
    for (long j = 0; j < a.cols && zero; ++j) {
      Int s = 0;
      for (long i = 0; i < a.rows; ++i) s += x[i] * a.at(i, j);
      if (mod_reduce(s, m) != 0) zero = false;
    }
    if (zero) out.insert(x);
    long i = 0;
    while (i < a.rows && x[i] == m - 1) x[i++] = 0;
    if (i == a.rows) break;
    x[i] += 1;
  }
  return out;
}

// Span of the kernel generators inside (Z/m)^rows.
std::set<std::vector<Int>> span_mod(const KernelMod& k, long m, long rows) {
  std::set<std::vector<Int>> out{std::vector<Int>(rows, Int(0))};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::vector<Int>> next = out;
    for (const auto& base : out)
      for (const auto& g : k.generators) {
        std::vector<Int> y(rows);
        for (long j = 0; j < rows; ++j)
          y[j] = mod_reduce(base[j] + g[j], m);
        if (next.insert(y).second) grew = true;
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("smith normal form of a fixed 3x3 matrix") {
  // Known form: diag(2, 6, 12).
  IntMatrix a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithForm f = snf(a);
  auto diag = f.diagonal();
  REQUIRE(diag == std::vector<Int>{2, 6, 12});
  REQUIRE(f.u * a * f.v == f.d);
  REQUIRE(abs(det(f.u)) == 1);
  REQUIRE(abs(det(f.v)) == 1);
}

TEST_CASE("smith normal form of rectangular and deficient matrices") {
  SECTION("rank-deficient") {
    IntMatrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    auto diag = snf(a).diagonal();
    REQUIRE(diag == std::vector<Int>{1, 1, 0});
  }
  SECTION("wide") {
    IntMatrix a = from_rows({{6, 10, 15}});
    auto diag = snf(a).diagonal();
    REQUIRE(diag == std::vector<Int>{1});
  }
  SECTION("tall with a zero row") {
    IntMatrix a = from_rows({{0, 0}, {4, 6}, {2, 2}});
    SmithForm f = snf(a);
    REQUIRE(f.diagonal() == std::vector<Int>{2, 2});
    REQUIRE(f.u * a * f.v == f.d);
  }
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<long> dim(1, 5), entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    long r = dim(rng), c = dim(rng);
    IntMatrix a(r, c);
    for (auto& x : a.a) x = entry(rng);
    SmithForm f = snf(a);
    REQUIRE(f.u * a * f.v == f.d);
    // off-diagonal zero, nonnegative diagonal, divisibility chain
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < c; ++j)
        if (i != j) REQUIRE(f.d.at(i, j) == 0);
    auto diag = f.diagonal();
    for (size_t i = 0; i < diag.size(); ++i) {
      REQUIRE(diag[i] >= 0);
      if (i + 1 < diag.size() && diag[i + 1] != 0) {
        REQUIRE(diag[i] != 0);
        REQUIRE(diag[i + 1] % diag[i] == 0);
      }
    }
    if (r <= 4) {
      IntMatrix usq = f.u;  // u is rows x rows
      REQUIRE(abs(det(usq)) == 1);
      REQUIRE(abs(det(f.v)) == 1);
    }
  }
}

TEST_CASE("left kernel modulo m matches brute force on tiny matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-4, 4);
  const long mods[] = {2, 3, 4, 6};
  for (int trial = 0; trial < 40; ++trial) {
    long r = 1 + trial % 3, c = 1 + (trial / 3) % 3;
    IntMatrix a(r, c);
    for (auto& x : a.a) x = entry(rng);
    long m = mods[trial % 4];
    KernelMod k = kernel_mod(a, m);
    // every generator is a solution, with the claimed order
    for (size_t g = 0; g < k.generators.size(); ++g) {
      auto y = row_times_matrix(k.generators[g], a, m);
      for (const auto& v : y) REQUIRE(v == 0);
      REQUIRE(vector_order_mod(k.generators[g], m) == k.orders[g]);
    }
    // the span is the whole solution set
    auto brute = brute_kernel(a, m);
    auto span = span_mod(k, m, r);
    REQUIRE(span == brute);
    // group size = product of orders
    Int prod = 1;
    for (const auto& o : k.orders) prod *= o;
    REQUIRE(prod == Int(static_cast<long>(brute.size())));
  }
}

TEST_CASE("left kernel over the integers") {
  IntMatrix a = from_rows({{1, 2}, {2, 4}, {3, 5}});
  KernelMod k = kernel_mod(a, 0);
  REQUIRE(k.generators.size() == 1);
  REQUIRE(k.orders == std::vector<Int>{0});
  auto y = row_times_matrix(k.generators[0], a);
  REQUIRE(y == std::vector<Int>{0, 0});
  // the generator must be primitive: (2,-1,0) up to sign
  Int g = 0;
  for (const auto& v : k.generators[0]) g = gcd(g, v);
  REQUIRE(g == 1);
}

TEST_CASE("vector orders and invariant factors") {
  REQUIRE(vector_order_mod({Int(3), Int(6)}, 12) == 4);
  REQUIRE(vector_order_mod({Int(0), Int(0)}, 12) == 1);
  REQUIRE(vector_order_mod({Int(5)}, 12) == 12);

  REQUIRE(invariant_factors({Int(2), Int(3)}) == std::vector<Int>{6});
  REQUIRE(invariant_factors({Int(4), Int(6)}) == std::vector<Int>{2, 12});
  REQUIRE(invariant_factors({Int(2), Int(2), Int(8), Int(3)}) ==
          (std::vector<Int>{2, 2, 24}));
  REQUIRE(invariant_factors({Int(1), Int(1)}).empty());

  REQUIRE(primary_decomposition({Int(6)}) == (std::vector<Int>{2, 3}));
  REQUIRE(primary_decomposition({Int(2), Int(3)}) ==
          primary_decomposition({Int(6)}));
  REQUIRE(primary_decomposition({Int(12), Int(2)}) ==
          (std::vector<Int>{2, 3, 4}));
}

TEST_CASE("rank over a prime field by incremental elimination") {
  GFpEliminator e(3, 5);
  REQUIRE(e.add_constraint({1, 2, 3}) == 1);
  REQUIRE(e.add_constraint({2, 4, 6}) == 1);  // dependent
  REQUIRE(e.add_constraint({0, 1, 1}) == 2);
  REQUIRE(e.nullity() == 1);
  REQUIRE_FALSE(e.full());
  REQUIRE(e.add_constraint({0, 0, 7}) == 3);
  REQUIRE(e.full());

  // agreement with smith form mod p on random matrices
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    long n = 2 + trial % 4;
    IntMatrix a(n, n);
    for (auto& x : a.a) x = entry(rng);
    GFpEliminator el(n, 7);
    for (long i = 0; i < n; ++i) {
      std::vector<long> row(n);
      for (long j = 0; j < n; ++j)
        row[j] = mod_reduce(a.at(i, j), 7).get_si();
      el.add_constraint(std::move(row));
    }
    long snf_rank = 0;
    for (const auto& d : snf(a).diagonal())
      if (gcd(d, 7) == 1 && d != 0) ++snf_rank;
    REQUIRE(el.rank() == snf_rank);
  }
}
