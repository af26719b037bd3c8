#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "reesag/linalg.hpp"

using namespace reesag;

namespace {

using IRow = SparseRow<Integer>;
using QRow = SparseRow<Rational>;

std::vector<IRow> random_rows(std::mt19937_64& rng, int nrows, int ncols) {
  std::uniform_int_distribution<int> val(-5, 5);
  std::uniform_int_distribution<int> fill(0, 2);
  std::vector<IRow> rows;
  for (int r = 0; r < nrows; ++r) {
    IRow row;
    for (int c = 0; c < ncols; ++c) {
      if (fill(rng) == 0) {
        int v = val(rng);
        if (v != 0) row.emplace_back(c, Integer(v));
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

QRow to_rational(const IRow& row) {
  QRow out;
  for (const auto& [c, v] : row) out.emplace_back(c, Rational(v));
  return out;
}

Rational dot(const IRow& row, const std::vector<Integer>& v) {
  Rational acc(0);
  for (const auto& [c, val] : row)
    acc += Rational(val) * Rational(v[static_cast<std::size_t>(c)]);
  return acc;
}

}  // namespace

TEST_CASE("sparse primitives") {
  IRow a = {{0, Integer(2)}, {2, Integer(-1)}};
  IRow b = {{1, Integer(3)}, {2, Integer(1)}};
  CHECK(sparse_entry(a, 0) == 2);
  CHECK(sparse_entry(a, 1) == 0);
  auto c = sparse_combine(Integer(1), a, Integer(2), b);
  REQUIRE(c.size() == 3);
  CHECK(sparse_entry(c, 0) == 2);
  CHECK(sparse_entry(c, 1) == 6);
  CHECK(sparse_entry(c, 2) == 1);
  auto cancel = sparse_combine(Integer(1), a, Integer(2), a);
  CHECK(sparse_entry(cancel, 2) == -3);
}

TEST_CASE("fraction-free echelon matches naive rational elimination") {
  std::mt19937_64 rng(20250818);
  for (int trial = 0; trial < 60; ++trial) {
    const int ncols = 8;
    auto rows = random_rows(rng, 10, ncols);
    IntegerEchelon ff;
    FieldEchelon<Rational> naive;
    for (const auto& r : rows) {
      ff.insert(r);
      naive.insert(to_rational(r));
    }
    ff.finalize();
    naive.finalize();
    REQUIRE(ff.rank() == naive.rank());
    auto lhs = ff.monic_rows(ncols);
    auto rhs = naive.monic_rows(ncols);
    REQUIRE(lhs.size() == rhs.size());
    for (const auto& [col, dense] : lhs) {
      REQUIRE(rhs.count(col) == 1);
      CHECK(dense == rhs.at(col));
    }
  }
}

TEST_CASE("row insertion order and scaling do not change the reduced form") {
  std::mt19937_64 rng(11223344);
  for (int trial = 0; trial < 30; ++trial) {
    const int ncols = 7;
    auto rows = random_rows(rng, 8, ncols);
    IntegerEchelon base;
    for (const auto& r : rows) base.insert(r);
    base.finalize();

    auto shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    IntegerEchelon scrambled;
    std::uniform_int_distribution<int> scale(1, 4);
    for (auto r : shuffled) {
      Integer s(scale(rng));
      if (trial % 2) s = -s;
      for (auto& [c, v] : r) v *= s;
      scrambled.insert(std::move(r));
    }
    scrambled.finalize();

    CHECK(base.monic_rows(ncols) == scrambled.monic_rows(ncols));
  }
}

TEST_CASE("kernel vectors annihilate the row space") {
  std::mt19937_64 rng(5556667);
  for (int trial = 0; trial < 40; ++trial) {
    const int ncols = 6;
    auto rows = random_rows(rng, 5, ncols);
    IntegerEchelon ech;
    for (const auto& r : rows) ech.insert(r);
    ech.finalize();
    auto kernel = ech.kernel_basis(ncols);
    CHECK(kernel.size() == static_cast<std::size_t>(ncols) - ech.rank());
    for (const auto& v : kernel) {
      for (const auto& r : rows) CHECK(dot(r, v) == 0);
      Integer content(0);
      bool nonzero = false;
      for (const auto& x : v) {
        content = boost::multiprecision::gcd(content, x);
        nonzero = nonzero || x != 0;
      }
      CHECK(nonzero);
      CHECK(content == 1);  // primitive
    }
  }
}

TEST_CASE("known small systems") {
  IntegerEchelon ech;
  ech.insert({{0, Integer(1)}, {1, Integer(2)}});
  ech.insert({{0, Integer(2)}, {1, Integer(4)}});
  ech.finalize();
  CHECK(ech.rank() == 1);
  auto k = ech.kernel_basis(2);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == 2);
  CHECK(k[0][1] == -1);

  IntegerEchelon full;
  full.insert({{0, Integer(1)}, {1, Integer(1)}});
  full.insert({{1, Integer(1)}});
  full.finalize();
  CHECK(full.rank() == 2);
  CHECK(full.kernel_basis(2).empty());
  // full reduction cleared column 1 from the first row
  CHECK(sparse_entry(full.rows().at(0), 1) == 0);
}

TEST_CASE("prime field echelon") {
  FieldEchelon<GFp> ech;
  auto g = [](int v) { return GFp(v, 5); };
  ech.insert({{0, g(2)}, {1, g(1)}});
  ech.insert({{0, g(4)}, {1, g(2)}});  // dependent mod 5
  ech.finalize();
  CHECK(ech.rank() == 1);
  auto k = ech.kernel_basis(2, GFp(1, 5));
  REQUIRE(k.size() == 1);
  // 2*a + 1*b = 0 with b = 1 gives a = -1/2 = 2 mod 5
  CHECK(k[0][1] == GFp(1, 5));
  CHECK(k[0][0] == GFp(2, 5));

  FieldEchelon<GFp> drop;
  drop.insert({{0, GFp(5, 5)}});  // the zero row vanishes on construction
  drop.finalize();
  CHECK(drop.rank() == 0);
}

TEST_CASE("integer rows stay primitive with positive pivots") {
  std::mt19937_64 rng(909090);
  auto rows = random_rows(rng, 9, 7);
  IntegerEchelon ech;
  for (const auto& r : rows) ech.insert(r);
  ech.finalize();
  for (const auto& [col, row] : ech.rows()) {
    REQUIRE(!row.empty());
    CHECK(row.front().first == col);
    CHECK(row.front().second > 0);
    Integer content(0);
    for (const auto& [c, v] : row)
      content = boost::multiprecision::gcd(content, v);
    CHECK(content == 1);
  }
}
