#include <doctest.h>

#include <random>

#include "leibniz/linalg.hpp"

using namespace leibniz;

namespace {

Rational small_rat(std::mt19937& rng) {
  const int num = int(rng() % 11) - 5;
  const int den = 1 + int(rng() % 3);
  return rat(num, den);
}

Matrix random_matrix(std::mt19937& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng() % 3 != 0) m.at(i, j) = small_rat(rng);
  return m;
}

// Product of elementary shears and a +-1 diagonal: always invertible.
Matrix random_invertible(std::mt19937& rng, int n) {
  Matrix g = Matrix::identity(n);
  for (int s = 0; s < 2 * n; ++s) {
    const int i = int(rng() % n);
    const int j = int(rng() % n);
    if (i == j) continue;
    Matrix e = Matrix::identity(n);
    e.at(i, j) = rat(int(rng() % 5) - 2);
    g = g * e;
  }
  for (int i = 0; i < n; ++i)
    if (rng() % 2) {
      for (int k = 0; k < n; ++k) g.at(k, i) = -g.at(k, i);
    }
  return g;
}

}  // namespace

TEST_CASE("rational parse and format") {
  CHECK(rat_str(rat_parse("3/4")) == "3/4");
  CHECK(rat_str(rat_parse("-3/4")) == "-3/4");
  CHECK(rat_str(rat_parse("7")) == "7");
  CHECK(rat_str(rat_parse("0")) == "0");
  CHECK(rat_str(rat_parse("6/4")) == "3/2");
  CHECK(rat_str(rat_parse("-6/-4")) == "3/2");
  CHECK(rat_str(rat_parse("0/5")) == "0");
  CHECK(rat_parse("123456789012345678901234567890/3") ==
        rat_parse("41152263004115226300411522630"));
  CHECK_THROWS_AS(rat_parse(""), parse_error);
  CHECK_THROWS_AS(rat_parse("1/0"), parse_error);
  CHECK_THROWS_AS(rat_parse("a"), parse_error);
  CHECK_THROWS_AS(rat_parse("1/2/3"), parse_error);
  CHECK_THROWS_AS(rat_parse("1.5"), parse_error);
  CHECK_THROWS_AS(rat_parse("1 /2"), parse_error);
  CHECK_THROWS_AS(rat_parse("-"), parse_error);
}

TEST_CASE("matrix basics") {
  Matrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  CHECK(a * Matrix::identity(2) == a);
  CHECK(Matrix::identity(2) * a == a);
  Matrix sq = a.power(2);
  CHECK(sq.at(0, 0) == 7);
  CHECK(sq.at(0, 1) == 10);
  CHECK(sq.at(1, 0) == 15);
  CHECK(sq.at(1, 1) == 22);
  CHECK(a.power(0) == Matrix::identity(2));
  Vec v{rat(1), rat(-1)};
  Vec av = a.apply(v);
  CHECK(av[0] == -1);
  CHECK(av[1] == -1);
}

TEST_CASE("rref is canonical") {
  RowReducer red(3);
  red.add_row(Vec{rat(2), rat(4), rat(-2)});
  red.add_row(Vec{rat(1), rat(2), rat(0)});
  CHECK(red.rank() == 2);
  const auto basis = red.rref_basis();
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == Vec{rat(1), rat(2), rat(0)});
  CHECK(basis[1] == Vec{rat(0), rat(0), rat(1)});
}

TEST_CASE("nullspace is canonical and exact") {
  Matrix m(1, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = -1;
  m.at(0, 2) = -1;
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  CHECK(ns[0] == Vec{rat(1), rat(0), rat(1)});
  CHECK(ns[1] == Vec{rat(0), rat(1), rat(-1)});
  for (const auto& v : ns) CHECK(vec_is_zero(m.apply(v)));
}

TEST_CASE("rank plus nullity equals column count") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 1 + int(rng() % 6);
    const int cols = 1 + int(rng() % 6);
    const Matrix m = random_matrix(rng, rows, cols);
    const auto ns = nullspace(m);
    CHECK(rank(m) + int(ns.size()) == cols);
    for (const auto& v : ns) CHECK(vec_is_zero(m.apply(v)));
  }
}

TEST_CASE("reducer results do not depend on feed order or batching") {
  std::mt19937 rng(11);
  std::vector<Vec> rows;
  for (int i = 0; i < 40; ++i) {
    Vec v(12);
    for (int j = 0; j < 12; ++j)
      if (rng() % 4 == 0) v[j] = small_rat(rng);
    rows.push_back(v);
  }
  RowReducer one_by_one(12);
  for (const auto& v : rows) one_by_one.add_row(v);
  RowReducer reversed(12);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) reversed.add_row(*it);
  RowReducer batched(12);
  std::vector<std::vector<std::pair<int, Rational>>> batch;
  for (const auto& v : rows) {
    std::vector<std::pair<int, Rational>> terms;
    for (int j = 0; j < 12; ++j)
      if (sgn(v[j]) != 0) terms.emplace_back(j, v[j]);
    batch.push_back(terms);
  }
  batched.add_rows(std::move(batch));
  CHECK(one_by_one.rref_basis() == reversed.rref_basis());
  CHECK(one_by_one.rref_basis() == batched.rref_basis());
  CHECK(one_by_one.nullspace() == batched.nullspace());
}

TEST_CASE("membership in the accumulated row space") {
  RowReducer red(4);
  red.add_row(Vec{rat(1), rat(0), rat(1), rat(0)});
  red.add_row(Vec{rat(0), rat(1), rat(0), rat(1)});
  CHECK(red.reduces_to_zero(Vec{rat(2), rat(3), rat(2), rat(3)}));
  CHECK(!red.reduces_to_zero(Vec{rat(1), rat(0), rat(0), rat(0)}));
  CHECK(red.reduces_to_zero(Vec{rat(0), rat(0), rat(0), rat(0)}));
}

TEST_CASE("huge coefficients promote to exact big integers") {
  RowReducer red(2);
  red.add_row(Vec{rat(1), rat_parse("4611686018427387904")});  // 2^62
  red.add_row(Vec{rat(1), rat(1)});
  CHECK(red.rank() == 2);
  CHECK(red.rref_basis() ==
        std::vector<Vec>{Vec{rat(1), rat(0)}, Vec{rat(0), rat(1)}});

  Matrix h(5, 5);  // Hilbert block, dense rational fill
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) h.at(i, j) = rat(1, i + j + 1);
  CHECK(rank(h) == 5);
  const auto inv = inverse(h);
  REQUIRE(inv.has_value());
  CHECK(*inv * h == Matrix::identity(5));
}

TEST_CASE("inverse and solve") {
  Matrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(inv->at(0, 0) == -2);
  CHECK(inv->at(0, 1) == 1);
  CHECK(inv->at(1, 0) == rat(3, 2));
  CHECK(inv->at(1, 1) == rat(-1, 2));

  Matrix sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 4;
  CHECK(!inverse(sing).has_value());

  const auto x = solve(a, Vec{rat(5), rat(11)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 2);
  CHECK(!solve(sing, Vec{rat(1), rat(0)}).has_value());
  const auto y = solve(sing, Vec{rat(1), rat(2)});
  REQUIRE(y.has_value());
  CHECK(vec_is_zero(vec_sub(sing.apply(*y), Vec{rat(1), rat(2)})));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + int(rng() % 4);
    const Matrix g = random_invertible(rng, n);
    const auto gi = inverse(g);
    REQUIRE(gi.has_value());
    CHECK(*gi * g == Matrix::identity(n));
    CHECK(g * *gi == Matrix::identity(n));
  }
}

TEST_CASE("nilpotency test") {
  Matrix shift(3, 3);
  shift.at(1, 0) = 1;
  shift.at(2, 1) = 1;
  CHECK(is_nilpotent_matrix(shift));
  CHECK(!is_nilpotent_matrix(Matrix::identity(3)));
  CHECK(is_nilpotent_matrix(Matrix(4, 4)));
  CHECK(is_nilpotent_matrix(Matrix(0, 0)));
  Matrix rect(2, 3);
  CHECK_THROWS_AS(is_nilpotent_matrix(rect), std::invalid_argument);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + int(rng() % 5);
    Matrix u(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) u.at(i, j) = small_rat(rng);
    CHECK(is_nilpotent_matrix(u));
  }
}

TEST_CASE("jordan blocks of nilpotent matrices") {
  CHECK(jordan_blocks_nilpotent(Matrix(4, 4)) == std::vector<int>{1, 1, 1, 1});

  Matrix j4(4, 4);
  j4.at(1, 0) = 1;
  j4.at(2, 1) = 1;
  j4.at(3, 2) = 1;
  CHECK(jordan_blocks_nilpotent(j4) == std::vector<int>{4});

  Matrix j31(4, 4);
  j31.at(1, 0) = 1;
  j31.at(2, 1) = 1;
  CHECK(jordan_blocks_nilpotent(j31) == std::vector<int>{3, 1});

  Matrix j22(4, 4);
  j22.at(1, 0) = 1;
  j22.at(3, 2) = 1;
  CHECK(jordan_blocks_nilpotent(j22) == std::vector<int>{2, 2});

  CHECK_THROWS_AS(jordan_blocks_nilpotent(Matrix::identity(2)), std::invalid_argument);

  // block sizes are a similarity invariant
  std::mt19937 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix g = random_invertible(rng, 4);
    const Matrix conj = *inverse(g) * j31 * g;
    CHECK(jordan_blocks_nilpotent(conj) == std::vector<int>{3, 1});
  }
}

TEST_CASE("characteristic polynomial") {
  Matrix d(2, 2);
  d.at(0, 0) = 1;
  d.at(1, 1) = 2;
  CHECK(char_poly(d) == std::vector<Rational>{rat(2), rat(-3), rat(1)});

  Matrix comp(2, 2);  // companion of x^2 - x - 1
  comp.at(0, 1) = 1;
  comp.at(1, 0) = 1;
  comp.at(1, 1) = 1;
  CHECK(char_poly(comp) == std::vector<Rational>{rat(-1), rat(-1), rat(1)});

  Matrix j3(3, 3);
  j3.at(1, 0) = 1;
  j3.at(2, 1) = 1;
  CHECK(char_poly(j3) == std::vector<Rational>{rat(0), rat(0), rat(0), rat(1)});
}

TEST_CASE("rational roots of monic polynomials") {
  // x^3 + 5/2 x^2 - 3/2 x = x (x - 1/2) (x + 3)
  const auto rep = rational_roots({rat(0), rat(-3, 2), rat(5, 2), rat(1)});
  CHECK(rep.splits);
  REQUIRE(rep.roots.size() == 3);
  CHECK(rep.roots[0] == std::make_pair(rat(-3), 1));
  CHECK(rep.roots[1] == std::make_pair(rat(0), 1));
  CHECK(rep.roots[2] == std::make_pair(rat(1, 2), 1));

  const auto irr = rational_roots({rat(1), rat(0), rat(1)});  // x^2 + 1
  CHECK(!irr.splits);
  CHECK(irr.roots.empty());

  const auto surd = rational_roots({rat(-2), rat(0), rat(1)});  // x^2 - 2
  CHECK(!surd.splits);
  CHECK(surd.roots.empty());

  const auto dbl = rational_roots({rat(1), rat(-2), rat(1)});  // (x - 1)^2
  CHECK(dbl.splits);
  REQUIRE(dbl.roots.size() == 1);
  CHECK(dbl.roots[0] == std::make_pair(rat(1), 2));

  const auto mixed = rational_roots({rat(0), rat(-2), rat(0), rat(1)});  // x (x^2 - 2)
  CHECK(!mixed.splits);
  REQUIRE(mixed.roots.size() == 1);
  CHECK(mixed.roots[0] == std::make_pair(rat(0), 1));
}
