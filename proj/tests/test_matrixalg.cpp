/*
 * Copyright 2026 The Rotundus Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rotundus/json_io.hpp"
#include "rotundus/matrix.hpp"

using namespace rotundus;

namespace {

SquareMatrix<BigInt> int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  SquareMatrix<BigInt> m(rows.size(), BigInt(0));
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

SquareMatrix<BigInt> random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  SquareMatrix<BigInt> m(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

SquareMatrix<BigInt> random_skew(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  SquareMatrix<BigInt> m(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = d(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

// Generic skew matrix whose upper entries are independent variables.
SquareMatrix<MultiPoly> symbolic_skew(std::size_t n) {
  const std::size_t arity = n * (n - 1) / 2;
  SquareMatrix<MultiPoly> m(n, MultiPoly::zero(arity));
  std::size_t v = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = MultiPoly::variable(arity, v++);
      m(j, i) = -m(i, j);
    }
  return m;
}

SquareMatrix<MultiPoly> symbolic_tridiagonal(std::size_t n) {
  const auto vars = variables(n);
  return tridiagonal<MultiPoly>(vars, MultiPoly::constant(n, BigInt(1)));
}

}  // namespace

TEST_CASE("det examples") {
  CHECK(det(int_matrix({{-7}})) == -7);
  const MultiPoly a = MultiPoly::variable(1, 1);
  SquareMatrix<MultiPoly> one_by_one(1, MultiPoly::zero(1));
  one_by_one(0, 0) = a;
  CHECK(det(one_by_one) == a);
  CHECK(det(symbolic_tridiagonal(3)) == MultiPoly::parse("a1a2a3 - a1 - a3", 3));
  CHECK(det(symbolic_tridiagonal(4)) == MultiPoly::parse("a1a2a3a4 - a1a2 - a1a4 - a3a4 + 1", 4));
  CHECK(det(SquareMatrix<BigInt>(0, BigInt(0))) == 1);
  CHECK(det(SquareMatrix<MultiPoly>(0, MultiPoly::zero(3))) == MultiPoly::constant(3, BigInt(1)));
  CHECK(det(int_matrix({{0, 1}, {1, 0}})) == -1);
  CHECK(det(int_matrix({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == -1);
}

TEST_CASE("pfaffian examples") {
  CHECK(pfaffian(int_matrix({{0, 5}, {-5, 0}})) == 5);
  CHECK(pfaffian(int_matrix({{0, 1}, {-1, 0}})) == 1);
  CHECK(pfaffian(SquareMatrix<BigInt>(0, BigInt(0))) == 1);
  CHECK_THROWS_AS(pfaffian(int_matrix({{0}})), std::invalid_argument);
  CHECK_THROWS_AS(pfaffian(int_matrix({{0, 1}, {1, 0}})), std::invalid_argument);

  // Omega_3 written out entry by entry.
  const std::size_t ar = 3;
  const MultiPoly o = MultiPoly::zero(ar), I = MultiPoly::constant(ar, BigInt(1));
  const MultiPoly a1 = MultiPoly::variable(ar, 1), a2 = MultiPoly::variable(ar, 2),
                  a3 = MultiPoly::variable(ar, 3);
  const std::vector<std::vector<MultiPoly>> rows = {
      {o, o, I, a1, I, o},       {o, o, o, I, a2, I},       {-I, o, o, o, I, a3},
      {-a1, -I, o, o, o, I},     {-I, -a2, -I, o, o, o},    {o, -I, -a3, -I, o, o}};
  SquareMatrix<MultiPoly> omega3(6, o);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) omega3(i, j) = rows[i][j];
  const MultiPoly r3 = MultiPoly::parse("a1a2a3 - a1 - a2 - a3", 3);
  const MultiPoly pf = pfaffian(omega3);
  CHECK((pf == r3 || pf == -r3));
  CHECK(pf == oracle::pfaffian_matchings(omega3));
  CHECK(pf * pf == det(omega3));

  // n = 2 rotundus matrix against the closed 4x4 formula.
  const MultiPoly b1 = MultiPoly::variable(2, 1), b2 = MultiPoly::variable(2, 2);
  const MultiPoly one2 = MultiPoly::constant(2, BigInt(1));
  SquareMatrix<MultiPoly> c(2, MultiPoly::zero(2));
  c(0, 0) = b1;
  c(1, 1) = b2;
  c(0, 1) = c(1, 0) = one2;
  const auto omega2 = block_skew(one2, one2, c);
  const auto& B = omega2;
  const MultiPoly closed = B(0, 1) * B(2, 3) - B(0, 2) * B(1, 3) + B(0, 3) * B(1, 2);
  const MultiPoly r2 = MultiPoly::parse("a1a2 - 2", 2);
  CHECK(pfaffian(omega2) == closed);
  CHECK(closed == -r2);
}

TEST_CASE("mid") {
  const auto m = mid(symbolic_tridiagonal(3));
  REQUIRE(m.dim() == 1);
  CHECK(m(0, 0) == MultiPoly::variable(3, 2));
  const auto e = mid(int_matrix({{1, 2}, {3, 4}}));
  CHECK(e.dim() == 0);
  CHECK(det(e) == 1);
  CHECK_THROWS_AS(mid(int_matrix({{1}})), std::invalid_argument);
  const auto c3 = symbolic_tridiagonal(3);
  CHECK(det(c3) - det(mid(c3)) == MultiPoly::parse("a1a2a3 - a1 - a2 - a3", 3));
}

TEST_CASE("block_skew") {
  std::mt19937_64 rng(7);
  SUBCASE("shape matches [[E, C], [-C, E]]") {
    const auto c = symbolic_tridiagonal(3);
    const MultiPoly one = MultiPoly::constant(3, BigInt(1));
    const auto b = block_skew(one, one, c);
    CHECK(b.is_skew_symmetric());
    CHECK(b(0, 2) == one);
    CHECK(b(2, 0) == -one);
    CHECK(b(3, 5) == one);
    CHECK(b(0, 3) == MultiPoly::variable(3, 1));
    CHECK(b(3, 0) == -MultiPoly::variable(3, 1));
  }
  SUBCASE("x = y = 0 gives det(A)^2") {
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto a = random_matrix(rng, n, -9, 9);
      const BigInt d = det(a);
      CHECK(det(block_skew(BigInt(0), BigInt(0), a)) == d * d);
    }
  }
  SUBCASE("dimension 8 against the Leibniz formula") {
    std::uniform_int_distribution<long> xy(-4, 4);
    for (int t = 0; t < 3; ++t) {
      const auto a = random_matrix(rng, 4, -9, 9);
      const BigInt x(xy(rng)), y(xy(rng));
      const BigInt expected = det(a) - x * y * det(mid(a));
      CHECK(oracle::det_permutation(block_skew(x, y, a)) == expected * expected);
    }
  }
  SUBCASE("n = 1 corner block vanishes") {
    const auto b = block_skew(BigInt(3), BigInt(3), int_matrix({{5}}));
    CHECK(b == int_matrix({{0, 5}, {-5, 0}}));
  }
}

TEST_CASE("block identity holds as a polynomial identity") {
  // Fully symbolic: x, y and all entries of A are variables.
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::size_t arity = 2 + n * n;
    const MultiPoly x = MultiPoly::variable(arity, 1), y = MultiPoly::variable(arity, 2);
    SquareMatrix<MultiPoly> a(n, MultiPoly::zero(arity));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = MultiPoly::variable(arity, 3 + i * n + j);
    const MultiPoly rhs = det(a) - x * y * det(mid(a));
    CHECK(det(block_skew(x, y, a)) == rhs * rhs);
  }
  // Symbolic x, y with random integer A up to 6x6.
  std::mt19937_64 rng(11);
  const MultiPoly x = MultiPoly::variable(2, 1), y = MultiPoly::variable(2, 2);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto ai = random_matrix(rng, n, -9, 9);
    SquareMatrix<MultiPoly> a(n, MultiPoly::zero(2));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = MultiPoly::constant(2, ai(i, j));
    const MultiPoly rhs = det(a) - x * y * det(mid(a));
    CHECK(det(block_skew(x, y, a)) == rhs * rhs);
  }
}

TEST_CASE("properties: Bareiss against Leibniz, transpose, rational elimination") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 6);
    // Narrow ranges force zero pivots and row swaps.
    const long range = t % 3 == 0 ? 1 : 9;
    const auto m = random_matrix(rng, n, -range, range);
    const BigInt d = det(m);
    CHECK(d == oracle::det_permutation(m));
    CHECK(det(m.transposed()) == d);
    SquareMatrix<Rational> q(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(i, j) = Rational(m(i, j));
    CHECK(det(q) == Rational(d));
  }
}

TEST_CASE("properties: pf^2 = det on skew matrices") {
  std::mt19937_64 rng(99);
  for (std::size_t n = 2; n <= 12; n += 2) {
    for (int t = 0; t < 10; ++t) {
      const auto m = random_skew(rng, n, -9, 9);
      const BigInt p = pfaffian(m);
      CHECK(p * p == det(m));
      if (n <= 8) CHECK(p == oracle::pfaffian_matchings(m));
    }
  }
  for (std::size_t n = 2; n <= 8; n += 2) {
    const auto m = symbolic_skew(n);
    const MultiPoly p = pfaffian(m);
    CHECK(p == oracle::pfaffian_matchings(m));
    CHECK(p * p == det(m));
  }
}

TEST_CASE("matrix JSON") {
  const auto m = int_matrix({{0, -2}, {2, 0}});
  const json j = to_json(m);
  CHECK(j.dump() == R"({"dim":2,"entries":[["0","-2"],["2","0"]]})");
  CHECK(std::get<SquareMatrix<BigInt>>(matrix_from_json(j)) == m);
  const auto s = symbolic_tridiagonal(2);
  CHECK(std::get<SquareMatrix<MultiPoly>>(matrix_from_json(to_json(s))) == s);
  CHECK_THROWS(matrix_from_json(json::parse(R"({"dim":2,"entries":[["1"]]})")));
}
