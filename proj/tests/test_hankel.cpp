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
#include "rotundus/continuant.hpp"
#include "rotundus/hankel.hpp"

using namespace rotundus;

namespace {

std::vector<BigInt> ones_then_twos(std::size_t len) {
  std::vector<BigInt> a(len, BigInt(2));
  a[0] = 1;
  return a;
}

MomentSequence moments(std::initializer_list<long> v) {
  MomentSequence c;
  for (long x : v) c.emplace_back(x);
  return c;
}

// det of the Hankel matrix by the Leibniz formula, independent of the
// elimination used by the library.
Rational hankel_det_oracle(const MomentSequence& c, std::size_t size, std::size_t offset) {
  SquareMatrix<Rational> m(size, Rational(0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = c[offset + i + j];
  return oracle::det_permutation(m);
}

}  // namespace

TEST_CASE("Catalan numbers from (1,2,2,...)") {
  const auto c = moments_from_sequence(ones_then_twos(7), 13);
  REQUIRE(c.size() == 13);
  for (int k = 0; k < 13; ++k) {
    CAPTURE(k);
    CHECK(c[static_cast<std::size_t>(k)] == Rational(oracle::catalan(k)));
    CHECK(c[static_cast<std::size_t>(k)].get_den() == 1);
  }
  CHECK(c[12] == 208012);
  CHECK(moments_from_sequence(ones_then_twos(6), 7) == moments({1, 1, 2, 5, 14, 42, 132}));
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto a = ones_then_twos(n + 1);
    CHECK(continuant(a) == 1);
  }
  const auto rep = verify_hankel(c, ones_then_twos(7));
  CHECK(rep.all_passed());
  for (std::size_t k = 0; k <= 6; ++k) CHECK(hankel_det_oracle(c, k + 1, 0) == 1);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(hankel_det_oracle(c, k, 1) == 1);
}

TEST_CASE("basic conventions") {
  CHECK(moments_from_sequence({BigInt(7)}, 1) == moments({1}));
  CHECK(verify_hankel(moments({1}), {}).all_passed());
  CHECK(verify_hankel(moments({1}), {}).checks.size() == 1);
  CHECK(required_sequence_length(13) == 7);
  CHECK_THROWS_AS(moments_from_sequence({BigInt(1)}, 3), std::invalid_argument);
  CHECK_THROWS_AS(moments_from_sequence({BigInt(1)}, 0), std::invalid_argument);
}

TEST_CASE("zero-diagonal Jacobi moments") {
  // Aerated Catalan numbers: every det(A_k) is 1.
  const auto c = moments({1, 0, 1, 0, 2, 0, 5, 0, 14});
  const auto rep = verify_hankel(c, std::vector<BigInt>(5, BigInt(0)));
  CHECK(rep.family_passed('A'));
  // B_1 = [C_1] = 0 while K_2(0, 0) = -1.
  CHECK_FALSE(rep.family_passed('B'));
  // Strict alternation already breaks det(A_2).
  CHECK_FALSE(verify_hankel(moments({1, 0, 1, 0, 1}), {}).family_passed('A'));
}

TEST_CASE("all twos") {
  const std::vector<BigInt> a(6, BigInt(2));
  const auto c = moments_from_sequence(a, 11);
  const auto rep = verify_hankel(c, a);
  CHECK(rep.all_passed());
  for (std::size_t k = 0; 2 * k < c.size(); ++k) CHECK(hankel_det_oracle(c, k + 1, 0) == 1);
  for (std::size_t k = 1; 2 * k <= c.size(); ++k) {
    CHECK(hankel_det_oracle(c, k, 1) == Rational(continuant(std::span<const BigInt>(a.data(), k + 1))));
  }
}

TEST_CASE("vanishing cofactor is reported with its index") {
  // K_2(1, 1) = 0 makes B_1 singular, so C_3 cannot be solved for.
  const std::vector<BigInt> a{BigInt(1), BigInt(1), BigInt(3), BigInt(3)};
  try {
    (void)moments_from_sequence(a, 6);
    FAIL("expected ReconstructionError");
  } catch (const ReconstructionError& e) {
    CHECK(e.index() == 3);
  }
}

TEST_CASE("properties: round trip on random input") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long> d(1, 5);
  int ok = 0, rejected = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t len = 2 + static_cast<std::size_t>(t % 5);
    std::vector<BigInt> a;
    for (std::size_t i = 0; i < len; ++i) a.emplace_back(d(rng));
    const std::size_t count = 2 * len - 1;
    try {
      const auto c = moments_from_sequence(a, count);
      const auto rep = verify_hankel(c, a);
      CHECK(rep.all_passed());
      for (std::size_t k = 0; 2 * k < c.size() && k <= 3; ++k)
        CHECK(hankel_det_oracle(c, k + 1, 0) == 1);
      ++ok;
    } catch (const ReconstructionError& e) {
      // Cofactor det(B_{k-1}) = K_k(a_0..a_{k-1}) must really vanish.
      const std::size_t k = (e.index() + 1) / 2;
      REQUIRE(e.index() % 2 == 1);
      CHECK(continuant(std::span<const BigInt>(a.data(), k)) == 0);
      ++rejected;
    }
  }
  MESSAGE("round trips: " << ok << ", rejected: " << rejected);
  CHECK(ok > 200);
}
