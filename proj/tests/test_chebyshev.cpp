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

#include <cmath>

#include "rotundus/chebyshev.hpp"

using namespace rotundus;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {  // constant term first
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("classical table") {
  const auto T = ChebyshevKind::first;
  const auto U = ChebyshevKind::second;
  CHECK(cheb(T, 0) == poly({1}));
  CHECK(cheb(T, 1) == poly({0, 1}));
  CHECK(cheb(T, 2) == poly({-1, 0, 2}));
  CHECK(cheb(T, 3) == poly({0, -3, 0, 4}));
  CHECK(cheb(T, 4) == poly({1, 0, -8, 0, 8}));
  CHECK(cheb(U, 0) == poly({1}));
  CHECK(cheb(U, 1) == poly({0, 2}));
  CHECK(cheb(U, 2) == poly({-1, 0, 4}));
  CHECK(cheb(U, 3) == poly({0, -4, 0, 8}));
  CHECK(cheb(U, 4) == poly({1, 0, -12, 0, 16}));
  CHECK(cheb(T, 4).to_string() == "8*x^4 - 8*x^2 + 1");
  CHECK(cheb(U, 3).to_string() == "8*x^3 - 4*x");
  CHECK_THROWS_AS(cheb(T, -1), std::invalid_argument);
  CHECK(parse_chebyshev_kind("second") == U);
  CHECK_THROWS_AS(parse_chebyshev_kind("third"), std::invalid_argument);
}

TEST_CASE("normalized forms") {
  const auto T = ChebyshevKind::first;
  const auto U = ChebyshevKind::second;
  CHECK(cheb_normalized(T, 0) == poly({2}));
  CHECK(cheb_normalized(U, 0) == poly({1}));
  CHECK(cheb_normalized(T, 1) == poly({0, 1}));
  CHECK(cheb_normalized(T, 2) == poly({-2, 0, 1}));
  CHECK(cheb_normalized(T, 3) == poly({0, -3, 0, 1}));
  CHECK(cheb_normalized(U, 2) == poly({-1, 0, 1}));
  CHECK(cheb_normalized(U, 4) == poly({1, 0, -3, 0, 1}));
}

TEST_CASE("identities for n <= 10") {
  const auto checks = verify_chebyshev_identities(10);
  CHECK(checks.size() == 5 * 10 - 1);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.n);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("properties: values at 1 and substitution") {
  for (int n = 0; n <= 20; ++n) {
    CHECK(cheb(ChebyshevKind::first, n).eval(BigInt(1)) == 1);
    CHECK(cheb(ChebyshevKind::second, n).eval(BigInt(1)) == n + 1);
  }
  for (int n = 0; n <= 10; ++n) {
    const RatPoly t = to_rational(cheb(ChebyshevKind::first, n)).scaled_argument(Rational(1, 2));
    const RatPoly u = to_rational(cheb(ChebyshevKind::second, n)).scaled_argument(Rational(1, 2));
    CHECK(t * Rational(2) == to_rational(cheb_normalized(ChebyshevKind::first, n)));
    CHECK(u == to_rational(cheb_normalized(ChebyshevKind::second, n)));
  }
  // cos(n t) = T_n(cos t), sampled through exact coefficients.
  for (int n = 0; n <= 8; ++n) {
    const IntPoly p = cheb(ChebyshevKind::first, n);
    for (double t : {0.3, 1.1, 2.5}) {
      double x = std::cos(t), acc = 0, pw = 1;
      for (std::size_t k = 0; k < p.coeffs().size(); ++k, pw *= x)
        acc += p.coeffs()[k].get_d() * pw;
      CHECK(acc == doctest::Approx(std::cos(n * t)).epsilon(1e-9));
    }
  }
}
