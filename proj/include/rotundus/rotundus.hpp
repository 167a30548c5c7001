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

#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "rotundus/bigint.hpp"
#include "rotundus/continuant.hpp"
#include "rotundus/matrix.hpp"
#include "rotundus/multipoly.hpp"

namespace rotundus {

// The rotundus R_n(a_1..a_n) = K_n(a_1..a_n) - K_{n-2}(a_2..a_{n-1}), the
// cyclically invariant companion of the continuant.
//
// Routes:
//   definition       the formula above (R_1 = a_1 since K_{-1} = 0)
//   cyclic_euler     matchings of the cycle a_1 - ... - a_n - a_1
//   trace            trace of the monodromy matrix
//   pfaffian_square  square root of det(Omega_n), signed to match the
//                    definition route; Omega_n = [[E, C], [-C, E]]

enum class RotundusMethod { definition, cyclic_euler, trace, pfaffian_square };

RotundusMethod parse_rotundus_method(std::string_view name);

enum class MatrixKind { skew, symmetric };

/// Largest symbolic n accepted by the pfaffian_square route.
inline constexpr std::size_t kSymbolicPfaffianMaxN = 6;

template <typename T>
T rotundus_definition(std::span<const T> a, const T& one) {
  if (a.size() == 1) return a[0];
  T inner = a.size() >= 2 ? continuant<T>(a.subspan(1, a.size() - 2), one, ContinuantMethod::recurrence)
                          : T(one - one);
  return T(continuant<T>(a, one, ContinuantMethod::recurrence) - inner);
}

template <typename T>
T rotundus_cyclic_euler(std::span<const T> a, const T& one) {
  const auto edges = cycle_edges(a.size());
  const auto matchings = enumerate_matchings(a.size(), edges);
  return matching_expansion<T>(a, matchings, one);
}

template <typename T>
T rotundus_trace(std::span<const T> a, const T& one) {
  return monodromy<T>(a, one).trace();
}

/// Omega_n (skew) or its symmetric counterpart [[E', C], [C, E']].
template <typename T>
SquareMatrix<T> rotundus_matrix(std::span<const T> a, const T& one, MatrixKind kind) {
  if (a.empty()) throw std::invalid_argument("rotundus_matrix: need n >= 1");
  const auto c = tridiagonal(a, one);
  return kind == MatrixKind::skew ? block_skew(one, one, c) : block_symmetric(one, one, c);
}

BigInt rotundus(std::span<const BigInt> a, RotundusMethod method = RotundusMethod::definition);
MultiPoly rotundus_symbolic(std::size_t n, RotundusMethod method = RotundusMethod::definition);

SquareMatrix<BigInt> rotundus_matrix(std::span<const BigInt> a, MatrixKind kind);
SquareMatrix<MultiPoly> rotundus_matrix_symbolic(std::size_t n, MatrixKind kind);

/// Outcome of checking det(Omega_n) = R_n^2 and pf(Omega_n)^2 = R_n^2.
template <typename T>
struct PfaffianIdentityReport {
  T determinant;
  T pfaffian;
  T rotundus;
  bool det_matches = false;
  bool pf_squared_matches = false;
  /// pf / R_n when R_n is nonzero and pf = +-R_n.
  std::optional<int> sign;

  bool holds() const { return det_matches && pf_squared_matches; }
};

PfaffianIdentityReport<BigInt> verify_pfaffian_identity(std::span<const BigInt> a);
PfaffianIdentityReport<MultiPoly> verify_pfaffian_identity_symbolic(std::size_t n);

/// Checks an already built (possibly altered) matrix against R_n.
template <typename T>
PfaffianIdentityReport<T> check_pfaffian_identity(const SquareMatrix<T>& omega, const T& r) {
  PfaffianIdentityReport<T> rep{det(omega), pfaffian(omega), r, false, false, std::nullopt};
  const T r2 = r * r;
  rep.det_matches = rep.determinant == r2;
  rep.pf_squared_matches = T(rep.pfaffian * rep.pfaffian) == r2;
  if (!is_zero(r)) {
    if (rep.pfaffian == r) rep.sign = 1;
    else if (rep.pfaffian == T(-r)) rep.sign = -1;
  }
  return rep;
}

}  // namespace rotundus
