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

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "rotundus/bigint.hpp"
#include "rotundus/matrix.hpp"
#include "rotundus/multipoly.hpp"

namespace rotundus {

// Continuants K_n(a_1..a_n), with K_0 = 1 and K_{-1} = 0.
//
// Three independent routes:
//   determinant  det of the tridiagonal matrix, diagonal a_i, off-diagonals 1
//   euler        sum over matchings of the path a_1 - a_2 - ... - a_n; each
//                matched pair contributes -1, each unmatched vertex a_i
//   recurrence   K_j = a_j K_{j-1} - K_{j-2}

enum class ContinuantMethod { determinant, euler, recurrence };

ContinuantMethod parse_continuant_method(std::string_view name);

/// A graph matching: the covered vertices (bit v for vertex v) and the number
/// of edges used.
struct Matching {
  std::uint64_t covered = 0;
  int edges = 0;
};

/// Every matching of the multigraph on `vertices` vertices with the given
/// edge list, the empty matching included. Parallel edges yield distinct
/// matchings.
std::vector<Matching> enumerate_matchings(std::size_t vertices,
                                          std::span<const std::pair<int, int>> edges);

/// Edges (i, i+1) of the path on n vertices.
std::vector<std::pair<int, int>> path_edges(std::size_t n);

/// Edges (i, i+1 mod n) of the cycle on n vertices; n = 2 gives two parallel
/// edges, n = 1 none.
std::vector<std::pair<int, int>> cycle_edges(std::size_t n);

/// Sum over matchings of (-1)^{edges} times the product of the values at
/// uncovered vertices.
template <typename T>
T matching_expansion(std::span<const T> a, std::span<const Matching> matchings, const T& one) {
  T total(one - one);
  for (const Matching& m : matchings) {
    T product = one;
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (!(m.covered & (std::uint64_t{1} << v))) product = T(product * a[v]);
    }
    if (m.edges % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  return total;
}

template <typename T>
T continuant(std::span<const T> a, const T& one, ContinuantMethod method) {
  switch (method) {
    case ContinuantMethod::determinant:
      return det(tridiagonal(a, one));
    case ContinuantMethod::euler: {
      const auto edges = path_edges(a.size());
      const auto matchings = enumerate_matchings(a.size(), edges);
      return matching_expansion<T>(a, matchings, one);
    }
    case ContinuantMethod::recurrence:
    default: {
      T prev(one - one);  // K_{-1}
      T cur = one;        // K_0
      for (const T& v : a) {
        T next = T(v * cur) - prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
  }
}

BigInt continuant(std::span<const BigInt> a,
                  ContinuantMethod method = ContinuantMethod::recurrence);

/// K_n in the variables a_1..a_n.
MultiPoly continuant_symbolic(std::size_t n, ContinuantMethod method = ContinuantMethod::euler);

/// 2x2 matrix over a ring, laid out [[a, b], [c, d]].
template <typename T>
struct Mat2 {
  T a, b, c, d;

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {T(l.a * r.a + l.b * r.c), T(l.a * r.b + l.b * r.d),
            T(l.c * r.a + l.d * r.c), T(l.c * r.b + l.d * r.d)};
  }
  T trace() const { return T(a + d); }
  T determinant() const { return T(a * d - b * c); }
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

  static Mat2 identity(const T& one) { return {one, T(one - one), T(one - one), one}; }
};

/// Ordered product [[a_1,1],[-1,0]] ... [[a_n,1],[-1,0]]; the identity for n = 0.
template <typename T>
Mat2<T> monodromy(std::span<const T> a, const T& one) {
  const T zero(one - one);
  Mat2<T> m = Mat2<T>::identity(one);
  for (const T& v : a) m = m * Mat2<T>{v, one, T(-one), zero};
  return m;
}

Mat2<BigInt> monodromy(std::span<const BigInt> a);
Mat2<MultiPoly> monodromy_symbolic(std::size_t n);

/// Iterates V_{i+1} = a_i V_i - V_{i-1} from (V_0, V_1) with the periodic
/// extension of `seq`; returns V_2, ..., V_{steps+1}.
std::vector<BigInt> difference_orbit(const CyclicSequence& seq, const BigInt& v0,
                                     const BigInt& v1, std::size_t steps);

}  // namespace rotundus
