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

#include "rotundus/continuant.hpp"

#include <stdexcept>
#include <string>

namespace rotundus {

ContinuantMethod parse_continuant_method(std::string_view name) {
  if (name == "det" || name == "determinant") return ContinuantMethod::determinant;
  if (name == "euler") return ContinuantMethod::euler;
  if (name == "rec" || name == "recurrence") return ContinuantMethod::recurrence;
  throw std::invalid_argument("unknown continuant method '" + std::string(name) + "'");
}

std::vector<Matching> enumerate_matchings(std::size_t vertices,
                                          std::span<const std::pair<int, int>> edges) {
  if (vertices > 64) throw std::invalid_argument("enumerate_matchings: more than 64 vertices");
  std::vector<Matching> out;
  Matching current;
  auto rec = [&](auto&& self, std::size_t next_edge) -> void {
    if (next_edge == edges.size()) {
      out.push_back(current);
      return;
    }
    self(self, next_edge + 1);
    const auto [u, v] = edges[next_edge];
    const std::uint64_t mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if ((current.covered & mask) == 0) {
      current.covered |= mask;
      ++current.edges;
      self(self, next_edge + 1);
      current.covered &= ~mask;
      --current.edges;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::pair<int, int>> path_edges(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return e;
}

std::vector<std::pair<int, int>> cycle_edges(std::size_t n) {
  auto e = path_edges(n);
  if (n >= 2) e.emplace_back(static_cast<int>(n - 1), 0);
  return e;
}

BigInt continuant(std::span<const BigInt> a, ContinuantMethod method) {
  return continuant<BigInt>(a, BigInt(1), method);
}

MultiPoly continuant_symbolic(std::size_t n, ContinuantMethod method) {
  const auto vars = variables(n);
  return continuant<MultiPoly>(vars, MultiPoly::constant(n, BigInt(1)), method);
}

Mat2<BigInt> monodromy(std::span<const BigInt> a) { return monodromy<BigInt>(a, BigInt(1)); }

Mat2<MultiPoly> monodromy_symbolic(std::size_t n) {
  const auto vars = variables(n);
  return monodromy<MultiPoly>(vars, MultiPoly::constant(n, BigInt(1)));
}

std::vector<BigInt> difference_orbit(const CyclicSequence& seq, const BigInt& v0,
                                     const BigInt& v1, std::size_t steps) {
  std::vector<BigInt> out;
  out.reserve(steps);
  BigInt prev = v0;
  BigInt cur = v1;
  for (std::size_t i = 1; i <= steps; ++i) {
    BigInt next = seq.at(static_cast<long>(i)) * cur - prev;
    out.push_back(next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

}  // namespace rotundus
