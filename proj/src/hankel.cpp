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

#include "rotundus/hankel.hpp"

#include <algorithm>
#include <span>

#include "rotundus/continuant.hpp"

namespace rotundus {

SquareMatrix<Rational> hankel_matrix(const MomentSequence& c, std::size_t size, std::size_t offset) {
  SquareMatrix<Rational> m(size, Rational(0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = c.at(offset + i + j);
  return m;
}

std::size_t required_sequence_length(std::size_t count) { return count / 2 + 1; }

namespace {

Rational target_b(const std::vector<BigInt>& a, std::size_t k) {
  return Rational(continuant(std::span<const BigInt>(a.data(), k + 1)));
}

}  // namespace

MomentSequence moments_from_sequence(const std::vector<BigInt>& a, std::size_t count) {
  if (count < 1) throw std::invalid_argument("moments_from_sequence: count must be >= 1");
  if (a.size() < required_sequence_length(count)) {
    throw std::invalid_argument("moments_from_sequence: " + std::to_string(count) +
                                " moments need at least " +
                                std::to_string(required_sequence_length(count)) + " sequence entries");
  }
  MomentSequence c;
  c.reserve(count);
  c.emplace_back(1);  // det A_0 = C_0 = 1
  for (std::size_t m = 1; m < count; ++m) {
    // The newest moment C_m sits in the bottom-right corner of
    //   A_{m/2} (m even, offset 0) or B_{(m+1)/2} (m odd, offset 1),
    // so det = C_m * cofactor + det(matrix with C_m = 0), where the
    // cofactor is the previous matrix of the same family.
    const bool even = m % 2 == 0;
    const std::size_t offset = even ? 0 : 1;
    const std::size_t size = even ? m / 2 + 1 : (m + 1) / 2;
    const Rational target = even ? Rational(1) : target_b(a, size);

    c.emplace_back(0);
    const Rational base = det(hankel_matrix(c, size, offset));
    const Rational cofactor = det(hankel_matrix(c, size - 1, offset));
    if (sgn(cofactor) == 0) {
      throw ReconstructionError(m, "cannot determine C_" + std::to_string(m) + ": the cofactor det(" +
                                       std::string(even ? "A_" : "B_") + std::to_string(size - 2 + offset) +
                                       ") vanishes");
    }
    c.back() = (target - base) / cofactor;
  }
  return c;
}

bool HankelReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const HankelCheck& c) { return c.passed(); });
}

bool HankelReport::family_passed(char family) const {
  return std::all_of(checks.begin(), checks.end(),
                     [&](const HankelCheck& c) { return c.family != family || c.passed(); });
}

HankelReport verify_hankel(const MomentSequence& c, const std::vector<BigInt>& a) {
  HankelReport rep;
  for (std::size_t k = 0; 2 * k < c.size(); ++k) {
    rep.checks.push_back({'A', k, det(hankel_matrix(c, k + 1, 0)), Rational(1)});
  }
  for (std::size_t k = 1; 2 * k <= c.size() && k < a.size(); ++k) {
    rep.checks.push_back({'B', k, det(hankel_matrix(c, k, 1)), target_b(a, k)});
  }
  return rep;
}

}  // namespace rotundus
