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

#include <stdexcept>
#include <string>
#include <vector>

#include "rotundus/bigint.hpp"
#include "rotundus/matrix.hpp"

namespace rotundus {

// Moment sequences C_0, C_1, ... pinned down by Hankel determinants:
//   A_k = (C_{i+j})_{0<=i,j<=k}      det A_k = 1
//   B_k = (C_{i+j+1})_{0<=i,j<k}     det B_k = K_{k+1}(a_0..a_k),  k >= 1

using MomentSequence = std::vector<Rational>;

/// Raised when a moment cannot be solved for because its cofactor (the
/// previous Hankel determinant) vanishes.
class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(std::size_t index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  /// Index of the moment that could not be determined.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// (k+1)x(k+1) Hankel matrix on C_offset .. C_{offset+2k}.
SquareMatrix<Rational> hankel_matrix(const MomentSequence& c, std::size_t size, std::size_t offset);

/// Number of a-entries needed to determine `count` moments.
std::size_t required_sequence_length(std::size_t count);

/// Solves for C_0..C_{count-1}, one moment at a time; each condition is
/// linear in the newest moment.
MomentSequence moments_from_sequence(const std::vector<BigInt>& a, std::size_t count);

struct HankelCheck {
  char family = 'A';  // 'A' or 'B'
  std::size_t k = 0;
  Rational determinant;
  Rational expected;
  bool passed() const { return determinant == expected; }
};

struct HankelReport {
  std::vector<HankelCheck> checks;
  bool all_passed() const;
  bool family_passed(char family) const;
};

/// Evaluates every det(A_k) and det(B_k) that `c` (and `a`, for B_k)
/// determines, by direct elimination.
HankelReport verify_hankel(const MomentSequence& c, const std::vector<BigInt>& a);

}  // namespace rotundus
