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

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rotundus {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses an optionally signed decimal integer. Rejects whitespace, empty
/// input and anything that is not a digit.
BigInt parse_bigint(std::string_view text);

/// Parses a comma separated list such as "5,2,2,2,1".
std::vector<BigInt> parse_int_list(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

/// Exact integer square root; returns false when v is negative or not a
/// perfect square.
bool exact_sqrt(const BigInt& v, BigInt& root);

/// Cyclically indexed integer sequence a_1..a_n with a_{i+n} = a_i.
class CyclicSequence {
 public:
  explicit CyclicSequence(std::vector<BigInt> values);
  CyclicSequence(std::initializer_list<long> values);

  std::size_t size() const { return values_.size(); }

  /// One-based periodic access; any integer index is valid.
  const BigInt& at(long i) const;

  const std::vector<BigInt>& values() const { return values_; }
  std::span<const BigInt> span() const { return values_; }

  /// The len consecutive entries a_start, a_{start+1}, ... (one-based).
  std::vector<BigInt> window(long start, std::size_t len) const;

  /// Sequence starting at a_{1+k}.
  CyclicSequence rotated(long k) const;
  CyclicSequence reversed() const;

  bool operator==(const CyclicSequence&) const = default;
  auto operator<=>(const CyclicSequence& other) const {
    return values_ <=> other.values_;
  }

  std::string to_string() const;

 private:
  std::vector<BigInt> values_;
};

}  // namespace rotundus
