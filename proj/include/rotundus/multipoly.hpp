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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rotundus/bigint.hpp"
#include "rotundus/unipoly.hpp"

namespace rotundus {

/// Exponent vector over the variables a_1..a_n.
class Monomial {
 public:
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t degree() const;
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic, descending: a_1 a_2 ... a_n first, constants last.
struct CanonicalOrder {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Sparse polynomial in a_1..a_n with integer coefficients. The term map
/// never stores a zero coefficient, so structural equality is polynomial
/// equality. Operands of binary operations must share the same arity.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigInt, CanonicalOrder>;

  /// Arity-0 zero; a placeholder that only combines with other arity-0 values.
  MultiPoly() = default;

  static MultiPoly zero(std::size_t arity);
  static MultiPoly constant(std::size_t arity, const BigInt& c);
  /// The variable a_index, one-based.
  static MultiPoly variable(std::size_t arity, std::size_t index);
  static MultiPoly term(const Monomial& m, const BigInt& c);

  /// Parses text such as "a1*a2*a3 - a1 - a3 + 2" or "a1a2 - 2"; juxtaposed
  /// factors multiply and `^` raises a variable to a power.
  static MultiPoly parse(std::string_view text, std::size_t arity);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  BigInt coefficient(const Monomial& m) const;
  std::uint32_t total_degree() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const BigInt& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const BigInt& c) { return lhs *= c; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  BigInt eval(std::span<const BigInt> point) const;

  /// Relabels a_i as a_{((i-1+k) mod n)+1}.
  MultiPoly cyclic_shift(long k) const;
  /// Relabels a_i as a_{n+1-i}.
  MultiPoly reversed() const;
  /// Substitutes a_i = x for every i.
  UniPoly<BigInt> identify_variables() const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);
  void require_same_arity(const MultiPoly& other) const;

  std::size_t arity_ = 0;
  TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// The variables a_1..a_n as arity-n polynomials.
std::vector<MultiPoly> variables(std::size_t n);

}  // namespace rotundus
