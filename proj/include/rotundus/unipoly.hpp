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

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "rotundus/bigint.hpp"

namespace rotundus {

/// Dense univariate polynomial in x; coeffs()[k] multiplies x^k. Trailing
/// zero coefficients are trimmed, so the zero polynomial has no coefficients.
template <typename Coeff>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  UniPoly(long c) : coeffs_{Coeff(c)} { trim(); }  // NOLINT: constants convert

  static UniPoly x() { return UniPoly(std::vector<Coeff>{Coeff(0), Coeff(1)}); }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Coeff coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Coeff(0);
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return UniPoly(std::move(out));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend UniPoly operator*(UniPoly a, const Coeff& c) {
    for (auto& v : a.coeffs_) v *= c;
    a.trim();
    return a;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  Coeff eval(const Coeff& x) const {
    Coeff acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  /// p(c*x).
  UniPoly scaled_argument(const Coeff& c) const {
    UniPoly r = *this;
    Coeff power(1);
    for (auto& v : r.coeffs_) {
      v *= power;
      power *= c;
    }
    r.trim();
    return r;
  }

  /// Highest degree first, e.g. "8*x^4 - 8*x^2 + 1".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Coeff& c = coeffs_[k];
      if (sgn(c) == 0) continue;
      const bool negative = sgn(c) < 0;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      Coeff mag = negative ? Coeff(-c) : c;
      const bool unit = (mag == 1);
      if (k == 0) {
        out += mag.get_str();
        continue;
      }
      if (!unit) out += mag.get_str() + "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

template <typename Coeff>
bool is_zero(const UniPoly<Coeff>& p) {
  return p.is_zero();
}

using IntPoly = UniPoly<BigInt>;
using RatPoly = UniPoly<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

}  // namespace rotundus
