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

#include "rotundus/multipoly.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace rotundus {

std::uint32_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.arity() != arity()) throw std::invalid_argument("monomial arity mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

bool CanonicalOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const auto dl = lhs.degree();
  const auto dr = rhs.degree();
  if (dl != dr) return dl > dr;
  return lhs.exponents() > rhs.exponents();
}

MultiPoly MultiPoly::zero(std::size_t arity) {
  MultiPoly p;
  p.arity_ = arity;
  return p;
}

MultiPoly MultiPoly::constant(std::size_t arity, const BigInt& c) {
  MultiPoly p = zero(arity);
  p.add_term(Monomial(arity), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index < 1 || index > arity) {
    throw std::out_of_range("variable index " + std::to_string(index) +
                            " outside 1.." + std::to_string(arity));
  }
  std::vector<std::uint32_t> e(arity, 0);
  e[index - 1] = 1;
  return term(Monomial(std::move(e)), BigInt(1));
}

MultiPoly MultiPoly::term(const Monomial& m, const BigInt& c) {
  MultiPoly p = zero(m.arity());
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MultiPoly::require_same_arity(const MultiPoly& other) const {
  if (arity_ != other.arity_) {
    throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(arity_) +
                                " vs " + std::to_string(other.arity_));
  }
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, BigInt(-c));
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.require_same_arity(rhs);
  MultiPoly out = MultiPoly::zero(lhs.arity_);
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) out.add_term(ml * mr, BigInt(cl * cr));
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

BigInt MultiPoly::eval(std::span<const BigInt> point) const {
  if (point.size() != arity_) {
    throw std::invalid_argument("evaluation point has length " + std::to_string(point.size()) +
                                ", polynomial arity is " + std::to_string(arity_));
  }
  BigInt total(0);
  BigInt power;
  for (const auto& [m, c] : terms_) {
    BigInt value = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), point[i].get_mpz_t(), m[i]);
      value *= power;
    }
    total += value;
  }
  return total;
}

MultiPoly MultiPoly::cyclic_shift(long k) const {
  MultiPoly out = zero(arity_);
  if (arity_ == 0) return *this;
  const long n = static_cast<long>(arity_);
  long shift = k % n;
  if (shift < 0) shift += n;
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> e(arity_, 0);
    for (long i = 0; i < n; ++i) e[static_cast<std::size_t>((i + shift) % n)] = m[static_cast<std::size_t>(i)];
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

MultiPoly MultiPoly::reversed() const {
  MultiPoly out = zero(arity_);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> e(m.exponents().rbegin(), m.exponents().rend());
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

UniPoly<BigInt> MultiPoly::identify_variables() const {
  std::vector<BigInt> coeffs(total_degree() + 1, BigInt(0));
  for (const auto& [m, c] : terms_) coeffs[m.degree()] += c;
  return UniPoly<BigInt>(std::move(coeffs));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    BigInt mag = abs(c);
    std::string factors;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "a" + std::to_string(i + 1);
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + "*" + factors;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  MultiPoly parse() {
    MultiPoly result = MultiPoly::zero(arity_);
    skip_space();
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += parse_term() * BigInt(sign);
      first = false;
      skip_space();
    }
    if (first) fail("empty polynomial");
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) +
                                "' at offset " + std::to_string(pos_) + ": " + what);
  }
  std::uint32_t parse_uint() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  MultiPoly parse_term() {
    BigInt coeff(1);
    std::vector<std::uint32_t> exps(arity_, 0);
    bool any = false;
    while (true) {
      skip_space();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        coeff *= BigInt(std::string(text_.substr(start, pos_ - start)));
      } else if (c == 'a') {
        ++pos_;
        std::uint32_t idx = parse_uint();
        if (idx < 1 || idx > arity_) fail("variable index out of range");
        std::uint32_t e = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          skip_space();
          e = parse_uint();
        }
        exps[idx - 1] += e;
      } else {
        break;
      }
      any = true;
      skip_space();
      if (peek() == '*') ++pos_;
    }
    if (!any) fail("expected a term");
    return MultiPoly::term(Monomial(std::move(exps)), coeff);
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::size_t arity) {
  return PolyParser(text, arity).parse();
}

std::vector<MultiPoly> variables(std::size_t n) {
  std::vector<MultiPoly> v;
  v.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) v.push_back(MultiPoly::variable(n, i));
  return v;
}

}  // namespace rotundus
