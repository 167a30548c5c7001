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

#include "rotundus/bigint.hpp"

#include <stdexcept>

namespace rotundus {

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

std::vector<BigInt> parse_int_list(std::string_view text) {
  std::vector<BigInt> out;
  if (text.empty()) throw std::invalid_argument("empty integer list");
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start);
    out.push_back(parse_bigint(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const Rational& v) { return v.get_str(10); }

bool exact_sqrt(const BigInt& v, BigInt& root) {
  if (sgn(v) < 0) return false;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return true;
}

CyclicSequence::CyclicSequence(std::vector<BigInt> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("cyclic sequence must have length >= 1");
  }
}

CyclicSequence::CyclicSequence(std::initializer_list<long> values) {
  for (long v : values) values_.emplace_back(v);
  if (values_.empty()) {
    throw std::invalid_argument("cyclic sequence must have length >= 1");
  }
}

const BigInt& CyclicSequence::at(long i) const {
  const long n = static_cast<long>(values_.size());
  long r = (i - 1) % n;
  if (r < 0) r += n;
  return values_[static_cast<std::size_t>(r)];
}

std::vector<BigInt> CyclicSequence::window(long start, std::size_t len) const {
  std::vector<BigInt> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(at(start + static_cast<long>(k)));
  return out;
}

CyclicSequence CyclicSequence::rotated(long k) const {
  return CyclicSequence(window(1 + k, values_.size()));
}

CyclicSequence CyclicSequence::reversed() const {
  return CyclicSequence(std::vector<BigInt>(values_.rbegin(), values_.rend()));
}

std::string CyclicSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ',';
    s += values_[i].get_str();
  }
  return s + ")";
}

}  // namespace rotundus
