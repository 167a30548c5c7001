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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "rotundus/bigint.hpp"
#include "rotundus/multipoly.hpp"
#include "rotundus/unipoly.hpp"

namespace rotundus {

/// Dense square matrix over an exact ring. The matrix remembers the zero of
/// its ring so that even an empty matrix can produce a unit determinant
/// (polynomial rings need an arity to build constants).
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix(std::size_t dim, T zero) : dim_(dim), zero_(std::move(zero)), data_(dim * dim, zero_) {}

  std::size_t dim() const { return dim_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  bool is_skew_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!is_zero((*this)(i, i))) return false;
      for (std::size_t j = i + 1; j < dim_; ++j) {
        if (!((*this)(i, j) == T(-(*this)(j, i)))) return false;
      }
    }
    return true;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  SquareMatrix transposed() const {
    SquareMatrix t(dim_, zero_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const SquareMatrix& o) const { return dim_ == o.dim_ && data_ == o.data_; }

 private:
  std::size_t dim_;
  T zero_;
  std::vector<T> data_;
};

/// Unit of the ring of `zero`.
inline BigInt one_like(const BigInt&) { return BigInt(1); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline MultiPoly one_like(const MultiPoly& z) { return MultiPoly::constant(z.arity(), BigInt(1)); }
template <typename C>
UniPoly<C> one_like(const UniPoly<C>&) { return UniPoly<C>(1); }

/// Fraction-free (Bareiss) elimination with row pivoting.
BigInt det_bareiss(const SquareMatrix<BigInt>& m);

/// Gaussian elimination over the rationals.
Rational det_gauss(const SquareMatrix<Rational>& m);

/// Laplace expansion along rows, memoized on the set of columns already
/// used. Zero entries are skipped, so banded matrices only visit the column
/// subsets they can actually reach.
template <typename T>
T det_laplace(const SquareMatrix<T>& m) {
  const std::size_t n = m.dim();
  if (n > 64) throw std::invalid_argument("det_laplace: dimension above 64");
  std::unordered_map<std::uint64_t, T> memo;
  const T one = one_like(m.zero());

  auto rec = [&](auto&& self, std::uint64_t used) -> T {
    const std::size_t row = static_cast<std::size_t>(std::popcount(used));
    if (row == n) return one;
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    T acc = m.zero();
    int free_before = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (std::uint64_t{1} << c)) continue;
      const T& entry = m(row, c);
      if (!is_zero(entry)) {
        T minor = self(self, used | (std::uint64_t{1} << c));
        if (!is_zero(minor)) {
          T term = entry * minor;
          if (free_before % 2 == 0) {
            acc += term;
          } else {
            acc -= term;
          }
        }
      }
      ++free_before;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0);
}

/// Exact determinant. Integers use Bareiss, rationals Gaussian elimination,
/// polynomial rings the memoized Laplace expansion.
template <typename T>
T det(const SquareMatrix<T>& m) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return det_bareiss(m);
  } else if constexpr (std::is_same_v<T, Rational>) {
    return det_gauss(m);
  } else {
    return det_laplace(m);
  }
}

/// Pfaffian as the signed sum over perfect matchings, with
/// pf([[0,1],[-1,0]]) = 1. Expands along the lowest remaining index and
/// memoizes on the remaining index set.
template <typename T>
T pfaffian(const SquareMatrix<T>& m) {
  const std::size_t n = m.dim();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension " + std::to_string(n));
  if (!m.is_skew_symmetric()) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  if (n > 64) throw std::invalid_argument("pfaffian: dimension above 64");
  std::unordered_map<std::uint64_t, T> memo;
  const T one = one_like(m.zero());

  auto rec = [&](auto&& self, std::uint64_t remaining) -> T {
    if (remaining == 0) return one;
    if (auto it = memo.find(remaining); it != memo.end()) return it->second;
    const int first = std::countr_zero(remaining);
    const std::uint64_t rest = remaining & ~(std::uint64_t{1} << first);
    T acc = m.zero();
    int position = 0;
    for (std::uint64_t bits = rest; bits != 0; bits &= bits - 1) {
      const int j = std::countr_zero(bits);
      ++position;
      const T& entry = m(static_cast<std::size_t>(first), static_cast<std::size_t>(j));
      if (is_zero(entry)) continue;
      T sub = self(self, rest & ~(std::uint64_t{1} << j));
      if (is_zero(sub)) continue;
      T term = entry * sub;
      if (position % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    memo.emplace(remaining, acc);
    return acc;
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return rec(rec, all);
}

/// Interior (dim-2)x(dim-2) matrix with the first and last rows and columns
/// removed.
template <typename T>
SquareMatrix<T> mid(const SquareMatrix<T>& a) {
  if (a.dim() < 2) throw std::invalid_argument("mid: dimension must be at least 2");
  SquareMatrix<T> r(a.dim() - 2, a.zero());
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) r(i, j) = a(i + 1, j + 1);
  return r;
}

namespace detail {

// Places x at the top-right and sign*x at the bottom-left corner of an n x n
// block whose top-left entry sits at (row0, col0). For n = 1 both corners are
// the same cell and the contributions add.
template <typename T>
void add_corner(SquareMatrix<T>& m, std::size_t row0, std::size_t col0, std::size_t n,
                const T& x, int sign) {
  m(row0, col0 + n - 1) += x;
  if (sign > 0) {
    m(row0 + n - 1, col0) += x;
  } else {
    m(row0 + n - 1, col0) -= x;
  }
}

}  // namespace detail

/// The 2n x 2n skew-symmetric matrix [[xE, A], [-A^T, yE]] where E has 1 in
/// its top-right and -1 in its bottom-left corner (so E = 0 when n = 1). For
/// symmetric A the lower-left block is just -A.
template <typename T>
SquareMatrix<T> block_skew(const T& x, const T& y, const SquareMatrix<T>& a) {
  const std::size_t n = a.dim();
  if (n < 1) throw std::invalid_argument("block_skew: block dimension must be at least 1");
  SquareMatrix<T> b(2 * n, a.zero());
  detail::add_corner(b, 0, 0, n, x, -1);
  detail::add_corner(b, n, n, n, y, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b(i, n + j) = a(i, j);
      b(n + j, i) = -a(i, j);
    }
  }
  return b;
}

/// The symmetric counterpart [[xE', A], [A^T, yE']] with E' carrying 1 in
/// both corners (E' = [2] when n = 1).
template <typename T>
SquareMatrix<T> block_symmetric(const T& x, const T& y, const SquareMatrix<T>& a) {
  const std::size_t n = a.dim();
  if (n < 1) throw std::invalid_argument("block_symmetric: block dimension must be at least 1");
  SquareMatrix<T> b(2 * n, a.zero());
  detail::add_corner(b, 0, 0, n, x, +1);
  detail::add_corner(b, n, n, n, y, +1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b(i, n + j) = a(i, j);
      b(n + j, i) = a(i, j);
    }
  }
  return b;
}

/// Tridiagonal matrix with the given diagonal and `one` on both off-diagonals.
template <typename T>
SquareMatrix<T> tridiagonal(std::span<const T> diagonal, const T& one) {
  SquareMatrix<T> m(diagonal.size(), T(one - one));
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    m(i, i) = diagonal[i];
    if (i + 1 < diagonal.size()) {
      m(i, i + 1) = one;
      m(i + 1, i) = one;
    }
  }
  return m;
}

template <typename T>
std::string to_string(const SquareMatrix<T>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) s += ", ";
      if constexpr (std::is_same_v<T, BigInt> || std::is_same_v<T, Rational>) {
        s += m(i, j).get_str();
      } else {
        s += m(i, j).to_string();
      }
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace rotundus
