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

#include "rotundus/rotundus.hpp"

#include <stdexcept>
#include <string>

namespace rotundus {

RotundusMethod parse_rotundus_method(std::string_view name) {
  if (name == "def" || name == "definition") return RotundusMethod::definition;
  if (name == "cyclic" || name == "cyclic_euler") return RotundusMethod::cyclic_euler;
  if (name == "trace") return RotundusMethod::trace;
  if (name == "pf" || name == "pfaffian_square") return RotundusMethod::pfaffian_square;
  throw std::invalid_argument("unknown rotundus method '" + std::string(name) + "'");
}

namespace {

void require_nonempty(std::size_t n) {
  if (n == 0) throw std::invalid_argument("rotundus: need n >= 1");
}

}  // namespace

BigInt rotundus(std::span<const BigInt> a, RotundusMethod method) {
  require_nonempty(a.size());
  const BigInt one(1);
  switch (method) {
    case RotundusMethod::definition:
      return rotundus_definition<BigInt>(a, one);
    case RotundusMethod::cyclic_euler:
      return rotundus_cyclic_euler<BigInt>(a, one);
    case RotundusMethod::trace:
      return rotundus_trace<BigInt>(a, one);
    case RotundusMethod::pfaffian_square:
    default: {
      // Magnitude from the determinant alone; only the sign is borrowed.
      const BigInt d = det(rotundus_matrix<BigInt>(a, one, MatrixKind::skew));
      BigInt root;
      if (!exact_sqrt(d, root)) {
        throw std::domain_error("det(Omega_n) = " + d.get_str() + " is not a perfect square");
      }
      const BigInt reference = rotundus_definition<BigInt>(a, one);
      if (sgn(reference) < 0 && root == -reference) return BigInt(-root);
      return root;
    }
  }
}

MultiPoly rotundus_symbolic(std::size_t n, RotundusMethod method) {
  require_nonempty(n);
  const auto vars = variables(n);
  const MultiPoly one = MultiPoly::constant(n, BigInt(1));
  const std::span<const MultiPoly> a(vars);
  switch (method) {
    case RotundusMethod::definition:
      return rotundus_definition<MultiPoly>(a, one);
    case RotundusMethod::cyclic_euler:
      return rotundus_cyclic_euler<MultiPoly>(a, one);
    case RotundusMethod::trace:
      return rotundus_trace<MultiPoly>(a, one);
    case RotundusMethod::pfaffian_square:
    default: {
      if (n > kSymbolicPfaffianMaxN) {
        throw std::invalid_argument("pfaffian_square route: symbolic n = " + std::to_string(n) +
                                    " exceeds the bound " + std::to_string(kSymbolicPfaffianMaxN));
      }
      const MultiPoly pf = pfaffian(rotundus_matrix<MultiPoly>(a, one, MatrixKind::skew));
      const MultiPoly reference = rotundus_definition<MultiPoly>(a, one);
      if (pf == -reference) return -pf;
      return pf;
    }
  }
}

SquareMatrix<BigInt> rotundus_matrix(std::span<const BigInt> a, MatrixKind kind) {
  return rotundus_matrix<BigInt>(a, BigInt(1), kind);
}

SquareMatrix<MultiPoly> rotundus_matrix_symbolic(std::size_t n, MatrixKind kind) {
  const auto vars = variables(n);
  return rotundus_matrix<MultiPoly>(std::span<const MultiPoly>(vars),
                                    MultiPoly::constant(n, BigInt(1)), kind);
}

PfaffianIdentityReport<BigInt> verify_pfaffian_identity(std::span<const BigInt> a) {
  require_nonempty(a.size());
  const BigInt one(1);
  return check_pfaffian_identity(rotundus_matrix<BigInt>(a, one, MatrixKind::skew),
                                 rotundus_definition<BigInt>(a, one));
}

PfaffianIdentityReport<MultiPoly> verify_pfaffian_identity_symbolic(std::size_t n) {
  require_nonempty(n);
  const auto vars = variables(n);
  const MultiPoly one = MultiPoly::constant(n, BigInt(1));
  const std::span<const MultiPoly> a(vars);
  return check_pfaffian_identity(rotundus_matrix<MultiPoly>(a, one, MatrixKind::skew),
                                 rotundus_definition<MultiPoly>(a, one));
}

}  // namespace rotundus
