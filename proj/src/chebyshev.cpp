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

#include "rotundus/chebyshev.hpp"

#include <stdexcept>

#include "rotundus/continuant.hpp"
#include "rotundus/matrix.hpp"
#include "rotundus/rotundus.hpp"

namespace rotundus {

ChebyshevKind parse_chebyshev_kind(std::string_view name) {
  if (name == "first" || name == "T") return ChebyshevKind::first;
  if (name == "second" || name == "U") return ChebyshevKind::second;
  throw std::invalid_argument("unknown Chebyshev kind '" + std::string(name) + "'");
}

namespace {

IntPoly three_term(IntPoly p0, IntPoly p1, const IntPoly& step, int n) {
  if (n < 0) throw std::invalid_argument("Chebyshev degree must be >= 0");
  if (n == 0) return p0;
  for (int k = 1; k < n; ++k) {
    IntPoly next = step * p1 - p0;
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

}  // namespace

IntPoly cheb(ChebyshevKind kind, int n) {
  const IntPoly x = IntPoly::x();
  const IntPoly two_x = x * BigInt(2);
  return three_term(IntPoly(1), kind == ChebyshevKind::first ? x : two_x, two_x, n);
}

IntPoly cheb_normalized(ChebyshevKind kind, int n) {
  const IntPoly x = IntPoly::x();
  return three_term(IntPoly(kind == ChebyshevKind::first ? 2 : 1), x, x, n);
}

std::vector<IdentityCheck> verify_chebyshev_identities(int n_max) {
  if (n_max < 2) throw std::invalid_argument("verify_chebyshev_identities: n_max must be >= 2");
  std::vector<IdentityCheck> out;
  auto record = [&](std::string name, int n, const IntPoly& lhs, const IntPoly& rhs) {
    IdentityCheck c{std::move(name), n, lhs == rhs, {}};
    if (!c.passed) c.detail = lhs.to_string() + " != " + rhs.to_string();
    out.push_back(std::move(c));
  };

  const IntPoly x = IntPoly::x();
  const IntPoly one(1);
  for (int n = 1; n <= n_max; ++n) {
    const auto size = static_cast<std::size_t>(n);
    const IntPoly u_tilde = cheb_normalized(ChebyshevKind::second, n);
    const IntPoly t_tilde = cheb_normalized(ChebyshevKind::first, n);

    record("U~_n = K_n(x,...,x)", n, u_tilde,
           continuant_symbolic(size, ContinuantMethod::euler).identify_variables());
    record("T~_n = R_n(x,...,x)", n, t_tilde,
           rotundus_symbolic(size, RotundusMethod::definition).identify_variables());

    const std::vector<IntPoly> diag(size, x);
    const auto omega = rotundus_matrix<IntPoly>(std::span<const IntPoly>(diag), one, MatrixKind::skew);
    record("det Omega_n(x,...,x) = T~_n^2", n, det(omega), t_tilde * t_tilde);

    record("T~_n = tr [[x,1],[-1,0]]^n", n, t_tilde,
           monodromy<IntPoly>(std::span<const IntPoly>(diag), one).trace());

    if (n >= 2) {
      record("2 T_n = U_n - U_{n-2}", n, cheb(ChebyshevKind::first, n) * BigInt(2),
             cheb(ChebyshevKind::second, n) - cheb(ChebyshevKind::second, n - 2));
    }
  }
  return out;
}

}  // namespace rotundus
