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

#include <string>
#include <string_view>
#include <vector>

#include "rotundus/unipoly.hpp"

namespace rotundus {

enum class ChebyshevKind { first, second };

ChebyshevKind parse_chebyshev_kind(std::string_view name);

/// T_n (first kind) or U_n (second kind) from P_{n+1} = 2x P_n - P_{n-1}.
IntPoly cheb(ChebyshevKind kind, int n);

/// 2 T_n(x/2) (first kind) or U_n(x/2) (second kind); both have integer
/// coefficients and satisfy P_{n+1} = x P_n - P_{n-1}.
IntPoly cheb_normalized(ChebyshevKind kind, int n);

struct IdentityCheck {
  std::string name;
  int n = 0;
  bool passed = false;
  std::string detail;  // the two sides when the check fails
};

/// For 1 <= n <= n_max (2 <= n for the last identity):
///   U~_n = K_n(x,..,x),  T~_n = R_n(x,..,x),  det(Omega_n(x,..,x)) = T~_n^2,
///   T~_n = tr([[x,1],[-1,0]]^n),  2 T_n = U_n - U_{n-2}.
std::vector<IdentityCheck> verify_chebyshev_identities(int n_max);

}  // namespace rotundus
