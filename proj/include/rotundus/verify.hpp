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
#include <string>
#include <vector>

namespace rotundus {

/// Batch check of every identity the library implements. Randomized parts
/// draw from a generator seeded with `seed`, so a given (n_max, seed) pair
/// always produces the same report.
struct SuiteOptions {
  int n_max = 5;
  std::uint64_t seed = 1;
  /// Suite group to run: "all" or one of suite_groups().
  std::string group = "all";
  /// Negative control: negate the corner blocks of every Omega_n before the
  /// Pfaffian identity is checked.
  bool corrupt_omega = false;
};

struct SuiteCheck {
  std::string group;
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  bool all_passed() const;
  /// One line per check.
  std::string to_text() const;
};

const std::vector<std::string>& suite_groups();

SuiteReport verify_suite(const SuiteOptions& opts);

}  // namespace rotundus
