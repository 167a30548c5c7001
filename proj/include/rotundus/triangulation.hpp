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

#include <array>
#include <utility>
#include <vector>

#include "rotundus/bigint.hpp"

namespace rotundus {

using Diagonal = std::pair<int, int>;

/// Triangulation of a convex n-gon with vertices 0..n-1 in order. Diagonals
/// are stored as (i, j) with i < j, sorted lexicographically.
struct Triangulation {
  int n = 0;
  std::vector<Diagonal> diagonals;

  /// Sorts the diagonals and checks every structural invariant: n >= 3,
  /// n - 3 distinct proper diagonals, pairwise non-crossing.
  static Triangulation make(int n, std::vector<Diagonal> diagonals);

  bool operator==(const Triangulation&) const = default;
  auto operator<=>(const Triangulation&) const = default;
};

using Quiddity = CyclicSequence;

/// All triangulations of the convex n-gon in canonical order (sorted by
/// diagonal list). The top-level split is distributed over OpenMP threads;
/// the result does not depend on the thread count.
std::vector<Triangulation> enumerate_triangulations(int n);

/// The n - 2 triangles as sorted vertex triples, recovered by splitting off
/// the triangle on the edge (lo, hi) and recursing into both sides.
std::vector<std::array<int, 3>> triangles(const Triangulation& t);

/// Number of triangles incident to each vertex.
Quiddity quiddity(const Triangulation& t);

/// K_{n-2}(a_i..a_{i+n-3}) = 1 for every i.
bool coco_windows_hold(const CyclicSequence& q);
/// Monodromy of q equals -Id.
bool monodromy_is_minus_identity(const CyclicSequence& q);
/// Both of the above.
bool coco_check(const CyclicSequence& q);

/// K_{j-i+1}(a_i..a_j) > 0 for every window with 0 <= j - i <= max_gap over
/// the periodic extension. max_gap = n - 4 gives the frieze notion and
/// max_gap = n the one used for R_n = 0.
bool is_totally_positive(const CyclicSequence& q, long max_gap);

bool is_centrally_symmetric(const Triangulation& t);

/// Lexicographically least rotation; with `with_reflections` the reversed
/// sequence's rotations are considered too.
CyclicSequence canonical_rotation(const CyclicSequence& q, bool with_reflections = false);

struct HalfQuiddityOptions {
  bool up_to_rotation = false;
  bool merge_reflections = false;
};

/// First halves a_1..a_n of the quiddities of the centrally symmetric
/// triangulations of the two_n-gon. Raw output follows triangulation order;
/// deduplicated output is sorted and unique.
std::vector<CyclicSequence> half_quiddities(int two_n, HalfQuiddityOptions opts = {});

struct SolveQuery {
  int n = 0;
  int max_entry = 0;
  bool tp_only = false;
  bool up_to_rotation = false;
  bool merge_reflections = false;
};

/// Every tuple in {1..max_entry}^n with R_n = 0 in lexicographic order,
/// optionally restricted to totally positive tuples (max_gap = n) and
/// deduplicated by canonical rotation. OpenMP-parallel over the search space.
std::vector<CyclicSequence> solve_rotundus(const SolveQuery& q);

namespace reference {

// Single-threaded versions kept as test oracles and benchmark baselines.
std::vector<Triangulation> enumerate_triangulations_serial(int n);
std::vector<CyclicSequence> solve_rotundus_serial(const SolveQuery& q);

}  // namespace reference

}  // namespace rotundus
