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

#include "rotundus/triangulation.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "rotundus/continuant.hpp"
#include "rotundus/rotundus.hpp"

namespace rotundus {

namespace {

bool crosses(const Diagonal& p, const Diagonal& q) {
  const auto [i, j] = p;
  const auto [k, l] = q;
  return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

using DiagonalSet = std::vector<Diagonal>;

// Triangulations of the sub-polygon on vertices 0..len, keyed by len.
class SubPolygonTable {
 public:
  explicit SubPolygonTable(int max_len) : table_(static_cast<std::size_t>(max_len) + 1) {
    for (int len = 0; len <= max_len; ++len) build(len);
  }
  const std::vector<DiagonalSet>& get(int len) const { return table_[static_cast<std::size_t>(len)]; }

 private:
  void build(int len) {
    auto& out = table_[static_cast<std::size_t>(len)];
    if (len < 2) {
      out.push_back({});
      return;
    }
    for (int k = 1; k < len; ++k) {
      for (const auto& left : table_[static_cast<std::size_t>(k)]) {
        for (const auto& right : table_[static_cast<std::size_t>(len - k)]) {
          out.push_back(combine(0, k, len, left, right));
        }
      }
    }
  }

 public:
  // Diagonals of the polygon lo..hi split at apex k, given triangulations of
  // lo..k and k..hi expressed relative to their own first vertex.
  static DiagonalSet combine(int lo, int k, int hi, const DiagonalSet& left, const DiagonalSet& right) {
    DiagonalSet d;
    d.reserve(left.size() + right.size() + 2);
    if (k - lo >= 2) d.emplace_back(lo, k);
    if (hi - k >= 2) d.emplace_back(k, hi);
    for (const auto& [i, j] : left) d.emplace_back(i + lo, j + lo);
    for (const auto& [i, j] : right) d.emplace_back(i + k, j + k);
    return d;
  }

 private:
  std::vector<std::vector<DiagonalSet>> table_;
};

void require_polygon(int n) {
  if (n < 3) throw std::invalid_argument("polygon size must be at least 3, got " + std::to_string(n));
}

}  // namespace

Triangulation Triangulation::make(int n, std::vector<Diagonal> diagonals) {
  require_polygon(n);
  for (auto& d : diagonals) {
    if (d.first > d.second) std::swap(d.first, d.second);
    const auto [i, j] = d;
    if (i < 0 || j >= n || j - i < 2 || (i == 0 && j == n - 1)) {
      throw std::invalid_argument("(" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not a diagonal of the " + std::to_string(n) + "-gon");
    }
  }
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end()) {
    throw std::invalid_argument("repeated diagonal");
  }
  if (static_cast<int>(diagonals.size()) != n - 3) {
    throw std::invalid_argument("a triangulation of the " + std::to_string(n) + "-gon has " +
                                std::to_string(n - 3) + " diagonals, got " +
                                std::to_string(diagonals.size()));
  }
  for (std::size_t a = 0; a < diagonals.size(); ++a)
    for (std::size_t b = a + 1; b < diagonals.size(); ++b)
      if (crosses(diagonals[a], diagonals[b])) throw std::invalid_argument("crossing diagonals");
  return Triangulation{n, std::move(diagonals)};
}

std::vector<Triangulation> enumerate_triangulations(int n) {
  require_polygon(n);
  const int len = n - 1;
  const SubPolygonTable table(len - 1);
  std::vector<std::vector<Triangulation>> by_apex(static_cast<std::size_t>(len));

#pragma omp parallel for schedule(dynamic)
  for (int k = 1; k < len; ++k) {
    auto& bucket = by_apex[static_cast<std::size_t>(k)];
    for (const auto& left : table.get(k)) {
      for (const auto& right : table.get(len - k)) {
        DiagonalSet d = SubPolygonTable::combine(0, k, len, left, right);
        std::sort(d.begin(), d.end());
        bucket.push_back(Triangulation{n, std::move(d)});
      }
    }
  }

  std::vector<Triangulation> out;
  for (auto& bucket : by_apex) {
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<int, 3>> triangles(const Triangulation& t) {
  const int n = t.n;
  std::set<Diagonal> edges(t.diagonals.begin(), t.diagonals.end());
  auto is_edge = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return j - i == 1 || (i == 0 && j == n - 1) || edges.count({i, j}) > 0;
  };
  std::vector<std::array<int, 3>> out;
  auto split = [&](auto&& self, int lo, int hi) -> void {
    if (hi - lo < 2) return;
    int apex = -1;
    for (int k = lo + 1; k < hi; ++k) {
      if (is_edge(lo, k) && is_edge(k, hi)) {
        if (apex != -1) throw std::logic_error("edge has two apexes; diagonal set is not a triangulation");
        apex = k;
      }
    }
    if (apex == -1) throw std::logic_error("edge has no apex; diagonal set is not a triangulation");
    out.push_back({lo, apex, hi});
    self(self, lo, apex);
    self(self, apex, hi);
  };
  split(split, 0, n - 1);
  return out;
}

Quiddity quiddity(const Triangulation& t) {
  std::vector<BigInt> counts(static_cast<std::size_t>(t.n), BigInt(0));
  for (const auto& tri : triangles(t))
    for (int v : tri) counts[static_cast<std::size_t>(v)] += 1;
  return Quiddity(std::move(counts));
}

bool coco_windows_hold(const CyclicSequence& q) {
  const long n = static_cast<long>(q.size());
  if (n < 2) return false;
  for (long i = 1; i <= n; ++i) {
    const auto w = q.window(i, static_cast<std::size_t>(n - 2));
    if (continuant(w) != 1) return false;
  }
  return true;
}

bool monodromy_is_minus_identity(const CyclicSequence& q) {
  return monodromy(q.span()) == Mat2<BigInt>{BigInt(-1), BigInt(0), BigInt(0), BigInt(-1)};
}

bool coco_check(const CyclicSequence& q) {
  return coco_windows_hold(q) && monodromy_is_minus_identity(q);
}

bool is_totally_positive(const CyclicSequence& q, long max_gap) {
  const long n = static_cast<long>(q.size());
  for (long i = 1; i <= n; ++i) {
    BigInt prev(0);
    BigInt cur(1);
    for (long gap = 0; gap <= max_gap; ++gap) {
      BigInt next = q.at(i + gap) * cur - prev;
      if (sgn(next) <= 0) return false;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return true;
}

bool is_centrally_symmetric(const Triangulation& t) {
  if (t.n % 2 != 0) {
    throw std::invalid_argument("central symmetry needs an even polygon, got n = " + std::to_string(t.n));
  }
  const int h = t.n / 2;
  std::set<Diagonal> set(t.diagonals.begin(), t.diagonals.end());
  for (const auto& [i, j] : t.diagonals) {
    int a = (i + h) % t.n;
    int b = (j + h) % t.n;
    if (a > b) std::swap(a, b);
    if (!set.count({a, b})) return false;
  }
  return true;
}

CyclicSequence canonical_rotation(const CyclicSequence& q, bool with_reflections) {
  CyclicSequence best = q;
  const long n = static_cast<long>(q.size());
  for (long k = 1; k < n; ++k) best = std::min(best, q.rotated(k));
  if (with_reflections) {
    const CyclicSequence r = q.reversed();
    for (long k = 0; k < n; ++k) best = std::min(best, r.rotated(k));
  }
  return best;
}

namespace {

std::vector<CyclicSequence> dedupe(std::vector<CyclicSequence> in, bool with_reflections) {
  for (auto& s : in) s = canonical_rotation(s, with_reflections);
  std::sort(in.begin(), in.end());
  in.erase(std::unique(in.begin(), in.end()), in.end());
  return in;
}

}  // namespace

std::vector<CyclicSequence> half_quiddities(int two_n, HalfQuiddityOptions opts) {
  if (two_n < 4 || two_n % 2 != 0) {
    throw std::invalid_argument("half_quiddities: polygon size must be even and >= 4, got " +
                                std::to_string(two_n));
  }
  const std::size_t n = static_cast<std::size_t>(two_n / 2);
  std::vector<CyclicSequence> out;
  for (const auto& t : enumerate_triangulations(two_n)) {
    if (!is_centrally_symmetric(t)) continue;
    const Quiddity q = quiddity(t);
    const auto& v = q.values();
    if (!std::equal(v.begin(), v.begin() + static_cast<long>(n), v.begin() + static_cast<long>(n))) {
      throw std::logic_error("quiddity of a centrally symmetric triangulation is not n-periodic");
    }
    out.emplace_back(std::vector<BigInt>(v.begin(), v.begin() + static_cast<long>(n)));
  }
  if (opts.up_to_rotation || opts.merge_reflections) return dedupe(std::move(out), opts.merge_reflections);
  return out;
}

namespace {

std::int64_t search_space(const SolveQuery& q) {
  if (q.n < 1) throw std::invalid_argument("solve: n must be >= 1");
  if (q.max_entry < 1) throw std::invalid_argument("solve: max_entry must be >= 1");
  constexpr std::int64_t kLimit = std::int64_t{1} << 36;
  std::int64_t total = 1;
  for (int i = 0; i < q.n; ++i) {
    total *= q.max_entry;
    if (total > kLimit) throw std::invalid_argument("solve: search space max_entry^n is too large");
  }
  return total;
}

// Fills `digits` with the entries of the idx-th tuple in lexicographic order.
void decode(std::int64_t idx, int max_entry, std::vector<BigInt>& digits) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = static_cast<long>(idx % max_entry) + 1;
    idx /= max_entry;
  }
}

bool accept(const std::vector<BigInt>& tuple, const SolveQuery& q) {
  if (sgn(rotundus_definition<BigInt>(tuple, BigInt(1))) != 0) return false;
  return !q.tp_only || is_totally_positive(CyclicSequence(tuple), q.n);
}

std::vector<CyclicSequence> finish(std::vector<CyclicSequence> found, const SolveQuery& q) {
  if (q.up_to_rotation || q.merge_reflections) return dedupe(std::move(found), q.merge_reflections);
  return found;
}

}  // namespace

std::vector<CyclicSequence> solve_rotundus(const SolveQuery& q) {
  const std::int64_t total = search_space(q);
  std::vector<std::vector<CyclicSequence>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<BigInt> tuple(static_cast<std::size_t>(q.n));
    // Static scheduling hands out contiguous blocks in thread order, so the
    // concatenation below is already lexicographic.
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      decode(idx, q.max_entry, tuple);
      if (accept(tuple, q)) local.emplace_back(tuple);
    }
  }

  std::vector<CyclicSequence> found;
  for (auto& local : per_thread) {
    found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  return finish(std::move(found), q);
}

namespace reference {

namespace {

void enumerate_rec(int lo, int hi, std::vector<DiagonalSet>& out) {
  if (hi - lo < 2) {
    out.push_back({});
    return;
  }
  for (int k = lo + 1; k < hi; ++k) {
    std::vector<DiagonalSet> left, right;
    enumerate_rec(lo, k, left);
    enumerate_rec(k, hi, right);
    for (const auto& l : left) {
      for (const auto& r : right) {
        DiagonalSet d = l;
        d.insert(d.end(), r.begin(), r.end());
        if (k - lo >= 2) d.emplace_back(lo, k);
        if (hi - k >= 2) d.emplace_back(k, hi);
        out.push_back(std::move(d));
      }
    }
  }
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations_serial(int n) {
  require_polygon(n);
  std::vector<DiagonalSet> sets;
  enumerate_rec(0, n - 1, sets);
  std::vector<Triangulation> out;
  out.reserve(sets.size());
  for (auto& d : sets) {
    std::sort(d.begin(), d.end());
    out.push_back(Triangulation{n, std::move(d)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclicSequence> solve_rotundus_serial(const SolveQuery& q) {
  const std::int64_t total = search_space(q);
  std::vector<CyclicSequence> found;
  std::vector<BigInt> tuple(static_cast<std::size_t>(q.n));
  for (std::int64_t idx = 0; idx < total; ++idx) {
    decode(idx, q.max_entry, tuple);
    if (accept(tuple, q)) found.emplace_back(tuple);
  }
  return finish(std::move(found), q);
}

}  // namespace reference

}  // namespace rotundus
