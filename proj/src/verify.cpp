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

#include "rotundus/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rotundus/chebyshev.hpp"
#include "rotundus/continuant.hpp"
#include "rotundus/hankel.hpp"
#include "rotundus/matrix.hpp"
#include "rotundus/rotundus.hpp"
#include "rotundus/triangulation.hpp"

namespace rotundus {

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS" : "FAIL") << "  [" << c.group << "] " << c.name << " (" << c.cases
       << " cases)";
    if (!c.passed) os << "\n      counterexample: " << c.counterexample;
    os << "\n";
  }
  std::size_t failed = static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return !c.passed; }));
  os << (failed == 0 ? "all " + std::to_string(checks.size()) + " checks passed"
                     : std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed")
     << "\n";
  return os.str();
}

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> groups = {
      "continuant", "rotundus", "pfaffian", "block", "symmetric",
      "conway-coxeter", "triangulation", "chebyshev", "hankel"};
  return groups;
}

namespace {

class Recorder {
 public:
  Recorder(SuiteReport& report, std::string group, std::string name) : report_(report) {
    check_.group = std::move(group);
    check_.name = std::move(name);
  }
  ~Recorder() { report_.checks.push_back(std::move(check_)); }
  Recorder(const Recorder&) = delete;
  Recorder& operator=(const Recorder&) = delete;

  /// Counts one case; keeps the first counterexample.
  void expect(bool ok, const std::string& witness) {
    ++check_.cases;
    if (!ok && check_.passed) {
      check_.passed = false;
      check_.counterexample = witness;
    }
  }
  template <typename F>
  void expect_lazy(bool ok, F&& witness) {
    expect(ok, ok ? std::string() : witness());
  }

 private:
  SuiteReport& report_;
  SuiteCheck check_;
};

std::vector<BigInt> random_tuple(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<BigInt> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(dist(rng));
  return v;
}

std::string tuple_text(const std::vector<BigInt>& v) { return CyclicSequence(v).to_string(); }

class Suite {
 public:
  explicit Suite(const SuiteOptions& opts) : opts_(opts), rng_(opts.seed) {
    if (opts.n_max < 2) throw std::invalid_argument("verify: n_max must be >= 2");
  }

  SuiteReport run() {
    const auto& groups = suite_groups();
    if (opts_.group != "all" && std::find(groups.begin(), groups.end(), opts_.group) == groups.end()) {
      throw std::invalid_argument("unknown suite '" + opts_.group + "'");
    }
    if (want("continuant")) continuant_checks();
    if (want("rotundus")) rotundus_checks();
    if (want("pfaffian")) pfaffian_checks();
    if (want("block")) block_checks();
    if (want("symmetric")) symmetric_checks();
    if (want("conway-coxeter")) conway_coxeter_checks();
    if (want("triangulation")) triangulation_checks();
    if (want("chebyshev")) chebyshev_checks();
    if (want("hankel")) hankel_checks();
    return std::move(report_);
  }

 private:
  bool want(const char* group) const { return opts_.group == "all" || opts_.group == group; }
  std::size_t n_max() const { return static_cast<std::size_t>(opts_.n_max); }
  std::size_t numeric_max(std::size_t cap) const { return std::min(2 * n_max(), cap); }

  void continuant_checks() {
    {
      Recorder r(report_, "continuant", "three routes agree");
      r.expect(continuant(std::span<const BigInt>{}, ContinuantMethod::determinant) == 1 &&
                   continuant(std::span<const BigInt>{}, ContinuantMethod::euler) == 1,
               "K_0 != 1");
      for (std::size_t n = 1; n <= n_max(); ++n) {
        const MultiPoly e = continuant_symbolic(n, ContinuantMethod::euler);
        const MultiPoly d = continuant_symbolic(n, ContinuantMethod::determinant);
        const MultiPoly c = continuant_symbolic(n, ContinuantMethod::recurrence);
        r.expect_lazy(d == e && c == e, [&] { return "symbolic n=" + std::to_string(n); });
      }
      for (std::size_t n = 1; n <= numeric_max(20); ++n) {
        for (int t = 0; t < 10; ++t) {
          const auto a = random_tuple(rng_, n, -9, 9);
          const BigInt k = continuant(a, ContinuantMethod::recurrence);
          r.expect_lazy(continuant(a, ContinuantMethod::determinant) == k &&
                            continuant(a, ContinuantMethod::euler) == k,
                        [&] { return tuple_text(a); });
        }
      }
    }
    {
      Recorder r(report_, "continuant", "K_n is palindromic");
      for (std::size_t n = 1; n <= n_max(); ++n) {
        const MultiPoly k = continuant_symbolic(n);
        r.expect_lazy(k.reversed() == k, [&] { return k.to_string(); });
      }
    }
    {
      Recorder r(report_, "continuant", "monodromy entries are continuants, det 1");
      for (std::size_t n = 2; n <= n_max(); ++n) {
        const auto vars = variables(n);
        const MultiPoly one = MultiPoly::constant(n, BigInt(1));
        const std::span<const MultiPoly> a(vars);
        auto K = [&](std::size_t from, std::size_t len) {
          return continuant<MultiPoly>(a.subspan(from, len), one, ContinuantMethod::recurrence);
        };
        const auto m = monodromy_symbolic(n);
        const bool ok = m.a == K(0, n) && m.b == K(0, n - 1) && m.c == -K(1, n - 1) &&
                        m.d == -K(1, n - 2) && m.determinant() == one;
        r.expect_lazy(ok, [&] { return "n=" + std::to_string(n); });
      }
    }
    {
      Recorder r(report_, "continuant", "difference orbit from (0,1) reaches K_n");
      for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 12);
        const auto a = random_tuple(rng_, n, -9, 9);
        const auto orbit = difference_orbit(CyclicSequence(a), BigInt(0), BigInt(1), n);
        r.expect_lazy(orbit.back() == continuant(a), [&] { return tuple_text(a); });
      }
    }
  }

  void rotundus_checks() {
    {
      Recorder r(report_, "rotundus", "cyclic invariance");
      for (std::size_t n = 1; n <= n_max(); ++n) {
        const MultiPoly p = rotundus_symbolic(n);
        for (std::size_t k = 0; k < n; ++k) {
          r.expect_lazy(p.cyclic_shift(static_cast<long>(k)) == p,
                        [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
        }
      }
      for (std::size_t n = 1; n <= numeric_max(12); ++n) {
        const auto a = random_tuple(rng_, n, -9, 9);
        const CyclicSequence s(a);
        const BigInt v = rotundus(a);
        for (std::size_t k = 1; k < n; ++k) {
          r.expect_lazy(rotundus(s.rotated(static_cast<long>(k)).span()) == v, [&] { return s.to_string(); });
        }
      }
    }
    {
      Recorder r(report_, "rotundus", "four routes agree");
      const RotundusMethod methods[] = {RotundusMethod::cyclic_euler, RotundusMethod::trace,
                                        RotundusMethod::pfaffian_square};
      for (std::size_t n = 1; n <= std::min<std::size_t>(n_max(), kSymbolicPfaffianMaxN); ++n) {
        const MultiPoly ref = rotundus_symbolic(n, RotundusMethod::definition);
        for (auto m : methods) {
          r.expect_lazy(rotundus_symbolic(n, m) == ref, [&] { return "symbolic n=" + std::to_string(n); });
        }
      }
      for (std::size_t n = 1; n <= numeric_max(10); ++n) {
        for (int t = 0; t < 10; ++t) {
          const auto a = random_tuple(rng_, n, -9, 9);
          const BigInt ref = rotundus(a, RotundusMethod::definition);
          for (auto m : methods) r.expect_lazy(rotundus(a, m) == ref, [&] { return tuple_text(a); });
        }
      }
    }
    {
      Recorder r(report_, "rotundus", "R_n = 0 iff M_n^2 = -Id");
      for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 8);
        const auto a = random_tuple(rng_, n, -2, 3);
        const auto m = monodromy(a);
        const bool squared_minus_id = (m * m) == Mat2<BigInt>{BigInt(-1), BigInt(0), BigInt(0), BigInt(-1)};
        r.expect_lazy((sgn(rotundus(a)) == 0) == squared_minus_id, [&] { return tuple_text(a); });
      }
    }
  }

  template <typename T>
  SquareMatrix<T> maybe_corrupt(SquareMatrix<T> omega) const {
    if (!opts_.corrupt_omega) return omega;
    // Flip the corner pair of the upper-left E block only; the matrix stays
    // skew-symmetric but is no longer Omega_n.
    const std::size_t n = omega.dim() / 2;
    omega(0, n - 1) = -omega(0, n - 1);
    omega(n - 1, 0) = -omega(n - 1, 0);
    return omega;
  }

  void pfaffian_checks() {
    Recorder r(report_, "pfaffian", "det(Omega_n) = R_n^2 and pf(Omega_n)^2 = R_n^2");
    for (std::size_t n = 1; n <= std::min<std::size_t>(n_max(), 5); ++n) {
      const auto vars = variables(n);
      const MultiPoly one = MultiPoly::constant(n, BigInt(1));
      const std::span<const MultiPoly> a(vars);
      const auto omega = maybe_corrupt(rotundus_matrix<MultiPoly>(a, one, MatrixKind::skew));
      const auto rep = check_pfaffian_identity(omega, rotundus_definition<MultiPoly>(a, one));
      r.expect_lazy(rep.holds(), [&] { return "symbolic n=" + std::to_string(n) + ", Omega = " + to_string(omega); });
    }
    for (std::size_t n = 1; n <= numeric_max(10); ++n) {
      for (int t = 0; t < 10; ++t) {
        const auto a = random_tuple(rng_, n, -9, 9);
        const auto omega = maybe_corrupt(rotundus_matrix(a, MatrixKind::skew));
        const auto rep = check_pfaffian_identity(omega, rotundus(a));
        r.expect_lazy(rep.holds(), [&] { return "a = " + tuple_text(a) + ", Omega = " + to_string(omega); });
      }
    }
  }

  void block_checks() {
    Recorder r(report_, "block", "det[[xE,A],[-A^T,yE]] = (det A - xy det A_mid)^2");
    const MultiPoly x = MultiPoly::variable(2, 1);
    const MultiPoly y = MultiPoly::variable(2, 2);
    for (std::size_t dim = 2; dim <= std::min<std::size_t>(n_max(), 6); ++dim) {
      for (int t = 0; t < 5; ++t) {
        const auto entries = random_tuple(rng_, dim * dim, -9, 9);
        SquareMatrix<MultiPoly> a(dim, MultiPoly::zero(2));
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j) a(i, j) = MultiPoly::constant(2, entries[i * dim + j]);
        const MultiPoly rhs = det(a) - x * y * det(mid(a));
        r.expect_lazy(det(block_skew(x, y, a)) == rhs * rhs, [&] { return "A = " + to_string(a); });
      }
    }
  }

  void symmetric_checks() {
    Recorder r(report_, "symmetric", "det[[E',C],[C,E']] = (-1)^n (R_n^2 - 4)");
    for (std::size_t n = 1; n <= std::min<std::size_t>(n_max(), 5); ++n) {
      const MultiPoly rn = rotundus_symbolic(n);
      MultiPoly expected = rn * rn - MultiPoly::constant(n, BigInt(4));
      if (n % 2 == 1) expected = -expected;
      r.expect_lazy(det(rotundus_matrix_symbolic(n, MatrixKind::symmetric)) == expected,
                    [&] { return "symbolic n=" + std::to_string(n); });
    }
  }

  void conway_coxeter_checks() {
    Recorder r(report_, "conway-coxeter", "quiddities solve the frieze system, M_n = -Id");
    for (int m = 3; m <= std::min(opts_.n_max + 3, 9); ++m) {
      for (const auto& t : enumerate_triangulations(m)) {
        const Quiddity q = quiddity(t);
        bool ok = coco_check(q) && is_totally_positive(q, m - 4);
        BigInt sum(0);
        for (const auto& v : q.values()) sum += v;
        ok = ok && sum == 3 * (m - 2);
        for (long i = 1; i <= m && ok; ++i) {
          ok = continuant(q.window(i, static_cast<std::size_t>(m - 1))) == 0 &&
               continuant(q.window(i, static_cast<std::size_t>(m))) == -1;
        }
        r.expect_lazy(ok, [&] { return q.to_string(); });
      }
    }
  }

  void triangulation_checks() {
    Recorder r(report_, "triangulation", "totally positive solutions of R_n = 0 are half quiddities");
    for (int n = 3; n <= std::min(opts_.n_max, 5); ++n) {
      const auto halves = half_quiddities(2 * n, {.up_to_rotation = true});
      const auto raw = half_quiddities(2 * n);
      for (const auto& h : raw) {
        r.expect_lazy(sgn(rotundus(h.span())) == 0 && is_totally_positive(h, n),
                      [&] { return h.to_string(); });
      }
      const auto solved = solve_rotundus({.n = n, .max_entry = 2 * n - 2, .tp_only = true, .up_to_rotation = true});
      r.expect_lazy(solved == halves, [&] { return "set mismatch at n=" + std::to_string(n); });
    }
  }

  void chebyshev_checks() {
    Recorder r(report_, "chebyshev", "Chebyshev specializations");
    for (const auto& c : verify_chebyshev_identities(std::max(opts_.n_max, 2))) {
      r.expect_lazy(c.passed, [&] { return c.name + " at n=" + std::to_string(c.n) + ": " + c.detail; });
    }
  }

  void hankel_checks() {
    std::size_t rejected = 0;
    {
    Recorder r(report_, "hankel", "Hankel reconstruction round trip");
    std::vector<BigInt> a(7, BigInt(2));
    a[0] = 1;
    const auto c = moments_from_sequence(a, 13);
    r.expect(verify_hankel(c, a).all_passed(), "a = (1,2,2,...)");
    for (int t = 0; t < 20; ++t) {
      const std::size_t len = 2 + static_cast<std::size_t>(t % 5);
      const auto seq = random_tuple(rng_, len, 1, 5);
      try {
        const auto moments = moments_from_sequence(seq, 2 * len - 1);
        r.expect_lazy(verify_hankel(moments, seq).all_passed(), [&] { return tuple_text(seq); });
      } catch (const ReconstructionError&) {
        ++rejected;
      }
    }
    }
    if (rejected) {
      report_.checks.push_back({"hankel", "inputs rejected for a vanishing cofactor: " + std::to_string(rejected),
                                true, rejected, {}});
    }
  }

  SuiteOptions opts_;
  std::mt19937_64 rng_;
  SuiteReport report_;
};

}  // namespace

SuiteReport verify_suite(const SuiteOptions& opts) { return Suite(opts).run(); }

}  // namespace rotundus
