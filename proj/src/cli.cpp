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

#include "rotundus/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "rotundus/chebyshev.hpp"
#include "rotundus/continuant.hpp"
#include "rotundus/hankel.hpp"
#include "rotundus/json_io.hpp"
#include "rotundus/rotundus.hpp"
#include "rotundus/triangulation.hpp"
#include "rotundus/verify.hpp"

namespace rotundus::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailed {};

std::vector<BigInt> parse_values(const std::string& text, const char* flag) {
  try {
    return parse_int_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

// Input shared by continuant, rotundus, det and pfaffian: either explicit
// integers or the symbolic variables a_1..a_n.
struct SequenceInput {
  std::string values;
  bool symbolic = false;
  int n = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--values", values, "comma separated integers, e.g. 5,2,2,2,1");
    cmd->add_flag("--symbolic", symbolic, "use the variables a1..an");
    cmd->add_option("--n", n, "number of variables with --symbolic");
  }

  bool numeric() const { return !values.empty(); }

  std::vector<BigInt> numbers() const { return parse_values(values, "--values"); }

  std::size_t symbolic_n(std::size_t min_n) const {
    if (!symbolic) throw UsageError("--values: required unless --symbolic is given");
    if (!values.empty()) throw UsageError("--values: cannot be combined with --symbolic");
    if (n < static_cast<int>(min_n)) {
      throw UsageError("--n: must be at least " + std::to_string(min_n) + " with --symbolic");
    }
    return static_cast<std::size_t>(n);
  }
};

void print_poly(std::ostream& out, const MultiPoly& p, bool as_json) {
  if (as_json) {
    out << json{{"polynomial", to_json(p)}, {"text", p.to_string()}}.dump() << "\n";
  } else {
    out << p.to_string() << "\n";
  }
}

void print_value(std::ostream& out, const BigInt& v, bool as_json) {
  if (as_json) {
    out << json{{"value", v.get_str()}}.dump() << "\n";
  } else {
    out << v.get_str() << "\n";
  }
}

json read_json_source(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("--matrix: cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("--matrix: invalid JSON: ") + e.what());
  }
}

MatrixKind parse_kind(const std::string& kind) {
  if (kind == "skew") return MatrixKind::skew;
  if (kind == "symmetric") return MatrixKind::symmetric;
  throw UsageError("--kind: expected skew or symmetric, got '" + kind + "'");
}

// Matrix chosen by --matrix or by --rotundus with a sequence input.
struct MatrixInput {
  std::string path;
  bool rotundus_matrix = false;
  std::string kind = "skew";
  SequenceInput seq;

  void attach(CLI::App* cmd) {
    cmd->add_option("--matrix", path, "matrix JSON file, '-' for stdin");
    cmd->add_flag("--rotundus", rotundus_matrix, "use the 2n x 2n rotundus matrix");
    cmd->add_option("--kind", kind, "skew or symmetric (with --rotundus)");
    seq.attach(cmd);
  }

  AnyMatrix load() const {
    if (!path.empty() && rotundus_matrix) throw UsageError("--matrix: cannot be combined with --rotundus");
    if (!path.empty()) {
      try {
        return matrix_from_json(read_json_source(path));
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        throw UsageError(std::string("--matrix: ") + e.what());
      }
    }
    if (!rotundus_matrix) throw UsageError("--matrix: required unless --rotundus is given");
    const MatrixKind k = parse_kind(kind);
    if (seq.numeric()) {
      const auto a = seq.numbers();
      return rotundus::rotundus_matrix(a, k);
    }
    return rotundus_matrix_symbolic(seq.symbolic_n(1), k);
  }
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Continuants, the rotundus, Pfaffians and centrally symmetric triangulations"};
    app.name("rotundus-cli");
    app.require_subcommand(1);
    app.add_flag("--json", json_, "machine-readable output");

    add_continuant(app);
    add_rotundus(app);
    add_det(app);
    add_pfaffian(app);
    add_triangulate(app);
    add_solve(app);
    add_chebyshev(app);
    add_hankel(app);
    add_verify(app);
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    const auto first = std::find_if(args.begin(), args.end(),
                                    [](const std::string& a) { return a.empty() || a[0] != '-'; });
    const auto subs = app.get_subcommands({});
    if (first != args.end() && std::none_of(subs.begin(), subs.end(), [&](const CLI::App* s) {
          return s->get_name() == *first;
        })) {
      err_ << "error: unknown subcommand '" << *first << "'\n";
      return kExitUsage;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }

    try {
      action_();
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const VerificationFailed&) {
      return kExitVerificationFailed;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    return kExitOk;
  }

 private:
  void add_continuant(CLI::App& app) {
    auto* cmd = app.add_subcommand("continuant", "continuant K_n");
    auto* in = &continuant_in_;
    in->attach(cmd);
    cmd->add_option("--method", method_, "det, euler or rec");
    cmd->callback([this, in] {
      action_ = [this, in] {
        ContinuantMethod m;
        try {
          m = parse_continuant_method(method_.empty() ? (in->numeric() ? "rec" : "euler") : method_);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--method: ") + e.what());
        }
        if (in->numeric()) {
          print_value(out_, continuant(in->numbers(), m), json_);
        } else {
          print_poly(out_, continuant_symbolic(in->symbolic_n(1), m), json_);
        }
      };
    });
  }

  void add_rotundus(CLI::App& app) {
    auto* cmd = app.add_subcommand("rotundus", "rotundus R_n");
    auto* in = &rotundus_in_;
    in->attach(cmd);
    cmd->add_option("--method", method_, "def, cyclic, trace or pf");
    cmd->add_flag("--verify-identities", verify_identities_, "check det(Omega_n) = pf(Omega_n)^2 = R_n^2");
    cmd->callback([this, in] {
      action_ = [this, in] {
        if (verify_identities_) return verify_identities(*in);
        RotundusMethod m;
        try {
          m = parse_rotundus_method(method_.empty() ? "def" : method_);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--method: ") + e.what());
        }
        if (in->numeric()) {
          const auto a = in->numbers();
          print_value(out_, rotundus(a, m), json_);
        } else {
          const std::size_t n = in->symbolic_n(1);
          if (m == RotundusMethod::pfaffian_square && n > kSymbolicPfaffianMaxN) {
            throw UsageError("--n: the pf method is limited to n <= " + std::to_string(kSymbolicPfaffianMaxN) +
                             " symbolically");
          }
          print_poly(out_, rotundus_symbolic(n, m), json_);
        }
      };
    });
  }

  template <typename T>
  void report_identity(const PfaffianIdentityReport<T>& rep) {
    auto text = [](const T& v) {
      if constexpr (std::is_same_v<T, BigInt>) {
        return v.get_str();
      } else {
        return v.to_string();
      }
    };
    if (json_) {
      json j{{"det", text(rep.determinant)},
             {"pfaffian", text(rep.pfaffian)},
             {"rotundus", text(rep.rotundus)},
             {"det_equals_r_squared", rep.det_matches},
             {"pf_squared_equals_r_squared", rep.pf_squared_matches}};
      j["sign"] = rep.sign ? json(*rep.sign) : json(nullptr);
      out_ << j.dump() << "\n";
    } else {
      out_ << "R_n        = " << text(rep.rotundus) << "\n"
           << "pf(Omega)  = " << text(rep.pfaffian) << "\n"
           << "det(Omega) = R_n^2 : " << (rep.det_matches ? "yes" : "NO") << "\n"
           << "pf^2       = R_n^2 : " << (rep.pf_squared_matches ? "yes" : "NO") << "\n"
           << "sign pf/R_n        : " << (rep.sign ? std::to_string(*rep.sign) : std::string("undefined"))
           << "\n";
    }
    if (!rep.holds()) throw VerificationFailed{};
  }

  void verify_identities(const SequenceInput& in) {
    if (in.numeric()) {
      report_identity(verify_pfaffian_identity(in.numbers()));
      return;
    }
    if (!in.symbolic && in.n < 1) throw UsageError("--n: required with --verify-identities");
    const std::size_t n = static_cast<std::size_t>(in.n);
    if (n < 1) throw UsageError("--n: must be at least 1");
    if (n > 8) throw UsageError("--n: symbolic identity check is limited to n <= 8");
    report_identity(verify_pfaffian_identity_symbolic(n));
  }

  void add_det(CLI::App& app) {
    auto* cmd = app.add_subcommand("det", "exact determinant");
    det_in_.attach(cmd);
    cmd->callback([this] {
      action_ = [this] {
        std::visit(
            [this](const auto& m) {
              const auto d = det(m);
              if constexpr (std::is_same_v<std::decay_t<decltype(d)>, BigInt>) {
                print_value(out_, d, json_);
              } else {
                print_poly(out_, d, json_);
              }
            },
            det_in_.load());
      };
    });
  }

  void add_pfaffian(CLI::App& app) {
    auto* cmd = app.add_subcommand("pfaffian", "Pfaffian of a skew-symmetric matrix");
    pf_in_.attach(cmd);
    cmd->callback([this] {
      action_ = [this] {
        std::visit(
            [this](const auto& m) {
              if (m.dim() % 2 != 0) throw UsageError("--matrix: Pfaffian needs an even dimension");
              if (!m.is_skew_symmetric()) throw UsageError("--matrix: matrix is not skew-symmetric");
              const auto p = pfaffian(m);
              if constexpr (std::is_same_v<std::decay_t<decltype(p)>, BigInt>) {
                print_value(out_, p, json_);
              } else {
                print_poly(out_, p, json_);
              }
            },
            pf_in_.load());
      };
    });
  }

  void add_triangulate(CLI::App& app) {
    auto* cmd = app.add_subcommand("triangulate", "triangulations of the convex n-gon");
    cmd->add_option("--n", tri_n_, "polygon size")->required();
    cmd->add_flag("--quiddities", quiddities_, "print quiddities");
    cmd->add_flag("--centrally-symmetric", centrally_symmetric_, "only centrally symmetric triangulations");
    cmd->callback([this] {
      action_ = [this] {
        if (tri_n_ < 3) throw UsageError("--n: polygon size must be at least 3");
        if (tri_n_ > 16) throw UsageError("--n: polygon size is limited to 16");
        if (centrally_symmetric_ && tri_n_ % 2 != 0) {
          throw UsageError("--centrally-symmetric: needs an even --n");
        }
        std::vector<Triangulation> list = enumerate_triangulations(tri_n_);
        if (centrally_symmetric_) {
          std::erase_if(list, [](const Triangulation& t) { return !is_centrally_symmetric(t); });
        }
        if (json_) {
          json arr = json::array();
          for (const auto& t : list) arr.push_back(to_json(t));
          out_ << arr.dump() << "\n";
          return;
        }
        for (const auto& t : list) {
          if (quiddities_) {
            out_ << quiddity(t).to_string() << "\n";
            continue;
          }
          std::string line;
          for (const auto& [i, j] : t.diagonals) line += (line.empty() ? "" : " ") + std::to_string(i) + "-" + std::to_string(j);
          out_ << (line.empty() ? "(no diagonals)" : line) << "\n";
        }
      };
    });
  }

  void add_solve(CLI::App& app) {
    auto* cmd = app.add_subcommand("solve", "positive integer solutions of R_n = 0");
    cmd->add_option("--n", solve_.n, "sequence length")->required();
    cmd->add_option("--max", solve_.max_entry, "largest entry")->required();
    cmd->add_flag("--tp", solve_.tp_only, "totally positive solutions only");
    cmd->add_flag("--up-to-rotation", solve_.up_to_rotation, "one representative per rotation class");
    cmd->add_flag("--merge-reflections", solve_.merge_reflections, "also identify reversed sequences");
    cmd->callback([this] {
      action_ = [this] {
        if (solve_.n < 1) throw UsageError("--n: must be at least 1");
        if (solve_.max_entry < 1) throw UsageError("--max: must be at least 1");
        std::vector<CyclicSequence> found;
        try {
          found = solve_rotundus(solve_);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--max: ") + e.what());
        }
        if (json_) {
          json arr = json::array();
          for (const auto& s : found) arr.push_back(to_json(s));
          out_ << json{{"n", solve_.n}, {"count", found.size()}, {"solutions", arr}}.dump() << "\n";
          return;
        }
        for (const auto& s : found) out_ << s.to_string() << "\n";
      };
    });
  }

  void add_chebyshev(CLI::App& app) {
    auto* cmd = app.add_subcommand("chebyshev", "Chebyshev polynomials");
    cmd->add_option("--kind", cheb_kind_, "first or second")->required();
    cmd->add_option("--n", cheb_n_, "degree")->required();
    cmd->add_flag("--normalized", normalized_, "2T_n(x/2) or U_n(x/2)");
    cmd->callback([this] {
      action_ = [this] {
        ChebyshevKind kind;
        try {
          kind = parse_chebyshev_kind(cheb_kind_);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--kind: ") + e.what());
        }
        if (cheb_n_ < 0) throw UsageError("--n: degree must be >= 0");
        const IntPoly p = normalized_ ? cheb_normalized(kind, cheb_n_) : cheb(kind, cheb_n_);
        if (json_) {
          out_ << json{{"kind", cheb_kind_}, {"n", cheb_n_}, {"normalized", normalized_},
                       {"coefficients", to_json(p)}, {"text", p.to_string()}}
                      .dump()
               << "\n";
        } else {
          out_ << p.to_string() << "\n";
        }
      };
    });
  }

  void add_hankel(CLI::App& app) {
    auto* cmd = app.add_subcommand("hankel", "moments from Hankel determinant conditions");
    cmd->add_option("--sequence", hankel_seq_, "comma separated a_0,a_1,...")->required();
    cmd->add_option("--count", hankel_count_, "number of moments")->required();
    cmd->callback([this] {
      action_ = [this] {
        const auto a = parse_values(hankel_seq_, "--sequence");
        if (hankel_count_ < 1) throw UsageError("--count: must be at least 1");
        const auto count = static_cast<std::size_t>(hankel_count_);
        if (a.size() < required_sequence_length(count)) {
          throw UsageError("--sequence: " + std::to_string(count) + " moments need " +
                           std::to_string(required_sequence_length(count)) + " entries");
        }
        MomentSequence c;
        try {
          c = moments_from_sequence(a, count);
        } catch (const ReconstructionError& e) {
          throw UsageError(std::string("--sequence: ") + e.what());
        }
        const HankelReport rep = verify_hankel(c, a);
        if (json_) {
          json moments = json::array();
          for (const auto& v : c) moments.push_back(v.get_str());
          json checks = json::array();
          for (const auto& h : rep.checks) {
            checks.push_back({{"matrix", std::string(1, h.family) + "_" + std::to_string(h.k)},
                              {"det", h.determinant.get_str()},
                              {"expected", h.expected.get_str()},
                              {"passed", h.passed()}});
          }
          out_ << json{{"moments", moments}, {"checks", checks}, {"passed", rep.all_passed()}}.dump() << "\n";
        } else {
          std::string line;
          for (const auto& v : c) line += (line.empty() ? "" : ",") + v.get_str();
          out_ << line << "\n";
          out_ << "hankel checks: " << (rep.all_passed() ? "pass" : "FAIL") << "\n";
        }
        if (!rep.all_passed()) throw VerificationFailed{};
      };
    });
  }

  void add_verify(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify", "run the identity suites");
    cmd->add_option("--suite", suite_.group, "all or one suite group");
    cmd->add_option("--n-max", suite_.n_max, "size bound");
    cmd->add_option("--seed", suite_.seed, "random seed");
    cmd->add_option("--inject-fault", fault_, "negative control: omega-sign");
    cmd->callback([this] {
      action_ = [this] {
        if (suite_.n_max < 2) throw UsageError("--n-max: must be at least 2");
        if (suite_.n_max > 8) throw UsageError("--n-max: limited to 8");
        if (!fault_.empty()) {
          if (fault_ != "omega-sign") throw UsageError("--inject-fault: only 'omega-sign' is known");
          suite_.corrupt_omega = true;
        }
        const auto& groups = suite_groups();
        if (suite_.group != "all" && std::find(groups.begin(), groups.end(), suite_.group) == groups.end()) {
          throw UsageError("--suite: unknown suite '" + suite_.group + "'");
        }
        const SuiteReport rep = verify_suite(suite_);
        if (json_) {
          json checks = json::array();
          for (const auto& c : rep.checks) {
            checks.push_back({{"group", c.group}, {"name", c.name}, {"passed", c.passed},
                              {"cases", c.cases}, {"counterexample", c.counterexample}});
          }
          out_ << json{{"checks", checks}, {"passed", rep.all_passed()}}.dump() << "\n";
        } else {
          out_ << rep.to_text();
        }
        if (!rep.all_passed()) throw VerificationFailed{};
      };
    });
  }

  std::ostream& out_;
  std::ostream& err_;
  std::function<void()> action_;
  bool json_ = false;

  SequenceInput continuant_in_, rotundus_in_;
  MatrixInput det_in_, pf_in_;
  std::string method_;
  bool verify_identities_ = false;
  int tri_n_ = 0;
  bool quiddities_ = false;
  bool centrally_symmetric_ = false;
  SolveQuery solve_;
  std::string cheb_kind_;
  int cheb_n_ = 0;
  bool normalized_ = false;
  std::string hankel_seq_;
  int hankel_count_ = 0;
  SuiteOptions suite_;
  std::string fault_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace rotundus::cli
