// Copyright 2026 The ubound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// ubound — exact lower bounds for union probabilities and finite-prefix
// sequence functionals.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 domain error, 4 resource guard, 5 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ubound/bounds.hpp"
#include "ubound/dyadic.hpp"
#include "ubound/reference.hpp"
#include "ubound/search.hpp"
#include "ubound/sequence.hpp"
#include "ubound/space.hpp"

namespace {

using namespace ubound;

enum ExitCode {
  kOk = 0,
  kVerifyFail = 1,
  kParseError = 2,
  kDomainError = 3,
  kResourceGuard = 4,
  kIoError = 5,
};

constexpr long kMaxDyadicIndex = 1L << 20;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ParsedSpace load_space(const std::string& path) {
  ParsedSpace parsed = parse_space(read_file(path));
  for (const std::string& warning : parsed.warnings) {
    std::cerr << path << ": warning: " << warning << "\n";
  }
  return parsed;
}

// Value rows: <name> \t <num/den> \t <decimal>.
void print_value_row(const std::string& name, const Rational& value) {
  std::cout << name << '\t' << fraction_string(value) << '\t'
            << decimal_string(value) << '\n';
}

void print_real_row(const std::string& name, const Real& value) {
  std::cout << name << '\t' << '-' << '\t' << decimal_string(value) << '\n';
}

int cmd_bounds(const std::string& input, const std::string& selector) {
  const EventSystem sys = load_space(input).system;
  const JointMatrix joint = joint_matrix(sys);

  const bool all = selector == "all";
  if (all || selector == "gk") {
    const GkSolution solution = gk_solve(joint);
    print_value_row("gk", solution.bound);
    for (std::size_t i = 0; i < solution.gamma.size(); ++i) {
      print_value_row("gk.gamma." + sys.name(i), solution.gamma[i]);
    }
    std::cout << "gk.rank\t" << solution.rank << "\t-\n";
    for (std::size_t i : solution.free_indices) {
      std::cout << "gk.free\t" << sys.name(i) << "\t-\n";
    }
  }
  if (all || selector == "kat") {
    const KatResult kat = kat_bound(joint);
    print_value_row("kat", kat.bound);
    for (std::size_t i = 0; i < kat.terms.size(); ++i) {
      const KatTerm& term = kat.terms[i];
      print_value_row("kat.S." + sys.name(i), term.row_sum);
      print_value_row("kat.theta." + sys.name(i), term.theta);
      print_value_row("kat.term." + sys.name(i), term.value);
    }
  }
  if (all || selector == "ce") {
    print_value_row("ce", chung_erdos(joint));
  }
  if (all || selector == "union") {
    print_value_row("union", union_prob(sys));
  }
  return kOk;
}

int cmd_verify() {
  const VerifyReport report = verify_reference();
  for (const CheckResult& check : report.checks) {
    std::cout << (check.pass ? "PASS" : "FAIL") << '\t' << check.name << '\t'
              << check.detail << '\n';
  }
  std::cout << (report.all_pass() ? "PASS" : "FAIL") << "\toverall\t"
            << report.checks.size() << " checks\n";
  return report.all_pass() ? kOk : kVerifyFail;
}

Subsequence parse_tau(const std::string& spec) {
  if (spec == "identity") return Subsequence::identity();
  if (spec.rfind("stride:", 0) == 0) {
    const std::string expr = spec.substr(7);
    // "stride:2^n" walks one index per dyadic level starting at 1.
    if (expr == "2^n") return Subsequence::powers_of_two();
    long step = 0;
    try {
      step = std::stol(expr);
    } catch (const std::exception&) {
      throw std::domain_error("bad stride '" + expr + "'");
    }
    return Subsequence::stride(step);
  }
  if (spec.rfind("list:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::istringstream in(read_file(path));
    std::vector<long> indices;
    long value = 0;
    while (in >> value) indices.push_back(value);
    try {
      return Subsequence::from_list(std::move(indices));
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, 1, std::string(e.what()) + " in '" + path + "'");
    }
  }
  throw std::domain_error(
      "--tau expects identity, stride:<k>, stride:2^n, or list:<path>");
}

int cmd_dyadic(long N, const std::vector<std::string>& p_tokens,
               const std::string& tau_spec) {
  if (N < 2) throw std::domain_error("--N must be >= 2");
  if (N > kMaxDyadicIndex) {
    throw ResourceLimitError("--N exceeds the 2^20 resolution guard");
  }
  const Subsequence tau = parse_tau(tau_spec);

  std::vector<long> checkpoints;
  for (long n = 1; n <= N / 2; n *= 2) checkpoints.push_back(n);
  checkpoints.push_back(N);

  long max_index = 0;
  for (long n : checkpoints) max_index = std::max(max_index, tau(n));
  if (max_index > kMaxDyadicIndex) {
    throw ResourceLimitError(
        "subsequence reaches past the 2^20 resolution guard");
  }

  std::vector<Rational> p_list;
  for (const std::string& token : p_tokens) {
    const Rational p = parse_rational(token);
    if (p <= 0 || p >= 1) {
      throw std::domain_error("chain exponents must lie strictly in (0,1): " +
                              token);
    }
    p_list.push_back(p);
  }

  const DyadicConfig cfg = DyadicConfig::for_max_index(max_index);
  std::cout << "# resolution 2^" << cfg.level_count() << ", tau " << tau_spec
            << "\n";
  std::cout << "# chain rows: n p moment rhs minP leftint leftbound steps "
               "verdict\n";
  const auto reports = verify_chain_sweep(cfg, tau, checkpoints, p_list);
  bool all_ok = true;
  for (const ChainReport& r : reports) {
    all_ok = all_ok && r.all_ok();
    std::cout << "chain\t" << r.n << '\t' << fraction_string(r.p) << '\t'
              << decimal_string(r.moment) << '\t' << decimal_string(r.rhs)
              << '\t' << fraction_string(r.min_marginal) << '\t'
              << fraction_string(r.left_integral) << '\t'
              << decimal_string(r.left_integral_bound) << '\t'
              << (r.marginal_floor_ok ? "a" : "-")
              << (r.counting_ok ? "b" : "-") << (r.moment_ok ? "c" : "-")
              << '\t' << (r.all_ok() ? "PASS" : "FAIL") << '\n';
  }

  const MsEstimate ms = ms_estimate(dyadic_sequence(cfg), tau, N,
                                    make_rational(1, 2), default_p_grid());
  std::cout << "# ms rows: p windowed-moment value\n";
  for (const MsPoint& point : ms.curve) {
    std::cout << "ms\t" << fraction_string(point.p) << '\t'
              << decimal_string(point.moment_surrogate) << '\t'
              << decimal_string(point.value) << '\n';
  }
  print_real_row("ms.sup", ms.supremum);

  std::cout << (all_ok ? "PASS" : "FAIL") << "\tchain\t" << reports.size()
            << " checks\n";
  return all_ok ? kOk : kVerifyFail;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::ios_base::failure("cannot write '" + path.string() + "'");
  }
  out << content;
  if (!out) {
    throw std::ios_base::failure("write failed for '" + path.string() + "'");
  }
}

std::string hit_summary_row(std::size_t index, const GapHit& hit) {
  std::ostringstream row;
  row << "hit_" << index << '\t' << hit.trial << '\t'
      << fraction_string(hit.gap) << '\t' << fraction_string(hit.gk) << '\t'
      << fraction_string(hit.kat) << '\t' << fraction_string(hit.union_prob)
      << '\n';
  return row.str();
}

int cmd_search(const SearchConfig& cfg, const std::string& include,
               const std::string& outdir) {
  std::vector<GapHit> hits;
  if (!include.empty()) {
    const EventSystem sys = load_space(include).system;
    if (auto hit = evaluate_gap(sys, 0)) {
      hits.push_back(std::move(*hit));
    } else {
      std::cerr << include << ": no gap (kat <= gk)\n";
    }
  }

  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<GapHit> found = search_gaps(cfg, workers);
  for (auto& hit : found) hits.push_back(std::move(hit));
  std::sort(hits.begin(), hits.end(), [](const GapHit& a, const GapHit& b) {
    if (a.gap != b.gap) return a.gap > b.gap;
    return a.trial < b.trial;
  });

  std::ostringstream summary;
  summary << "# hit\ttrial\tgap\tgk\tkat\tunion\n";
  for (std::size_t i = 0; i < hits.size(); ++i) {
    summary << hit_summary_row(i + 1, hits[i]);
  }
  std::cout << summary.str();
  std::cout << "# " << hits.size() << " hits in " << cfg.trials
            << " trials (seed " << cfg.seed << ")\n";

  if (!outdir.empty()) {
    const std::filesystem::path dir(outdir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw std::ios_base::failure("cannot create '" + outdir +
                                   "': " + ec.message());
    }
    for (std::size_t i = 0; i < hits.size(); ++i) {
      write_text_file(dir / ("hit_" + std::to_string(i + 1) + ".space"),
                      serialize_space(hits[i].system));
    }
    write_text_file(dir / "summary.tsv", summary.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ubound — exact lower bounds for probabilities of unions of events\n"
      "and finite-prefix sequence functionals.\n\n"
      "Value rows are tab-separated: <name> <num/den> <decimal-12-digits>.\n"
      "Search summary rows: hit trial gap gk kat union.\n"
      "Exit codes: 0 ok, 1 verification fail, 2 parse, 3 domain, "
      "4 resource guard, 5 I/O."};
  app.require_subcommand(1);

  auto* bounds_cmd =
      app.add_subcommand("bounds", "compute bounds for a space file");
  std::string input;
  std::string selector = "all";
  bounds_cmd->add_option("--input", input, "space file")->required();
  bounds_cmd->add_option("--bound", selector, "gk|kat|ce|union|all")
      ->check(CLI::IsMember({"gk", "kat", "ce", "union", "all"}));

  app.add_subcommand("verify",
                     "check the built-in reference instance against its "
                     "known exact values");

  auto* dyadic_cmd = app.add_subcommand(
      "dyadic", "verify the moment inequality chain on the dyadic family");
  long N = 0;
  std::vector<std::string> p_tokens{"0.5", "0.25", "0.1", "0.05"};
  std::string tau_spec = "identity";
  dyadic_cmd->add_option("--N", N, "prefix length bound")->required();
  dyadic_cmd->add_option("--p", p_tokens, "chain exponents in (0,1)")
      ->delimiter(',');
  dyadic_cmd->add_option("--tau", tau_spec,
                         "identity | stride:<k> | stride:2^n | list:<path>");

  auto* search_cmd = app.add_subcommand(
      "search", "randomized search for systems with kat > gk");
  SearchConfig cfg;
  std::string include;
  std::string outdir;
  search_cmd->add_option("--atoms", cfg.atoms, "atom count")
      ->check(CLI::Range(2, 62));
  search_cmd->add_option("--events", cfg.events, "event count")
      ->check(CLI::Range(2, 1000000));
  search_cmd->add_option("--granularity", cfg.granularity,
                         "probabilities are multiples of 1/granularity");
  search_cmd->add_option("--trials", cfg.trials, "number of trials")
      ->required()
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", cfg.seed, "64-bit seed");
  search_cmd->add_option("--include", include,
                         "also evaluate this space file (reported as trial 0)");
  search_cmd->add_option("--out", outdir, "write hit files and summary.tsv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(input, selector);
    if (app.got_subcommand("verify")) return cmd_verify();
    if (dyadic_cmd->parsed()) return cmd_dyadic(N, p_tokens, tau_spec);
    if (search_cmd->parsed()) {
      cfg.validate();
      return cmd_search(cfg, include, outdir);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}
