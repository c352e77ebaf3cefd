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

#include "ubound/dyadic.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ubound {

namespace {

// level(n) = ⌊log2 n⌋ + 1, so n = 2^(level-1) + offset with
// 0 <= offset < 2^(level-1).
int level_of(long n) { return std::bit_width(static_cast<unsigned long>(n)); }

// x <= y · (1 + 2^-40), evaluated in Real; absorbs the rounding of the
// right-hand evaluation only.
bool leq_with_slack(const Real& x, const Real& y) {
  static const Real slack = Real(1) + pow(Real(2), -40);
  return x <= y * slack;
}

AtomSet event_bits(const DyadicConfig& cfg, long n) {
  const int level = level_of(n);
  const long offset = n - (1L << (level - 1));
  const long cell_width = 1L << (cfg.level_count() - level);
  const long half = cfg.atom_count() / 2;

  AtomSet bits(static_cast<std::size_t>(cfg.atom_count()));
  bits.set(static_cast<std::size_t>(offset * cell_width),
           static_cast<std::size_t>(cell_width), true);
  bits.set(static_cast<std::size_t>(half), static_cast<std::size_t>(half),
           true);
  return bits;
}

class DyadicSequence final : public EventSequence::Impl {
 public:
  explicit DyadicSequence(const DyadicConfig& cfg)
      : cfg_(cfg), space_(dyadic_space(cfg)) {}

  const SpacePtr& space() const override { return space_; }

  Event at(long index) const override {
    if (index < 1 || index > cfg_.max_index()) {
      throw std::domain_error("event index " + std::to_string(index) +
                              " out of range for resolution 2^" +
                              std::to_string(cfg_.level_count()));
    }
    return Event(space_, event_bits(cfg_, index));
  }

  std::optional<long> length() const override { return cfg_.max_index(); }

 private:
  DyadicConfig cfg_;
  SpacePtr space_;
};

}  // namespace

DyadicConfig::DyadicConfig(int level_count) : level_count_(level_count) {
  if (level_count < 1) {
    throw std::domain_error("resolution must have at least one level");
  }
  if (level_count > kMaxLevelCount) {
    throw ResourceLimitError("dyadic resolution 2^" +
                             std::to_string(level_count) +
                             " exceeds the supported grid size");
  }
}

DyadicConfig DyadicConfig::for_max_index(long max_index) {
  if (max_index < 1) throw std::domain_error("index must be positive");
  // Smallest level count with 2^(levels-1) >= max_index.
  const int ceil_log2 =
      std::bit_width(static_cast<unsigned long>(max_index - 1));
  return DyadicConfig(ceil_log2 + 1);
}

SpacePtr dyadic_space(const DyadicConfig& cfg) {
  return FiniteSpace::uniform(static_cast<std::size_t>(cfg.atom_count()));
}

Event dyadic_event(const DyadicConfig& cfg, long n) {
  if (n < 1 || n > cfg.max_index()) {
    throw std::domain_error("event index " + std::to_string(n) +
                            " out of range for resolution 2^" +
                            std::to_string(cfg.level_count()));
  }
  return Event(dyadic_space(cfg), event_bits(cfg, n));
}

EventSequence dyadic_sequence(const DyadicConfig& cfg) {
  return EventSequence(std::make_shared<DyadicSequence>(cfg));
}

Rational left_half_mass(const DyadicConfig& cfg, const Event& e) {
  AtomSet left = e.members();
  left.resize(static_cast<std::size_t>(cfg.atom_count() / 2));
  return Rational(static_cast<long>(left.count())) *
         make_rational(1, cfg.atom_count());
}

Real chain_bound_rhs(long n, const Rational& p) {
  if (n < 1) throw std::domain_error("prefix length must be >= 1");
  if (p <= 0 || p >= 1) {
    throw std::domain_error("exponent must lie strictly between 0 and 1");
  }
  const Real pr = to_real(p);
  const Real half = Real(1) / 2;
  const Real numerator = pow(log2(Real(2 * n)), pr) * pow(half, Real(1) - pr) +
                         pow(Real(n), pr) / 2;
  return numerator / pow(Real(n) / 2, pr);
}

ChainReport verify_chain(const DyadicConfig& cfg, const Subsequence& tau,
                         long n, const Rational& p) {
  return verify_chain_sweep(cfg, tau, {n}, {p}).front();
}

std::vector<ChainReport> verify_chain_sweep(
    const DyadicConfig& cfg, const Subsequence& tau,
    const std::vector<long>& checkpoints,
    const std::vector<Rational>& p_list) {
  if (checkpoints.empty() || p_list.empty()) {
    throw std::domain_error("nothing to verify");
  }
  long previous = 0;
  for (long n : checkpoints) {
    if (n <= previous) {
      throw std::domain_error("checkpoints must be strictly increasing");
    }
    previous = n;
  }
  for (const Rational& p : p_list) {
    if (p <= 0 || p >= 1) {
      throw std::domain_error("exponent must lie strictly between 0 and 1");
    }
  }
  if (tau(checkpoints.back()) > cfg.max_index()) {
    throw std::domain_error(
        "resolution too small for the requested event indices");
  }

  const EventSequence seq = dyadic_sequence(cfg);
  PrefixScanner scan(seq, tau);

  Rational min_marginal;
  Rational left_integral = 0;
  const Rational half = make_rational(1, 2);

  std::vector<ChainReport> reports;
  reports.reserve(checkpoints.size() * p_list.size());

  long position = 0;
  for (long n : checkpoints) {
    // Track the marginal floor and the left-half counting integral while
    // stepping to the checkpoint.
    while (position < n) {
      ++position;
      const Event e = seq.at(tau(position));
      const Rational marginal = event_prob(e);
      if (position == 1 || marginal < min_marginal) min_marginal = marginal;
      left_integral += left_half_mass(cfg, e);
    }
    scan.advance_to(n);

    const Real log_bound = log2(Real(2 * n));
    for (const Rational& p : p_list) {
      ChainReport report;
      report.n = n;
      report.p = p;
      report.min_marginal = min_marginal;
      report.marginal_floor_ok = min_marginal >= half;
      report.left_integral = left_integral;
      report.left_integral_bound = log_bound;
      report.counting_ok = leq_with_slack(to_real(left_integral), log_bound);
      report.moment = scan.moment(p);
      report.rhs = chain_bound_rhs(n, p);
      report.moment_ok = leq_with_slack(report.moment, report.rhs);
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

}  // namespace ubound
