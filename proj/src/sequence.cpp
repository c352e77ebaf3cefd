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

#include "ubound/sequence.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace ubound {

// ---------------------------------------------------------------------------
// Subsequence

Subsequence Subsequence::identity() { return Subsequence(); }

Subsequence Subsequence::stride(long step) {
  if (step < 1) throw std::invalid_argument("stride must be >= 1");
  Subsequence s;
  s.kind_ = Kind::kStride;
  s.step_ = step;
  return s;
}

Subsequence Subsequence::powers_of_two() {
  Subsequence s;
  s.kind_ = Kind::kPowersOfTwo;
  return s;
}

Subsequence Subsequence::from_list(std::vector<long> indices) {
  if (indices.empty()) throw std::invalid_argument("empty subsequence");
  long previous = 0;
  for (long v : indices) {
    if (v <= previous) {
      throw std::invalid_argument(
          "subsequence indices must be strictly increasing and positive");
    }
    previous = v;
  }
  Subsequence s;
  s.kind_ = Kind::kList;
  s.list_ = std::move(indices);
  return s;
}

long Subsequence::operator()(long position) const {
  if (position < 1) throw std::out_of_range("subsequence position");
  switch (kind_) {
    case Kind::kIdentity:
      return position;
    case Kind::kStride:
      if (position > std::numeric_limits<long>::max() / step_) {
        throw std::out_of_range("stride overflow");
      }
      return step_ * position;
    case Kind::kPowersOfTwo:
      if (position > 62) throw std::out_of_range("power-of-two overflow");
      return 1L << (position - 1);
    case Kind::kList:
      if (static_cast<std::size_t>(position) > list_.size()) {
        throw std::out_of_range("past the end of the subsequence list");
      }
      return list_[position - 1];
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// EventSequence

namespace {

class ExplicitSequence final : public EventSequence::Impl {
 public:
  ExplicitSequence(EventSystem sys, bool cyclic)
      : sys_(std::move(sys)), cyclic_(cyclic) {}

  const SpacePtr& space() const override { return sys_.space(); }

  Event at(long index) const override {
    if (index < 1) throw std::out_of_range("event index");
    const long m = static_cast<long>(sys_.size());
    if (cyclic_) return sys_.event(static_cast<std::size_t>((index - 1) % m));
    if (index > m) throw std::out_of_range("event index past the sequence");
    return sys_.event(static_cast<std::size_t>(index - 1));
  }

  std::optional<long> length() const override {
    if (cyclic_) return std::nullopt;
    return static_cast<long>(sys_.size());
  }

 private:
  EventSystem sys_;
  bool cyclic_;
};

}  // namespace

EventSequence EventSequence::from_events(const EventSystem& sys) {
  return EventSequence(std::make_shared<ExplicitSequence>(sys, false));
}

EventSequence EventSequence::periodic(const EventSystem& base) {
  return EventSequence(std::make_shared<ExplicitSequence>(base, true));
}

Event EventSequence::at(long index) const {
  if (index < 1) throw std::out_of_range("event index");
  return impl_->at(index);
}

Event periodic_event(const EventSystem& base, long n) {
  if (n < 1) throw std::out_of_range("event index");
  return base.event(static_cast<std::size_t>((n - 1) %
                                             static_cast<long>(base.size())));
}

// ---------------------------------------------------------------------------
// PrefixScanner

PrefixScanner::PrefixScanner(const EventSequence& seq, const Subsequence& tau)
    : seq_(seq),
      tau_(tau),
      counts_(seq.space()->size(), 0),
      uniform_(seq.space()->is_uniform()),
      indicator_sum_exact_(0),
      sumsq_exact_(0) {}

void PrefixScanner::step() {
  const Event e = seq_.at(tau_(position_ + 1));
  const AtomSet& bits = e.members();
  if (uniform_) {
    sum_units_ += static_cast<std::int64_t>(bits.count());
    for (auto i = bits.find_first(); i != AtomSet::npos;
         i = bits.find_next(i)) {
      sumsq_units_ += 2 * counts_[i] + 1;
      ++counts_[i];
    }
  } else {
    const FiniteSpace& space = *seq_.space();
    for (auto i = bits.find_first(); i != AtomSet::npos;
         i = bits.find_next(i)) {
      const Rational p = space.atom_prob(i);
      indicator_sum_exact_ += p;
      sumsq_exact_ += p * Rational(2 * counts_[i] + 1);
      ++counts_[i];
    }
  }
  ++position_;
}

void PrefixScanner::advance_to(long n) {
  if (n < position_) {
    throw std::invalid_argument("prefix scans only move forward");
  }
  while (position_ < n) step();
}

Rational PrefixScanner::indicator_sum() const {
  if (uniform_) {
    return Rational(sum_units_) * seq_.space()->atom_prob(0);
  }
  return indicator_sum_exact_;
}

Rational PrefixScanner::er_quotient() const {
  if (uniform_) {
    if (sumsq_units_ == 0) {
      throw std::domain_error("prefix has zero total probability");
    }
    // (units·p)² / (sumsq·p) = units²·p / sumsq.
    return Rational(sum_units_) * Rational(sum_units_) *
           seq_.space()->atom_prob(0) / Rational(sumsq_units_);
  }
  if (sumsq_exact_ == 0) {
    throw std::domain_error("prefix has zero total probability");
  }
  return indicator_sum_exact_ * indicator_sum_exact_ / sumsq_exact_;
}

std::vector<std::pair<long, Rational>> PrefixScanner::count_masses() const {
  std::map<std::int64_t, Rational> masses;
  const FiniteSpace& space = *seq_.space();
  if (uniform_) {
    std::map<std::int64_t, std::int64_t> histogram;
    for (std::int64_t c : counts_) {
      if (c > 0) ++histogram[c];
    }
    const Rational unit = space.atom_prob(0);
    for (const auto& [count, cells] : histogram) {
      masses.emplace(count, Rational(cells) * unit);
    }
  } else {
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (counts_[i] > 0) masses[counts_[i]] += space.atom_prob(i);
    }
  }
  std::vector<std::pair<long, Rational>> result;
  result.reserve(masses.size());
  for (auto& [count, mass] : masses) {
    result.emplace_back(static_cast<long>(count), std::move(mass));
  }
  return result;
}

Rational PrefixScanner::moment_exact(unsigned long p) const {
  const Rational s = indicator_sum();
  if (s == 0) throw std::domain_error("prefix has zero total probability");
  Rational total = 0;
  for (const auto& [count, mass] : count_masses()) {
    total += mass * pow_rational(Rational(count) / s, p);
  }
  return total;
}

Real PrefixScanner::moment(const Rational& p) const {
  if (p <= 0) throw std::domain_error("exponent must be positive");
  if (is_integer(p)) {
    return to_real(moment_exact(p.get_num().get_ui()));
  }
  const Rational s = indicator_sum();
  if (s == 0) throw std::domain_error("prefix has zero total probability");
  const Real exponent = to_real(p);
  const Real s_real = to_real(s);
  Real total = 0;
  for (const auto& [count, mass] : count_masses()) {
    total += to_real(mass) * pow(Real(count) / s_real, exponent);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Moments and estimates

PrefixMoment prefix_moment(const EventSequence& seq, const Subsequence& tau,
                           long n, const Rational& p) {
  if (n < 1) throw std::domain_error("empty prefix");
  if (p <= 0) throw std::domain_error("exponent must be positive");
  PrefixScanner scan(seq, tau);
  scan.advance_to(n);
  PrefixMoment result;
  result.n = n;
  result.p = p;
  if (is_integer(p)) {
    result.exact = scan.moment_exact(p.get_num().get_ui());
    result.value = to_real(*result.exact);
  } else {
    result.value = scan.moment(p);
  }
  return result;
}

Rational er_prefix(const EventSequence& seq, const Subsequence& tau, long n) {
  if (n < 1) throw std::domain_error("empty prefix");
  PrefixScanner scan(seq, tau);
  scan.advance_to(n);
  return scan.er_quotient();
}

namespace {

// ⌈(1-window)·N⌉ clamped into [1, N].
long window_start(long N, const Rational& window) {
  if (window <= 0 || window > 1) {
    throw std::domain_error("window must lie in (0, 1]");
  }
  const Rational lo = (1 - window) * Rational(N);
  Integer ceil;
  mpz_cdiv_q(ceil.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  long start = static_cast<long>(ceil.get_si());
  if (start < 1) start = 1;
  if (start > N) start = N;
  return start;
}

}  // namespace

ErEstimate er_estimate(const EventSequence& seq, const Subsequence& tau,
                       long N, const Rational& window) {
  if (N < 2) throw std::domain_error("N must be >= 2");
  const long start = window_start(N, window);
  PrefixScanner scan(seq, tau);
  ErEstimate best;
  for (long n = start; n <= N; ++n) {
    scan.advance_to(n);
    Rational quotient = scan.er_quotient();
    if (best.best_n == 0 || quotient > best.value) {
      best.value = std::move(quotient);
      best.best_n = n;
    }
  }
  return best;
}

std::vector<Rational> default_p_grid() {
  return {Rational(2),          make_rational(1, 2),  make_rational(1, 4),
          make_rational(1, 8),  make_rational(1, 16), make_rational(1, 32)};
}

MsEstimate ms_estimate(const EventSequence& seq, const Subsequence& tau,
                       long N, const Rational& window,
                       const std::vector<Rational>& p_grid) {
  if (N < 2) throw std::domain_error("N must be >= 2");
  if (p_grid.empty()) throw std::domain_error("empty exponent grid");
  for (const Rational& p : p_grid) {
    if (p <= 0 || p == 1) {
      throw std::domain_error("exponents must be positive and != 1");
    }
  }
  const long start = window_start(N, window);

  struct Extremum {
    bool is_exact;
    bool keep_max;  // p < 1: the powered max comes from the max moment
    Rational exact;
    Real approx;
    bool initialized = false;
  };
  std::vector<Extremum> extrema;
  extrema.reserve(p_grid.size());
  for (const Rational& p : p_grid) {
    Extremum e;
    e.is_exact = is_integer(p);
    e.keep_max = p < 1;
    extrema.push_back(std::move(e));
  }

  PrefixScanner scan(seq, tau);
  for (long n = start; n <= N; ++n) {
    scan.advance_to(n);
    for (std::size_t k = 0; k < p_grid.size(); ++k) {
      Extremum& e = extrema[k];
      if (e.is_exact) {
        Rational value = scan.moment_exact(p_grid[k].get_num().get_ui());
        if (!e.initialized || (e.keep_max ? value > e.exact
                                          : value < e.exact)) {
          e.exact = std::move(value);
          e.initialized = true;
        }
      } else {
        Real value = scan.moment(p_grid[k]);
        if (!e.initialized || (e.keep_max ? value > e.approx
                                          : value < e.approx)) {
          e.approx = std::move(value);
          e.initialized = true;
        }
      }
    }
  }

  MsEstimate result;
  result.curve.reserve(p_grid.size());
  for (std::size_t k = 0; k < p_grid.size(); ++k) {
    const Extremum& e = extrema[k];
    MsPoint point;
    point.p = p_grid[k];
    if (e.is_exact) {
      point.moment_surrogate_exact = e.exact;
      point.moment_surrogate = to_real(e.exact);
    } else {
      point.moment_surrogate = e.approx;
    }
    const Rational exponent = 1 / (1 - p_grid[k]);
    if (e.is_exact && exponent == -1) {
      // p = 2: the powered value is the exact reciprocal.
      point.value_exact = 1 / e.exact;
      point.value = to_real(*point.value_exact);
    } else {
      point.value = pow(point.moment_surrogate, to_real(exponent));
    }
    result.curve.push_back(std::move(point));
  }

  result.supremum = result.curve.front().value;
  for (const MsPoint& point : result.curve) {
    if (point.value > result.supremum) result.supremum = point.value;
  }
  return result;
}

}  // namespace ubound
