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
// Finite-prefix functionals of an event sequence. For a prefix of length n
// taken along a subsequence τ, let c(x) = #{i ≤ n : x ∈ A_τ(i)} and
// s = Σ_{i≤n} P(A_τ(i)). The normalized hit average has p-th moment
//
//   E[(Σ indicators / s)^p] = Σ_x P({x}) (c(x)/s)^p        (0^p = 0)
//
// which is an exact rational for integer p and a high-precision Real
// otherwise. er_prefix is the exact reciprocal of the p = 2 moment and
// coincides with chung_erdos of the prefix system; er_estimate and
// ms_estimate take windowed extrema over trailing prefixes as a stand-in
// for the limits superior they approximate.

#ifndef UBOUND_SEQUENCE_HPP_
#define UBOUND_SEQUENCE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ubound/rational.hpp"
#include "ubound/space.hpp"

namespace ubound {

// Strictly increasing map from 1-based prefix positions to 1-based event
// indices.
class Subsequence {
 public:
  static Subsequence identity();
  // τ(i) = step·i, step >= 1.
  static Subsequence stride(long step);
  // τ(i) = 2^(i-1): one index per dyadic level.
  static Subsequence powers_of_two();
  // Explicit indices; must be positive and strictly increasing.
  static Subsequence from_list(std::vector<long> indices);

  // 1-based; throws std::out_of_range past the end of an explicit list or
  // on overflow of a rule.
  long operator()(long position) const;

 private:
  Subsequence() = default;

  enum class Kind { kIdentity, kStride, kPowersOfTwo, kList };
  Kind kind_ = Kind::kIdentity;
  long step_ = 1;
  std::vector<long> list_;
};

// A deterministic, immutable sequence of events over one finite space,
// accessed by 1-based index.
class EventSequence {
 public:
  class Impl {
   public:
    virtual ~Impl() = default;
    virtual const SpacePtr& space() const = 0;
    virtual Event at(long index) const = 0;
    // Largest valid index, when the sequence is not unbounded.
    virtual std::optional<long> length() const { return std::nullopt; }
  };

  explicit EventSequence(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  // The system's events in order, ending at index m.
  static EventSequence from_events(const EventSystem& sys);
  // The system's events cycled forever: A_1..A_m, A_1..A_m, ...
  static EventSequence periodic(const EventSystem& base);

  const SpacePtr& space() const { return impl_->space(); }
  Event at(long index) const;
  std::optional<long> length() const { return impl_->length(); }

 private:
  std::shared_ptr<const Impl> impl_;
};

// The event at 1-based position n of the periodic extension of `base`.
Event periodic_event(const EventSystem& base, long n);

// Incremental prefix state: per-atom hit counts, Σ P(A_τ(i)), and
// Σ_x P({x}) c(x)². Stepping is O(|event|); uniform spaces use integer
// accumulators and convert to rationals only at evaluation points.
class PrefixScanner {
 public:
  PrefixScanner(const EventSequence& seq, const Subsequence& tau);

  long position() const { return position_; }
  // Consumes events τ(position+1) … τ(n).
  void advance_to(long n);

  // Σ_{i ≤ position} P(A_τ(i)), exact.
  Rational indicator_sum() const;
  // s² / Σ_x P({x}) c(x)², the exact reciprocal of the p = 2 moment.
  Rational er_quotient() const;

  // Probability mass per distinct positive hit count, sorted by count.
  std::vector<std::pair<long, Rational>> count_masses() const;

  // E[(Σ indicators / s)^p]; exact for integer p.
  Real moment(const Rational& p) const;
  Rational moment_exact(unsigned long p) const;

 private:
  void step();

  EventSequence seq_;
  Subsequence tau_;
  long position_ = 0;
  std::vector<std::int64_t> counts_;
  bool uniform_;
  // Uniform fast path: everything in units of the common atom probability.
  std::int64_t sum_units_ = 0;     // Σ |A_τ(i)|
  std::int64_t sumsq_units_ = 0;   // Σ_x c(x)²
  Rational indicator_sum_exact_;   // general path
  Rational sumsq_exact_;
};

struct PrefixMoment {
  long n = 0;
  Rational p;
  Real value;
  // Present exactly when p is a positive integer.
  std::optional<Rational> exact;
};

// Requires n >= 1, p > 0, and Σ P(A_τ(i)) > 0 over the prefix.
PrefixMoment prefix_moment(const EventSequence& seq, const Subsequence& tau,
                           long n, const Rational& p);

// Exact 1 / E[(…)²] for the length-n prefix; equals chung_erdos of the
// prefix events.
Rational er_prefix(const EventSequence& seq, const Subsequence& tau, long n);

struct ErEstimate {
  Rational value;
  long best_n = 0;  // smallest maximizing prefix length in the window
};

// Maximum of er_prefix over n ∈ [⌈(1-window)·N⌉, N] (clamped to >= 1).
// Requires N >= 2 and window ∈ (0, 1].
ErEstimate er_estimate(const EventSequence& seq, const Subsequence& tau,
                       long N, const Rational& window);

struct MsPoint {
  Rational p;
  // Windowed extremum of the p-th moment: max over the window for p < 1,
  // min for p > 1, so that the powered value below is the windowed max.
  Real moment_surrogate;
  std::optional<Rational> moment_surrogate_exact;  // integer p
  // moment_surrogate^(1/(1-p)).
  Real value;
  std::optional<Rational> value_exact;  // p = 2 only (exponent -1)
};

struct MsEstimate {
  Real supremum;  // max of value over the grid
  std::vector<MsPoint> curve;
};

// Requires every p in the grid to be positive and ≠ 1, and N >= 2.
MsEstimate ms_estimate(const EventSequence& seq, const Subsequence& tau,
                       long N, const Rational& window,
                       const std::vector<Rational>& p_grid);

// {2, 1/2, 1/4, 1/8, 1/16, 1/32}.
std::vector<Rational> default_p_grid();

}  // namespace ubound

#endif  // UBOUND_SEQUENCE_HPP_
