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
// The dyadic interval family over [0,1): event number n = 2^(i-1) + k
// (level i >= 1, offset 0 <= k < 2^(i-1)) is
//
//   [k/2^i, (k+1)/2^i) ∪ [1/2, 1)
//
// discretized on a uniform space of 2^L half-open cells. Every event of a
// level shares the right half, so each event has probability 2^-i + 1/2
// (level 1 is the whole space), the union over any complete level is the
// whole space, and the left-half masses 2^-i are non-increasing in n.
//
// For this family the powered prefix moments obey a closed-form ceiling:
// for any increasing τ, prefix length n and p ∈ (0,1),
//
//   E[(Σ_{i≤n} indicators / Σ_{i≤n} P)^p]
//     ≤ ((log2 2n)^p (1/2)^(1-p) + n^p/2) / (n/2)^p
//
// via the marginal floor 1/2, Hölder on the left half, and the counting
// bound ∫_{[0,1/2)} Σ indicators ≤ log2(2n). verify_chain checks the three
// ingredients and the end-to-end inequality on concrete prefixes.

#ifndef UBOUND_DYADIC_HPP_
#define UBOUND_DYADIC_HPP_

#include "ubound/rational.hpp"
#include "ubound/sequence.hpp"
#include "ubound/space.hpp"

namespace ubound {

class DyadicConfig {
 public:
  // 2^level_count uniform cells; usable event indices are 1..2^(level_count-1).
  // Throws ResourceLimitError past kMaxLevelCount.
  explicit DyadicConfig(int level_count);

  // Smallest configuration whose grid aligns every event up to max_index.
  static DyadicConfig for_max_index(long max_index);

  int level_count() const { return level_count_; }
  long atom_count() const { return 1L << level_count_; }
  long max_index() const { return 1L << (level_count_ - 1); }

  static constexpr int kMaxLevelCount = 21;

 private:
  int level_count_;
};

// The shared uniform space of a configuration.
SpacePtr dyadic_space(const DyadicConfig& cfg);

// Event number n (1 <= n <= cfg.max_index()); throws std::domain_error
// outside that range.
Event dyadic_event(const DyadicConfig& cfg, long n);

// The unbounded-by-construction sequence n -> dyadic_event(cfg, n); indices
// past cfg.max_index() throw.
EventSequence dyadic_sequence(const DyadicConfig& cfg);

// P(e ∩ [0, 1/2)), exact; for event n this equals 2^-level(n).
Rational left_half_mass(const DyadicConfig& cfg, const Event& e);

// ((log2 2n)^p (1/2)^(1-p) + n^p/2) / (n/2)^p for n >= 1, p ∈ (0,1);
// throws std::domain_error for p outside (0,1).
Real chain_bound_rhs(long n, const Rational& p);

struct ChainReport {
  long n = 0;
  Rational p;

  // (a) every prefix event has probability >= 1/2.
  Rational min_marginal;
  bool marginal_floor_ok = false;

  // (b) ∫_{[0,1/2)} Σ indicators = Σ left_half_mass(τ(i)) <= log2(2n).
  Rational left_integral;
  Real left_integral_bound;
  bool counting_ok = false;

  // (c) the powered moment is below the closed form.
  Real moment;
  Real rhs;
  bool moment_ok = false;

  bool all_ok() const { return marginal_floor_ok && counting_ok && moment_ok; }
};

// One scan per call; the sweep below amortizes the scan over many (n, p).
ChainReport verify_chain(const DyadicConfig& cfg, const Subsequence& tau,
                         long n, const Rational& p);

// Reports for every checkpoint × exponent pair, in (checkpoint, p) order.
// Checkpoints must be strictly increasing; exponents must lie in (0,1).
// The exact left-hand quantities are compared against the Real right-hand
// sides inflated by a relative 2^-40 to absorb their rounding.
std::vector<ChainReport> verify_chain_sweep(const DyadicConfig& cfg,
                                            const Subsequence& tau,
                                            const std::vector<long>& checkpoints,
                                            const std::vector<Rational>& p_list);

}  // namespace ubound

#endif  // UBOUND_DYADIC_HPP_
