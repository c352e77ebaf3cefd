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
// Randomized search for "gap" systems where the closed-form KAT bound
// strictly exceeds the optimized GK bound. Every candidate is evaluated in
// exact rational arithmetic, so a reported hit is a certificate, not an
// approximation. Trials are pure functions of (seed, trial index): the hit
// list is byte-for-byte reproducible at any concurrency level.

#ifndef UBOUND_SEARCH_HPP_
#define UBOUND_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ubound/rational.hpp"
#include "ubound/space.hpp"

namespace ubound {

struct SearchConfig {
  int atoms = 5;
  int events = 6;
  long trials = 1;
  std::uint64_t seed = 0;
  // Atom probabilities are positive multiples of 1/granularity.
  long granularity = 5;

  // Throws std::invalid_argument when any count is out of range or
  // granularity < atoms (no positive composition would exist).
  void validate() const;
};

struct GapHit {
  long trial = 0;  // 0 is reserved for externally included instances
  EventSystem system;
  Rational gk;
  Rational kat;
  Rational gap;  // kat - gk, > 0
  Rational union_prob;
};

// Deterministic function of (cfg.seed, trial): atom probabilities are a
// uniformly random composition of `granularity` into `atoms` positive parts
// over 1/granularity; each event is a uniformly random nonempty atom subset
// (empty draws are rejected and redrawn).
EventSystem random_system(const SearchConfig& cfg, long trial);

// Evaluates one system; returns a hit when kat > gk exactly, re-verifying
// gk <= union and kat <= union. Throws std::domain_error on
// zero-probability events.
std::optional<GapHit> evaluate_gap(const EventSystem& sys, long trial_label);

// Runs `cfg.trials` trials (trial indices 1..trials) and returns all hits
// sorted by gap descending, trial ascending. The result is independent of
// `concurrency`.
std::vector<GapHit> search_gaps(const SearchConfig& cfg,
                                unsigned concurrency = 1);

}  // namespace ubound

#endif  // UBOUND_SEARCH_HPP_
