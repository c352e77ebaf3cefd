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

#include "ubound/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "ubound/bounds.hpp"
#include "ubound/rng.hpp"

namespace ubound {

void SearchConfig::validate() const {
  if (atoms < 2 || atoms > 62) {
    throw std::invalid_argument("atoms must lie in [2, 62]");
  }
  if (events < 2) throw std::invalid_argument("events must be >= 2");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (granularity < atoms) {
    throw std::invalid_argument(
        "granularity must be >= atoms so a positive distribution exists");
  }
}

EventSystem random_system(const SearchConfig& cfg, long trial) {
  cfg.validate();
  SplitMix64 stream =
      trial_stream(cfg.seed, static_cast<std::uint64_t>(trial));

  // Uniform composition of `granularity` into `atoms` positive parts:
  // a uniform (atoms-1)-subset of cut points {1..granularity-1}, by Floyd's
  // algorithm, then consecutive differences.
  const long g = cfg.granularity;
  const long cut_count = cfg.atoms - 1;
  std::set<long> cuts;
  for (long j = (g - 1) - cut_count + 1; j <= g - 1; ++j) {
    const long t = 1 + static_cast<long>(stream.below(static_cast<std::uint64_t>(j)));
    if (!cuts.insert(t).second) cuts.insert(j);
  }

  std::vector<std::pair<std::string, Rational>> atoms;
  atoms.reserve(static_cast<std::size_t>(cfg.atoms));
  long previous = 0;
  std::size_t atom_index = 1;
  auto push_atom = [&](long cut) {
    atoms.emplace_back("x" + std::to_string(atom_index++),
                       make_rational(cut - previous, g));
    previous = cut;
  };
  for (long cut : cuts) push_atom(cut);
  push_atom(g);

  auto space = std::make_shared<const FiniteSpace>(std::move(atoms));

  const std::uint64_t mask_limit = (1ULL << cfg.atoms) - 1;
  std::vector<Event> events;
  events.reserve(static_cast<std::size_t>(cfg.events));
  for (int e = 0; e < cfg.events; ++e) {
    std::uint64_t mask = 0;
    while (mask == 0) mask = stream.next() & mask_limit;  // reject empty
    AtomSet bits(space->size());
    for (int a = 0; a < cfg.atoms; ++a) {
      if (mask & (1ULL << a)) bits.set(static_cast<std::size_t>(a));
    }
    events.emplace_back(space, std::move(bits));
  }

  return EventSystem(space, std::move(events));
}

std::optional<GapHit> evaluate_gap(const EventSystem& sys, long trial_label) {
  const JointMatrix joint = joint_matrix(sys);
  Rational gk = gk_solve(joint).bound;
  Rational kat = kat_bound(joint).bound;
  if (kat <= gk) return std::nullopt;

  GapHit hit{trial_label, sys, std::move(gk), std::move(kat), 0, union_prob(sys)};
  hit.gap = hit.kat - hit.gk;
  // A hit is a certificate: re-check it against the exact union oracle.
  if (hit.gap <= 0 || hit.gk > hit.union_prob || hit.kat > hit.union_prob) {
    throw std::logic_error("gap hit failed exact re-verification");
  }
  return hit;
}

std::vector<GapHit> search_gaps(const SearchConfig& cfg, unsigned concurrency) {
  cfg.validate();
  if (concurrency < 1) concurrency = 1;

  const auto run_range = [&cfg](long first, long last,
                                std::vector<GapHit>& out) {
    for (long trial = first; trial <= last; ++trial) {
      EventSystem sys = random_system(cfg, trial);
      if (auto hit = evaluate_gap(sys, trial)) out.push_back(std::move(*hit));
    }
  };

  std::vector<std::vector<GapHit>> partial(concurrency);
  if (concurrency == 1) {
    run_range(1, cfg.trials, partial[0]);
  } else {
    std::vector<std::thread> workers;
    const long chunk = (cfg.trials + concurrency - 1) / concurrency;
    for (unsigned w = 0; w < concurrency; ++w) {
      const long first = 1 + static_cast<long>(w) * chunk;
      const long last = std::min(cfg.trials, first + chunk - 1);
      if (first > last) break;
      workers.emplace_back(run_range, first, last, std::ref(partial[w]));
    }
    for (std::thread& t : workers) t.join();
  }

  std::vector<GapHit> hits;
  for (auto& part : partial) {
    for (auto& hit : part) hits.push_back(std::move(hit));
  }
  std::sort(hits.begin(), hits.end(), [](const GapHit& a, const GapHit& b) {
    if (a.gap != b.gap) return a.gap > b.gap;
    return a.trial < b.trial;
  });
  return hits;
}

}  // namespace ubound
