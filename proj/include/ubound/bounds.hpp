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
// Lower bounds on P(A_1 ∪ … ∪ A_m) from the pairwise intersection
// probabilities, all evaluated in exact rational arithmetic:
//
//   gk_bound    Gallot–Kounias: Σγ_i for any exact solution γ of
//               (P(A_iA_j) / (P(A_i)P(A_j))) γ = 1. Equals the maximum of
//               (Σ ω_i P(A_i))² / Σ ω_iω_j P(A_iA_j) over ω ∈ R^m.
//   kat_bound   Kuai–Alajaji–Takahara: closed-form sum over events built
//               from the row sums S_i and the fractional parts of S_i/P(A_i).
//   chung_erdos (Σ P(A_i))² / ΣΣ P(A_iA_j), the second-moment quotient;
//               never exceeds gk_bound (take ω = all-ones above).

#ifndef UBOUND_BOUNDS_HPP_
#define UBOUND_BOUNDS_HPP_

#include <cstddef>
#include <vector>

#include "ubound/rational.hpp"
#include "ubound/space.hpp"

namespace ubound {

// Deterministic pivot/free-variable policies for the exact elimination.
// Both produce a valid particular solution; on singular systems the
// coordinate sums agree (the kernel of the Gram matrix is orthogonal to the
// all-ones right-hand side), which is tested rather than assumed.
enum class PivotPolicy {
  // Columns left to right, pivot = lowest-index usable row.
  kFirstNonZero,
  // Columns right to left, pivot = highest-index usable row.
  kReverseOrder,
};

struct GkSolution {
  std::vector<Rational> gamma;
  Rational bound;  // Σ gamma_i
  std::size_t rank = 0;
  // Columns without a pivot; their gamma is fixed to 0.
  std::vector<std::size_t> free_indices;
};

struct KatTerm {
  Rational row_sum;  // S_i = Σ_j P(A_iA_j)
  Rational theta;    // fractional part of S_i / P(A_i), in [0,1)
  Rational value;    // this event's contribution to the bound
};

struct KatResult {
  Rational bound;
  std::vector<KatTerm> terms;
};

// Exact Gaussian elimination on the normalized Gram system; throws
// std::domain_error when some event has probability zero. The system is
// consistent for every valid joint matrix; an inconsistency indicates a
// corrupted matrix and raises std::invalid_argument.
GkSolution gk_solve(const JointMatrix& joint,
                    PivotPolicy policy = PivotPolicy::kFirstNonZero);
GkSolution gk_solve(const EventSystem& sys,
                    PivotPolicy policy = PivotPolicy::kFirstNonZero);

Rational gk_bound(const JointMatrix& joint);
Rational gk_bound(const EventSystem& sys);

KatResult kat_bound(const JointMatrix& joint);
KatResult kat_bound(const EventSystem& sys);

// Requires Σ P(A_i) > 0; zero-probability events are otherwise tolerated.
Rational chung_erdos(const JointMatrix& joint);
Rational chung_erdos(const EventSystem& sys);

}  // namespace ubound

#endif  // UBOUND_BOUNDS_HPP_
