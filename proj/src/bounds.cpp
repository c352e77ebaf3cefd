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

#include "ubound/bounds.hpp"

#include <stdexcept>
#include <string>

namespace ubound {

namespace {

// The diagonal of a joint matrix holds the marginals; bound computations
// require them all positive.
void require_positive_marginals(const JointMatrix& joint) {
  for (std::size_t i = 0; i < joint.size(); ++i) {
    if (joint.at(i, i) <= 0) {
      throw std::domain_error("event " + std::to_string(i + 1) +
                              " has probability zero");
    }
  }
}

}  // namespace

GkSolution gk_solve(const JointMatrix& joint, PivotPolicy policy) {
  require_positive_marginals(joint);
  const std::size_t m = joint.size();

  // Augmented normalized Gram system: B_ij = P(A_iA_j)/(P(A_i)P(A_j)),
  // right-hand side all ones.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a[i][j] = joint.at(i, j) / (joint.at(i, i) * joint.at(j, j));
    }
    a[i][m] = 1;
  }

  std::vector<std::size_t> column_order(m);
  for (std::size_t c = 0; c < m; ++c) {
    column_order[c] = policy == PivotPolicy::kFirstNonZero ? c : m - 1 - c;
  }

  std::vector<bool> row_used(m, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  std::vector<bool> column_pivoted(m, false);

  for (std::size_t col : column_order) {
    std::size_t pivot_row = m;
    if (policy == PivotPolicy::kFirstNonZero) {
      for (std::size_t r = 0; r < m; ++r) {
        if (!row_used[r] && a[r][col] != 0) {
          pivot_row = r;
          break;
        }
      }
    } else {
      for (std::size_t r = m; r-- > 0;) {
        if (!row_used[r] && a[r][col] != 0) {
          pivot_row = r;
          break;
        }
      }
    }
    if (pivot_row == m) continue;  // free column

    row_used[pivot_row] = true;
    column_pivoted[col] = true;
    pivots.emplace_back(pivot_row, col);
    for (std::size_t r = 0; r < m; ++r) {
      if (row_used[r] || a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[pivot_row][col];
      for (std::size_t c = 0; c <= m; ++c) {
        a[r][c] -= factor * a[pivot_row][c];
      }
    }
  }

  // Rows never used as pivots are all-zero; a nonzero right-hand side there
  // would mean the matrix is not a Gram matrix of the events.
  for (std::size_t r = 0; r < m; ++r) {
    if (!row_used[r] && a[r][m] != 0) {
      throw std::invalid_argument("inconsistent joint matrix");
    }
  }

  GkSolution solution;
  solution.gamma.assign(m, Rational(0));
  solution.rank = pivots.size();
  for (std::size_t c = 0; c < m; ++c) {
    if (!column_pivoted[c]) solution.free_indices.push_back(c);
  }

  // Back-substitution in reverse pivot order; earlier pivot columns are
  // already eliminated from later pivot rows.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const auto [row, col] = pivots[k];
    Rational value = a[row][m];
    for (std::size_t c = 0; c < m; ++c) {
      if (c != col && a[row][c] != 0 && solution.gamma[c] != 0) {
        value -= a[row][c] * solution.gamma[c];
      }
    }
    solution.gamma[col] = value / a[row][col];
  }

  solution.bound = 0;
  for (const Rational& g : solution.gamma) solution.bound += g;
  return solution;
}

GkSolution gk_solve(const EventSystem& sys, PivotPolicy policy) {
  return gk_solve(joint_matrix(sys), policy);
}

Rational gk_bound(const JointMatrix& joint) { return gk_solve(joint).bound; }

Rational gk_bound(const EventSystem& sys) {
  return gk_bound(joint_matrix(sys));
}

KatResult kat_bound(const JointMatrix& joint) {
  require_positive_marginals(joint);
  const std::size_t m = joint.size();
  KatResult result;
  result.bound = 0;
  result.terms.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& marginal = joint.at(i, i);
    KatTerm term;
    term.row_sum = joint.row_sum(i);
    term.theta = fractional_part(term.row_sum / marginal);
    const Rational marginal_sq = marginal * marginal;
    // Both denominators are positive: S_i >= P(A_i) and theta < 1.
    term.value =
        term.theta * marginal_sq / (term.row_sum + (1 - term.theta) * marginal) +
        (1 - term.theta) * marginal_sq / (term.row_sum - term.theta * marginal);
    result.bound += term.value;
    result.terms.push_back(std::move(term));
  }
  return result;
}

KatResult kat_bound(const EventSystem& sys) {
  return kat_bound(joint_matrix(sys));
}

Rational chung_erdos(const JointMatrix& joint) {
  Rational marginal_sum = 0;
  for (std::size_t i = 0; i < joint.size(); ++i) marginal_sum += joint.at(i, i);
  if (marginal_sum == 0) {
    throw std::domain_error("all events have probability zero");
  }
  return marginal_sum * marginal_sum / joint.total();
}

Rational chung_erdos(const EventSystem& sys) {
  return chung_erdos(joint_matrix(sys));
}

}  // namespace ubound
