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

#include "ubound/reference.hpp"

#include <array>

#include "ubound/bounds.hpp"

namespace ubound {

namespace {

// Membership rows, one per event, over atoms x1..x5.
constexpr std::array<std::array<int, 5>, 6> kMembership = {{
    {1, 1, 0, 1, 0},  // A1
    {1, 0, 1, 0, 1},  // A2
    {1, 0, 1, 0, 1},  // A3
    {0, 1, 0, 1, 1},  // A4
    {0, 1, 0, 1, 1},  // A5
    {1, 1, 1, 0, 0},  // A6
}};

// Pairwise intersection probabilities in fifths.
constexpr std::array<std::array<int, 6>, 6> kJointFifths = {{
    {3, 1, 1, 2, 2, 2},
    {1, 3, 3, 1, 1, 2},
    {1, 3, 3, 1, 1, 2},
    {2, 1, 1, 3, 3, 1},
    {2, 1, 1, 3, 3, 1},
    {2, 2, 2, 1, 1, 3},
}};

}  // namespace

EventSystem reference_instance() {
  std::vector<std::pair<std::string, Rational>> atoms;
  for (int i = 1; i <= 5; ++i) {
    atoms.emplace_back("x" + std::to_string(i), make_rational(1, 5));
  }
  auto space = std::make_shared<const FiniteSpace>(std::move(atoms));

  std::vector<Event> events;
  for (const auto& row : kMembership) {
    AtomSet bits(space->size());
    for (std::size_t a = 0; a < row.size(); ++a) {
      if (row[a]) bits.set(a);
    }
    events.emplace_back(space, std::move(bits));
  }
  return EventSystem(space, std::move(events));
}

JointMatrix reference_joint_matrix() {
  JointMatrix joint(6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      joint.set(i, j, make_rational(kJointFifths[i][j], 5));
    }
  }
  return joint;
}

bool VerifyReport::all_pass() const {
  for (const CheckResult& check : checks) {
    if (!check.pass) return false;
  }
  return true;
}

VerifyReport verify_instance(const EventSystem& sys,
                             const JointMatrix& expected) {
  VerifyReport report;

  const JointMatrix computed = joint_matrix(sys);
  CheckResult matrix_check{"joint-matrix", false, ""};
  if (computed.size() != expected.size()) {
    matrix_check.detail = "size " + std::to_string(computed.size()) +
                          " != " + std::to_string(expected.size());
  } else {
    std::string diffs;
    for (std::size_t i = 0; i < computed.size(); ++i) {
      for (std::size_t j = 0; j < computed.size(); ++j) {
        if (computed.at(i, j) != expected.at(i, j)) {
          diffs += " [" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   "] " + fraction_string(computed.at(i, j)) + "!=" +
                   fraction_string(expected.at(i, j));
        }
      }
    }
    matrix_check.pass = diffs.empty();
    matrix_check.detail = matrix_check.pass
                              ? std::to_string(computed.size() * computed.size()) +
                                    " entries match"
                              : "mismatch:" + diffs;
  }
  report.checks.push_back(std::move(matrix_check));

  const Rational gk = gk_bound(sys);
  const Rational expected_gk = make_rational(54, 55);
  report.checks.push_back({"gk", gk == expected_gk,
                           fraction_string(gk) + " expected " +
                               fraction_string(expected_gk)});

  const Rational kat = kat_bound(sys).bound;
  report.checks.push_back(
      {"kat", kat == 1, fraction_string(kat) + " expected 1/1"});

  report.checks.push_back({"kat>gk", kat > gk,
                           "margin " + fraction_string(kat - gk)});
  return report;
}

VerifyReport verify_reference() {
  return verify_instance(reference_instance(), reference_joint_matrix());
}

}  // namespace ubound
