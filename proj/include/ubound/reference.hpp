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
// The built-in reference instance: six events over five uniform atoms whose
// exact bounds are known in closed form (GK = 54/55 < 1 = KAT). It is the
// canonical witness that neither pairwise bound dominates the other, and it
// doubles as an end-to-end self check for the whole exact pipeline.

#ifndef UBOUND_REFERENCE_HPP_
#define UBOUND_REFERENCE_HPP_

#include <string>
#include <vector>

#include "ubound/space.hpp"

namespace ubound {

// Atoms x1..x5 of probability 1/5; events
//   A1 = {x1,x2,x4}   A2 = A3 = {x1,x3,x5}
//   A4 = A5 = {x2,x4,x5}   A6 = {x1,x2,x3}.
EventSystem reference_instance();

// The known pairwise intersection matrix of the instance, in fifths.
JointMatrix reference_joint_matrix();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Four exact checks: the computed joint matrix equals the reference matrix
// entry for entry, gk == 54/55, kat == 1, and kat > gk.
VerifyReport verify_instance(const EventSystem& sys,
                             const JointMatrix& expected);
VerifyReport verify_reference();

}  // namespace ubound

#endif  // UBOUND_REFERENCE_HPP_
