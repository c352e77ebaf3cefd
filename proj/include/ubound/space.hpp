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

#ifndef UBOUND_SPACE_HPP_
#define UBOUND_SPACE_HPP_

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ubound/errors.hpp"
#include "ubound/rational.hpp"

namespace ubound {

// A finite probability space: ordered atoms with exact nonnegative
// probabilities summing to exactly 1. Immutable after construction.
//
// Uniform spaces with generated atom ids (used for the large dyadic spaces)
// store no per-atom data at all.
class FiniteSpace {
 public:
  // Throws std::invalid_argument on duplicate ids, a negative probability,
  // or a total different from 1.
  explicit FiniteSpace(std::vector<std::pair<std::string, Rational>> atoms);

  // `count` atoms of probability 1/count each, ids "<prefix>0", "<prefix>1"…
  static std::shared_ptr<const FiniteSpace> uniform(std::size_t count,
                                                    std::string prefix = "c");

  std::size_t size() const { return size_; }
  std::string atom_id(std::size_t index) const;
  Rational atom_prob(std::size_t index) const;
  std::optional<std::size_t> index_of(std::string_view id) const;
  // True when every atom has the same probability (enables integer-count
  // fast paths in the prefix scans).
  bool is_uniform() const { return uniform_; }

  bool operator==(const FiniteSpace& other) const;

 private:
  FiniteSpace(std::size_t count, std::string prefix);

  std::size_t size_ = 0;
  bool uniform_ = false;
  Rational uniform_prob_;
  std::string synthetic_prefix_;  // empty for explicit-atom spaces
  std::vector<std::string> ids_;
  std::vector<Rational> probs_;
  std::unordered_map<std::string, std::size_t> index_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;
using AtomSet = boost::dynamic_bitset<std::uint64_t>;

// A subset of the atoms of one FiniteSpace.
class Event {
 public:
  Event(SpacePtr space, AtomSet members);
  static Event from_indices(SpacePtr space,
                            const std::vector<std::size_t>& indices);

  const SpacePtr& space() const { return space_; }
  const AtomSet& members() const { return members_; }
  bool empty() const { return members_.none(); }

  bool operator==(const Event& other) const;

 private:
  SpacePtr space_;
  AtomSet members_;
};

// Exact sum of the member atoms' probabilities.
Rational event_prob(const Event& e);
// P(a ∩ b); both events must live in the same space.
Rational intersection_prob(const Event& a, const Event& b);

// An ordered collection of m >= 1 events over one shared space.
class EventSystem {
 public:
  // Names default to "A1".."Am" when omitted.
  EventSystem(SpacePtr space, std::vector<Event> events,
              std::vector<std::string> names = {});

  std::size_t size() const { return events_.size(); }
  const SpacePtr& space() const { return space_; }
  const Event& event(std::size_t i) const { return events_[i]; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<Event>& events() const { return events_; }

  // Index of the first zero-probability event, if any. Bound computations
  // reject such systems; parsing and set operations accept them.
  std::optional<std::size_t> first_zero_event() const;

  bool operator==(const EventSystem& other) const;

 private:
  SpacePtr space_;
  std::vector<Event> events_;
  std::vector<std::string> names_;
};

// Symmetric m×m matrix of pairwise intersection probabilities; the diagonal
// holds the marginals.
class JointMatrix {
 public:
  explicit JointMatrix(std::size_t m);

  std::size_t size() const { return m_; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * m_ + j];
  }
  void set(std::size_t i, std::size_t j, const Rational& value);
  Rational row_sum(std::size_t i) const;
  Rational total() const;

  bool operator==(const JointMatrix& other) const;

 private:
  std::size_t m_;
  std::vector<Rational> entries_;
};

JointMatrix joint_matrix(const EventSystem& sys);
// Exact probability of the union of all events.
Rational union_prob(const EventSystem& sys);

struct ParsedSpace {
  EventSystem system;
  std::vector<std::string> warnings;  // e.g. zero-probability events
};

// Space-file grammar (line oriented, '#' comments, blank lines ignored):
//   atom <id> <prob>        prob = <int>/<int> or decimal literal
//   event <name> <id> [<id> ...]
// Atom order defines atom indices; event order defines event indices.
// Throws ParseError with 1-based line/column on malformed input.
ParsedSpace parse_space(std::string_view text);

// Canonical re-serialization (probabilities as fractions). Feeding the
// result back through parse_space reproduces the identical system.
std::string serialize_space(const EventSystem& sys);

}  // namespace ubound

#endif  // UBOUND_SPACE_HPP_
