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

#include "ubound/space.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ubound {

// ---------------------------------------------------------------------------
// FiniteSpace

FiniteSpace::FiniteSpace(std::vector<std::pair<std::string, Rational>> atoms) {
  size_ = atoms.size();
  ids_.reserve(size_);
  probs_.reserve(size_);
  Rational total = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    auto& [id, prob] = atoms[i];
    if (prob < 0) {
      throw std::invalid_argument("atom '" + id + "' has negative probability");
    }
    if (!index_.emplace(id, i).second) {
      throw std::invalid_argument("duplicate atom id '" + id + "'");
    }
    total += prob;
    ids_.push_back(std::move(id));
    probs_.push_back(std::move(prob));
  }
  if (total != 1) {
    throw std::invalid_argument("atom probabilities sum to " +
                                fraction_string(total) + ", not 1");
  }
  uniform_ = !probs_.empty() &&
             std::all_of(probs_.begin(), probs_.end(),
                         [&](const Rational& p) { return p == probs_[0]; });
  if (uniform_) uniform_prob_ = probs_[0];
}

FiniteSpace::FiniteSpace(std::size_t count, std::string prefix)
    : size_(count),
      uniform_(true),
      uniform_prob_(make_rational(1, static_cast<long>(count))),
      synthetic_prefix_(std::move(prefix)) {}

std::shared_ptr<const FiniteSpace> FiniteSpace::uniform(std::size_t count,
                                                        std::string prefix) {
  if (count == 0) throw std::invalid_argument("empty space");
  return std::shared_ptr<const FiniteSpace>(
      new FiniteSpace(count, std::move(prefix)));
}

std::string FiniteSpace::atom_id(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("atom index");
  if (!synthetic_prefix_.empty()) {
    return synthetic_prefix_ + std::to_string(index);
  }
  return ids_[index];
}

Rational FiniteSpace::atom_prob(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("atom index");
  if (!synthetic_prefix_.empty()) return uniform_prob_;
  return probs_[index];
}

std::optional<std::size_t> FiniteSpace::index_of(std::string_view id) const {
  if (!synthetic_prefix_.empty()) {
    if (id.substr(0, synthetic_prefix_.size()) != synthetic_prefix_) {
      return std::nullopt;
    }
    std::string_view digits = id.substr(synthetic_prefix_.size());
    if (digits.empty() || digits.size() > 18) return std::nullopt;
    std::size_t value = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    if (value >= size_) return std::nullopt;
    return value;
  }
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteSpace::operator==(const FiniteSpace& other) const {
  if (this == &other) return true;
  if (size_ != other.size_) return false;
  if (!synthetic_prefix_.empty() && !other.synthetic_prefix_.empty()) {
    // Uniform synthetic spaces are fully determined by size and prefix.
    return synthetic_prefix_ == other.synthetic_prefix_;
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (atom_id(i) != other.atom_id(i) || atom_prob(i) != other.atom_prob(i)) {
      return false;
    }
  }
  return true;
}

namespace {

// Distinct FiniteSpace instances with identical content are interchangeable
// (synthetic uniform spaces are rebuilt freely).
bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a.get() == b.get() || *a == *b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Event

Event::Event(SpacePtr space, AtomSet members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (!space_) throw std::invalid_argument("event without a space");
  if (members_.size() != space_->size()) {
    throw std::invalid_argument("event bitset size does not match the space");
  }
}

Event Event::from_indices(SpacePtr space,
                          const std::vector<std::size_t>& indices) {
  if (!space) throw std::invalid_argument("event without a space");
  AtomSet bits(space->size());
  for (std::size_t i : indices) {
    if (i >= space->size()) throw std::out_of_range("atom index");
    bits.set(i);
  }
  return Event(std::move(space), std::move(bits));
}

bool Event::operator==(const Event& other) const {
  return *space_ == *other.space_ && members_ == other.members_;
}

Rational event_prob(const Event& e) {
  const FiniteSpace& space = *e.space();
  if (space.is_uniform()) {
    return Rational(static_cast<long>(e.members().count())) *
           space.atom_prob(0);
  }
  Rational total = 0;
  for (auto i = e.members().find_first(); i != AtomSet::npos;
       i = e.members().find_next(i)) {
    total += space.atom_prob(i);
  }
  return total;
}

Rational intersection_prob(const Event& a, const Event& b) {
  if (!same_space(a.space(), b.space())) {
    throw std::invalid_argument("events live in different spaces");
  }
  AtomSet common = a.members() & b.members();
  return event_prob(Event(a.space(), std::move(common)));
}

// ---------------------------------------------------------------------------
// EventSystem

EventSystem::EventSystem(SpacePtr space, std::vector<Event> events,
                         std::vector<std::string> names)
    : space_(std::move(space)),
      events_(std::move(events)),
      names_(std::move(names)) {
  if (!space_) throw std::invalid_argument("system without a space");
  if (events_.empty()) throw std::invalid_argument("system with no events");
  for (const Event& e : events_) {
    if (!same_space(e.space(), space_)) {
      throw std::invalid_argument("event does not belong to the system space");
    }
  }
  if (names_.empty()) {
    names_.reserve(events_.size());
    for (std::size_t i = 0; i < events_.size(); ++i) {
      names_.push_back("A" + std::to_string(i + 1));
    }
  }
  if (names_.size() != events_.size()) {
    throw std::invalid_argument("event name count does not match");
  }
}

std::optional<std::size_t> EventSystem::first_zero_event() const {
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if (event_prob(events_[i]) == 0) return i;
  }
  return std::nullopt;
}

bool EventSystem::operator==(const EventSystem& other) const {
  if (size() != other.size() || !(*space_ == *other.space_)) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (names_[i] != other.names_[i] ||
        events_[i].members() != other.events_[i].members()) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// JointMatrix

JointMatrix::JointMatrix(std::size_t m) : m_(m), entries_(m * m) {
  if (m == 0) throw std::invalid_argument("empty joint matrix");
}

void JointMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  entries_[i * m_ + j] = value;
}

Rational JointMatrix::row_sum(std::size_t i) const {
  Rational total = 0;
  for (std::size_t j = 0; j < m_; ++j) total += at(i, j);
  return total;
}

Rational JointMatrix::total() const {
  Rational total = 0;
  for (const Rational& e : entries_) total += e;
  return total;
}

bool JointMatrix::operator==(const JointMatrix& other) const {
  return m_ == other.m_ && entries_ == other.entries_;
}

JointMatrix joint_matrix(const EventSystem& sys) {
  const std::size_t m = sys.size();
  JointMatrix joint(m);
  for (std::size_t i = 0; i < m; ++i) {
    joint.set(i, i, event_prob(sys.event(i)));
    for (std::size_t j = 0; j < i; ++j) {
      Rational p = intersection_prob(sys.event(i), sys.event(j));
      joint.set(i, j, p);
      joint.set(j, i, p);
    }
  }
  return joint;
}

Rational union_prob(const EventSystem& sys) {
  AtomSet covered(sys.space()->size());
  for (const Event& e : sys.events()) covered |= e.members();
  return event_prob(Event(sys.space(), std::move(covered)));
}

// ---------------------------------------------------------------------------
// Parsing and serialization

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

// One logical line = tokens up to newline, comments stripped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::vector<Token> current;
  int line = 1;
  int column = 1;
  bool in_comment = false;
  std::string pending;
  int pending_col = 0;

  auto flush_token = [&]() {
    if (!pending.empty()) {
      current.push_back(Token{pending, line, pending_col});
      pending.clear();
    }
  };
  auto flush_line = [&]() {
    flush_token();
    if (!current.empty()) lines.push_back(std::move(current));
    current.clear();
  };

  for (char c : text) {
    if (c == '\n') {
      flush_line();
      ++line;
      column = 1;
      in_comment = false;
      continue;
    }
    if (!in_comment) {
      if (c == '#') {
        in_comment = true;
        flush_token();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        flush_token();
      } else {
        if (pending.empty()) pending_col = column;
        pending.push_back(c);
      }
    }
    ++column;
  }
  flush_line();
  return lines;
}

}  // namespace

ParsedSpace parse_space(std::string_view text) {
  std::vector<std::pair<std::string, Rational>> atoms;
  struct RawEvent {
    std::string name;
    std::vector<Token> atom_tokens;
  };
  std::vector<RawEvent> raw_events;

  for (const auto& tokens : tokenize(text)) {
    const Token& head = tokens.front();
    if (head.text == "atom") {
      if (!raw_events.empty()) {
        throw ParseError(head.line, head.column,
                         "atom lines must precede event lines");
      }
      if (tokens.size() != 3) {
        throw ParseError(head.line, head.column,
                         "expected 'atom <id> <prob>'");
      }
      Rational prob;
      try {
        prob = parse_rational(tokens[2].text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(tokens[2].line, tokens[2].column, e.what());
      }
      atoms.emplace_back(tokens[1].text, std::move(prob));
    } else if (head.text == "event") {
      if (tokens.size() < 3) {
        throw ParseError(head.line, head.column,
                         "expected 'event <name> <id> [<id> ...]'");
      }
      RawEvent raw;
      raw.name = tokens[1].text;
      raw.atom_tokens.assign(tokens.begin() + 2, tokens.end());
      raw_events.push_back(std::move(raw));
    } else {
      throw ParseError(head.line, head.column,
                       "unknown directive '" + head.text + "'");
    }
  }

  if (atoms.empty()) throw ParseError(1, 1, "no atoms defined");
  if (raw_events.empty()) throw ParseError(1, 1, "no events defined");

  SpacePtr space;
  try {
    space = std::make_shared<const FiniteSpace>(std::move(atoms));
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 1, e.what());
  }

  std::vector<Event> events;
  std::vector<std::string> names;
  std::vector<std::string> warnings;
  for (const RawEvent& raw : raw_events) {
    AtomSet bits(space->size());
    for (const Token& tok : raw.atom_tokens) {
      auto index = space->index_of(tok.text);
      if (!index) {
        throw ParseError(tok.line, tok.column,
                         "event '" + raw.name + "' references unknown atom '" +
                             tok.text + "'");
      }
      bits.set(*index);
    }
    Event e(space, std::move(bits));
    if (event_prob(e) == 0) {
      warnings.push_back("event '" + raw.name +
                         "' has probability zero; bound computations will "
                         "reject this system");
    }
    events.push_back(std::move(e));
    names.push_back(raw.name);
  }

  return ParsedSpace{EventSystem(space, std::move(events), std::move(names)),
                     std::move(warnings)};
}

std::string serialize_space(const EventSystem& sys) {
  std::ostringstream out;
  const FiniteSpace& space = *sys.space();
  for (std::size_t i = 0; i < space.size(); ++i) {
    out << "atom " << space.atom_id(i) << ' '
        << fraction_string(space.atom_prob(i)) << '\n';
  }
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out << "event " << sys.name(i);
    const AtomSet& bits = sys.event(i).members();
    for (auto a = bits.find_first(); a != AtomSet::npos;
         a = bits.find_next(a)) {
      out << ' ' << space.atom_id(a);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ubound
