#pragma once

#include <cstddef>
#include <vector>

#include "qcomp/alphabet.hpp"
#include "qcomp/state_set.hpp"
#include "qcomp/transformation.hpp"

namespace qcomp {

/// Complete deterministic automaton. Letter i of the alphabet acts by
/// delta(i); completeness follows from transformations being total.
class Dfa {
 public:
  Dfa(std::size_t state_count, Alphabet alphabet,
      std::vector<Transformation> delta, State initial, StateSet finals);

  std::size_t state_count() const noexcept { return state_count_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Transformation>& delta() const noexcept { return delta_; }
  const Transformation& delta(std::size_t letter_index) const {
    return delta_.at(letter_index);
  }
  /// Throws StructuralError for a letter outside the alphabet.
  const Transformation& action(Letter a) const;
  State initial() const noexcept { return initial_; }
  const StateSet& finals() const noexcept { return finals_; }
  bool is_final(State q) const noexcept { return finals_.contains(q); }

  State step(State q, std::size_t letter_index) const {
    return delta_[letter_index][q];
  }

  /// Same transition structure with a different initial state.
  Dfa rooted_at(State q) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t state_count_;
  Alphabet alphabet_;
  std::vector<Transformation> delta_;
  State initial_;
  StateSet finals_;
};

}  // namespace qcomp
