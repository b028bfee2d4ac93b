#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qcomp/alphabet.hpp"
#include "qcomp/dfa.hpp"
#include "qcomp/state_set.hpp"

namespace qcomp {

/// Nondeterministic automaton with optional epsilon moves. Epsilon is a
/// transition kind, never a member of the alphabet.
class Nfa {
 public:
  Nfa(std::size_t state_count, Alphabet alphabet);

  std::size_t state_count() const noexcept { return state_count_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  void add_transition(State from, Letter a, State to);
  void add_epsilon(State from, State to);
  void add_initial(State q);
  void add_final(State q);

  std::span<const State> successors(State q, std::size_t letter_index) const {
    return moves_[q * alphabet_.size() + letter_index];
  }
  std::span<const State> epsilon_successors(State q) const {
    return epsilon_[q];
  }
  const StateSet& initials() const noexcept { return initials_; }
  const StateSet& finals() const noexcept { return finals_; }

  StateSet epsilon_closure(StateSet set) const;

  /// Subsets reached from `set` by `letter_index`, epsilon-closed.
  StateSet step(const StateSet& set, std::size_t letter_index) const;

 private:
  void check(State q) const;

  std::size_t state_count_;
  Alphabet alphabet_;
  std::vector<std::vector<State>> moves_;
  std::vector<std::vector<State>> epsilon_;
  StateSet initials_;
  StateSet finals_;
};

/// NFA with every transition of d reversed; initials are d's finals and
/// the only final state is d's initial state.
Nfa reversed(const Dfa& d);

/// NFA with the same transitions as d.
Nfa as_nfa(const Dfa& d);

}  // namespace qcomp
