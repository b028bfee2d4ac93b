#include "qcomp/dfa.hpp"

#include <string>

#include "qcomp/errors.hpp"

namespace qcomp {

Dfa::Dfa(std::size_t state_count, Alphabet alphabet,
         std::vector<Transformation> delta, State initial, StateSet finals)
    : state_count_(state_count),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      finals_(std::move(finals)) {
  if (state_count_ == 0) throw StructuralError("a DFA needs at least one state");
  if (delta_.size() != alphabet_.size()) {
    throw StructuralError("expected " + std::to_string(alphabet_.size()) +
                          " transition rows, got " +
                          std::to_string(delta_.size()));
  }
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    if (delta_[i].size() != state_count_) {
      throw StructuralError(std::string("row for letter '") + alphabet_[i] +
                            "' has " + std::to_string(delta_[i].size()) +
                            " entries, expected " +
                            std::to_string(state_count_));
    }
  }
  if (initial_ >= state_count_) {
    throw StructuralError("initial state " + std::to_string(initial_) +
                          " out of range");
  }
  if (finals_.universe() != state_count_) {
    throw StructuralError("final-state set has the wrong universe");
  }
}

const Transformation& Dfa::action(Letter a) const {
  const auto i = alphabet_.index_of(a);
  if (!i) throw StructuralError(std::string("letter '") + a + "' not in alphabet");
  return delta_[*i];
}

Dfa Dfa::rooted_at(State q) const {
  return Dfa(state_count_, alphabet_, delta_, q, finals_);
}

}  // namespace qcomp
