#include "qcomp/nfa.hpp"

#include <string>

#include "qcomp/errors.hpp"

namespace qcomp {

Nfa::Nfa(std::size_t state_count, Alphabet alphabet)
    : state_count_(state_count),
      alphabet_(std::move(alphabet)),
      moves_(state_count * alphabet_.size()),
      epsilon_(state_count),
      initials_(state_count),
      finals_(state_count) {}

void Nfa::check(State q) const {
  if (q >= state_count_) {
    throw StructuralError("NFA state " + std::to_string(q) + " out of range");
  }
}

void Nfa::add_transition(State from, Letter a, State to) {
  check(from);
  check(to);
  const auto i = alphabet_.index_of(a);
  if (!i) throw StructuralError(std::string("letter '") + a + "' not in alphabet");
  moves_[from * alphabet_.size() + *i].push_back(to);
}

void Nfa::add_epsilon(State from, State to) {
  check(from);
  check(to);
  epsilon_[from].push_back(to);
}

void Nfa::add_initial(State q) { initials_.insert(q); }
void Nfa::add_final(State q) { finals_.insert(q); }

StateSet Nfa::epsilon_closure(StateSet set) const {
  std::vector<State> stack = set.members();
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State p : epsilon_[q]) {
      if (!set.contains(p)) {
        set.insert(p);
        stack.push_back(p);
      }
    }
  }
  return set;
}

StateSet Nfa::step(const StateSet& set, std::size_t letter_index) const {
  StateSet next(state_count_);
  set.for_each([&](State q) {
    for (State p : successors(q, letter_index)) next.insert(p);
  });
  return epsilon_closure(std::move(next));
}

Nfa reversed(const Dfa& d) {
  Nfa n(d.state_count(), d.alphabet());
  for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
    for (State q = 0; q < d.state_count(); ++q) {
      n.add_transition(d.step(q, i), d.alphabet()[i], q);
    }
  }
  d.finals().for_each([&](State q) { n.add_initial(q); });
  n.add_final(d.initial());
  return n;
}

Nfa as_nfa(const Dfa& d) {
  Nfa n(d.state_count(), d.alphabet());
  for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
    for (State q = 0; q < d.state_count(); ++q) {
      n.add_transition(q, d.alphabet()[i], d.step(q, i));
    }
  }
  n.add_initial(d.initial());
  d.finals().for_each([&](State q) { n.add_final(q); });
  return n;
}

}  // namespace qcomp
