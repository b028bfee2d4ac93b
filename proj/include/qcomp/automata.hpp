#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qcomp/alphabet.hpp"
#include "qcomp/dfa.hpp"
#include "qcomp/nfa.hpp"

namespace qcomp {

/// Hard cap on the number of subsets visited by determinize.
inline constexpr std::size_t kMaxSubsetStates = std::size_t{1} << 20;

/// Accessible subset automaton. The empty subset, when reached, is an
/// ordinary sink state. Throws CapacityError past kMaxSubsetStates.
Dfa determinize(const Nfa& n);

/// States reachable from the initial state.
StateSet reachable_states(const Dfa& d);

/// States from which some final state is reachable.
StateSet useful_states(const Dfa& d);

/// Renumbers the reachable part of d in breadth-first order from the
/// initial state, letters in alphabet order. Unreachable states are dropped.
Dfa canonical_form(const Dfa& d);

/// Minimal DFA for the same language over the same alphabet, by Moore
/// partition refinement. States are numbered canonically.
Dfa minimize(const Dfa& d);

/// Double-reversal minimization. Independent of minimize; used as an oracle.
Dfa brzozowski_minimize(const Dfa& d);

/// True iff a bijection of states preserves the initial state, the final
/// states, and every transition. Alphabets must agree as ordered sequences.
bool is_isomorphic(const Dfa& lhs, const Dfa& rhs);

/// Letters a such that some reachable state moves under a to a useful state.
Alphabet language_alphabet(const Dfa& d);

/// Keeps only the transition rows of `letters`, in that order. Every letter
/// must belong to d's alphabet.
Dfa restrict_alphabet(const Dfa& d, const Alphabet& letters);

/// Restricts d to its language alphabet and minimizes.
Dfa trim_alphabet(const Dfa& d);

/// State count of the minimal DFA over the language alphabet.
std::size_t quotient_complexity(const Dfa& d);

/// Complexity of the language of state q.
std::size_t quotient_complexity_of_state(const Dfa& d, State q);

/// Throws StructuralError when the word uses a letter outside the alphabet.
bool accepts(const Dfa& d, std::string_view word);

enum class SinkPolicy { kWhenMissing, kAlways };

/// Extends d to `universe` with one non-final sink taking every missing
/// letter. Rows are reordered to match `universe`. With kWhenMissing and no
/// missing letter, no sink is added.
Dfa complete_over(const Dfa& d, const Alphabet& universe,
                  SinkPolicy policy = SinkPolicy::kWhenMissing);

}  // namespace qcomp
