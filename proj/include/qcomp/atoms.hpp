#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcomp/dfa.hpp"
#include "qcomp/state_set.hpp"
#include "qcomp/witnesses.hpp"

namespace qcomp {

/// Raised when a complexity is requested for an atom whose language is
/// empty.
class EmptyAtomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The atom A_S: words in the quotient of every state in S and in no
/// quotient of a state outside S.
///
/// Every function here expects `d` to be minimal over its language
/// alphabet, so that states stand for distinct quotients; otherwise they
/// throw StructuralError.
///
/// States of the result track the pair (image of S, image of Q \ S). A pair
/// whose components meet is dead. The result is minimized over d's
/// alphabet.
Dfa atom_dfa(const Dfa& d, const StateSet& subset);

bool atom_is_empty(const Dfa& d, const StateSet& subset);

/// Every S with a non-empty atom, in increasing order of S read as a
/// binary number.
std::vector<StateSet> atoms(const Dfa& d);

/// Throws EmptyAtomError for an empty atom.
std::size_t atom_complexity(const Dfa& d, const StateSet& subset);

/// Closed-form atom complexity for the class's most complex stream.
/// nullopt for subsets the closed form does not cover (S empty for right
/// ideals).
std::optional<std::uint64_t> atom_formula(WitnessClass cls, std::size_t n,
                                          const StateSet& subset);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace qcomp
