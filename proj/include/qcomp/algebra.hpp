#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcomp/dfa.hpp"
#include "qcomp/transformation.hpp"

namespace qcomp {

inline constexpr std::size_t kMaxSemigroupElements = 10'000'000;

/// Transformations induced by non-empty words, in breadth-first order.
/// words[i] is a shortest word inducing elements[i], ties broken by
/// alphabet order.
struct SemigroupClosure {
  std::vector<Transformation> elements;
  std::vector<std::string> words;

  std::size_t size() const noexcept { return elements.size(); }
};

/// Throws CapacityError past `cap` elements.
SemigroupClosure transition_semigroup(const Dfa& d,
                                      std::size_t cap = kMaxSemigroupElements);

/// Same count as transition_semigroup without recording words.
std::size_t transition_semigroup_size(const Dfa& d,
                                      std::size_t cap = kMaxSemigroupElements);

/// Size of the transition semigroup of the minimal DFA over the language
/// alphabet.
std::size_t syntactic_semigroup_size(const Dfa& d);

}  // namespace qcomp
