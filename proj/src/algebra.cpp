#include "qcomp/algebra.hpp"

#include <unordered_set>

#include "qcomp/automata.hpp"
#include "qcomp/errors.hpp"

namespace qcomp {

namespace {

// Byte-packed image sequence; one byte per state up to 256 states.
std::string pack(const Transformation& t) {
  std::string key;
  if (t.size() <= 256) {
    key.reserve(t.size());
    for (State q : t.images()) key.push_back(static_cast<char>(q));
  } else {
    key.reserve(4 * t.size());
    for (State q : t.images()) {
      for (int shift = 0; shift < 32; shift += 8) {
        key.push_back(static_cast<char>((q >> shift) & 0xff));
      }
    }
  }
  return key;
}

template <typename OnNew>
void closure(const Dfa& d, std::size_t cap, OnNew&& on_new) {
  std::unordered_set<std::string> seen;
  std::vector<Transformation> frontier;
  auto admit = [&](Transformation t, std::size_t parent, std::size_t letter) {
    if (!seen.insert(pack(t)).second) return;
    if (seen.size() > cap) {
      throw CapacityError("transition semigroup exceeds " +
                          std::to_string(cap) + " elements");
    }
    on_new(t, parent, letter);
    frontier.push_back(std::move(t));
  };
  constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
    admit(d.delta(i), kNoParent, i);
  }
  for (std::size_t next = 0; next < frontier.size(); ++next) {
    for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
      admit(compose(frontier[next], d.delta(i)), next, i);
    }
  }
}

}  // namespace

SemigroupClosure transition_semigroup(const Dfa& d, std::size_t cap) {
  SemigroupClosure out;
  closure(d, cap, [&](const Transformation& t, std::size_t parent,
                      std::size_t letter) {
    std::string word = parent < out.words.size() ? out.words[parent] : "";
    word.push_back(d.alphabet()[letter]);
    out.elements.push_back(t);
    out.words.push_back(std::move(word));
  });
  return out;
}

std::size_t transition_semigroup_size(const Dfa& d, std::size_t cap) {
  std::size_t count = 0;
  closure(d, cap, [&](const Transformation&, std::size_t, std::size_t) {
    ++count;
  });
  return count;
}

std::size_t syntactic_semigroup_size(const Dfa& d) {
  return transition_semigroup_size(trim_alphabet(d));
}

}  // namespace qcomp
