#include "qcomp/automata.hpp"

#include <deque>
#include <map>
#include <string>
#include <unordered_map>

#include "qcomp/errors.hpp"

namespace qcomp {

namespace {

constexpr State kUnassigned = static_cast<State>(-1);

// Builds a DFA from a table of successor ids, one row per letter.
Dfa from_rows(std::size_t states, const Alphabet& alphabet,
              std::vector<std::vector<State>> rows, State initial,
              StateSet finals) {
  std::vector<Transformation> delta;
  delta.reserve(rows.size());
  for (auto& row : rows) delta.emplace_back(std::move(row));
  return Dfa(states, alphabet, std::move(delta), initial, std::move(finals));
}

}  // namespace

Dfa determinize(const Nfa& n) {
  const std::size_t k = n.alphabet().size();
  std::unordered_map<StateSet, State, StateSetHash> ids;
  std::vector<StateSet> subsets;
  std::vector<std::vector<State>> rows(k);

  auto intern = [&](StateSet s) -> State {
    auto [it, inserted] = ids.try_emplace(s, static_cast<State>(subsets.size()));
    if (inserted) {
      if (subsets.size() >= kMaxSubsetStates) {
        throw CapacityError("subset construction exceeded " +
                            std::to_string(kMaxSubsetStates) + " states");
      }
      subsets.push_back(std::move(s));
    }
    return it->second;
  };

  intern(n.epsilon_closure(n.initials()));
  for (std::size_t next = 0; next < subsets.size(); ++next) {
    for (std::size_t i = 0; i < k; ++i) {
      const State target = intern(n.step(subsets[next], i));
      rows[i].push_back(target);
    }
  }

  StateSet finals(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    if (subsets[s].intersects(n.finals())) finals.insert(static_cast<State>(s));
  }
  return from_rows(subsets.size(), n.alphabet(), std::move(rows), 0,
                   std::move(finals));
}

StateSet reachable_states(const Dfa& d) {
  StateSet seen(d.state_count());
  std::vector<State> stack{d.initial()};
  seen.insert(d.initial());
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (const auto& t : d.delta()) {
      const State p = t[q];
      if (!seen.contains(p)) {
        seen.insert(p);
        stack.push_back(p);
      }
    }
  }
  return seen;
}

StateSet useful_states(const Dfa& d) {
  const std::size_t n = d.state_count();
  std::vector<std::vector<State>> preds(n);
  for (const auto& t : d.delta()) {
    for (State q = 0; q < n; ++q) preds[t[q]].push_back(q);
  }
  StateSet useful = d.finals();
  std::vector<State> stack = useful.members();
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State p : preds[q]) {
      if (!useful.contains(p)) {
        useful.insert(p);
        stack.push_back(p);
      }
    }
  }
  return useful;
}

Dfa canonical_form(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  std::vector<State> id(d.state_count(), kUnassigned);
  std::vector<State> order{d.initial()};
  id[d.initial()] = 0;
  for (std::size_t next = 0; next < order.size(); ++next) {
    for (std::size_t i = 0; i < k; ++i) {
      const State p = d.step(order[next], i);
      if (id[p] == kUnassigned) {
        id[p] = static_cast<State>(order.size());
        order.push_back(p);
      }
    }
  }
  std::vector<std::vector<State>> rows(k, std::vector<State>(order.size()));
  StateSet finals(order.size());
  for (std::size_t s = 0; s < order.size(); ++s) {
    for (std::size_t i = 0; i < k; ++i) rows[i][s] = id[d.step(order[s], i)];
    if (d.is_final(order[s])) finals.insert(static_cast<State>(s));
  }
  return from_rows(order.size(), d.alphabet(), std::move(rows), 0,
                   std::move(finals));
}

Dfa minimize(const Dfa& input) {
  // Work on the reachable part only.
  const Dfa d = canonical_form(input);
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();

  std::vector<State> block(n);
  for (State q = 0; q < n; ++q) block[q] = d.is_final(q) ? 1 : 0;
  std::size_t blocks = d.finals().empty() || d.finals().count() == n ? 1 : 2;
  if (blocks == 1) std::fill(block.begin(), block.end(), 0);

  // Moore refinement: split by (own block, successor blocks) until stable.
  for (;;) {
    std::map<std::vector<State>, State> signatures;
    std::vector<State> refined(n);
    std::vector<State> key(k + 1);
    for (State q = 0; q < n; ++q) {
      key[0] = block[q];
      for (std::size_t i = 0; i < k; ++i) key[i + 1] = block[d.step(q, i)];
      auto [it, inserted] =
          signatures.try_emplace(key, static_cast<State>(signatures.size()));
      refined[q] = it->second;
    }
    block.swap(refined);
    if (signatures.size() == blocks) break;
    blocks = signatures.size();
  }

  std::vector<std::vector<State>> rows(k, std::vector<State>(blocks));
  StateSet finals(blocks);
  for (State q = 0; q < n; ++q) {
    for (std::size_t i = 0; i < k; ++i) rows[i][block[q]] = block[d.step(q, i)];
    if (d.is_final(q)) finals.insert(block[q]);
  }
  return canonical_form(from_rows(blocks, d.alphabet(), std::move(rows),
                                  block[d.initial()], std::move(finals)));
}

Dfa brzozowski_minimize(const Dfa& d) {
  const Dfa once = determinize(reversed(d));
  return canonical_form(determinize(reversed(once)));
}

bool is_isomorphic(const Dfa& lhs, const Dfa& rhs) {
  if (lhs.alphabet() != rhs.alphabet()) return false;
  if (lhs.state_count() != rhs.state_count()) return false;
  const std::size_t n = lhs.state_count();
  const std::size_t k = lhs.alphabet().size();
  std::vector<State> forward(n, kUnassigned);
  std::vector<State> backward(n, kUnassigned);
  std::deque<State> queue{lhs.initial()};
  forward[lhs.initial()] = rhs.initial();
  backward[rhs.initial()] = lhs.initial();
  std::size_t mapped = 1;
  while (!queue.empty()) {
    const State p = queue.front();
    queue.pop_front();
    const State q = forward[p];
    if (lhs.is_final(p) != rhs.is_final(q)) return false;
    for (std::size_t i = 0; i < k; ++i) {
      const State p2 = lhs.step(p, i);
      const State q2 = rhs.step(q, i);
      if (forward[p2] == kUnassigned && backward[q2] == kUnassigned) {
        forward[p2] = q2;
        backward[q2] = p2;
        ++mapped;
        queue.push_back(p2);
      } else if (forward[p2] != q2 || backward[q2] != p2) {
        return false;
      }
    }
  }
  return mapped == n;
}

Alphabet language_alphabet(const Dfa& d) {
  const StateSet reachable = reachable_states(d);
  const StateSet useful = useful_states(d);
  std::string letters;
  for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
    bool used = false;
    reachable.for_each([&](State q) {
      if (!used && useful.contains(d.step(q, i))) used = true;
    });
    if (used) letters.push_back(d.alphabet()[i]);
  }
  return Alphabet(letters);
}

Dfa restrict_alphabet(const Dfa& d, const Alphabet& letters) {
  std::vector<Transformation> delta;
  delta.reserve(letters.size());
  for (char a : letters) delta.push_back(d.action(a));
  return Dfa(d.state_count(), letters, std::move(delta), d.initial(),
             d.finals());
}

Dfa trim_alphabet(const Dfa& d) {
  return minimize(restrict_alphabet(d, language_alphabet(d)));
}

std::size_t quotient_complexity(const Dfa& d) {
  return trim_alphabet(d).state_count();
}

std::size_t quotient_complexity_of_state(const Dfa& d, State q) {
  if (q >= d.state_count()) {
    throw StructuralError("state " + std::to_string(q) + " out of range");
  }
  return quotient_complexity(d.rooted_at(q));
}

bool accepts(const Dfa& d, std::string_view word) {
  State q = d.initial();
  for (char a : word) {
    const auto i = d.alphabet().index_of(a);
    if (!i) {
      throw StructuralError(std::string("letter '") + a +
                            "' not in the automaton's alphabet");
    }
    q = d.step(q, *i);
  }
  return d.is_final(q);
}

Dfa complete_over(const Dfa& d, const Alphabet& universe, SinkPolicy policy) {
  if (!d.alphabet().is_subset_of(universe)) {
    throw StructuralError("universe '" + std::string(universe.letters()) +
                          "' does not contain alphabet '" +
                          std::string(d.alphabet().letters()) + "'");
  }
  const bool missing = universe.size() > d.alphabet().size();
  if (!missing && policy == SinkPolicy::kWhenMissing) {
    return restrict_alphabet(d, universe);
  }
  const std::size_t n = d.state_count();
  const auto sink = static_cast<State>(n);
  std::vector<Transformation> delta;
  delta.reserve(universe.size());
  for (char a : universe) {
    std::vector<State> images(n + 1, sink);
    if (d.alphabet().contains(a)) {
      const auto& row = d.action(a).images();
      std::copy(row.begin(), row.end(), images.begin());
    }
    delta.emplace_back(std::move(images));
  }
  StateSet finals(n + 1);
  d.finals().for_each([&](State q) { finals.insert(q); });
  return Dfa(n + 1, universe, std::move(delta), d.initial(), std::move(finals));
}

}  // namespace qcomp
