#include "qcomp/atoms.hpp"

#include <unordered_map>

#include "qcomp/automata.hpp"
#include "qcomp/errors.hpp"

namespace qcomp {

namespace {

void require_minimal(const Dfa& d) {
  if (language_alphabet(d) != d.alphabet() ||
      minimize(d).state_count() != d.state_count()) {
    throw StructuralError(
        "atoms need a minimal DFA over its own language alphabet");
  }
}

struct PairKey {
  StateSet x;
  StateSet y;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    return k.x.hash() * 31 + k.y.hash();
  }
};

// Unminimized pair automaton for A_S. State 0 is the start pair; the dead
// state, when present, absorbs every pair whose components meet.
Dfa raw_atom_dfa(const Dfa& d, const StateSet& subset) {
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();
  if (subset.universe() != n) {
    throw StructuralError("atom subset has the wrong universe");
  }
  std::unordered_map<PairKey, State, PairHash> ids;
  std::vector<PairKey> pairs;
  constexpr State kDeadPending = static_cast<State>(-1);
  State dead = kDeadPending;

  auto intern = [&](StateSet x, StateSet y) -> State {
    if (x.intersects(y)) {
      if (dead == kDeadPending) {
        dead = static_cast<State>(pairs.size());
        pairs.push_back({StateSet(n), StateSet(n)});
      }
      return dead;
    }
    PairKey key{std::move(x), std::move(y)};
    auto [it, inserted] = ids.try_emplace(key, static_cast<State>(pairs.size()));
    if (inserted) pairs.push_back(std::move(key));
    return it->second;
  };

  intern(subset, subset.complement());
  std::vector<std::vector<State>> rows(k);
  for (std::size_t next = 0; next < pairs.size(); ++next) {
    for (std::size_t i = 0; i < k; ++i) {
      if (next == dead) {
        rows[i].push_back(dead);
        continue;
      }
      const auto& t = d.delta(i);
      // Copy before intern() may grow `pairs`.
      StateSet x = t.image_of(pairs[next].x);
      StateSet y = t.image_of(pairs[next].y);
      rows[i].push_back(intern(std::move(x), std::move(y)));
    }
  }

  StateSet finals(pairs.size());
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    if (s == dead) continue;
    if (pairs[s].x.is_subset_of(d.finals()) &&
        !pairs[s].y.intersects(d.finals())) {
      finals.insert(static_cast<State>(s));
    }
  }
  std::vector<Transformation> delta;
  for (auto& row : rows) delta.emplace_back(std::move(row));
  return Dfa(pairs.size(), d.alphabet(), std::move(delta), 0, std::move(finals));
}

bool has_final_reachable(const Dfa& d) {
  return reachable_states(d).intersects(d.finals());
}

}  // namespace

Dfa atom_dfa(const Dfa& d, const StateSet& subset) {
  require_minimal(d);
  return minimize(raw_atom_dfa(d, subset));
}

bool atom_is_empty(const Dfa& d, const StateSet& subset) {
  require_minimal(d);
  return !has_final_reachable(raw_atom_dfa(d, subset));
}

std::vector<StateSet> atoms(const Dfa& d) {
  require_minimal(d);
  const std::size_t n = d.state_count();
  if (n >= 32) throw CapacityError("atom enumeration limited to 31 states");
  std::vector<StateSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    StateSet s(n);
    for (State q = 0; q < n; ++q) {
      if ((mask >> q) & 1U) s.insert(q);
    }
    if (has_final_reachable(raw_atom_dfa(d, s))) out.push_back(std::move(s));
  }
  return out;
}

std::size_t atom_complexity(const Dfa& d, const StateSet& subset) {
  require_minimal(d);
  const Dfa raw = raw_atom_dfa(d, subset);
  if (!has_final_reachable(raw)) {
    throw EmptyAtomError("atom is empty");
  }
  return minimize(raw).state_count();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::optional<std::uint64_t> atom_formula(WitnessClass cls, std::size_t n,
                                          const StateSet& subset) {
  if (subset.universe() != n) {
    throw StructuralError("atom subset has the wrong universe");
  }
  if (n < min_states(cls)) {
    throw RangeError("atom formula outside the class's range of n");
  }
  const std::uint64_t s = subset.count();
  const bool all = s == n;
  const bool none = s == 0;
  auto double_sum = [&](auto term) {
    std::uint64_t total = 1;
    for (std::uint64_t x = 1; x <= s; ++x) {
      for (std::uint64_t y = 1; y <= n - s; ++y) total += term(x, y);
    }
    return total;
  };
  const std::uint64_t pow2 = std::uint64_t{1} << n;

  switch (cls) {
    case WitnessClass::kRegular:
      if (all || none) return pow2 - 1;
      return double_sum([&](std::uint64_t x, std::uint64_t y) {
        return binomial(n, x) * binomial(n - x, y);
      });
    case WitnessClass::kRightIdeal:
      if (all) return pow2 / 2;
      if (none) return std::nullopt;
      return double_sum([&](std::uint64_t x, std::uint64_t y) {
        return binomial(n - 1, x - 1) * binomial(n - x, y);
      });
    case WitnessClass::kLeftIdeal:
      if (all) return n;
      if (none) return pow2 / 2;
      return double_sum([&](std::uint64_t x, std::uint64_t y) {
        return binomial(n - 1, x) * binomial(n - 1 - x, y);
      });
    case WitnessClass::kTwoSidedIdeal: {
      if (all) return n;
      if (s == n - 1 && !subset.contains(1)) return pow2 / 4 + n - 1;
      return double_sum([&](std::uint64_t x, std::uint64_t y) {
        return binomial(n - 2, x - 1) * binomial(n - x - 1, y - 1);
      });
    }
  }
  return std::nullopt;
}

}  // namespace qcomp
