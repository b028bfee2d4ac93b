#include "qcomp/operations.hpp"

#include <deque>
#include <unordered_map>
#include <vector>

#include "qcomp/automata.hpp"
#include "qcomp/nfa.hpp"

namespace qcomp {

namespace {

OpResult finish(const Dfa& raw, const Alphabet& combined) {
  Dfa trimmed = trim_alphabet(raw);
  const std::size_t kappa = trimmed.state_count();
  return OpResult{std::move(trimmed), kappa, combined};
}

Dfa universal(const Alphabet& alphabet) {
  std::vector<Transformation> delta(alphabet.size(),
                                    Transformation::identity(1));
  return Dfa(1, alphabet, std::move(delta), 0, StateSet::full(1));
}

bool is_empty_language(const Dfa& d) {
  return !reachable_states(d).intersects(d.finals());
}

// Sigma* L, L Sigma* or Sigma* L Sigma*, with Sigma the alphabet of `trimmed`.
Dfa pad_with_universal(const Dfa& trimmed, bool left, bool right) {
  Dfa result = trimmed;
  const Dfa all = universal(trimmed.alphabet());
  if (left) result = product(all, result).dfa;
  if (right) result = product(result, all).dfa;
  return result;
}

bool ideal_test(const Dfa& d, bool left, bool right) {
  if (is_empty_language(d)) return false;
  const Dfa trimmed = trim_alphabet(d);
  return equivalent(trimmed, pad_with_universal(trimmed, left, right));
}

}  // namespace

bool evaluate(BooleanOp op, bool l, bool r) noexcept {
  switch (op) {
    case BooleanOp::kUnion:
      return l || r;
    case BooleanOp::kNor:
      return !l && !r;
    case BooleanOp::kImplies:
      return !l || r;
    case BooleanOp::kConverse:
      return l || !r;
    case BooleanOp::kSymDiff:
      return l != r;
    case BooleanOp::kXnor:
      return l == r;
    case BooleanOp::kDiff:
      return l && !r;
    case BooleanOp::kRevDiff:
      return !l && r;
    case BooleanOp::kInter:
      return l && r;
    case BooleanOp::kNand:
      return !l || !r;
  }
  return false;
}

std::string_view to_string(BooleanOp op) noexcept {
  switch (op) {
    case BooleanOp::kUnion:
      return "union";
    case BooleanOp::kNor:
      return "nor";
    case BooleanOp::kImplies:
      return "implies";
    case BooleanOp::kConverse:
      return "converse";
    case BooleanOp::kSymDiff:
      return "symdiff";
    case BooleanOp::kXnor:
      return "xnor";
    case BooleanOp::kDiff:
      return "diff";
    case BooleanOp::kRevDiff:
      return "revdiff";
    case BooleanOp::kInter:
      return "inter";
    case BooleanOp::kNand:
      return "nand";
  }
  return "?";
}

std::optional<BooleanOp> parse_boolean_op(std::string_view s) noexcept {
  for (BooleanOp op : kAllBooleanOps) {
    if (to_string(op) == s) return op;
  }
  return std::nullopt;
}

OpResult product(const Dfa& lhs_in, const Dfa& rhs_in) {
  const Dfa lhs = minimize(lhs_in);
  const Dfa rhs = minimize(rhs_in);
  const Alphabet combined = Alphabet::union_of(lhs.alphabet(), rhs.alphabet());
  const std::size_t m = lhs.state_count();
  Nfa nfa(m + rhs.state_count(), combined);
  for (std::size_t i = 0; i < lhs.alphabet().size(); ++i) {
    for (State q = 0; q < m; ++q) {
      nfa.add_transition(q, lhs.alphabet()[i], lhs.step(q, i));
    }
  }
  for (std::size_t i = 0; i < rhs.alphabet().size(); ++i) {
    for (State q = 0; q < rhs.state_count(); ++q) {
      nfa.add_transition(static_cast<State>(m + q), rhs.alphabet()[i],
                         static_cast<State>(m + rhs.step(q, i)));
    }
  }
  const auto rhs_initial = static_cast<State>(m + rhs.initial());
  lhs.finals().for_each([&](State q) { nfa.add_epsilon(q, rhs_initial); });
  rhs.finals().for_each(
      [&](State q) { nfa.add_final(static_cast<State>(m + q)); });
  nfa.add_initial(lhs.initial());
  return finish(determinize(nfa), combined);
}

OpResult boolean(BooleanOp op, const Dfa& lhs_in, const Dfa& rhs_in) {
  const Alphabet combined =
      Alphabet::union_of(lhs_in.alphabet(), rhs_in.alphabet());
  const Dfa lhs = complete_over(minimize(lhs_in), combined);
  const Dfa rhs = complete_over(minimize(rhs_in), combined);
  const std::size_t k = combined.size();
  const std::size_t width = rhs.state_count();

  // Reachable part of the direct product.
  std::unordered_map<std::size_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    auto [it, inserted] =
        ids.try_emplace(p * width + q, static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(p, q);
    return it->second;
  };
  std::vector<std::vector<State>> rows(k);
  intern(lhs.initial(), rhs.initial());
  for (std::size_t next = 0; next < pairs.size(); ++next) {
    const auto [p, q] = pairs[next];
    for (std::size_t i = 0; i < k; ++i) {
      rows[i].push_back(intern(lhs.step(p, i), rhs.step(q, i)));
    }
  }
  StateSet finals(pairs.size());
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    if (evaluate(op, lhs.is_final(pairs[s].first),
                 rhs.is_final(pairs[s].second))) {
      finals.insert(static_cast<State>(s));
    }
  }
  std::vector<Transformation> delta;
  for (auto& row : rows) delta.emplace_back(std::move(row));
  return finish(Dfa(pairs.size(), combined, std::move(delta), 0,
                    std::move(finals)),
                combined);
}

OpResult complement(const Dfa& d, const Alphabet& universe) {
  const Dfa completed = complete_over(d, universe);
  const Dfa flipped(completed.state_count(), completed.alphabet(),
                    completed.delta(), completed.initial(),
                    completed.finals().complement());
  return finish(flipped, universe);
}

OpResult star(const Dfa& d_in) {
  const Dfa d = minimize(d_in);
  const std::size_t n = d.state_count();
  const auto fresh = static_cast<State>(n);
  Nfa nfa(n + 1, d.alphabet());
  for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
    for (State q = 0; q < n; ++q) {
      nfa.add_transition(q, d.alphabet()[i], d.step(q, i));
    }
  }
  nfa.add_initial(fresh);
  nfa.add_final(fresh);
  nfa.add_epsilon(fresh, d.initial());
  d.finals().for_each([&](State q) {
    nfa.add_final(q);
    nfa.add_epsilon(q, d.initial());
  });
  return finish(determinize(nfa), d.alphabet());
}

OpResult reverse(const Dfa& d) {
  return finish(determinize(reversed(minimize(d))), d.alphabet());
}

bool is_right_ideal(const Dfa& d) { return ideal_test(d, false, true); }
bool is_left_ideal(const Dfa& d) { return ideal_test(d, true, false); }
bool is_two_sided_ideal(const Dfa& d) { return ideal_test(d, true, true); }

bool equivalent(const Dfa& lhs, const Dfa& rhs) {
  const Alphabet combined = Alphabet::union_of(lhs.alphabet(), rhs.alphabet());
  return is_isomorphic(minimize(complete_over(lhs, combined)),
                       minimize(complete_over(rhs, combined)));
}

}  // namespace qcomp
