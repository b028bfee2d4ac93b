#include "qcomp/witnesses.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "qcomp/errors.hpp"
#include "qcomp/transformation.hpp"

namespace qcomp {

namespace {

void require_states(WitnessClass cls, std::size_t n) {
  if (n < min_states(cls)) {
    throw RangeError(std::string(to_string(cls)) + " witness needs n >= " +
                     std::to_string(min_states(cls)) + ", got " +
                     std::to_string(n));
  }
}

std::vector<State> range(State from, State to_inclusive) {
  std::vector<State> v(to_inclusive - from + 1);
  std::iota(v.begin(), v.end(), from);
  return v;
}

StateSet final_only(std::size_t n) { return StateSet(n, {static_cast<State>(n - 1)}); }

}  // namespace

std::size_t min_states(WitnessClass cls) noexcept {
  switch (cls) {
    case WitnessClass::kRegular:
    case WitnessClass::kRightIdeal:
      return 3;
    case WitnessClass::kLeftIdeal:
      return 4;
    case WitnessClass::kTwoSidedIdeal:
      return 5;
  }
  return 0;
}

Alphabet canonical_alphabet(WitnessClass cls) {
  switch (cls) {
    case WitnessClass::kRegular:
      return Alphabet("abcd");
    case WitnessClass::kRightIdeal:
    case WitnessClass::kLeftIdeal:
      return Alphabet("abcde");
    case WitnessClass::kTwoSidedIdeal:
      return Alphabet("abcdef");
  }
  return Alphabet();
}

std::string_view to_string(WitnessClass cls) noexcept {
  switch (cls) {
    case WitnessClass::kRegular:
      return "regular";
    case WitnessClass::kRightIdeal:
      return "right";
    case WitnessClass::kLeftIdeal:
      return "left";
    case WitnessClass::kTwoSidedIdeal:
      return "twosided";
  }
  return "?";
}

std::optional<WitnessClass> parse_witness_class(std::string_view s) noexcept {
  if (s == "regular") return WitnessClass::kRegular;
  if (s == "right") return WitnessClass::kRightIdeal;
  if (s == "left") return WitnessClass::kLeftIdeal;
  if (s == "twosided") return WitnessClass::kTwoSidedIdeal;
  return std::nullopt;
}

Dfa build_regular(std::size_t n) {
  require_states(WitnessClass::kRegular, n);
  const auto last = static_cast<State>(n - 1);
  std::vector<Transformation> delta{
      Transformation::cycle(n, range(0, last)),
      Transformation::cycle(n, {0, 1}),
      Transformation::send(n, last, 0),
      Transformation::identity(n),
  };
  return Dfa(n, canonical_alphabet(WitnessClass::kRegular), std::move(delta), 0,
             final_only(n));
}

Dfa build_right_ideal(std::size_t n) {
  require_states(WitnessClass::kRightIdeal, n);
  const auto last = static_cast<State>(n - 1);
  std::vector<Transformation> delta{
      Transformation::cycle(n, range(0, last - 1)),
      // For n = 3 the cycle (1,...,n-2) is the single state 1.
      Transformation::cycle(n, range(1, last - 1)),
      Transformation::send(n, last - 1, 0),
      Transformation::send(n, last - 1, last),
      Transformation::identity(n),
  };
  return Dfa(n, canonical_alphabet(WitnessClass::kRightIdeal), std::move(delta),
             0, final_only(n));
}

Dfa build_left_ideal(std::size_t n) {
  require_states(WitnessClass::kLeftIdeal, n);
  const auto last = static_cast<State>(n - 1);
  std::vector<Transformation> delta{
      Transformation::cycle(n, range(1, last)),
      Transformation::cycle(n, {1, 2}),
      Transformation::send(n, last, 1),
      Transformation::send(n, last, 0),
      Transformation::collapse(n, StateSet::full(n), 1),
  };
  return Dfa(n, canonical_alphabet(WitnessClass::kLeftIdeal), std::move(delta),
             0, final_only(n));
}

Dfa build_two_sided_ideal(std::size_t n) {
  require_states(WitnessClass::kTwoSidedIdeal, n);
  const auto last = static_cast<State>(n - 1);
  StateSet all_but_last = StateSet::full(n);
  all_but_last.erase(last);
  std::vector<Transformation> delta{
      Transformation::cycle(n, range(1, last - 1)),
      Transformation::cycle(n, {1, 2}),
      Transformation::send(n, last - 1, 1),
      Transformation::send(n, last - 1, 0),
      Transformation::collapse(n, all_but_last, 1),
      Transformation::send(n, 1, last),
  };
  return Dfa(n, canonical_alphabet(WitnessClass::kTwoSidedIdeal),
             std::move(delta), 0, final_only(n));
}

Dfa build_witness(WitnessClass cls, std::size_t n) {
  switch (cls) {
    case WitnessClass::kRegular:
      return build_regular(n);
    case WitnessClass::kRightIdeal:
      return build_right_ideal(n);
    case WitnessClass::kLeftIdeal:
      return build_left_ideal(n);
    case WitnessClass::kTwoSidedIdeal:
      return build_two_sided_ideal(n);
  }
  throw RangeError("unknown witness class");
}

DialectSpec::DialectSpec(std::vector<std::optional<Letter>> targets)
    : targets_(std::move(targets)) {
  std::array<bool, 26> used{};
  for (const auto& t : targets_) {
    if (!t) continue;
    if (*t < 'a' || *t > 'z') {
      throw StructuralError(std::string("dialect target '") + *t +
                            "' is not in a-z");
    }
    auto& slot = used[static_cast<std::size_t>(*t - 'a')];
    if (slot) {
      throw StructuralError(std::string("dialect maps two letters to '") + *t +
                            "'");
    }
    slot = true;
  }
}

DialectSpec DialectSpec::identity(const Alphabet& alphabet) {
  std::vector<std::optional<Letter>> targets(alphabet.begin(), alphabet.end());
  return DialectSpec(std::move(targets));
}

std::string DialectSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    if (i != 0) out.push_back(',');
    out.push_back(targets_[i] ? *targets_[i] : '-');
  }
  return out;
}

DialectSpec parse_dialect(std::string_view s) {
  std::vector<std::optional<Letter>> targets;
  std::array<bool, 26> used{};
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    const std::string_view token =
        s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
    const std::size_t column = start + 1;
    if (token == "-") {
      targets.emplace_back(std::nullopt);
    } else if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'z') {
      auto& slot = used[static_cast<std::size_t>(token[0] - 'a')];
      if (slot) {
        throw ParseError(1, column,
                         "letter '" + std::string(token) + "' used twice");
      }
      slot = true;
      targets.emplace_back(token[0]);
    } else {
      throw ParseError(1, column, "bad dialect token '" + std::string(token) +
                                      "' (expected a letter or '-')");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DialectSpec(std::move(targets));
}

Dfa apply_dialect(const Dfa& d, const DialectSpec& spec) {
  if (spec.size() > d.alphabet().size()) {
    throw StructuralError("dialect has " + std::to_string(spec.size()) +
                          " entries for an alphabet of " +
                          std::to_string(d.alphabet().size()));
  }
  std::vector<std::pair<Letter, const Transformation*>> rows;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (const auto& t = spec.targets()[i]) rows.emplace_back(*t, &d.delta(i));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::string letters;
  std::vector<Transformation> delta;
  for (const auto& [letter, t] : rows) {
    letters.push_back(letter);
    delta.push_back(*t);
  }
  return Dfa(d.state_count(), Alphabet(letters), std::move(delta), d.initial(),
             d.finals());
}

Dfa WitnessRecipe::build(std::size_t n) const {
  return apply_dialect(build_witness(cls, n), dialect);
}

std::string WitnessRecipe::to_string() const {
  return std::string(qcomp::to_string(cls)) + "(" + dialect.to_string() + ")";
}

}  // namespace qcomp
