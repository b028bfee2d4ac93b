#pragma once

// Shared helpers for the test suites: seeded random automata and a
// brute-force quotient counter that works from membership alone.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qcomp/alphabet.hpp"
#include "qcomp/dfa.hpp"
#include "qcomp/state_set.hpp"
#include "qcomp/transformation.hpp"

namespace qtest {

using Member = std::function<bool(std::string_view)>;

// Table-driven run that does not go through the library. Words with a
// letter outside the alphabet are rejected.
inline bool member(const qcomp::Dfa& d, std::string_view w) {
  std::size_t q = d.initial();
  const auto letters = d.alphabet().letters();
  for (char c : w) {
    const auto at = letters.find(c);
    if (at == std::string_view::npos) return false;
    q = d.delta()[at].images()[q];
  }
  return d.finals().contains(static_cast<qcomp::State>(q));
}

inline Member member_of(const qcomp::Dfa& d) {
  return [d](std::string_view w) { return member(d, w); };
}

// All words over `letters` of length <= max_len, shortest first.
inline std::vector<std::string> words_up_to(std::string_view letters,
                                            std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : letters) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

// Representative prefixes of the distinct quotients w^{-1}L for w over
// `letters`, where two quotients count as equal when they agree on every
// suffix of length at most max_suffix. Moore refinement gains a class per
// suffix length until it stabilises, so the count is exact once
// max_suffix >= (true count) - 2 and exceeds max_suffix + 1 whenever the
// true count does.
inline std::vector<std::string> quotient_prefixes(const Member& lang,
                                                  std::string_view letters,
                                                  std::size_t max_suffix) {
  const auto suffixes = words_up_to(letters, max_suffix);
  std::set<std::vector<bool>> seen;
  std::vector<std::string> reps;
  std::vector<std::string> frontier{""};
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      std::vector<bool> sig;
      sig.reserve(suffixes.size());
      for (const auto& s : suffixes) sig.push_back(lang(w + s));
      if (seen.insert(std::move(sig)).second) {
        reps.push_back(w);
        for (char c : letters) next.push_back(w + c);
      }
    }
    frontier = std::move(next);
  }
  return reps;
}

// Quotient complexity from membership alone. The language alphabet is the
// set of letters a with (wa)^{-1}L non-empty for some w.
inline std::size_t brute_kappa(const Member& lang, std::string_view letters,
                               std::size_t max_suffix) {
  const auto reps = quotient_prefixes(lang, letters, max_suffix);
  const auto tails = words_up_to(letters, max_suffix + 1);
  std::string used;
  for (char c : letters) {
    bool live = false;
    for (const auto& w : reps) {
      for (const auto& t : tails) {
        if (lang(w + c + t)) {
          live = true;
          break;
        }
      }
      if (live) break;
    }
    if (live) used += c;
  }
  return quotient_prefixes(lang, used, max_suffix).size();
}

inline bool in_product(const Member& a, const Member& b, std::string_view w) {
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (a(w.substr(0, i)) && b(w.substr(i))) return true;
  }
  return false;
}

inline bool in_star(const Member& a, std::string_view w) {
  std::vector<bool> ok(w.size() + 1, false);
  ok[0] = true;
  for (std::size_t j = 1; j <= w.size(); ++j) {
    for (std::size_t i = 0; i < j && !ok[j]; ++i) {
      ok[j] = ok[i] && a(w.substr(i, j - i));
    }
  }
  return ok[w.size()];
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // Non-empty subset of the first `pool` letters, in alphabetical order.
  std::string letters(std::size_t pool, std::size_t max_size) {
    std::string all;
    for (std::size_t i = 0; i < pool; ++i) all += static_cast<char>('a' + i);
    std::shuffle(all.begin(), all.end(), rng_);
    std::string pick = all.substr(0, uniform(1, std::min(pool, max_size)));
    std::sort(pick.begin(), pick.end());
    return pick;
  }

  qcomp::Dfa dfa(std::size_t states, std::string_view letters,
                 double final_p = 0.4) {
    std::vector<qcomp::Transformation> delta;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      std::vector<qcomp::State> img(states);
      for (auto& q : img) q = static_cast<qcomp::State>(uniform(0, states - 1));
      delta.emplace_back(std::move(img));
    }
    qcomp::StateSet finals(states);
    for (std::size_t q = 0; q < states; ++q) {
      if (coin(final_p)) finals.insert(static_cast<qcomp::State>(q));
    }
    return qcomp::Dfa(states, qcomp::Alphabet(letters), std::move(delta), 0,
                      std::move(finals));
  }

  qcomp::Dfa dfa(std::size_t max_states, std::size_t pool,
                 std::size_t max_letters) {
    const std::size_t n = uniform(1, max_states);
    return dfa(n, letters(pool, max_letters));
  }

  std::string word(std::string_view letters, std::size_t max_len) {
    std::string w(uniform(0, max_len), 'a');
    for (auto& c : w) c = letters[uniform(0, letters.size() - 1)];
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qtest
