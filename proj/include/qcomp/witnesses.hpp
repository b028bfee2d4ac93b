#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcomp/alphabet.hpp"
#include "qcomp/dfa.hpp"

namespace qcomp {

enum class WitnessClass { kRegular, kRightIdeal, kLeftIdeal, kTwoSidedIdeal };

/// Smallest n for which the class's stream is defined.
std::size_t min_states(WitnessClass cls) noexcept;
/// a,b,c,d for regular; a..e for one-sided ideals; a..f for two-sided.
Alphabet canonical_alphabet(WitnessClass cls);
std::string_view to_string(WitnessClass cls) noexcept;
/// Accepts regular|right|left|twosided.
std::optional<WitnessClass> parse_witness_class(std::string_view s) noexcept;

/// a:(0,...,n-1), b:(0,1), c:(n-1 -> 0), d:identity; final {n-1}.
Dfa build_regular(std::size_t n);
/// a:(0,...,n-2), b:(1,...,n-2), c:(n-2 -> 0), d:(n-2 -> n-1), e:identity.
Dfa build_right_ideal(std::size_t n);
/// a:(1,...,n-1), b:(1,2), c:(n-1 -> 1), d:(n-1 -> 0), e:(Q_n -> 1).
Dfa build_left_ideal(std::size_t n);
/// a:(1,...,n-2), b:(1,2), c:(n-2 -> 1), d:(n-2 -> 0), e:(Q_{n-1} -> 1),
/// f:(1 -> n-1).
Dfa build_two_sided_ideal(std::size_t n);
Dfa build_witness(WitnessClass cls, std::size_t n);

/// Partial permutation of an alphabet, aligned with its letters. Entry i is
/// the new name of letter i, or nullopt when the letter is dropped.
class DialectSpec {
 public:
  DialectSpec() = default;
  /// Throws StructuralError when two defined targets coincide.
  explicit DialectSpec(std::vector<std::optional<Letter>> targets);

  const std::vector<std::optional<Letter>>& targets() const noexcept {
    return targets_;
  }
  std::size_t size() const noexcept { return targets_.size(); }

  static DialectSpec identity(const Alphabet& alphabet);

  /// Comma-separated form, e.g. "a,b,-,c".
  std::string to_string() const;

  friend bool operator==(const DialectSpec&, const DialectSpec&) = default;

 private:
  std::vector<std::optional<Letter>> targets_;
};

/// Parses "a,b,-,c". Throws ParseError on a bad token or a repeated letter.
DialectSpec parse_dialect(std::string_view s);

/// Relabels letter i as targets[i] and drops undefined letters. A spec
/// shorter than the alphabet leaves the trailing letters undefined. The
/// result alphabet is sorted.
Dfa apply_dialect(const Dfa& d, const DialectSpec& spec);

/// A witness stream member: class plus dialect.
struct WitnessRecipe {
  WitnessClass cls;
  DialectSpec dialect;

  Dfa build(std::size_t n) const;
  std::string to_string() const;
};

}  // namespace qcomp
