#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "qcomp/alphabet.hpp"
#include "qcomp/dfa.hpp"

namespace qcomp {

/// The ten proper binary boolean operations. Complement is always taken
/// over the union of the operand alphabets.
enum class BooleanOp {
  kUnion,         // L' u L
  kNor,           // ~L' n ~L
  kImplies,       // ~L' u L
  kConverse,      // L' u ~L
  kSymDiff,       // L' + L
  kXnor,          // L' + ~L
  kDiff,          // L' n ~L
  kRevDiff,       // ~L' n L
  kInter,         // L' n L
  kNand,          // ~L' u ~L
};

inline constexpr std::array<BooleanOp, 10> kAllBooleanOps{
    BooleanOp::kUnion,   BooleanOp::kNor,  BooleanOp::kImplies,
    BooleanOp::kConverse, BooleanOp::kSymDiff, BooleanOp::kXnor,
    BooleanOp::kDiff,    BooleanOp::kRevDiff, BooleanOp::kInter,
    BooleanOp::kNand};

bool evaluate(BooleanOp op, bool in_lhs, bool in_rhs) noexcept;
std::string_view to_string(BooleanOp op) noexcept;
std::optional<BooleanOp> parse_boolean_op(std::string_view s) noexcept;

struct OpResult {
  Dfa dfa;  // minimal, over its own language alphabet
  std::size_t kappa;
  Alphabet combined_alphabet;
};

/// Concatenation through the epsilon-NFA that links each final state of lhs
/// to the initial state of rhs. Each operand keeps only its own letters.
OpResult product(const Dfa& lhs, const Dfa& rhs);

/// Direct product of both operands completed over the union alphabet.
OpResult boolean(BooleanOp op, const Dfa& lhs, const Dfa& rhs);

/// Complement with respect to universe*. d's alphabet must be contained in
/// universe.
OpResult complement(const Dfa& d, const Alphabet& universe);

OpResult star(const Dfa& d);
OpResult reverse(const Dfa& d);

/// Ideal tests over the language alphabet. The empty language is not an
/// ideal.
bool is_right_ideal(const Dfa& d);
bool is_left_ideal(const Dfa& d);
bool is_two_sided_ideal(const Dfa& d);

/// Equality of the accepted word sets, alphabets notwithstanding.
bool equivalent(const Dfa& lhs, const Dfa& rhs);

}  // namespace qcomp
