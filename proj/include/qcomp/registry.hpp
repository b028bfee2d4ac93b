#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcomp/operations.hpp"
#include "qcomp/witnesses.hpp"

namespace qcomp {

/// What a registry entry measures on its witness (or witness pair).
enum class Measure {
  kKappa,             // complexity of the witness itself
  kSemigroup,         // syntactic semigroup size
  kQuotients,         // states whose quotient has the stated complexity
  kReverse,           // complexity of the reverse
  kAtomCount,         // number of atoms
  kAtomComplexities,  // atoms whose complexity matches the closed form
  kStar,
  kProduct,
  kBoolean,
};

std::string_view to_string(Measure m) noexcept;

struct GridRange {
  std::size_t lo;
  std::size_t hi;

  friend bool operator==(const GridRange&, const GridRange&) = default;
};

/// Parses "A..B" or a single "A".
std::optional<GridRange> parse_grid_range(std::string_view s) noexcept;

/// One quantitative claim: a formula in (m, n), or in n alone for unary
/// measures, checked against witnesses built from recipes.
struct BoundEntry {
  std::string id;
  std::string formula_text;
  Measure measure;
  std::optional<BooleanOp> op;  // kBoolean only
  WitnessRecipe lhs;
  std::optional<WitnessRecipe> rhs;  // binary measures only
  std::function<std::uint64_t(std::uint64_t m, std::uint64_t n)> formula;
  /// kQuotients only: the final state's quotient is Sigma* with complexity 1.
  bool final_quotient_trivial = false;

  bool binary() const noexcept { return rhs.has_value(); }
  std::size_t min_m() const noexcept { return min_states(lhs.cls); }
  std::size_t min_n() const noexcept {
    return min_states(rhs ? rhs->cls : lhs.cls);
  }
};

/// Every registered claim, in registration order.
const std::vector<BoundEntry>& registry();

const BoundEntry* find_entry(std::string_view id) noexcept;

/// Default sweep range for a class; larger values need an explicit request.
GridRange default_range(WitnessClass cls) noexcept;

}  // namespace qcomp
