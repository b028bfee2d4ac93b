#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcomp/registry.hpp"

namespace qcomp {

struct VerificationRow {
  std::string id;
  std::optional<std::size_t> m;  // absent for unary claims
  std::size_t n = 0;
  std::uint64_t expected = 0;
  std::uint64_t measured = 0;
  bool match = false;
  std::chrono::duration<double, std::milli> elapsed{};
  /// Empty unless the cell failed to build or a sub-check disagreed.
  std::string diagnostic;
};

struct SweepOptions {
  /// Exact ids, or prefixes ending in '*'. Empty selects the whole registry.
  std::vector<std::string> ids;
  std::optional<GridRange> m_range;
  std::optional<GridRange> n_range;
  std::size_t jobs = 1;
};

struct SweepResult {
  std::vector<VerificationRow> rows;  // sorted by (id, m, n)
  std::vector<std::string> notices;   // skipped cells
};

/// Resolves ids and wildcards. Throws std::invalid_argument for an id that
/// matches nothing.
std::vector<const BoundEntry*> select_entries(const std::vector<std::string>& ids);

/// Evaluates one cell. Construction failures become a failed row.
VerificationRow evaluate_cell(const BoundEntry& entry,
                              std::optional<std::size_t> m, std::size_t n);

SweepResult run_sweep(const SweepOptions& options);

}  // namespace qcomp
