#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qcomp/sweep.hpp"

namespace qcomp {

enum class ReportFormat { kCsv, kMarkdown };

std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept;

/// CSV columns: id,m,n,expected,measured,match,elapsed_ms. The m field is
/// empty for unary claims. Markdown emits one table per id.
std::string emit_report(std::span<const VerificationRow> rows,
                        ReportFormat format);

bool all_match(std::span<const VerificationRow> rows) noexcept;

}  // namespace qcomp
