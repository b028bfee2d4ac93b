#include "qcomp/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qcomp {

namespace {

std::string millis(const VerificationRow& row) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", row.elapsed.count());
  return buf;
}

std::string optional_m(const VerificationRow& row) {
  return row.m ? std::to_string(*row.m) : std::string();
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept {
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "markdown" || s == "md") return ReportFormat::kMarkdown;
  return std::nullopt;
}

std::string emit_report(std::span<const VerificationRow> rows,
                        ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::kCsv) {
    os << "id,m,n,expected,measured,match,elapsed_ms\n";
    for (const auto& r : rows) {
      os << r.id << ',' << optional_m(r) << ',' << r.n << ',' << r.expected
         << ',' << r.measured << ',' << (r.match ? "true" : "false") << ','
         << millis(r) << '\n';
    }
    return os.str();
  }

  const std::string* current = nullptr;
  for (const auto& r : rows) {
    if (current == nullptr || *current != r.id) {
      if (current != nullptr) os << '\n';
      current = &r.id;
      os << "### " << r.id << "\n\n";
      os << "| m | n | expected | measured | match | elapsed_ms |\n";
      os << "|---|---|---|---|---|---|\n";
    }
    os << "| " << (r.m ? std::to_string(*r.m) : "-") << " | " << r.n << " | "
       << r.expected << " | " << r.measured << " | "
       << (r.match ? "yes" : "**no**") << " | " << millis(r) << " |\n";
  }
  return os.str();
}

bool all_match(std::span<const VerificationRow> rows) noexcept {
  return std::all_of(rows.begin(), rows.end(),
                     [](const VerificationRow& r) { return r.match; });
}

}  // namespace qcomp
