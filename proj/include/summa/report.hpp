#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace summa {

// Truncation knobs shared by every series/contour evaluator: how many paired
// critical-line zeros, how many trivial-zero terms, and the direct-series cap.
struct TruncationSpec {
    std::int64_t k_zeros = 0;
    std::int64_t k_trivial = 0;
    std::int64_t n_terms = 1;
    bool pair_conjugates = true;
};

// Universal output record: one verified (or observed) equation instance.
struct ReportRow {
    std::string identifier;
    std::vector<std::pair<std::string, double>> params; // ordered key -> value
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0; // always lhs - rhs as computed
    TruncationSpec truncation;
    std::string status; // "pass", "fail", "finding", "warning", "provisional"
};

enum class ReportFormat { csv, json };

ReportFormat report_format_from_name(const std::string& name);

// 17 significant digits, round-trippable.
std::string format_double(double x);

// Rows must be nonempty and share one parameter-key sequence. CSV columns:
// identifier, <param keys...>, lhs, rhs, residual, K_zeros, K_trivial,
// N_terms, status. JSON mirrors the same fields. Output is deterministic.
void write_report(const std::vector<ReportRow>& rows, ReportFormat format, std::ostream& out);
void write_report_file(const std::vector<ReportRow>& rows, ReportFormat format,
                       const std::string& path);

} // namespace summa
