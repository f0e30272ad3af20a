#include "summa/report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "summa/errors.hpp"

namespace summa {

namespace {

void check_rows(const std::vector<ReportRow>& rows) {
    if (rows.empty()) throw Error("report: refusing to write an empty row set");
    const auto& first = rows.front().params;
    for (const ReportRow& row : rows) {
        if (row.params.size() != first.size())
            throw Error("report: inconsistent parameter keys across rows");
        for (std::size_t i = 0; i < first.size(); ++i)
            if (row.params[i].first != first[i].first)
                throw Error("report: inconsistent parameter keys across rows");
    }
}

void write_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
    out << "identifier";
    for (const auto& kv : rows.front().params) out << "," << kv.first;
    out << ",lhs,rhs,residual,K_zeros,K_trivial,N_terms,status\n";
    for (const ReportRow& row : rows) {
        out << row.identifier;
        for (const auto& kv : row.params) out << "," << format_double(kv.second);
        out << "," << format_double(row.lhs) << "," << format_double(row.rhs) << ","
            << format_double(row.residual) << "," << row.truncation.k_zeros << ","
            << row.truncation.k_trivial << "," << row.truncation.n_terms << "," << row.status
            << "\n";
    }
}

void write_json(const std::vector<ReportRow>& rows, std::ostream& out) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const ReportRow& row : rows) {
        nlohmann::ordered_json item;
        item["identifier"] = row.identifier;
        nlohmann::ordered_json params;
        for (const auto& kv : row.params) params[kv.first] = kv.second;
        item["params"] = std::move(params);
        item["lhs"] = row.lhs;
        item["rhs"] = row.rhs;
        item["residual"] = row.residual;
        item["K_zeros"] = row.truncation.k_zeros;
        item["K_trivial"] = row.truncation.k_trivial;
        item["N_terms"] = row.truncation.n_terms;
        item["status"] = row.status;
        doc.push_back(std::move(item));
    }
    out << doc.dump(2) << "\n";
}

} // namespace

ReportFormat report_format_from_name(const std::string& name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw ParseError("unknown report format: " + name);
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_report(const std::vector<ReportRow>& rows, ReportFormat format, std::ostream& out) {
    check_rows(rows);
    if (format == ReportFormat::csv)
        write_csv(rows, out);
    else
        write_json(rows, out);
    if (!out) throw Error("report: stream write failure");
}

void write_report_file(const std::vector<ReportRow>& rows, ReportFormat format,
                       const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("report: cannot open output path " + path);
    write_report(rows, format, out);
    if (!out) throw Error("report: write failure on " + path);
}

} // namespace summa
