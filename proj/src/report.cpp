#include "sqfree/report.hpp"

#include <sstream>

namespace sqfree {

Json witness_json(const SubcodeWitness& w) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < w.coefficients.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < w.coefficients.cols(); ++j)
            row.push_back(static_cast<unsigned>(w.coefficients(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"coefficients", std::move(rows)}, {"support", w.support}};
}

Json witness_json(const std::vector<SquareFreeExponent>& monomials) {
    Json names = Json::array();
    for (const auto& m : monomials) names.push_back(m.to_string());
    return Json{{"monomials", std::move(names)}};
}

std::vector<ReportRow> hierarchy_rows(const WeightHierarchyReport& report) {
    std::vector<ReportRow> rows;
    rows.reserve(report.records.size());
    for (const auto& rec : report.records) {
        ReportRow row;
        row.r = rec.r;
        row.method = method_name(rec.method);
        row.value = rec.value.str();
        row.exact = rec.exact;
        if (rec.witness)
            row.witness = witness_json(*rec.witness);
        else if (rec.monomial_witness)
            row.witness = witness_json(*rec.monomial_witness);
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const ReportDocument& doc) {
    Json rows = Json::array();
    for (const auto& row : doc.rows) {
        Json j{{"r", row.r}, {"method", row.method}, {"value", row.value}, {"exact", row.exact}};
        if (!row.witness.is_null()) j["witness"] = row.witness;
        rows.push_back(std::move(j));
    }
    Json checks = Json::array();
    for (const auto& c : doc.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});

    Json out{{"schema_version", doc.schema_version},
             {"config", doc.config},
             {"rows", std::move(rows)},
             {"checks", std::move(checks)}};
    if (!doc.code_summary.is_null()) out["code"] = doc.code_summary;
    if (!doc.table_columns.empty()) {
        Json table = Json::array();
        for (const auto& row : doc.table) {
            Json obj = Json::object();
            for (std::size_t i = 0; i < doc.table_columns.size(); ++i)
                obj[doc.table_columns[i]] = row[i];
            table.push_back(std::move(obj));
        }
        out["table"] = std::move(table);
    }
    if (doc.total_millis >= 0) out["millis"] = doc.total_millis;
    return out;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(const ReportDocument& doc) {
    std::ostringstream out;
    if (!doc.table_columns.empty()) {
        for (std::size_t i = 0; i < doc.table_columns.size(); ++i)
            out << (i ? "," : "") << csv_escape(doc.table_columns[i]);
        out << '\n';
        for (const auto& row : doc.table) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
            out << '\n';
        }
        return out.str();
    }
    out << "r,method,value,exact\n";
    for (const auto& row : doc.rows)
        out << row.r << ',' << csv_escape(row.method) << ',' << row.value << ','
            << (row.exact ? "true" : "false") << '\n';
    return out.str();
}

std::string to_table(const ReportDocument& doc) {
    std::ostringstream out;
    if (!doc.code_summary.is_null()) {
        out << "code: n=" << doc.code_summary.value("n", Json()).dump()
            << " k=" << doc.code_summary.value("k", Json()).dump() << '\n';
    }
    if (!doc.table_columns.empty()) {
        for (std::size_t i = 0; i < doc.table_columns.size(); ++i)
            out << (i ? "  " : "") << doc.table_columns[i];
        out << '\n';
        for (const auto& row : doc.table) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "  " : "") << row[i];
            out << '\n';
        }
    }
    for (const auto& row : doc.rows) {
        out << "d_" << row.r << " = " << row.value << "  [" << row.method
            << (row.exact ? "" : ", lower bound") << "]";
        if (!row.witness.is_null() && row.witness.contains("monomials")) {
            out << "  witness {";
            const auto& names = row.witness["monomials"];
            for (std::size_t i = 0; i < names.size(); ++i)
                out << (i ? ", " : "") << names[i].get<std::string>();
            out << "}";
        }
        out << '\n';
    }
    for (const auto& c : doc.checks)
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : ": ")
            << c.detail << '\n';
    if (doc.total_millis >= 0) out << "wall time: " << doc.total_millis << " ms\n";
    return out.str();
}

}  // namespace sqfree
