#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sqfree/ghw.hpp"

namespace sqfree {

using Json = nlohmann::json;

// Machine-readable run report. JSON is the canonical format; CSV and the
// human table are flat projections. Timing is attached only on request so
// reports stay byte-identical across reruns and worker counts.

struct ReportRow {
    int r = 0;
    std::string method;
    std::string value;
    bool exact = true;
    Json witness;  // null when absent
};

struct ReportCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReportDocument {
    int schema_version = 1;
    Json config = Json::object();
    Json code_summary;  // null unless a code was built
    std::vector<ReportRow> rows;
    std::vector<ReportCheck> checks;
    // optional flat table (used by the sweep command)
    std::vector<std::string> table_columns;
    std::vector<std::vector<std::string>> table;
    double total_millis = -1;  // < 0: omitted
};

Json to_json(const ReportDocument& doc);
std::string to_csv(const ReportDocument& doc);
std::string to_table(const ReportDocument& doc);

Json witness_json(const SubcodeWitness& w);
Json witness_json(const std::vector<SquareFreeExponent>& monomials);

// Rows for a computed hierarchy, with witnesses when available.
std::vector<ReportRow> hierarchy_rows(const WeightHierarchyReport& report);

}  // namespace sqfree
