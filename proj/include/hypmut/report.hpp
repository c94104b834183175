#pragma once

// Deterministic JSON report documents: sorted keys (the library's object
// ordering) and floats rounded to 12 significant digits before insertion so
// repeated runs serialize byte-identically.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

namespace hypmut::report {

using json = nlohmann::json;

inline double round_sig(double x, int digits = 12) {
    if (!std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

inline json num(double x) { return round_sig(x); }

struct ReportDocument {
    std::string schema_version = "1";
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<std::string> warnings;

    json to_json() const {
        json doc;
        doc["schema_version"] = schema_version;
        doc["command"] = command;
        doc["inputs"] = inputs;
        doc["results"] = results;
        doc["warnings"] = warnings;
        return doc;
    }

    std::string dump() const { return to_json().dump(2) + "\n"; }
};

}  // namespace hypmut::report
