// Check/report containers for the verification suites, serialized as
// versioned JSON (schema 1).  Serialization is deterministic: insertion
// order is preserved and wall times are emitted only on request, so default
// reports are byte-identical across runs and worker counts.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "excount/ints.hpp"

namespace excount {

struct Check {
    std::string id;
    std::string description;
    std::string expected;
    std::string actual;
    bool ok = false;
    double wall_ms = 0.0;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    // ok is derived: expected and actual must coincide exactly
    Check& add(const std::string& id, const std::string& description,
               const std::string& expected, const std::string& actual);
    int passed() const;
    bool all_ok() const;
};

nlohmann::ordered_json report_json(const Report& r, bool timing = false);
nlohmann::ordered_json bundle_json(const std::vector<Report>& suites,
                                   bool timing = false);
std::string render_json(const nlohmann::ordered_json& j);

}  // namespace excount
