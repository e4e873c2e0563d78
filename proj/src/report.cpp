#include "excount/report.hpp"

namespace excount {

Check& Report::add(const std::string& id, const std::string& description,
                   const std::string& expected, const std::string& actual) {
    checks.push_back({id, description, expected, actual, expected == actual, 0.0});
    return checks.back();
}

int Report::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.ok ? 1 : 0;
    return n;
}

bool Report::all_ok() const { return passed() == static_cast<int>(checks.size()); }

nlohmann::ordered_json report_json(const Report& r, bool timing) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["description"] = c.description;
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["ok"] = c.ok;
        if (timing) cj["wall_ms"] = c.wall_ms;
        j["checks"].push_back(std::move(cj));
    }
    int total = static_cast<int>(r.checks.size());
    int passed = r.passed();
    j["summary"] = {{"total", total}, {"passed", passed}, {"failed", total - passed}};
    j["ok"] = r.all_ok();
    return j;
}

nlohmann::ordered_json bundle_json(const std::vector<Report>& suites, bool timing) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suites"] = nlohmann::ordered_json::array();
    int total = 0, passed = 0;
    bool ok = true;
    for (const auto& r : suites) {
        j["suites"].push_back(report_json(r, timing));
        total += static_cast<int>(r.checks.size());
        passed += r.passed();
        ok = ok && r.all_ok();
    }
    j["summary"] = {{"total", total}, {"passed", passed}, {"failed", total - passed}};
    j["ok"] = ok;
    return j;
}

std::string render_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace excount
