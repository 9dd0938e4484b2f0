#ifndef DTG_REPORT_JSON_HPP
#define DTG_REPORT_JSON_HPP

// JSON forms of the library's values and reports. Field names match
// docs/report-schema.json.

#include <string>

#include <json.hpp>

#include "dtg/coloring.hpp"
#include "dtg/oddcycle.hpp"
#include "dtg/typecore.hpp"
#include "dtg/vertex.hpp"

namespace dtg {

using nlohmann::json;

inline json to_json(const Vertex& v) { return json(std::vector<Ordinal>(v.begin(), v.end())); }

inline json to_json(const Cycle& c) {
    json vs = json::array();
    for (const auto& v : c.vertices) vs.push_back(to_json(v));
    json steps = json::array();
    for (auto s : c.steps) steps.push_back(to_string(s));
    return {{"length", c.length()}, {"vertices", vs}, {"steps", steps}};
}

inline json to_json(const PathProfile& p) {
    json steps = json::array();
    for (auto s : p.steps) steps.push_back(to_string(s));
    return {{"steps", steps},   {"prefix_up", p.prefix_up}, {"prefix_down", p.prefix_down},
            {"f", p.f},         {"f_max", p.f_max},         {"f_min", p.f_min}};
}

inline json to_json(const LengthScan& s, bool timing) {
    json j = {{"max_length", s.max_length},
              {"beta", s.beta},
              {"search_size", s.search_size},
              {"starts_scanned", s.starts_scanned},
              {"found", s.found},
              {"found_length", s.found_length}};
    if (timing) j["seconds"] = s.seconds;
    return j;
}

inline json to_json(const CycleWitness& w, const WitnessReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"s", w.s},
            {"n", w.n},
            {"m", w.m},
            {"type", canonical_type(w.n, w.s).str()},
            {"cycle", to_json(w.cycle)},
            {"largest_element", r.largest_element},
            {"expected_largest", r.expected_largest},
            {"min_beta", r.min_beta},
            {"checks", checks},
            {"passed", r.passed}};
}

inline json to_json(const TheoremReport& r, bool timing) {
    json scans = json::array();
    for (const auto& s : r.scans) scans.push_back(to_json(s, timing));
    json j = {{"s", r.s},
              {"n", r.n},
              {"type", canonical_type(r.n, r.s).str()},
              {"max_length", r.max_length},
              {"in_theorem_range", r.in_theorem_range},
              {"mode", r.in_theorem_range ? "theorem" : "exploration"},
              {"complete", r.complete},
              {"found", r.cycle.has_value()},
              {"scans", scans},
              {"closing_band_hit", r.closing_band_hit},
              {"falsified", r.falsified}};
    j["cycle"] = r.cycle ? to_json(*r.cycle) : json(nullptr);
    if (!r.complete) j["truncated_reason"] = r.truncated_reason;
    return j;
}

inline json to_json(const MinNTable& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        rows.push_back({{"n", row.n},
                        {"in_theorem_range", row.in_theorem_range},
                        {"complete", row.complete},
                        {"has_odd_cycle", row.has_odd_cycle},
                        {"cycle_length", row.cycle_length},
                        {"search_size", row.search_size},
                        {"note", row.note}});
    }
    json j = {{"s", t.s}, {"max_length", t.max_length}, {"rows", rows}, {"truncated", t.truncated},
              {"falsified", t.falsified}};
    j["least_n_without_cycle"] = t.least_n_without_cycle ? json(*t.least_n_without_cycle) : json(nullptr);
    return j;
}

inline json to_json(const SandwichReport& r) {
    return {{"s", r.s},
            {"n", r.n},
            {"k", r.k},
            {"ups", r.ups},
            {"downs", r.downs},
            {"f_max", r.f_max},
            {"f_min", r.f_min},
            {"i", r.i},
            {"lower_index", r.lower_index},
            {"upper_index", r.upper_index},
            {"indices_valid", r.indices_valid},
            {"discrepancy_holds", r.discrepancy_holds},
            {"lower_value", r.lower_value},
            {"middle_value", r.middle_value},
            {"upper_value", r.upper_value},
            {"passed", r.passed},
            {"failure", r.failure},
            {"corrected_i", r.corrected_i},
            {"corrected_lower_index", r.corrected_lower_index},
            {"corrected_upper_index", r.corrected_upper_index},
            {"corrected_passed", r.corrected_passed},
            {"some_i", r.some_i ? json(*r.some_i) : json(nullptr)},
            {"profile", to_json(r.profile)}};
}

inline json to_json(const SandwichTrialSummary& s) {
    json j = {{"s", s.s},
              {"n", s.n},
              {"beta", s.beta},
              {"seed", s.seed},
              {"walks_per_length", s.walks_per_length},
              {"passed_by_length", s.passed_by_length},
              {"resampled", s.resampled},
              {"total", s.total},
              {"passed", s.passed},
              {"index_failures", s.index_failures},
              {"corrected_passed", s.corrected_passed},
              {"some_index_passed", s.some_index_passed},
              {"all_passed", s.passed == s.total}};
    if (s.first_failure) {
        json path = json::array();
        for (const auto& v : *s.first_failure_path) path.push_back(to_json(v));
        j["first_failure"] = {{"report", to_json(*s.first_failure)}, {"path", path}};
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

inline json to_json(const ColoringResult& c) {
    return {{"method", to_string(c.method)}, {"num_colors", c.num_colors}, {"assignment", c.assignment}};
}

}  // namespace dtg

#endif  // DTG_REPORT_JSON_HPP
