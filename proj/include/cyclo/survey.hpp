#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cyclo/numsgp.hpp"

namespace cyclo {

struct SurveyConfig {
    long max_frobenius = 33;
    int workers = 1;
    std::string out_path;        // directory for records.jsonl / summary.json; empty = no files
    long checkpoint_every = 0;   // visited-node interval between checkpoints; 0 disables
    bool symmetric_prefilter = true;
    bool emit_all = false;       // persist every proper semigroup, not just cyclotomic ones
    bool resume = false;         // continue from out_path/checkpoint.json
};

struct SurveyRecord {
    std::vector<long> min_gens;
    long frobenius = 0;
    long genus = 0;
    bool symmetric = false;
    bool cyclotomic = false;
    bool ci = false;
    std::optional<std::vector<std::pair<long, long>>> factorization;  // present iff cyclotomic

    friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

struct SurveyTotals {
    long semigroups = 0;  // proper semigroups only; N is never counted
    long symmetric = 0;
    long cyclotomic = 0;
    long ci = 0;
};

struct SurveyReport {
    long bound = 0;
    SurveyTotals totals;
    std::vector<SurveyRecord> records;          // canonical order: (frobenius, min_gens)
    std::vector<SurveyRecord> counterexamples;  // cyclotomic but not complete intersection
    std::vector<long> per_frobenius;            // index F, counts of proper semigroups
    double runtime_seconds = 0.0;
};

/// Enumerates every numerical semigroup with frobenius <= bound and
/// classifies it: symmetric, then (for symmetric ones, unless the
/// prefilter is disabled) Kronecker on P_S, then the gluing decision for
/// the cyclotomic ones. Deterministic up to the runtime field for any
/// worker count.
SurveyReport run_survey(const SurveyConfig& config);

/// records.jsonl (one record per line, canonical order) plus summary.json.
void write_report(const SurveyReport& report, const std::string& dir);
/// Parses a records.jsonl file back; throws MalformedRecord with the line
/// number on bad input.
std::vector<SurveyRecord> read_records(const std::string& path);

nlohmann::ordered_json record_to_json(const SurveyRecord& record);
SurveyRecord record_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json summary_to_json(const SurveyReport& report);

}  // namespace cyclo
