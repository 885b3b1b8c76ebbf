#include "cyclo/survey.hpp"

#include <atomic>
#include <chrono>
#include <deque>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cyclo/cyclotomy.hpp"

namespace cyclo {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

bool record_less(const SurveyRecord& a, const SurveyRecord& b) {
    if (a.frobenius != b.frobenius) return a.frobenius < b.frobenius;
    return a.min_gens < b.min_gens;
}

/// Result of classifying one subtree; merged associatively at the end.
struct Shard {
    SurveyTotals totals;
    std::vector<long> per_frobenius;
    std::vector<SurveyRecord> records;
    long visited = 0;
};

void merge_into(Shard& into, const Shard& from) {
    into.totals.semigroups += from.totals.semigroups;
    into.totals.symmetric += from.totals.symmetric;
    into.totals.cyclotomic += from.totals.cyclotomic;
    into.totals.ci += from.totals.ci;
    if (into.per_frobenius.size() < from.per_frobenius.size())
        into.per_frobenius.resize(from.per_frobenius.size(), 0);
    for (std::size_t i = 0; i < from.per_frobenius.size(); ++i)
        into.per_frobenius[i] += from.per_frobenius[i];
    into.records.insert(into.records.end(), from.records.begin(), from.records.end());
    into.visited += from.visited;
}

void classify(const NumericalSemigroup& s, const SurveyConfig& cfg, Shard& shard) {
    ++shard.visited;
    if (s.genus() == 0) return;  // N itself stays out of the totals
    ++shard.totals.semigroups;
    shard.per_frobenius[static_cast<std::size_t>(s.frobenius())] += 1;

    SurveyRecord rec;
    rec.min_gens = s.min_gens();
    rec.frobenius = s.frobenius();
    rec.genus = s.genus();
    rec.symmetric = s.is_symmetric();
    if (rec.symmetric) ++shard.totals.symmetric;

    // Cyclotomic P_S is palindromic (P_S(1) = 1 != 0), and palindromic P_S
    // means S is symmetric, so skipping non-symmetric semigroups is sound.
    if (rec.symmetric || !cfg.symmetric_prefilter) {
        CyclotomicFactorization fact = kronecker_factor(s.semigroup_polynomial());
        rec.cyclotomic = fact.is_kronecker();
        if (rec.cyclotomic) {
            rec.factorization = fact.factors;
            rec.ci = is_complete_intersection(s).has_value();
        }
    }
    if (rec.cyclotomic) ++shard.totals.cyclotomic;
    if (rec.ci) ++shard.totals.ci;
    if (rec.cyclotomic || cfg.emit_all) shard.records.push_back(std::move(rec));
}

void explore(const NumericalSemigroup& root, const SurveyConfig& cfg, Shard& shard) {
    std::vector<NumericalSemigroup> stack{root};
    while (!stack.empty()) {
        NumericalSemigroup s = std::move(stack.back());
        stack.pop_back();
        classify(s, cfg, shard);
        for (auto& child : s.children(cfg.max_frobenius)) stack.push_back(std::move(child));
    }
}

Shard make_shard(long bound) {
    Shard s;
    s.per_frobenius.assign(static_cast<std::size_t>(bound) + 1, 0);
    return s;
}

ordered_json shard_to_json(const Shard& shard) {
    ordered_json j;
    j["semigroups"] = shard.totals.semigroups;
    j["symmetric"] = shard.totals.symmetric;
    j["cyclotomic"] = shard.totals.cyclotomic;
    j["ci"] = shard.totals.ci;
    j["per_frobenius"] = shard.per_frobenius;
    j["visited"] = shard.visited;
    j["records"] = ordered_json::array();
    for (const auto& r : shard.records) j["records"].push_back(record_to_json(r));
    return j;
}

Shard shard_from_json(const ordered_json& j) {
    Shard s;
    s.totals.semigroups = j.at("semigroups").get<long>();
    s.totals.symmetric = j.at("symmetric").get<long>();
    s.totals.cyclotomic = j.at("cyclotomic").get<long>();
    s.totals.ci = j.at("ci").get<long>();
    s.per_frobenius = j.at("per_frobenius").get<std::vector<long>>();
    s.visited = j.at("visited").get<long>();
    for (const auto& r : j.at("records")) s.records.push_back(record_from_json(r));
    return s;
}

}  // namespace

SurveyReport run_survey(const SurveyConfig& config) {
    if (config.max_frobenius < 1) throw std::invalid_argument("max_frobenius must be >= 1");
    if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (config.checkpoint_every > 0 && config.out_path.empty())
        throw std::invalid_argument("checkpointing needs an output directory");
    const auto start = std::chrono::steady_clock::now();

    // Visit shallow nodes single-threaded until enough subtree roots exist
    // to keep the workers busy; each frontier root becomes one task.
    const long target = std::max<long>(64, 8L * config.workers);
    Shard prefix = make_shard(config.max_frobenius);
    std::deque<NumericalSemigroup> queue{NumericalSemigroup::natural()};
    while (!queue.empty() && static_cast<long>(queue.size()) < target) {
        NumericalSemigroup s = std::move(queue.front());
        queue.pop_front();
        classify(s, config, prefix);
        for (auto& child : s.children(config.max_frobenius)) queue.push_back(std::move(child));
    }
    std::vector<NumericalSemigroup> frontier(queue.begin(), queue.end());

    std::vector<Shard> results(frontier.size());
    std::vector<char> done(frontier.size(), 0);

    // A resumed run replays finished subtrees from the checkpoint.
    const fs::path checkpoint_path = config.out_path.empty()
                                         ? fs::path()
                                         : fs::path(config.out_path) / "checkpoint.json";
    if (config.resume) {
        std::ifstream in(checkpoint_path);
        if (!in) throw Error("cannot open checkpoint: " + checkpoint_path.string());
        ordered_json j = ordered_json::parse(in);
        if (j.at("max_frobenius").get<long>() != config.max_frobenius ||
            j.at("emit_all").get<bool>() != config.emit_all ||
            j.at("symmetric_prefilter").get<bool>() != config.symmetric_prefilter)
            throw std::invalid_argument("checkpoint does not match the survey configuration");
        for (const auto& task : j.at("tasks")) {
            auto root_gens = task.at("root").get<std::vector<long>>();
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                if (frontier[i].min_gens() == root_gens) {
                    results[i] = shard_from_json(task.at("shard"));
                    done[i] = 1;
                    break;
                }
            }
        }
    }

    std::mutex state_mutex;
    long nodes_since_checkpoint = 0;
    auto write_checkpoint = [&]() {  // caller holds state_mutex
        ordered_json j;
        j["max_frobenius"] = config.max_frobenius;
        j["emit_all"] = config.emit_all;
        j["symmetric_prefilter"] = config.symmetric_prefilter;
        j["tasks"] = ordered_json::array();
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            if (!done[i]) continue;
            ordered_json task;
            task["root"] = frontier[i].min_gens();
            task["shard"] = shard_to_json(results[i]);
            j["tasks"].push_back(std::move(task));
        }
        fs::create_directories(config.out_path);
        std::ofstream out(checkpoint_path);
        if (!out) throw Error("cannot write checkpoint: " + checkpoint_path.string());
        out << j.dump() << '\n';
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= frontier.size()) break;
            {
                std::lock_guard<std::mutex> lock(state_mutex);
                if (done[i]) continue;
            }
            Shard shard = make_shard(config.max_frobenius);
            explore(frontier[i], config, shard);
            std::lock_guard<std::mutex> lock(state_mutex);
            nodes_since_checkpoint += shard.visited;
            results[i] = std::move(shard);
            done[i] = 1;
            if (config.checkpoint_every > 0 && nodes_since_checkpoint >= config.checkpoint_every) {
                write_checkpoint();
                nodes_since_checkpoint = 0;
            }
        }
    };

    if (config.workers == 1 || frontier.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        int n = std::min<int>(config.workers, static_cast<int>(frontier.size()));
        pool.reserve(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (config.checkpoint_every > 0) {
        std::lock_guard<std::mutex> lock(state_mutex);
        write_checkpoint();  // final state, so a resumed run replays everything
    }

    Shard merged = std::move(prefix);
    for (const auto& shard : results) merge_into(merged, shard);
    std::sort(merged.records.begin(), merged.records.end(), record_less);

    SurveyReport report;
    report.bound = config.max_frobenius;
    report.totals = merged.totals;
    report.records = std::move(merged.records);
    report.per_frobenius = std::move(merged.per_frobenius);
    for (const auto& r : report.records)
        if (r.cyclotomic && !r.ci) report.counterexamples.push_back(r);
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!config.out_path.empty()) write_report(report, config.out_path);
    return report;
}

nlohmann::ordered_json record_to_json(const SurveyRecord& record) {
    ordered_json j;
    j["min_gens"] = record.min_gens;
    j["frobenius"] = record.frobenius;
    j["genus"] = record.genus;
    j["symmetric"] = record.symmetric;
    j["cyclotomic"] = record.cyclotomic;
    j["ci"] = record.ci;
    if (record.factorization) {
        ordered_json factors = ordered_json::array();
        for (const auto& [n, mult] : *record.factorization)
            factors.push_back(ordered_json::array({n, mult}));
        j["factorization"] = std::move(factors);
    }
    return j;
}

SurveyRecord record_from_json(const nlohmann::ordered_json& j) {
    SurveyRecord r;
    r.min_gens = j.at("min_gens").get<std::vector<long>>();
    r.frobenius = j.at("frobenius").get<long>();
    r.genus = j.at("genus").get<long>();
    r.symmetric = j.at("symmetric").get<bool>();
    r.cyclotomic = j.at("cyclotomic").get<bool>();
    r.ci = j.at("ci").get<bool>();
    if (j.contains("factorization")) {
        std::vector<std::pair<long, long>> factors;
        for (const auto& f : j.at("factorization"))
            factors.emplace_back(f.at(0).get<long>(), f.at(1).get<long>());
        r.factorization = std::move(factors);
    }
    return r;
}

nlohmann::ordered_json summary_to_json(const SurveyReport& report) {
    ordered_json j;
    j["bound"] = report.bound;
    j["totals"] = {{"semigroups", report.totals.semigroups},
                   {"symmetric", report.totals.symmetric},
                   {"cyclotomic", report.totals.cyclotomic},
                   {"ci", report.totals.ci}};
    j["counterexamples"] = ordered_json::array();
    for (const auto& r : report.counterexamples) j["counterexamples"].push_back(record_to_json(r));
    j["per_frobenius"] = report.per_frobenius;
    j["runtime_seconds"] = report.runtime_seconds;
    return j;
}

void write_report(const SurveyReport& report, const std::string& dir) {
    fs::create_directories(dir);
    {
        std::ofstream out(fs::path(dir) / "records.jsonl");
        if (!out) throw Error("cannot write records.jsonl under " + dir);
        for (const auto& r : report.records) out << record_to_json(r).dump() << '\n';
    }
    std::ofstream out(fs::path(dir) / "summary.json");
    if (!out) throw Error("cannot write summary.json under " + dir);
    out << summary_to_json(report).dump(2) << '\n';
}

std::vector<SurveyRecord> read_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::vector<SurveyRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json(ordered_json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw MalformedRecord(e.what(), lineno);
        }
    }
    return out;
}

}  // namespace cyclo
