#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "modk/certificates.hpp"
#include "modk/class_checks.hpp"
#include "modk/coloring_engine.hpp"
#include "modk/gnp.hpp"
#include "modk/graph.hpp"
#include "modk/rng.hpp"

namespace modk {

// Seeded Monte Carlo harness: sample G(n,p), record the structural property
// checks (never gating), run the certificate scan and the coloring engine,
// and mark a trial certified when the engine's color count meets the
// certificate lower bound.
//
// Trial seeds are derived by hashing (master_seed, trial index), so records
// are independent of execution order and worker count.

enum class ExperimentMode { full, engine_only };

struct ExperimentConfig {
    int k = 2;
    int n = 0;
    double p = 0.5;
    int trials = 1;
    std::uint64_t master_seed = 0;
    ExperimentMode mode = ExperimentMode::full;
    std::string output_path; // empty = no file written
    // The ms column is emitted as 0 unless enabled, keeping the CSV
    // byte-reproducible; wall times are always measured in-memory.
    bool emit_wall_times = false;
};

struct TrialRecord {
    int trial_index = 0;
    std::uint64_t seed = 0;
    std::vector<int> class_sizes; // n_1..n_k
    bool balance_ok = false;
    bool mindeg_ok = false;
    bool conn_ok = false;
    bool engine_success = false;
    std::string fail_stage; // empty on success
    int colors_used = 0;
    std::string cert_kind = "none";
    int cert_bound = 0; // effective lower bound (>= 1 whenever edges exist)
    bool certified_exact = false;
    double wall_ms = 0.0;
};

inline TrialRecord run_single_trial(const ExperimentConfig& config, int index) {
    const auto t0 = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.trial_index = index;
    rec.seed = derive_seed(config.master_seed, static_cast<std::uint64_t>(index));

    const Graph g = sample_gnp(config.n, config.p, rec.seed);
    const auto part = degree_classes(g, config.k);
    rec.class_sizes = part.sizes();

    rec.balance_ok = check_degree_class_balance(g, config.k).all_ok;
    rec.mindeg_ok = config.p > 0.0
                        ? check_class_min_degree(g, config.k, config.p).ok
                        : false;
    rec.conn_ok = true;
    for (int i = 1; i <= config.k; ++i) {
        const auto& cls = part.cls(i);
        if (!cls.empty() && !is_connected(g, cls))
            rec.conn_ok = false;
    }

    if (config.mode == ExperimentMode::full) {
        const auto certs = find_certificates(g, config.k);
        rec.cert_bound = certificate_lower_bound(g, certs);
        if (const auto* best = best_certificate(certs))
            rec.cert_kind = to_string(best->kind);
    } else {
        rec.cert_bound = g.edge_count() > 0 ? 1 : 0;
    }

    const ColoringResult res =
        construct_coloring(g, config.k, derive_seed(rec.seed, "engine"));
    rec.engine_success = res.success;
    if (res.success) {
        rec.colors_used = res.colors_used;
        // cross-module consistency: re-verify the emitted coloring
        if (!verify_coloring(g, res.coloring).valid) {
            rec.engine_success = false;
            rec.fail_stage = "verify";
        }
    } else {
        rec.fail_stage = res.failure.stage;
    }
    rec.certified_exact = rec.engine_success && rec.colors_used == rec.cert_bound;

    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rec;
}

inline std::string csv_header(int k) {
    std::ostringstream out;
    out << "trial,seed";
    for (int i = 1; i <= k; ++i)
        out << ",n" << i;
    out << ",balance_ok,mindeg_ok,conn_ok,engine_status,fail_stage,colors_used,"
           "cert_kind,cert_bound,certified_exact,ms";
    return out.str();
}

inline void write_csv(const std::vector<TrialRecord>& records, int k,
                      std::ostream& out, bool emit_wall_times = false) {
    out << csv_header(k) << '\n';
    for (const TrialRecord& rec : records) {
        out << rec.trial_index << ',' << rec.seed;
        for (int size : rec.class_sizes)
            out << ',' << size;
        out << ',' << (rec.balance_ok ? 1 : 0) << ',' << (rec.mindeg_ok ? 1 : 0)
            << ',' << (rec.conn_ok ? 1 : 0) << ','
            << (rec.engine_success ? "success" : "failure") << ',' << rec.fail_stage
            << ',' << rec.colors_used << ',' << rec.cert_kind << ',' << rec.cert_bound
            << ',' << (rec.certified_exact ? 1 : 0) << ','
            << (emit_wall_times ? static_cast<long long>(std::llround(rec.wall_ms)) : 0)
            << '\n';
    }
}

inline std::vector<TrialRecord> run_trials(const ExperimentConfig& config) {
    if (config.trials < 1)
        throw input_error("run_trials: trials must be at least 1");
    if (config.n < 0)
        throw input_error("run_trials: n must be non-negative");
    if (config.p < 0.0 || config.p > 1.0)
        throw input_error("run_trials: p must lie in [0,1]");
    if (config.k < 2)
        throw input_error("run_trials: k must be at least 2");

    std::vector<TrialRecord> records;
    records.reserve(static_cast<std::size_t>(config.trials));
    for (int t = 0; t < config.trials; ++t)
        records.push_back(run_single_trial(config, t));

    if (!config.output_path.empty()) {
        std::ofstream out(config.output_path);
        if (!out)
            throw io_error("cannot open '" + config.output_path + "' for writing");
        write_csv(records, config.k, out, config.emit_wall_times);
        if (!out)
            throw io_error("failed writing '" + config.output_path + "'");
    }
    return records;
}

struct Summary {
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t certified = 0;
    double success_rate = 0.0;
    double certified_rate = 0.0;
    std::map<std::string, int> failure_stages;
    std::map<int, int> color_histogram; // colors_used over successes
    double ms_p50 = 0.0, ms_p90 = 0.0, ms_max = 0.0;
};

inline Summary summarize(const std::vector<TrialRecord>& records) {
    if (records.empty())
        throw input_error("summarize: no records");
    Summary s;
    s.trials = records.size();
    std::vector<double> times;
    times.reserve(records.size());
    for (const TrialRecord& rec : records) {
        if (rec.engine_success) {
            ++s.successes;
            ++s.color_histogram[rec.colors_used];
        } else {
            ++s.failure_stages[rec.fail_stage];
        }
        if (rec.certified_exact)
            ++s.certified;
        times.push_back(rec.wall_ms);
    }
    s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
    s.certified_rate = static_cast<double>(s.certified) / static_cast<double>(s.trials);
    std::sort(times.begin(), times.end());
    auto quantile = [&times](double q) {
        const std::size_t idx = static_cast<std::size_t>(
            q * static_cast<double>(times.size() - 1) + 0.5);
        return times[std::min(idx, times.size() - 1)];
    };
    s.ms_p50 = quantile(0.5);
    s.ms_p90 = quantile(0.9);
    s.ms_max = times.back();
    return s;
}

} // namespace modk
