#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nrssp/gen.hpp"
#include "nrssp/oracle.hpp"

namespace nrssp {

struct BenchRecord {
    std::string instance_id;
    std::size_t n = 0;
    std::size_t q = 0;
    // Set when the instance could not be evaluated (oracle cap, infeasible).
    // The remaining optional fields are empty in that case.
    std::optional<std::string> skipped;
    std::optional<Rational> f_approx;
    std::optional<Rational> f_exact;
    std::optional<Rational> ratio;
    std::optional<Permutation> order_approx;
    std::optional<Permutation> order_exact;
    double wall_time_approx = 0.0;  // seconds, informational
    double wall_time_exact = 0.0;
};

struct BenchReport {
    std::string family;  // "tight" or "random"
    std::vector<BenchRecord> records;  // sorted by instance_id
    std::optional<Rational> max_ratio;
    std::optional<std::string> argmax_instance;
    std::optional<Rational> mean_ratio;
    // Config echo: ordered key/value pairs (epsilons, seed, ranges, generator).
    std::vector<std::pair<std::string, std::string>> config;
};

struct SweepOptions {
    OracleOptions oracle;
    unsigned workers = 1;  // instances evaluated concurrently
};

// Evaluates one instance; errors from the oracle become a skipped record.
BenchRecord evaluate_instance(const std::string& instance_id, const Instance& inst,
                              const OracleOptions& oracle);

BenchReport run_tight_sweep(const std::vector<Rational>& epsilons,
                            const SweepOptions& options = {});

// Instance i is gen_random(cfg) with seed cfg.seed + i.
BenchReport run_random_sweep(const GenConfig& cfg, std::size_t count,
                             const SweepOptions& options = {});

}  // namespace nrssp
