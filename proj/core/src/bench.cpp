#include "nrssp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <thread>

namespace nrssp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string padded(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%06zu", index);
    return buf;
}

// Evaluates `count` jobs on up to `workers` threads; record i always lands in slot i.
std::vector<BenchRecord> evaluate_all(std::size_t count, unsigned workers,
                                      const std::function<BenchRecord(std::size_t)>& job) {
    std::vector<BenchRecord> records(count);
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t i = next++; i < count; i = next++) records[i] = job(i);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(workers, count));
    if (threads <= 1) {
        drain();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(drain);
    }
    return records;
}

void summarize(BenchReport& report) {
    std::sort(report.records.begin(), report.records.end(),
              [](const BenchRecord& x, const BenchRecord& y) {
                  return x.instance_id < y.instance_id;
              });
    Rational sum;
    std::size_t evaluated = 0;
    for (const BenchRecord& rec : report.records) {
        if (!rec.ratio) continue;
        ++evaluated;
        sum += *rec.ratio;
        if (!report.max_ratio || *rec.ratio > *report.max_ratio) {
            report.max_ratio = rec.ratio;
            report.argmax_instance = rec.instance_id;
        }
    }
    if (evaluated > 0) {
        report.mean_ratio = sum / Rational(static_cast<std::int64_t>(evaluated));
    }
}

}  // namespace

BenchRecord evaluate_instance(const std::string& instance_id, const Instance& inst,
                              const OracleOptions& oracle) {
    BenchRecord rec;
    rec.instance_id = instance_id;
    rec.n = inst.job_count();
    rec.q = inst.supply_count();
    try {
        auto t0 = Clock::now();
        Solution approx = approx_solve(inst);
        rec.wall_time_approx = seconds_since(t0);
        t0 = Clock::now();
        Solution exact = exact_solve(inst, oracle);
        rec.wall_time_exact = seconds_since(t0);

        rec.ratio = approx.objective / exact.objective;
        rec.f_approx = std::move(approx.objective);
        rec.f_exact = std::move(exact.objective);
        rec.order_approx = std::move(approx.order);
        rec.order_exact = std::move(exact.order);
    } catch (const OracleCapExceeded& e) {
        rec.skipped = std::string("oracle cap: ") + e.what();
    } catch (const InfeasibleInstance& e) {
        rec.skipped = std::string("infeasible: ") + e.what();
    }
    return rec;
}

BenchReport run_tight_sweep(const std::vector<Rational>& epsilons, const SweepOptions& options) {
    std::vector<Instance> instances;
    instances.reserve(epsilons.size());
    for (const Rational& e : epsilons) instances.push_back(gen_tight(e));

    BenchReport report;
    report.family = "tight";
    std::string listed;
    for (const Rational& e : epsilons) listed += (listed.empty() ? "" : " ") + e.to_string();
    report.config = {{"family", "tight"}, {"epsilons", listed}};
    report.records = evaluate_all(epsilons.size(), options.workers, [&](std::size_t i) {
        return evaluate_instance("tight-" + padded(i), instances[i], options.oracle);
    });
    summarize(report);
    return report;
}

BenchReport run_random_sweep(const GenConfig& cfg, std::size_t count,
                             const SweepOptions& options) {
    cfg.validate();
    BenchReport report;
    report.family = "random";
    report.config = {
        {"family", "random"},
        {"generator", kRandomGeneratorName},
        {"seed", std::to_string(cfg.seed)},
        {"count", std::to_string(count)},
        {"jobs", std::to_string(cfg.jobs.lo) + ".." + std::to_string(cfg.jobs.hi)},
        {"supplies", std::to_string(cfg.supplies.lo) + ".." + std::to_string(cfg.supplies.hi)},
        {"grid", std::to_string(cfg.grid)},
        {"max_value", std::to_string(cfg.max_value)},
        {"ratio_bound", cfg.enforce_ratio_bound ? "true" : "false"},
        {"supply_mode", cfg.supply_mode == SupplyMode::Balanced ? "balanced" : "surplus"},
    };
    report.records = evaluate_all(count, options.workers, [&](std::size_t i) {
        GenConfig instance_cfg = cfg;
        instance_cfg.seed = cfg.seed + i;
        return evaluate_instance("random-" + padded(i), gen_random(instance_cfg), options.oracle);
    });
    summarize(report);
    return report;
}

}  // namespace nrssp
