#include "nrssp/gen.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace nrssp {

namespace {

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

void check_range(const IntRange& range, const char* name) {
    if (range.lo < 1 || range.hi < range.lo) {
        throw std::invalid_argument(std::string(name) + " range must satisfy 1 <= lo <= hi");
    }
}

}  // namespace

void GenConfig::validate() const {
    check_range(jobs, "job count");
    check_range(supplies, "supply count");
    if (grid < 1) throw std::invalid_argument("grid must be >= 1");
    if (max_value < 1) throw std::invalid_argument("max_value must be >= 1");
}

Instance gen_tight(const Rational& e) {
    if (e.sign() <= 0 || e >= Rational(1, 10)) {
        throw std::invalid_argument("tight family needs 0 < e < 1/10, got " + e.to_string());
    }
    const Rational one(1);
    return Instance::from_vectors({e, e, one}, {one - e, one, one + e}, {Rational{}, e, e + e},
                                  {one - e, one, one + e});
}

Instance gen_random(const GenConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    const std::int64_t units = cfg.grid * cfg.max_value;
    const Rational step(1, cfg.grid);

    const auto n = static_cast<std::size_t>(draw(rng, cfg.jobs.lo, cfg.jobs.hi));
    std::vector<std::int64_t> p_units(n);
    std::vector<std::int64_t> a_units(n);
    for (std::size_t j = 0; j < n; ++j) {
        p_units[j] = draw(rng, 1, units);
        a_units[j] = draw(rng, 1, cfg.enforce_ratio_bound ? p_units[j] : units);
    }
    std::int64_t total_p = 0;
    std::int64_t total_a = 0;
    for (std::size_t j = 0; j < n; ++j) {
        total_p += p_units[j];
        total_a += a_units[j];
    }

    // Cut the total requirement into q positive pieces at distinct points.
    const std::int64_t q = std::min(draw(rng, cfg.supplies.lo, cfg.supplies.hi), total_a);
    std::vector<std::int64_t> cuts;
    {
        std::vector<std::int64_t> points;
        while (static_cast<std::int64_t>(points.size()) < q - 1) {
            const std::int64_t c = draw(rng, 1, total_a - 1);
            if (std::find(points.begin(), points.end(), c) == points.end()) points.push_back(c);
        }
        std::sort(points.begin(), points.end());
        cuts.push_back(0);
        cuts.insert(cuts.end(), points.begin(), points.end());
        cuts.push_back(total_a);
    }

    std::map<std::int64_t, std::int64_t> plan;  // time units -> amount units
    for (std::int64_t i = 0; i < q; ++i) {
        plan[draw(rng, 0, total_p)] += cuts[i + 1] - cuts[i];
    }
    if (cfg.supply_mode == SupplyMode::Surplus) {
        plan[draw(rng, 0, total_p)] += draw(rng, 1, std::max<std::int64_t>(1, total_a / 2));
    }

    std::vector<Rational> p;
    std::vector<Rational> a;
    for (std::size_t j = 0; j < n; ++j) {
        p.push_back(step * Rational(p_units[j]));
        a.push_back(step * Rational(a_units[j]));
    }
    std::vector<Rational> u;
    std::vector<Rational> b;
    for (const auto& [time, amount] : plan) {
        u.push_back(step * Rational(time));
        b.push_back(step * Rational(amount));
    }
    return Instance::from_vectors(std::move(p), std::move(a), std::move(u), std::move(b));
}

std::vector<Rational> prefix_sums(const std::vector<Rational>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    Rational running;
    for (const Rational& x : v) {
        running += x;
        out.push_back(running);
    }
    return out;
}

Instance to_just_in_time(const Instance& inst, const Schedule& sched) {
    const std::size_t n = inst.job_count();
    if (sched.size() != n) {
        throw DimensionMismatch("schedule length does not match job count");
    }
    std::vector<Supply> supplies;
    supplies.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Rational start = sched[j] - inst.p(j);
        const Rational floor = j == 0 ? Rational{} : sched[j - 1];
        if (start < floor) {
            throw std::invalid_argument("not a staircase schedule: job " + std::to_string(j + 1) +
                                        " starts at " + start.to_string() + " before " +
                                        floor.to_string());
        }
        supplies.push_back({start, inst.a(j)});
    }
    // Equal consecutive starts are impossible since p > 0, so u is strictly increasing.
    return Instance(inst.jobs(), std::move(supplies));
}

Instance to_sigma_supply(const Instance& inst) {
    std::vector<Rational> p;
    for (const Job& job : inst.jobs()) p.push_back(job.processing);
    return to_just_in_time(inst, Schedule{prefix_sums(p)});
}

Instance to_unit_processing(const Instance& inst) {
    std::vector<Job> jobs = inst.jobs();
    for (Job& job : jobs) job.processing = job.requirement;
    return to_sigma_supply(Instance(std::move(jobs), inst.supplies()));
}

}  // namespace nrssp
