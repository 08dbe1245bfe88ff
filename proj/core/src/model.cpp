#include "nrssp/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace nrssp {

namespace {

std::string job_label(std::size_t j) { return "job " + std::to_string(j + 1); }

}  // namespace

Instance::Instance(std::vector<Job> jobs, std::vector<Supply> supplies)
    : jobs_(std::move(jobs)), supplies_(std::move(supplies)) {
    if (jobs_.empty()) {
        throw InvalidInstance("instance needs at least one job");
    }
    if (supplies_.empty()) {
        throw InvalidInstance("instance needs at least one supply");
    }
    for (std::size_t j = 0; j < jobs_.size(); ++j) {
        if (jobs_[j].processing.sign() <= 0) {
            throw InvalidInstance(job_label(j) + ": processing time must be positive, got " +
                                  jobs_[j].processing.to_string());
        }
        if (jobs_[j].requirement.sign() <= 0) {
            throw InvalidInstance(job_label(j) + ": requirement must be positive, got " +
                                  jobs_[j].requirement.to_string());
        }
    }
    for (std::size_t i = 0; i < supplies_.size(); ++i) {
        const std::string label = "supply " + std::to_string(i + 1);
        if (supplies_[i].amount.sign() <= 0) {
            throw InvalidInstance(label + ": amount must be positive, got " +
                                  supplies_[i].amount.to_string());
        }
        if (i == 0 && supplies_[i].time.sign() < 0) {
            throw InvalidInstance(label + ": time must be nonnegative, got " +
                                  supplies_[i].time.to_string());
        }
        if (i > 0 && supplies_[i].time <= supplies_[i - 1].time) {
            throw InvalidInstance(label + ": supply times must be strictly increasing (" +
                                  supplies_[i - 1].time.to_string() + " then " +
                                  supplies_[i].time.to_string() + ")");
        }
    }
}

Instance Instance::from_vectors(std::vector<Rational> p, std::vector<Rational> a,
                                std::vector<Rational> u, std::vector<Rational> b) {
    if (p.size() != a.size()) {
        throw DimensionMismatch("p and a differ in length");
    }
    if (u.size() != b.size()) {
        throw DimensionMismatch("u and b differ in length");
    }
    std::vector<Job> jobs;
    jobs.reserve(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        jobs.push_back({std::move(p[j]), std::move(a[j])});
    }
    std::vector<Supply> supplies;
    supplies.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        supplies.push_back({std::move(u[i]), std::move(b[i])});
    }
    return Instance(std::move(jobs), std::move(supplies));
}

Rational Instance::total_requirement() const {
    Rational total;
    for (const Job& job : jobs_) total += job.requirement;
    return total;
}

Rational Instance::total_supply() const {
    Rational total;
    for (const Supply& s : supplies_) total += s.amount;
    return total;
}

Rational Instance::max_ratio() const {
    Rational best = ratio(0);
    for (std::size_t j = 1; j < jobs_.size(); ++j) {
        best = std::max(best, ratio(j));
    }
    return best;
}

std::vector<Rational> Instance::supply_prefix_sums() const {
    std::vector<Rational> prefix;
    prefix.reserve(supplies_.size());
    Rational running;
    for (const Supply& s : supplies_) {
        running += s.amount;
        prefix.push_back(running);
    }
    return prefix;
}

Permutation::Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {
    std::vector<bool> seen(order_.size(), false);
    for (std::size_t job : order_) {
        if (job >= order_.size() || seen[job]) {
            throw std::invalid_argument("not a permutation of 1.." +
                                        std::to_string(order_.size()) + ": " + to_string());
        }
        seen[job] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return Permutation(std::move(order));
}

Permutation Permutation::from_one_based(std::span<const std::size_t> order) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(order.size());
    for (std::size_t job : order) {
        if (job == 0) {
            throw std::invalid_argument("job indices are 1-based; got 0");
        }
        zero_based.push_back(job - 1);
    }
    return Permutation(std::move(zero_based));
}

Permutation Permutation::from_one_based(std::initializer_list<std::size_t> order) {
    return from_one_based(std::span<const std::size_t>(order.begin(), order.size()));
}

std::vector<std::size_t> Permutation::one_based() const {
    std::vector<std::size_t> out(order_);
    for (std::size_t& job : out) ++job;
    return out;
}

std::string Permutation::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < order_.size(); ++k) {
        if (k > 0) out += ", ";
        out += std::to_string(order_[k] + 1);
    }
    return out + ")";
}

std::string Violation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::NegativeStart:
            os << "negative start: " << job_label(job) << " starts at " << time;
            break;
        case Kind::Overlap:
            os << "machine overlap: " << job_label(job) << " and " << job_label(other_job)
               << " both run just after " << time;
            break;
        case Kind::ResourceBalance:
            os << "resource balance at T = " << time << ": started requirement " << demand
               << " exceeds cumulative supply " << supply;
            break;
    }
    return os.str();
}

Rational objective(const Instance& inst, const Schedule& sched) {
    if (sched.size() != inst.job_count()) {
        throw DimensionMismatch("schedule has " + std::to_string(sched.size()) +
                                " completion times for " + std::to_string(inst.job_count()) +
                                " jobs");
    }
    Rational total;
    for (std::size_t j = 0; j < inst.job_count(); ++j) {
        total += inst.a(j) * sched[j];
    }
    return total;
}

Rational cumulative_supply(const Instance& inst, const Rational& t) {
    Rational total;
    for (const Supply& s : inst.supplies()) {
        if (s.time > t) break;
        total += s.amount;
    }
    return total;
}

FeasibilityReport check_feasibility(const Instance& inst, const Schedule& sched) {
    const std::size_t n = inst.job_count();
    if (sched.size() != n) {
        throw DimensionMismatch("schedule has " + std::to_string(sched.size()) +
                                " completion times for " + std::to_string(n) + " jobs");
    }
    FeasibilityReport report;
    std::vector<Rational> start(n);
    for (std::size_t j = 0; j < n; ++j) {
        start[j] = sched[j] - inst.p(j);
        if (start[j].sign() < 0) {
            report.violations.push_back(
                {Violation::Kind::NegativeStart, j, 0, start[j], Rational{}, Rational{}});
        }
    }

    std::vector<std::size_t> by_start(n);
    std::iota(by_start.begin(), by_start.end(), std::size_t{0});
    std::stable_sort(by_start.begin(), by_start.end(),
                     [&](std::size_t x, std::size_t y) { return start[x] < start[y]; });

    // Every later-starting job that begins before this one ends overlaps it.
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = by_start[k];
        for (std::size_t m = k + 1; m < n && start[by_start[m]] < sched[j]; ++m) {
            report.violations.push_back({Violation::Kind::Overlap, j, by_start[m],
                                         start[by_start[m]], Rational{}, Rational{}});
        }
    }

    // Demand is a right-continuous step function jumping at start times, so
    // the balance only needs checking there (clamped to T >= 0).
    const std::vector<Rational> prefix = inst.supply_prefix_sums();
    Rational demand;
    std::size_t supplied = 0;  // supplies with time <= T
    for (std::size_t k = 0; k < n; ++k) {
        demand += inst.a(by_start[k]);
        if (k + 1 < n && start[by_start[k + 1]] == start[by_start[k]]) continue;
        const Rational t = std::max(start[by_start[k]], Rational{});
        while (supplied < inst.supply_count() && inst.supply(supplied).time <= t) ++supplied;
        const Rational available = supplied == 0 ? Rational{} : prefix[supplied - 1];
        if (demand > available) {
            report.violations.push_back(
                {Violation::Kind::ResourceBalance, by_start[k], 0, t, demand, available});
        }
    }
    report.feasible = report.violations.empty();
    return report;
}

Instance normalize(const Instance& inst) {
    const Rational required = inst.total_requirement();
    Rational excess = inst.total_supply() - required;
    if (excess.sign() < 0) {
        throw InfeasibleInstance("total requirement " + required.to_string() +
                                 " exceeds total supply " + inst.total_supply().to_string());
    }
    std::vector<Supply> supplies = inst.supplies();
    while (excess.sign() > 0) {
        Supply& last = supplies.back();
        if (last.amount <= excess) {
            excess -= last.amount;
            supplies.pop_back();
        } else {
            last.amount -= excess;
            excess = Rational{};
        }
    }
    return Instance(inst.jobs(), std::move(supplies));
}

Instance scale_resources(const Instance& inst, const Rational& c) {
    if (c.sign() <= 0) {
        throw std::invalid_argument("resource scale factor must be positive, got " +
                                    c.to_string());
    }
    std::vector<Job> jobs = inst.jobs();
    for (Job& job : jobs) job.requirement *= c;
    std::vector<Supply> supplies = inst.supplies();
    for (Supply& s : supplies) s.amount *= c;
    return Instance(std::move(jobs), std::move(supplies));
}

void require_matching(const Instance& inst, const Permutation& order) {
    if (order.size() != inst.job_count()) {
        throw DimensionMismatch("order has " + std::to_string(order.size()) + " entries for " +
                                std::to_string(inst.job_count()) + " jobs");
    }
}

OrderStats compute_order_stats(const Instance& inst, const Permutation& order) {
    require_matching(inst, order);
    const std::size_t n = inst.job_count();
    OrderStats stats;
    stats.ratio.reserve(n);
    for (std::size_t j = 0; j < n; ++j) stats.ratio.push_back(inst.ratio(j));

    stats.natural_tail.assign(n + 1, Rational{});
    stats.permuted_tail.assign(n + 1, Rational{});
    for (std::size_t j = n; j-- > 0;) {
        stats.natural_tail[j] = stats.natural_tail[j + 1] + inst.a(j);
        stats.permuted_tail[j] = stats.permuted_tail[j + 1] + inst.a(order[j]);
    }

    // permuted_tail is nonincreasing, so lambda[j] is the last position whose
    // tail still covers natural_tail[j].
    stats.lambda.assign(n + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t k = 0;
        while (k + 1 < n && stats.permuted_tail[k + 1] >= stats.natural_tail[j]) ++k;
        stats.lambda[j] = k;
    }
    return stats;
}

}  // namespace nrssp
