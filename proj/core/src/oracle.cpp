#include "nrssp/oracle.hpp"

#include <algorithm>
#include <optional>
#include <thread>
#include <vector>

namespace nrssp {

namespace {

// Depth-first enumeration of orders in lexicographic order, sharing the
// schedule of each prefix between all of its completions.
class OrderSearch {
public:
    explicit OrderSearch(const Instance& inst)
        : inst_(inst),
          prefix_(inst.supply_prefix_sums()),
          n_(inst.job_count()),
          used_(n_, false),
          order_(n_) {}

    // Explores every order starting with `first`.
    void run_from(std::size_t first) {
        place(0, first, Rational{}, Rational{}, Rational{});
    }

    const std::optional<Rational>& best_value() const { return best_value_; }
    const std::vector<std::size_t>& best_order() const { return best_order_; }

private:
    void place(std::size_t depth, std::size_t job, const Rational& started_before,
               const Rational& machine_free, const Rational& value_before) {
        const Rational started = started_before + inst_.a(job);
        const auto covering = std::lower_bound(prefix_.begin(), prefix_.end(), started);
        const Rational& supply_time =
            inst_.supply(static_cast<std::size_t>(covering - prefix_.begin())).time;
        const Rational completion =
            (depth == 0 ? supply_time : std::max(machine_free, supply_time)) + inst_.p(job);
        const Rational value = value_before + inst_.a(job) * completion;

        order_[depth] = job;
        used_[job] = true;
        if (depth + 1 == n_) {
            // Strict improvement keeps the lexicographically first minimizer.
            if (!best_value_ || value < *best_value_) {
                best_value_ = value;
                best_order_ = order_;
            }
        } else {
            for (std::size_t next = 0; next < n_; ++next) {
                if (!used_[next]) place(depth + 1, next, started, completion, value);
            }
        }
        used_[job] = false;
    }

    const Instance& inst_;
    std::vector<Rational> prefix_;
    std::size_t n_;
    std::vector<bool> used_;
    std::vector<std::size_t> order_;
    std::optional<Rational> best_value_;
    std::vector<std::size_t> best_order_;
};

struct Candidate {
    Rational value;
    std::vector<std::size_t> order;
};

}  // namespace

Solution exact_solve(const Instance& inst, const OracleOptions& options) {
    const std::size_t n = inst.job_count();
    if (n > options.max_jobs) {
        throw OracleCapExceeded("exact solver is capped at " + std::to_string(options.max_jobs) +
                                " jobs; instance has " + std::to_string(n));
    }
    const Rational required = inst.total_requirement();
    if (required > inst.total_supply()) {
        throw InfeasibleInstance("total requirement " + required.to_string() +
                                 " exceeds total supply " + inst.total_supply().to_string());
    }

    // Worker w explores the subtrees whose first job is congruent to w.
    const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, n);
    std::vector<std::optional<Candidate>> per_worker(workers);
    auto work = [&](std::size_t w) {
        std::optional<Candidate> best;
        for (std::size_t first = w; first < n; first += workers) {
            OrderSearch search(inst);
            search.run_from(first);
            // Subtrees are visited in increasing first job, so ties keep the earlier one.
            if (!best || *search.best_value() < best->value) {
                best = Candidate{*search.best_value(), search.best_order()};
            }
        }
        per_worker[w] = std::move(best);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    }

    const Candidate* best = nullptr;
    for (const auto& candidate : per_worker) {
        if (!candidate) continue;
        if (best == nullptr || candidate->value < best->value ||
            (candidate->value == best->value && candidate->order < best->order)) {
            best = &*candidate;
        }
    }

    Permutation order(best->order);
    Schedule sched = list_schedule(inst, order);
    return {std::move(order), std::move(sched), best->value};
}

Rational approximation_ratio(const Instance& inst, const OracleOptions& options) {
    const Solution exact = exact_solve(inst, options);
    const Solution approx = approx_solve(inst);
    return approx.objective / exact.objective;
}

}  // namespace nrssp
