#include "nrssp/approx.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace nrssp {

Permutation order_jobs(const Instance& inst) {
    const std::size_t n = inst.job_count();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> order(n);
    Rational placed_requirement;

    for (std::size_t position = n; position-- > 0;) {
        std::optional<std::size_t> smallest;  // argmin a over unplaced jobs
        std::optional<std::size_t> cheapest;  // argmin r over unplaced jobs that fit
        for (std::size_t j = 0; j < n; ++j) {
            if (placed[j]) continue;
            if (!smallest || inst.a(j) < inst.a(*smallest)) smallest = j;
            if (inst.a(j) <= placed_requirement &&
                (!cheapest || inst.ratio(j) < inst.ratio(*cheapest))) {
                cheapest = j;
            }
        }
        const std::size_t pick = cheapest ? *cheapest : *smallest;
        order[position] = pick;
        placed[pick] = true;
        placed_requirement += inst.a(pick);
    }
    return Permutation(std::move(order));
}

Schedule list_schedule(const Instance& inst, const Permutation& order) {
    require_matching(inst, order);
    const Rational required = inst.total_requirement();
    const Rational available = inst.total_supply();
    if (required > available) {
        throw InfeasibleInstance("total requirement " + required.to_string() +
                                 " exceeds total supply " + available.to_string());
    }

    const std::vector<Rational> prefix = inst.supply_prefix_sums();
    Schedule sched;
    sched.completion.resize(inst.job_count());
    Rational started;
    Rational machine_free;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t job = order[k];
        started += inst.a(job);
        // First supply whose prefix covers everything started so far; it
        // exists because started <= total supply.
        const auto covering = std::lower_bound(prefix.begin(), prefix.end(), started);
        const Rational& supply_time =
            inst.supply(static_cast<std::size_t>(covering - prefix.begin())).time;
        const Rational& start = k == 0 ? supply_time : std::max(machine_free, supply_time);
        sched.completion[job] = start + inst.p(job);
        machine_free = sched.completion[job];
    }
    return sched;
}

std::string OrderClassViolation::describe() const {
    std::ostringstream os;
    switch (condition) {
        case 1:
            os << "condition i: last job has requirement " << lhs
               << " but the smallest requirement is " << rhs;
            break;
        case 2:
            os << "condition ii: position " << position + 1
               << " exceeds its tail, but position " << witness + 1 << " has requirement "
               << lhs << " < " << rhs;
            break;
        default:
            os << "condition iii: position " << position + 1 << " fits its tail, but position "
               << witness + 1 << " (also fitting) has ratio " << lhs << " < " << rhs;
            break;
    }
    return os.str();
}

OrderClassVerdict verify_order_class(const Instance& inst, const Permutation& order) {
    require_matching(inst, order);
    const std::size_t n = inst.job_count();
    OrderClassVerdict verdict;
    auto fail = [&](OrderClassViolation v) {
        verdict.member = false;
        verdict.violation = std::move(v);
        return verdict;
    };

    Rational min_requirement = inst.a(0);
    for (std::size_t j = 1; j < n; ++j) min_requirement = std::min(min_requirement, inst.a(j));
    if (inst.a(order[n - 1]) != min_requirement) {
        return fail({1, n - 1, n - 1, inst.a(order[n - 1]), min_requirement});
    }

    // tail[j] = a_{o(j+1)} + ... + a_{o(n-1)}
    std::vector<Rational> tail(n);
    for (std::size_t j = n - 1; j-- > 0;) tail[j] = tail[j + 1] + inst.a(order[j + 1]);

    for (std::size_t j = 0; j + 1 < n; ++j) {
        const Rational& a_j = inst.a(order[j]);
        if (a_j > tail[j]) {
            for (std::size_t i = 0; i <= j; ++i) {
                if (inst.a(order[i]) < a_j) return fail({2, j, i, inst.a(order[i]), a_j});
            }
        }
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (inst.a(order[j]) > tail[j]) continue;
        const Rational r_j = inst.ratio(order[j]);
        for (std::size_t i = 0; i <= j; ++i) {
            if (inst.a(order[i]) > tail[j]) continue;
            const Rational r_i = inst.ratio(order[i]);
            if (r_i < r_j) return fail({3, j, i, r_i, r_j});
        }
    }
    return verdict;
}

Solution approx_solve(const Instance& inst) {
    Permutation order = order_jobs(inst);
    Schedule sched = list_schedule(inst, order);
    Rational value = objective(inst, sched);
    return {std::move(order), std::move(sched), std::move(value)};
}

}  // namespace nrssp
