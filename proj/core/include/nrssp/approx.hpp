#pragma once

#include <optional>
#include <string>

#include "nrssp/model.hpp"

namespace nrssp {

// Builds the processing order back to front. Each step looks at the unplaced
// jobs whose requirement fits within the requirement already placed behind
// them. If none fit, it takes the job with the smallest requirement.
// Otherwise it takes the fitting job with the smallest a_j / p_j. Ties go to
// the smaller job index.
Permutation order_jobs(const Instance& inst);

// Starts each job of `order` at the earliest time that is no earlier than the
// previous completion and at which the cumulative supply covers the
// requirement of every job started so far. Throws InfeasibleInstance when
// total requirement exceeds total supply.
Schedule list_schedule(const Instance& inst, const Permutation& order);

struct OrderClassViolation {
    int condition = 0;          // 1, 2 or 3
    std::size_t position = 0;   // j (0-based position in the order)
    std::size_t witness = 0;    // i <= j (0-based position), unused for condition 1
    Rational lhs;               // condition 1: a_{o(n)}; 2: a_{o(i)}; 3: r_{o(i)}
    Rational rhs;               // condition 1: min a;    2: a_{o(j)}; 3: r_{o(j)}
    std::string describe() const;
};

struct OrderClassVerdict {
    bool member = true;
    std::optional<OrderClassViolation> violation;  // first violated condition
};

// Membership in the order class O(a, p):
//  (1) the last job has the smallest requirement;
//  (2) a job whose requirement exceeds the tail behind it is preceded only by
//      jobs with at least its requirement;
//  (3) a job whose requirement fits the tail behind it is preceded only by
//      jobs with at least its ratio, among those that also fit that tail.
OrderClassVerdict verify_order_class(const Instance& inst, const Permutation& order);

struct Solution {
    Permutation order;
    Schedule schedule;
    Rational objective;
};

Solution approx_solve(const Instance& inst);

}  // namespace nrssp
