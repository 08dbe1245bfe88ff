#pragma once

#include <cstddef>

#include "nrssp/approx.hpp"
#include "nrssp/model.hpp"

namespace nrssp {

struct OracleOptions {
    std::size_t max_jobs = 10;  // refuse larger instances (n! orders)
    unsigned workers = 1;       // threads; the result does not depend on this
};

// Exact optimum by enumerating every processing order. For a fixed order the
// list schedule is componentwise earliest and weights are positive, so the
// best list schedule over all orders is optimal. Among optimal orders the
// lexicographically smallest is returned.
//
// Throws OracleCapExceeded above options.max_jobs and InfeasibleInstance when
// total requirement exceeds total supply.
Solution exact_solve(const Instance& inst, const OracleOptions& options = {});

// Objective of approx_solve divided by the exact optimum.
Rational approximation_ratio(const Instance& inst, const OracleOptions& options = {});

}  // namespace nrssp
