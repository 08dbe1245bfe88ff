#pragma once

#include <cstdint>
#include <string>

#include "nrssp/model.hpp"

namespace nrssp {

struct IntRange {
    std::int64_t lo = 1;
    std::int64_t hi = 1;
};

enum class SupplyMode { Balanced, Surplus };

struct GenConfig {
    IntRange jobs{2, 7};
    IntRange supplies{1, 5};
    std::int64_t grid = 4;        // every value is a multiple of 1/grid
    std::int64_t max_value = 10;  // p_j, a_j <= max_value
    bool enforce_ratio_bound = false;  // a_j <= p_j
    SupplyMode supply_mode = SupplyMode::Balanced;
    std::uint64_t seed = 0;

    // Throws std::invalid_argument on empty ranges or nonpositive bounds.
    void validate() const;
};

// Name of the pseudorandom generator behind gen_random, echoed in reports.
inline constexpr const char* kRandomGeneratorName = "mt19937_64/uniform_int v1";

// The three-job family whose approximation ratio tends to 3 as e -> 0:
// p = (e, e, 1), a = (1-e, 1, 1+e), u = (0, e, 2e), b = a. Requires 0 < e < 1/10.
Instance gen_tight(const Rational& e);

// Deterministic in cfg (including the seed). Processing times are drawn from
// the grid on (0, max_value]; requirements likewise, capped at p_j when the
// ratio bound is enforced. Supply times are drawn on the grid in
// [0, sum p], with coincident times merged. Balanced mode splits the total
// requirement exactly; surplus mode adds at least one grid unit on top.
Instance gen_random(const GenConfig& cfg);

// Replaces the supply plan with one supply of a_j at each start C_j - p_j.
// `sched` must be a staircase in job-index order: C_1 >= p_1 and
// C_{j+1} - C_j >= p_{j+1}. Throws std::invalid_argument otherwise.
Instance to_just_in_time(const Instance& inst, const Schedule& sched);

// Supply a_j exactly when job j would start in the back-to-back schedule.
Instance to_sigma_supply(const Instance& inst);

// Sets p = a and the supply plan to the back-to-back schedule of those times.
Instance to_unit_processing(const Instance& inst);

// Prefix sums of v: (v_1, v_1 + v_2, ...).
std::vector<Rational> prefix_sums(const std::vector<Rational>& v);

}  // namespace nrssp
