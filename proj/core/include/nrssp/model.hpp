#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nrssp/errors.hpp"
#include "nrssp/rational.hpp"

// Jobs and supplies are indexed from 0 throughout the library. Files and
// user-facing messages use 1-based job indices.

namespace nrssp {

struct Job {
    Rational processing;   // p_j > 0
    Rational requirement;  // a_j > 0, also the job's weight
};

struct Supply {
    Rational time;    // u_i >= 0, strictly increasing across supplies
    Rational amount;  // b_i > 0
};

// A single-machine instance with one non-renewable resource where each job's
// weight equals its resource requirement.
class Instance {
public:
    // Throws InvalidInstance unless n >= 1, q >= 1, p > 0, a > 0, b > 0,
    // u_1 >= 0 and u strictly increasing.
    Instance(std::vector<Job> jobs, std::vector<Supply> supplies);

    // Convenience for tests and generators: parallel vectors.
    static Instance from_vectors(std::vector<Rational> p, std::vector<Rational> a,
                                 std::vector<Rational> u, std::vector<Rational> b);

    std::size_t job_count() const { return jobs_.size(); }
    std::size_t supply_count() const { return supplies_.size(); }

    const std::vector<Job>& jobs() const { return jobs_; }
    const std::vector<Supply>& supplies() const { return supplies_; }
    const Job& job(std::size_t j) const { return jobs_.at(j); }
    const Supply& supply(std::size_t i) const { return supplies_.at(i); }

    const Rational& p(std::size_t j) const { return jobs_[j].processing; }
    const Rational& a(std::size_t j) const { return jobs_[j].requirement; }
    Rational ratio(std::size_t j) const { return a(j) / p(j); }

    Rational total_requirement() const;
    Rational total_supply() const;
    Rational max_ratio() const;

    // prefix[i] = b_1 + ... + b_{i+1}
    std::vector<Rational> supply_prefix_sums() const;

    friend bool operator==(const Instance&, const Instance&);

private:
    std::vector<Job> jobs_;
    std::vector<Supply> supplies_;
};

inline bool operator==(const Job& x, const Job& y) {
    return x.processing == y.processing && x.requirement == y.requirement;
}
inline bool operator==(const Supply& x, const Supply& y) {
    return x.time == y.time && x.amount == y.amount;
}
inline bool operator==(const Instance& x, const Instance& y) {
    return x.jobs_ == y.jobs_ && x.supplies_ == y.supplies_;
}

// Completion times indexed by job.
struct Schedule {
    std::vector<Rational> completion;

    std::size_t size() const { return completion.size(); }
    const Rational& operator[](std::size_t j) const { return completion[j]; }
    friend bool operator==(const Schedule&, const Schedule&) = default;
};

// A processing order: position k holds the job processed k-th.
class Permutation {
public:
    Permutation() = default;
    // Throws std::invalid_argument unless `order` is a bijection on {0..n-1}.
    explicit Permutation(std::vector<std::size_t> order);

    static Permutation identity(std::size_t n);
    static Permutation from_one_based(std::span<const std::size_t> order);
    static Permutation from_one_based(std::initializer_list<std::size_t> order);

    std::size_t size() const { return order_.size(); }
    std::size_t operator[](std::size_t position) const { return order_[position]; }
    const std::vector<std::size_t>& positions() const { return order_; }
    std::vector<std::size_t> one_based() const;
    // "(3, 2, 1)"
    std::string to_string() const;

    auto begin() const { return order_.begin(); }
    auto end() const { return order_.end(); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> order_;
};

// Tail sums and lambda positions relating the natural job order to a
// permutation. All vectors have n + 1 entries; entry n is the empty tail.
struct OrderStats {
    std::vector<Rational> ratio;            // r_j = a_j / p_j (n entries)
    std::vector<Rational> natural_tail;     // A*_j = a_j + ... + a_{n-1}
    std::vector<Rational> permuted_tail;    // Ao_k = a_{o(k)} + ... + a_{o(n-1)}
    // lambda[j] is the last position k with permuted_tail[k] >= natural_tail[j],
    // so permuted_tail[lambda[j] + 1] < natural_tail[j] <= permuted_tail[lambda[j]]
    // for j < n. lambda[n] = n, making permuted_tail[lambda[n]] = 0.
    std::vector<std::size_t> lambda;
};

struct Violation {
    enum class Kind { NegativeStart, Overlap, ResourceBalance };
    Kind kind;
    std::size_t job = 0;        // NegativeStart: the job; Overlap: earlier-starting job
    std::size_t other_job = 0;  // Overlap only
    Rational time;              // start time, overlap start, or the checked T
    Rational demand;            // ResourceBalance: requirement started by `time`
    Rational supply;            // ResourceBalance: supply available by `time`
    std::string describe() const;
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<Violation> violations;
};

Rational objective(const Instance& inst, const Schedule& sched);

// Total amount supplied at or before time t.
Rational cumulative_supply(const Instance& inst, const Rational& t);

// Checks nonnegative starts, pairwise-disjoint processing intervals, and the
// resource balance at every start time.
FeasibilityReport check_feasibility(const Instance& inst, const Schedule& sched);

// Trims supply from the last supply backwards until total supply equals total
// requirement; supplies trimmed to zero are dropped.
Instance normalize(const Instance& inst);

// Multiplies every requirement and supply amount by c > 0.
Instance scale_resources(const Instance& inst, const Rational& c);

OrderStats compute_order_stats(const Instance& inst, const Permutation& order);

// Throws DimensionMismatch unless the permutation covers exactly inst's jobs.
void require_matching(const Instance& inst, const Permutation& order);

}  // namespace nrssp
