#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nrssp/bench.hpp"
#include "nrssp/model.hpp"

// JSON file formats. Rationals are written as strings in canonical form
// ("19/20", "3"); readers also accept JSON integers and decimal strings.
// Job indices are 1-based on disk.
//
//   instance:  {"jobs": [{"p": R, "a": R}, ...], "supplies": [{"u": R, "b": R}, ...]}
//   schedule:  {"order": [int, ...], "completion": [R, ...], "objective": R}

namespace nrssp::io {

// Malformed input. The message names the location: a byte offset for JSON
// syntax errors or a JSON pointer ("/jobs/2/p") for content errors.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& inst);

struct ScheduleDocument {
    std::optional<Permutation> order;
    Schedule schedule;
    std::optional<Rational> objective;

    friend bool operator==(const ScheduleDocument&, const ScheduleDocument&) = default;
};

// "completion" is required; "order" and "objective" may be omitted.
ScheduleDocument parse_schedule(std::string_view text);
std::string format_schedule(const ScheduleDocument& doc);
ScheduleDocument make_schedule_document(const Instance& inst, const Permutation& order,
                                        const Schedule& sched);

// A bare JSON array of 1-based job indices, or an object carrying "order"
// (so a schedule file can be reused as an order file).
Permutation parse_order(std::string_view text);

inline constexpr std::string_view kBenchCsvHeader =
    "instance_id,n,q,f_approx,f_exact,ratio_exact,ratio_decimal,order_approx,order_exact";

std::string format_bench_csv(const BenchReport& report);
std::string format_bench_json(const BenchReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace nrssp::io
