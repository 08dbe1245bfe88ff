#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nrssp/approx.hpp"
#include "nrssp/bench.hpp"
#include "nrssp/gen.hpp"
#include "nrssp/io.hpp"
#include "nrssp/oracle.hpp"

namespace nrssp::cli {

namespace {

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& contents, std::ostream& out) {
    if (path.empty()) {
        out << contents;
    } else {
        io::write_file(path, contents);
    }
}

Instance load_instance(const std::string& path) {
    return io::parse_instance(io::read_file(path));
}

std::vector<Rational> parse_epsilons(const std::string& list) {
    std::vector<Rational> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (!item.empty()) out.push_back(Rational::parse(item));
    }
    if (out.empty()) throw std::invalid_argument("--epsilons needs at least one value");
    return out;
}

const char* roman(int condition) {
    switch (condition) {
        case 1: return "i";
        case 2: return "ii";
        default: return "iii";
    }
}

struct RandomOptions {
    std::uint64_t seed = 0;
    std::int64_t n_min = 2, n_max = 7;
    std::int64_t q_min = 1, q_max = 5;
    std::int64_t grid = 4;
    std::int64_t max_value = 10;
    bool ratio_bound = false;
    std::string supply = "balanced";

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();
        cmd->add_option("--n-min", n_min, "Smallest job count")->capture_default_str();
        cmd->add_option("--n-max", n_max, "Largest job count")->capture_default_str();
        cmd->add_option("--q-min", q_min, "Smallest supply count")->capture_default_str();
        cmd->add_option("--q-max", q_max, "Largest supply count")->capture_default_str();
        cmd->add_option("--grid", grid, "Values are multiples of 1/grid")->capture_default_str();
        cmd->add_option("--max-value", max_value, "Upper bound on p and a")->capture_default_str();
        cmd->add_flag("--ratio-bound", ratio_bound, "Force a_j <= p_j");
        cmd->add_option("--supply", supply, "balanced or surplus")
            ->check(CLI::IsMember({"balanced", "surplus"}))
            ->capture_default_str();
    }

    GenConfig config() const {
        GenConfig cfg;
        cfg.jobs = {n_min, n_max};
        cfg.supplies = {q_min, q_max};
        cfg.grid = grid;
        cfg.max_value = max_value;
        cfg.enforce_ratio_bound = ratio_bound;
        cfg.supply_mode = supply == "surplus" ? SupplyMode::Surplus : SupplyMode::Balanced;
        cfg.seed = seed;
        return cfg;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Single-machine scheduling with a non-renewable resource (w = a)", "nrssp"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    OracleOptions oracle;

    auto* solve = app.add_subcommand("solve", "Approximate schedule (greedy order + list scheduling)");
    std::string order_source = "auto";
    solve->add_option("--input", input, "Instance JSON")->required();
    solve->add_option("--order", order_source, "'auto' or a JSON order file")->capture_default_str();
    solve->add_option("--output", output, "Schedule JSON (default: stdout)");

    auto* exact = app.add_subcommand("exact", "Exact optimum by enumerating all orders");
    exact->add_option("--input", input, "Instance JSON")->required();
    exact->add_option("--output", output, "Schedule JSON (default: stdout)");

    auto* ratio = app.add_subcommand("ratio", "Approximate objective over exact optimum");
    ratio->add_option("--input", input, "Instance JSON")->required();

    for (auto* cmd : {exact, ratio}) {
        cmd->add_option("--max-jobs", oracle.max_jobs, "Exact solver job cap")->capture_default_str();
        cmd->add_option("--jobs", oracle.workers, "Worker threads")->capture_default_str();
    }

    auto* verify = app.add_subcommand("verify", "Check a schedule against an instance");
    std::string schedule_path;
    bool order_class = false;
    verify->add_option("--input", input, "Instance JSON")->required();
    verify->add_option("--schedule", schedule_path, "Schedule JSON")->required();
    verify->add_flag("--order-class", order_class, "Also test the schedule's order for O(a,p)");

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->require_subcommand(1);
    auto* gen_tight_cmd = gen->add_subcommand("tight", "Three-job family with ratio -> 3");
    std::string epsilon;
    gen_tight_cmd->add_option("--epsilon", epsilon, "e in (0, 1/10), e.g. 1/20")->required();
    gen_tight_cmd->add_option("--output", output, "Instance JSON (default: stdout)");
    auto* gen_random_cmd = gen->add_subcommand("random", "Seeded random instance");
    RandomOptions random_options;
    random_options.attach(gen_random_cmd);
    gen_random_cmd->add_option("--output", output, "Instance JSON (default: stdout)");

    auto* bench = app.add_subcommand("bench", "Approximation-ratio sweep");
    std::string family;
    std::string epsilons = "1/20,1/100,1/10000";
    std::size_t count = 100;
    std::string format = "csv";
    SweepOptions sweep;
    RandomOptions bench_random;
    bench->add_option("--family", family, "tight or random")
        ->required()
        ->check(CLI::IsMember({"tight", "random"}));
    bench->add_option("--epsilons", epsilons, "Comma-separated e values (tight)")
        ->capture_default_str();
    bench->add_option("--count", count, "Instances (random)")->capture_default_str();
    bench_random.attach(bench);
    bench->add_option("--out", output, "Report path (default: stdout)");
    bench->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    bench->add_option("--jobs", sweep.workers, "Instances evaluated concurrently")
        ->capture_default_str();
    bench->add_option("--max-jobs", sweep.oracle.max_jobs, "Exact solver job cap")
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*solve) {
            const Instance inst = load_instance(input);
            const Permutation order = order_source == "auto"
                                          ? order_jobs(inst)
                                          : io::parse_order(io::read_file(order_source));
            const Schedule sched = list_schedule(inst, order);
            emit(output, io::format_schedule(io::make_schedule_document(inst, order, sched)), out);
        } else if (*exact) {
            const Instance inst = load_instance(input);
            const Solution best = exact_solve(inst, oracle);
            emit(output,
                 io::format_schedule(io::make_schedule_document(inst, best.order, best.schedule)),
                 out);
        } else if (*ratio) {
            const Rational value = approximation_ratio(load_instance(input), oracle);
            out << value.to_string() << '\n';
            out << "decimal rendering: " << value.to_decimal(12) << '\n';
        } else if (*verify) {
            const Instance inst = load_instance(input);
            const io::ScheduleDocument doc = io::parse_schedule(io::read_file(schedule_path));
            const FeasibilityReport report = check_feasibility(inst, doc.schedule);
            out << "feasible: " << (report.feasible ? "true" : "false") << '\n';
            for (const Violation& v : report.violations) out << "  " << v.describe() << '\n';
            const Rational value = objective(inst, doc.schedule);
            out << "objective: " << value.to_string() << '\n';
            if (doc.objective && *doc.objective != value) {
                out << "  file states objective " << doc.objective->to_string() << '\n';
            }
            if (order_class) {
                if (!doc.order) {
                    err << "error: --order-class needs an \"order\" entry in the schedule file\n";
                    return kUsageError;
                }
                const OrderClassVerdict verdict = verify_order_class(inst, *doc.order);
                out << "in O(a,p): ";
                if (verdict.member) {
                    out << "true\n";
                } else {
                    out << "false (condition " << roman(verdict.violation->condition) << ")\n"
                        << "  " << verdict.violation->describe() << '\n';
                }
            }
        } else if (*gen_tight_cmd) {
            emit(output, io::format_instance(gen_tight(Rational::parse(epsilon))), out);
        } else if (*gen_random_cmd) {
            emit(output, io::format_instance(gen_random(random_options.config())), out);
        } else if (*bench) {
            const BenchReport report =
                family == "tight" ? run_tight_sweep(parse_epsilons(epsilons), sweep)
                                  : run_random_sweep(bench_random.config(), count, sweep);
            emit(output,
                 format == "json" ? io::format_bench_json(report) : io::format_bench_csv(report),
                 out);
        }
    } catch (const InfeasibleInstance& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const OracleCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kOracleCap;
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kSuccess;
}

}  // namespace nrssp::cli
