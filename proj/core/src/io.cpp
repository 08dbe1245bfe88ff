#include "nrssp/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nrssp::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    const std::set<std::string> known(allowed.begin(), allowed.end());
    for (const auto& item : obj.items()) {
        if (known.count(item.key()) == 0) fail(where, "unknown key \"" + item.key() + "\"");
    }
}

const json& require(const json& obj, const std::string& where, const char* key) {
    if (!obj.is_object()) fail(where, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

const json& require_array(const json& obj, const std::string& where, const char* key) {
    const json& value = require(obj, where, key);
    if (!value.is_array()) fail(where + "/" + key, "expected an array");
    return value;
}

Rational to_rational(const json& value, const std::string& where) {
    if (value.is_string()) {
        try {
            return Rational::parse(value.get<std::string>());
        } catch (const std::exception& e) {
            fail(where, e.what());
        }
    }
    if (value.is_number_integer()) {
        return value.is_number_unsigned() ? Rational(mpq_class(value.dump(), 10))
                                          : Rational(value.get<std::int64_t>());
    }
    fail(where, "expected a rational string such as \"3/4\" (floating-point numbers are not "
                "accepted)");
}

Permutation to_order(const json& value, const std::string& where) {
    if (!value.is_array()) fail(where, "expected an array of job indices");
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < value.size(); ++k) {
        if (!value[k].is_number_integer() || value[k].get<std::int64_t>() < 1) {
            fail(where + "/" + std::to_string(k), "expected a 1-based job index");
        }
        order.push_back(value[k].get<std::size_t>());
    }
    try {
        return Permutation::from_one_based(order);
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string spaced(const Permutation& order) {
    std::string out;
    for (std::size_t job : order.one_based()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(job);
    }
    return out;
}

json optional_rational(const std::optional<Rational>& value) {
    return value ? json(value->to_string()) : json(nullptr);
}

json optional_decimal(const std::optional<Rational>& value) {
    return value ? json(value->to_decimal(12)) : json(nullptr);
}

}  // namespace

Instance parse_instance(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) fail("", "expected an object with \"jobs\" and \"supplies\"");
    reject_unknown_keys(doc, "", {"jobs", "supplies"});

    std::vector<Job> jobs;
    const json& jobs_json = require_array(doc, "", "jobs");
    for (std::size_t j = 0; j < jobs_json.size(); ++j) {
        const std::string where = "/jobs/" + std::to_string(j);
        const json& item = jobs_json[j];
        if (!item.is_object()) fail(where, "expected an object with \"p\" and \"a\"");
        reject_unknown_keys(item, where, {"p", "a"});
        Rational p = to_rational(require(item, where, "p"), where + "/p");
        Rational a = to_rational(require(item, where, "a"), where + "/a");
        jobs.push_back({std::move(p), std::move(a)});
    }
    std::vector<Supply> supplies;
    const json& supplies_json = require_array(doc, "", "supplies");
    for (std::size_t i = 0; i < supplies_json.size(); ++i) {
        const std::string where = "/supplies/" + std::to_string(i);
        const json& item = supplies_json[i];
        if (!item.is_object()) fail(where, "expected an object with \"u\" and \"b\"");
        reject_unknown_keys(item, where, {"u", "b"});
        Rational u = to_rational(require(item, where, "u"), where + "/u");
        Rational b = to_rational(require(item, where, "b"), where + "/b");
        supplies.push_back({std::move(u), std::move(b)});
    }
    try {
        return Instance(std::move(jobs), std::move(supplies));
    } catch (const InvalidInstance& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

std::string format_instance(const Instance& inst) {
    json jobs = json::array();
    for (const Job& job : inst.jobs()) {
        jobs.push_back({{"p", job.processing.to_string()}, {"a", job.requirement.to_string()}});
    }
    json supplies = json::array();
    for (const Supply& s : inst.supplies()) {
        supplies.push_back({{"u", s.time.to_string()}, {"b", s.amount.to_string()}});
    }
    json doc;
    doc["jobs"] = std::move(jobs);
    doc["supplies"] = std::move(supplies);
    return doc.dump(2) + "\n";
}

ScheduleDocument parse_schedule(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) fail("", "expected an object with \"completion\"");
    reject_unknown_keys(doc, "", {"order", "completion", "objective"});

    ScheduleDocument out;
    const json& completion = require_array(doc, "", "completion");
    for (std::size_t j = 0; j < completion.size(); ++j) {
        out.schedule.completion.push_back(
            to_rational(completion[j], "/completion/" + std::to_string(j)));
    }
    if (const auto it = doc.find("order"); it != doc.end()) {
        out.order = to_order(*it, "/order");
        if (out.order->size() != out.schedule.size()) {
            fail("/order", "has " + std::to_string(out.order->size()) + " entries but " +
                               "\"completion\" has " + std::to_string(out.schedule.size()));
        }
    }
    if (const auto it = doc.find("objective"); it != doc.end()) {
        out.objective = to_rational(*it, "/objective");
    }
    return out;
}

std::string format_schedule(const ScheduleDocument& doc) {
    json out = json::object();
    if (doc.order) out["order"] = doc.order->one_based();
    json completion = json::array();
    for (const Rational& c : doc.schedule.completion) completion.push_back(c.to_string());
    out["completion"] = std::move(completion);
    if (doc.objective) out["objective"] = doc.objective->to_string();
    return out.dump(2) + "\n";
}

ScheduleDocument make_schedule_document(const Instance& inst, const Permutation& order,
                                        const Schedule& sched) {
    return {order, sched, objective(inst, sched)};
}

Permutation parse_order(std::string_view text) {
    const json doc = parse_json(text);
    if (doc.is_array()) return to_order(doc, "");
    if (doc.is_object()) return to_order(require(doc, "", "order"), "/order");
    fail("", "expected an array of job indices or an object with \"order\"");
}

std::string format_bench_csv(const BenchReport& report) {
    std::ostringstream os;
    os << kBenchCsvHeader << '\n';
    for (const BenchRecord& rec : report.records) {
        os << csv_quote(rec.instance_id) << ',' << rec.n << ',' << rec.q << ',';
        if (rec.skipped) {
            os << ",,," << csv_quote("skipped: " + *rec.skipped) << ",,\n";
            continue;
        }
        os << rec.f_approx->to_string() << ',' << rec.f_exact->to_string() << ','
           << rec.ratio->to_string() << ',' << rec.ratio->to_decimal(12) << ','
           << spaced(*rec.order_approx) << ',' << spaced(*rec.order_exact) << '\n';
    }
    return os.str();
}

std::string format_bench_json(const BenchReport& report) {
    json config = json::object();
    for (const auto& [key, value] : report.config) config[key] = value;

    json records = json::array();
    for (const BenchRecord& rec : report.records) {
        json r;
        r["instance_id"] = rec.instance_id;
        r["n"] = rec.n;
        r["q"] = rec.q;
        r["skipped"] = rec.skipped ? json(*rec.skipped) : json(nullptr);
        r["f_approx"] = optional_rational(rec.f_approx);
        r["f_exact"] = optional_rational(rec.f_exact);
        r["ratio_exact"] = optional_rational(rec.ratio);
        r["ratio_decimal"] = optional_decimal(rec.ratio);
        r["order_approx"] = rec.order_approx ? json(rec.order_approx->one_based()) : json(nullptr);
        r["order_exact"] = rec.order_exact ? json(rec.order_exact->one_based()) : json(nullptr);
        r["wall_time_approx_s"] = rec.wall_time_approx;
        r["wall_time_exact_s"] = rec.wall_time_exact;
        records.push_back(std::move(r));
    }

    json doc;
    doc["family"] = report.family;
    doc["config"] = std::move(config);
    doc["max_ratio"] = optional_rational(report.max_ratio);
    doc["max_ratio_decimal"] = optional_decimal(report.max_ratio);
    doc["argmax_instance"] = report.argmax_instance ? json(*report.argmax_instance) : json(nullptr);
    doc["mean_ratio"] = optional_rational(report.mean_ratio);
    doc["mean_ratio_decimal"] = optional_decimal(report.mean_ratio);
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace nrssp::io
