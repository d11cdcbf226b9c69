#include "qzeta/report.hpp"

#include "qzeta/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <istream>
#include <regex>
#include <sstream>
#include <thread>

namespace qzeta {

using ordered_json = nlohmann::ordered_json;

Rational parse_tolerance(std::string_view text)
{
    static const std::regex sci(R"(([0-9]+(?:\.[0-9]*)?)[eE]-?([0-9]{1,4}))");
    std::cmatch m;
    Rational tol;
    if (std::regex_match(text.begin(), text.end(), m, sci)) {
        tol = Rational::parse(m[1].str()) / Rational(10).pow(std::stol(m[2].str()));
    } else {
        tol = Rational::parse(text);
    }
    if (tol.sign() <= 0) {
        throw DomainError("tolerance must be positive, got '" + std::string(text) + "'");
    }
    return tol;
}

Record to_record(const VerificationReport& report)
{
    return Record{identity_name(report.identity),
                  report.s,
                  report.t,
                  report.q,
                  report.status,
                  report.lhs_enclosure,
                  report.rhs_enclosure,
                  max(report.lhs_enclosure.width(), report.rhs_enclosure.width()),
                  report.max_truncation};
}

bool record_less(const Record& a, const Record& b)
{
    if (a.identity != b.identity) {
        return a.identity < b.identity;
    }
    if (a.s != b.s) {
        return a.s < b.s;
    }
    if (a.t != b.t) {
        return a.t < b.t;
    }
    if (a.q.has_value() != b.q.has_value()) {
        return !a.q.has_value();
    }
    return a.q && *a.q < *b.q;
}

void SweepConfig::validate() const
{
    if (identities.empty()) {
        throw DomainError("empty identity set: nothing to verify");
    }
    for (const auto& r : {s_range, t_range}) {
        if (r.lo < 2 || r.hi > 12 || r.lo > r.hi) {
            throw DomainError("s and t ranges must lie within [2, 12]");
        }
    }
    const bool needs_q = std::any_of(identities.begin(), identities.end(), is_q_identity);
    if (needs_q && q_values.empty()) {
        throw DomainError("q identities need at least one q value");
    }
    for (const auto& q : q_values) {
        QParam check(q);
    }
    if (tol.sign() <= 0) {
        throw DomainError("tolerance must be positive");
    }
    if (max_terms < 1) {
        throw DomainError("max_terms must be >= 1");
    }
    if (jobs == 0) {
        throw DomainError("jobs must be >= 1");
    }
}

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value)
{
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            items.push_back(item);
        }
    }
    return items;
}

int parse_int(const std::string& text, const std::string& what)
{
    if (text.empty() || text.size() > 9 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw DomainError("malformed " + what + ": '" + text + "'");
    }
    return std::stoi(text);
}

} // namespace

IntRange parse_range(std::string_view text)
{
    const std::string s = trim(text);
    if (const auto dots = s.find(".."); dots != std::string::npos) {
        return {parse_int(s.substr(0, dots), "range"), parse_int(s.substr(dots + 2), "range")};
    }
    const int v = parse_int(s, "range");
    return {v, v};
}

void apply_setting(SweepConfig& config, const std::string& key, const std::string& value)
{
    if (key == "s") {
        config.s_range = parse_range(value);
    } else if (key == "t") {
        config.t_range = parse_range(value);
    } else if (key == "q") {
        config.q_values.clear();
        for (const auto& item : split_list(value)) {
            config.q_values.push_back(Rational::parse(item));
        }
    } else if (key == "tol") {
        config.tol = parse_tolerance(value);
    } else if (key == "identities") {
        config.identities.clear();
        for (const auto& item : split_list(value)) {
            config.identities.push_back(parse_identity_name(item));
        }
    } else if (key == "output") {
        config.output_path = value;
    } else if (key == "format") {
        if (value == "json") {
            config.format = ReportFormat::Json;
        } else if (value == "csv") {
            config.format = ReportFormat::Csv;
        } else {
            throw DomainError("format must be json or csv, got '" + value + "'");
        }
    } else if (key == "jobs") {
        const auto jobs = parse_int(value, "jobs");
        if (jobs < 1 || jobs > 256) {
            throw DomainError("jobs must lie in [1, 256], got " + value);
        }
        config.jobs = static_cast<unsigned>(jobs);
    } else if (key == "max_terms") {
        config.max_terms = parse_int(value, "max_terms");
    } else {
        throw DomainError("unknown config key '" + key + "'");
    }
}

SweepConfig parse_sweep_config(std::istream& in, SweepConfig base)
{
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
        }
        apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return base;
}

std::vector<Record> run_sweep(const SweepConfig& config)
{
    config.validate();
    struct Job {
        IdentityKind kind;
        int s;
        int t;
        std::optional<Rational> q;
    };
    std::vector<Job> jobs;
    for (auto kind : config.identities) {
        for (int s = config.s_range.lo; s <= config.s_range.hi; ++s) {
            for (int t = config.t_range.lo; t <= config.t_range.hi; ++t) {
                if (!is_q_identity(kind)) {
                    jobs.push_back({kind, s, t, std::nullopt});
                    continue;
                }
                for (const auto& q : config.q_values) {
                    jobs.push_back({kind, s, t, q});
                }
            }
        }
    }

    EvalOptions opts;
    opts.max_terms = config.max_terms;
    std::vector<Record> records(jobs.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const Job& job = jobs[i];
            std::optional<QParam> q;
            if (job.q) {
                q.emplace(*job.q);
            }
            VerificationReport report;
            switch (job.kind) {
            case IdentityKind::EulerClassical:
                report = evaluate_identity(euler_terms(job.s, job.t), std::nullopt, config.tol, opts);
                break;
            case IdentityKind::QDecomposition:
                report = evaluate_identity(q_euler_terms(job.s, job.t), q, config.tol, opts);
                break;
            case IdentityKind::QStuffle:
                report = evaluate_identity(stuffle_terms(job.s, job.t), q, config.tol, opts);
                break;
            case IdentityKind::CrossCheck:
                report = cross_check(job.s, job.t, *q, config.tol, opts);
                break;
            }
            records[i] = to_record(report);
        }
    };
    const unsigned workers = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(jobs.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    std::sort(records.begin(), records.end(), record_less);
    return records;
}

namespace {

ordered_json record_json(const Record& r)
{
    ordered_json j;
    j["identity"] = r.identity;
    j["s"] = r.s;
    j["t"] = r.t;
    j["q"] = r.q ? ordered_json(r.q->str()) : ordered_json(nullptr);
    j["status"] = status_name(r.status);
    j["lhs_lo"] = r.lhs.lo().str();
    j["lhs_hi"] = r.lhs.hi().str();
    j["rhs_lo"] = r.rhs.lo().str();
    j["rhs_hi"] = r.rhs.hi().str();
    j["width"] = r.width.str();
    j["max_truncation"] = r.max_truncation;
    return j;
}

} // namespace

std::string sweep_config_json(const SweepConfig& config)
{
    ordered_json j;
    j["s"] = {config.s_range.lo, config.s_range.hi};
    j["t"] = {config.t_range.lo, config.t_range.hi};
    j["q"] = ordered_json::array();
    for (const auto& q : config.q_values) {
        j["q"].push_back(q.str());
    }
    j["tol"] = config.tol.str();
    j["identities"] = ordered_json::array();
    for (auto k : config.identities) {
        j["identities"].push_back(identity_name(k));
    }
    j["format"] = config.format == ReportFormat::Json ? "json" : "csv";
    j["max_terms"] = config.max_terms;
    return j.dump();
}

std::string render_json(const std::string& config_json, const std::vector<Record>& records)
{
    ordered_json top;
    top["tool_version"] = tool_version;
    top["config"] = ordered_json::parse(config_json);
    top["records"] = ordered_json::array();
    for (const auto& r : records) {
        top["records"].push_back(record_json(r));
    }
    return top.dump(2) + "\n";
}

std::string render_csv(const std::vector<Record>& records)
{
    std::ostringstream os;
    os << "identity,s,t,q,status,lhs_lo,lhs_hi,rhs_lo,rhs_hi,width,max_truncation\n";
    for (const auto& r : records) {
        os << r.identity << ',' << r.s << ',' << r.t << ',' << (r.q ? r.q->str() : "") << ','
           << status_name(r.status) << ',' << r.lhs.lo() << ',' << r.lhs.hi() << ',' << r.rhs.lo() << ','
           << r.rhs.hi() << ',' << r.width << ',' << r.max_truncation << '\n';
    }
    return os.str();
}

int exit_code_for(const std::vector<Status>& statuses)
{
    if (std::find(statuses.begin(), statuses.end(), Status::Violated) != statuses.end()) {
        return 1;
    }
    if (std::find(statuses.begin(), statuses.end(), Status::Inconclusive) != statuses.end()) {
        return 3;
    }
    return 0;
}

} // namespace qzeta
