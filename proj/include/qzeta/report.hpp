#pragma once

#include "qzeta/identities.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qzeta {

inline constexpr const char* tool_version = "0.1.0";

/// Tolerance literal: "1eNN" or "1e-NN" (both mean 10^-NN, the mantissa may be
/// any decimal) or any literal accepted by Rational::parse. Must be positive.
Rational parse_tolerance(std::string_view text);

/// One row of a verification report.
struct Record {
    std::string identity;
    int s = 0;
    int t = 0;
    std::optional<Rational> q;
    Status status = Status::Inconclusive;
    Enclosure lhs;
    Enclosure rhs;
    Rational width; // max of the two enclosure widths
    std::int64_t max_truncation = 0;
};

Record to_record(const VerificationReport& report);
/// Orders by (identity, s, t, q) with a missing q first.
bool record_less(const Record& a, const Record& b);

struct IntRange {
    int lo = 2;
    int hi = 2;
};

enum class ReportFormat { Json, Csv };

struct SweepConfig {
    IntRange s_range{2, 3};
    IntRange t_range{2, 3};
    std::vector<Rational> q_values{Rational(1, 2)};
    Rational tol{Rational(1, 1000000)};
    std::vector<IdentityKind> identities{IdentityKind::QDecomposition, IdentityKind::QStuffle};
    std::string output_path = "-"; // "-" is standard output
    ReportFormat format = ReportFormat::Json;
    unsigned jobs = 1;
    std::int64_t max_terms = 1'000'000;

    /// Throws DomainError on an empty identity set, ranges outside [2, 12],
    /// q outside (0, 1) or a nonpositive tolerance.
    void validate() const;
};

/// "2..5" or "3"
IntRange parse_range(std::string_view text);
/// Applies one key=value setting (s, t, q, tol, identities, output, format, jobs, max_terms).
void apply_setting(SweepConfig& config, const std::string& key, const std::string& value);
/// Line-oriented key=value file; '#' starts a comment.
SweepConfig parse_sweep_config(std::istream& in, SweepConfig base = {});

/// Evaluates every (identity, s, t, q) grid point on `jobs` workers and
/// returns the records sorted by record_less. The classical identity ignores q.
std::vector<Record> run_sweep(const SweepConfig& config);

/// {tool_version, config, records} as pretty JSON.
std::string render_json(const std::string& config_json, const std::vector<Record>& records);
std::string sweep_config_json(const SweepConfig& config);
/// Header row plus one line per record; field names match the JSON records.
std::string render_csv(const std::vector<Record>& records);

/// Exit code for a set of statuses: 1 if any violated, else 3 if any
/// inconclusive, else 0.
int exit_code_for(const std::vector<Status>& statuses);

} // namespace qzeta
