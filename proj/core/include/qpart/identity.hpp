#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <qpart/series.hpp>

namespace qpart
{

/// Integer parameter assignment, ordered by name so reports sort and
/// serialize deterministically.
using ParamMap = std::map<std::string, long>;

struct IdentityCheck {
    std::string id;
    ParamMap params;
    /// Ignored by exact-polynomial checks; nullopt means the registered default.
    std::optional<Exponent> truncation;
};

struct IdentityReport {
    /// Truncation holds the value actually used (nullopt for exact checks).
    IdentityCheck check;
    CompareMode mode = CompareMode::truncated_series;
    bool gating = true;
    bool pass = false;
    /// Monomial specialization of free parameters, e.g. "a = q^4"; empty if none.
    std::string specialization;
    /// verified range and first mismatch.
    SeriesComparison comparison;
    /// Set when building a side threw; pass is then false.
    std::optional<std::string> error;
    double elapsed_ms = 0;
};

using IdentitySides = std::pair<QSeries, QSeries>;

struct IdentityDefinition {
    std::string id;
    /// Human-readable statement of lhs = rhs.
    std::string statement;
    CompareMode mode = CompareMode::truncated_series;
    Exponent default_truncation = 30;
    /// Exploratory checks are reported but never fail the suite.
    bool gating = true;
    std::vector<ParamMap> grid;
    /// Extra domain restriction beyond "same parameter names as the grid".
    std::function<bool(const ParamMap &)> in_domain;
    std::function<IdentitySides(const ParamMap &, Exponent truncation)> build;
    std::function<std::string(const ParamMap &)> specialization = {};
};

const std::vector<IdentityDefinition> &identity_registry();

/// nullptr when no identity has this id.
const IdentityDefinition *find_identity(std::string_view id);

/// Builds both sides and compares them. Throws std::invalid_argument for an
/// unknown id and std::domain_error for parameters outside the registered
/// domain; failures while building a side are reported, not thrown.
IdentityReport run(const IdentityCheck &check);

/// Runs every (id, grid point) whose id matches the glob `filter` (empty
/// matches everything) on up to `jobs` threads. A truncation override
/// replaces the default of every truncated-series check. Reports are sorted
/// by id, then params.
std::vector<IdentityReport> run_suite(std::string_view filter, std::optional<Exponent> truncation = std::nullopt,
                                      unsigned jobs = 1);

/// Shell-style glob with '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text);

/// True when no gating report failed.
bool all_gating_pass(const std::vector<IdentityReport> &reports);

/// JSON array of report objects; schema in docs/report-schema.md.
/// `with_timing = false` drops elapsed_ms for byte-stable output.
std::string reports_to_json(const std::vector<IdentityReport> &reports, bool with_timing = true, int indent = 2);

std::string to_string(CompareMode mode);

} // namespace qpart
