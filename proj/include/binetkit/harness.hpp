#pragma once

// Identity registry, parameter sweeps and verification reports.

#include "binetkit/number.hpp"
#include "binetkit/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace binetkit {

enum class Mode { exact, series };

std::string to_string(Mode m);

struct ParamSpec {
    std::string name;
    bool integer = true;
    std::optional<Rational> min;
    std::optional<Rational> max;
    /// Used when a point leaves the parameter out.
    std::optional<Rational> fallback;
    std::string help;
};

using ParamMap = std::map<std::string, Rational>;

struct GridAxis {
    std::string name;
    std::vector<Rational> values;
};

/// Cartesian product of its axes.
using GridBlock = std::vector<GridAxis>;
/// Union of blocks.
using Grid = std::vector<GridBlock>;

GridAxis axis(std::string name, long lo, long hi);
GridAxis axis(std::string name, std::vector<Rational> values);

struct HarnessSettings {
    Rational tol = Rational(1, pow(Integer(10), 30UL));
    long prec = default_precision;
    long max_prec = 4096;
    long max_terms = 1000000;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct VerificationRecord {
    std::string id;
    std::string variant = "default";
    std::vector<std::pair<std::string, Rational>> params;
    Status status = Status::inconclusive;
    std::string lhs;
    std::string lhs_rad = "0";
    std::string rhs;
    std::string rhs_rad = "0";
    std::string gap;
    Rational tol = 0;
    long prec = 0;
    long terms_used = 0;
    bool expect_refuted = false;
    std::string anchor;
    std::string note;
    double wall_time = 0;

    /// Verified, or refuted when refutation is expected.
    bool as_expected() const;
};

struct IdentityDescriptor {
    std::string id;
    Mode mode = Mode::exact;
    std::vector<ParamSpec> schema;
    std::string anchor;
    std::vector<std::string> variants{"default"};
    Grid grid;
    /// Cross-parameter constraints; throws std::invalid_argument.
    std::function<void(const ParamMap&)> check;
    std::function<bool(const ParamMap&, const std::string& variant)> expect_refuted;
    /// Fills status, sides, gap, prec, terms_used and note.
    std::function<VerificationRecord(const ParamMap&, const std::string& variant, const HarnessSettings&)> run;
};

const std::vector<IdentityDescriptor>& registry();

/// A printed closed-form constant and the series it claims to evaluate:
/// scale * (family sum at params) == value.
struct PrintedConstant {
    std::string id;
    std::string family;
    SeriesParams params;
    Rational scale = 1;
    std::string formula;
    std::function<Ball(long)> value;
    bool expect_refuted = false;
};

/// Registered as series identities under their own ids.
const std::vector<PrintedConstant>& printed_constants();

/// Throws std::invalid_argument for an unknown id.
const IdentityDescriptor& find_identity(std::string_view id);

/// Fills defaults and checks names, integrality, bounds and cross constraints.
/// Throws std::invalid_argument naming the offending parameter.
ParamMap normalize_params(const IdentityDescriptor& d, const ParamMap& given);

/// Every point of a grid, normalized, deduplicated, in schema order.
std::vector<ParamMap> expand_grid(const IdentityDescriptor& d, const Grid& grid);

VerificationRecord verify_one(const IdentityDescriptor& d, const ParamMap& params, const std::string& variant,
                              const HarnessSettings& settings);

struct SweepJob {
    std::string id;
    std::string variant = "default";
    /// Empty means the descriptor's default grid.
    Grid grid;
};

/// One record per (job, point), sorted by id, variant, then parameters
/// numerically in schema order. Cells run on a thread pool.
std::vector<VerificationRecord> sweep(const std::vector<SweepJob>& jobs, const HarnessSettings& settings);

/// Every registered id over its default grid, default variant.
std::vector<SweepJob> default_jobs();

enum class ReportFormat { text, json, csv };

/// Throws std::invalid_argument for an unknown name.
ReportFormat parse_format(std::string_view name);

/// wall_time is written only when include_timing is set, so reports of the
/// same run are byte-identical.
std::string report(const std::vector<VerificationRecord>& records, ReportFormat format, bool include_timing = false);

std::string params_string(const std::vector<std::pair<std::string, Rational>>& params);

}  // namespace binetkit
