#include "binetkit/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <mpfr.h>

namespace binetkit {

std::string to_string(Mode m) { return m == Mode::exact ? "exact" : "series"; }

bool VerificationRecord::as_expected() const
{
    if (expect_refuted) {
        return status == Status::refuted;
    }
    return status == Status::verified_exact || status == Status::verified_numeric;
}

GridAxis axis(std::string name, long lo, long hi)
{
    GridAxis a{std::move(name), {}};
    for (long v = lo; v <= hi; ++v) {
        a.values.emplace_back(v);
    }
    return a;
}

GridAxis axis(std::string name, std::vector<Rational> values) { return GridAxis{std::move(name), std::move(values)}; }

const IdentityDescriptor& find_identity(std::string_view id)
{
    for (const auto& d : registry()) {
        if (d.id == id) {
            return d;
        }
    }
    throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

ParamMap normalize_params(const IdentityDescriptor& d, const ParamMap& given)
{
    for (const auto& [name, value] : given) {
        const bool known = std::any_of(d.schema.begin(), d.schema.end(), [&](const ParamSpec& s) { return s.name == name; });
        if (!known) {
            throw std::invalid_argument(d.id + ": unknown parameter '" + name + "'");
        }
    }
    ParamMap out;
    for (const auto& spec : d.schema) {
        Rational v;
        if (auto it = given.find(spec.name); it != given.end()) {
            v = it->second;
        } else if (spec.fallback) {
            v = *spec.fallback;
        } else {
            throw std::invalid_argument(d.id + ": missing parameter '" + spec.name + "'");
        }
        if (spec.integer && !is_integer(v)) {
            throw std::invalid_argument(d.id + ": parameter " + spec.name + " must be an integer, got " + to_string(v));
        }
        if ((spec.min && v < *spec.min) || (spec.max && v > *spec.max)) {
            std::string range = "[" + (spec.min ? to_string(*spec.min) : std::string("-inf")) + ", "
                                + (spec.max ? to_string(*spec.max) : std::string("inf")) + "]";
            throw std::invalid_argument(d.id + ": parameter " + spec.name + "=" + to_string(v) + " outside " + range);
        }
        out[spec.name] = v;
    }
    if (d.check) {
        d.check(out);
    }
    return out;
}

namespace {

std::vector<Rational> schema_key(const IdentityDescriptor& d, const ParamMap& p)
{
    std::vector<Rational> key;
    key.reserve(d.schema.size());
    for (const auto& spec : d.schema) {
        key.push_back(p.at(spec.name));
    }
    return key;
}

void expand_block(const GridBlock& block, std::size_t i, ParamMap& current, std::vector<ParamMap>& out)
{
    if (i == block.size()) {
        out.push_back(current);
        return;
    }
    for (const auto& v : block[i].values) {
        current[block[i].name] = v;
        expand_block(block, i + 1, current, out);
    }
    current.erase(block[i].name);
}

struct Cell {
    const IdentityDescriptor* descriptor;
    std::string variant;
    ParamMap params;
    std::vector<Rational> key;
};

bool cell_less(const Cell& a, const Cell& b)
{
    if (a.descriptor->id != b.descriptor->id) {
        return a.descriptor->id < b.descriptor->id;
    }
    if (a.variant != b.variant) {
        return a.variant < b.variant;
    }
    return a.key < b.key;
}

bool cell_same(const Cell& a, const Cell& b)
{
    return a.descriptor == b.descriptor && a.variant == b.variant && a.key == b.key;
}

}  // namespace

std::vector<ParamMap> expand_grid(const IdentityDescriptor& d, const Grid& grid)
{
    std::vector<ParamMap> raw;
    for (const auto& block : grid) {
        ParamMap current;
        expand_block(block, 0, current, raw);
    }
    std::vector<std::pair<std::vector<Rational>, ParamMap>> keyed;
    keyed.reserve(raw.size());
    for (const auto& p : raw) {
        ParamMap n = normalize_params(d, p);
        keyed.emplace_back(schema_key(d, n), std::move(n));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    std::vector<ParamMap> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) {
        out.push_back(std::move(k.second));
    }
    return out;
}

namespace {

void require_variant(const IdentityDescriptor& d, const std::string& variant)
{
    if (std::find(d.variants.begin(), d.variants.end(), variant) == d.variants.end()) {
        std::string known;
        for (const auto& v : d.variants) {
            known += (known.empty() ? "" : ", ") + v;
        }
        throw std::invalid_argument(d.id + ": unknown variant '" + variant + "' (known: " + known + ")");
    }
}

VerificationRecord run_cell(const IdentityDescriptor& d, const ParamMap& params, const std::string& variant,
                            const HarnessSettings& settings)
{
    const auto t0 = std::chrono::steady_clock::now();
    VerificationRecord rec;
    try {
        rec = d.run(params, variant, settings);
    } catch (const PrecisionError& e) {
        rec = VerificationRecord{};
        rec.status = Status::inconclusive;
        rec.note = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    rec.id = d.id;
    rec.variant = variant;
    rec.params.clear();
    for (const auto& spec : d.schema) {
        rec.params.emplace_back(spec.name, params.at(spec.name));
    }
    rec.anchor = d.anchor;
    if (d.mode == Mode::series) {
        rec.tol = settings.tol;
    }
    rec.expect_refuted = d.expect_refuted && d.expect_refuted(params, variant);
    rec.wall_time = std::chrono::duration<double>(t1 - t0).count();
    return rec;
}

}  // namespace

VerificationRecord verify_one(const IdentityDescriptor& d, const ParamMap& params, const std::string& variant,
                              const HarnessSettings& settings)
{
    require_variant(d, variant);
    const ParamMap p = normalize_params(d, params);
    return run_cell(d, p, variant, settings);
}

std::vector<SweepJob> default_jobs()
{
    std::vector<SweepJob> jobs;
    for (const auto& d : registry()) {
        jobs.push_back(SweepJob{d.id, "default", {}});
    }
    return jobs;
}

std::vector<VerificationRecord> sweep(const std::vector<SweepJob>& jobs, const HarnessSettings& settings)
{
    if (settings.tol <= 0) {
        throw std::invalid_argument("tolerance must be positive");
    }
    std::vector<Cell> cells;
    for (const auto& job : jobs) {
        const IdentityDescriptor& d = find_identity(job.id);
        require_variant(d, job.variant);
        for (auto& p : expand_grid(d, job.grid.empty() ? d.grid : job.grid)) {
            auto key = schema_key(d, p);
            cells.push_back(Cell{&d, job.variant, std::move(p), std::move(key)});
        }
    }
    std::sort(cells.begin(), cells.end(), cell_less);
    cells.erase(std::unique(cells.begin(), cells.end(), cell_same), cells.end());

    std::vector<VerificationRecord> records(cells.size());
    unsigned threads = settings.threads != 0 ? settings.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells.size(), 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) {
                break;
            }
            try {
                records[i] = run_cell(*cells[i].descriptor, cells[i].params, cells[i].variant, settings);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = cells.size();
            }
        }
        mpfr_free_cache();
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

ReportFormat parse_format(std::string_view name)
{
    if (name == "text") {
        return ReportFormat::text;
    }
    if (name == "json") {
        return ReportFormat::json;
    }
    if (name == "csv") {
        return ReportFormat::csv;
    }
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (text, json, csv)");
}

std::string params_string(const std::vector<std::pair<std::string, Rational>>& params)
{
    std::string out;
    for (const auto& [k, v] : params) {
        out += (out.empty() ? "" : " ") + k + "=" + to_string(v);
    }
    return out;
}

namespace {

std::string tol_string(const Rational& tol)
{
    if (tol == 0) {
        return "0";
    }
    if (tol.get_num() == 1) {
        Integer d = tol.get_den();
        long k = 0;
        while (d % 10 == 0) {
            d /= 10;
            ++k;
        }
        if (d == 1) {
            return "1e-" + std::to_string(k);
        }
    }
    return upper_decimal(tol, 6);
}

nlohmann::ordered_json param_json(const Rational& v)
{
    if (is_integer(v) && v.get_num().fits_slong_p()) {
        return v.get_num().get_si();
    }
    return to_string(v);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

std::string fixed_seconds(double t)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << t;
    return os.str();
}

std::string json_report(const std::vector<VerificationRecord>& records, bool timing)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json o;
        o["id"] = r.id;
        o["variant"] = r.variant;
        auto params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) {
            params[k] = param_json(v);
        }
        o["params"] = params;
        o["status"] = to_string(r.status);
        o["lhs"] = r.lhs;
        o["lhs_rad"] = r.lhs_rad;
        o["rhs"] = r.rhs;
        o["rhs_rad"] = r.rhs_rad;
        o["gap"] = r.gap;
        o["tol"] = tol_string(r.tol);
        o["prec"] = r.prec;
        o["terms_used"] = r.terms_used;
        o["expect_refuted"] = r.expect_refuted;
        o["anchor"] = r.anchor;
        o["note"] = r.note;
        if (timing) {
            o["wall_time"] = r.wall_time;
        }
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string csv_report(const std::vector<VerificationRecord>& records, bool timing)
{
    std::string out = "id,variant,params,status,lhs,lhs_rad,rhs,rhs_rad,gap,tol,prec,terms_used,expect_refuted,anchor,note";
    out += timing ? ",wall_time\n" : "\n";
    for (const auto& r : records) {
        const std::vector<std::string> fields = {r.id,
                                                 r.variant,
                                                 params_string(r.params),
                                                 to_string(r.status),
                                                 r.lhs,
                                                 r.lhs_rad,
                                                 r.rhs,
                                                 r.rhs_rad,
                                                 r.gap,
                                                 tol_string(r.tol),
                                                 std::to_string(r.prec),
                                                 std::to_string(r.terms_used),
                                                 r.expect_refuted ? "true" : "false",
                                                 r.anchor,
                                                 r.note};
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out += (i ? "," : "") + csv_field(fields[i]);
        }
        if (timing) {
            out += "," + fixed_seconds(r.wall_time);
        }
        out += "\n";
    }
    return out;
}

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

std::string text_report(const std::vector<VerificationRecord>& records, bool timing)
{
    std::size_t id_w = 2;
    std::size_t param_w = 6;
    for (const auto& r : records) {
        const std::string id = r.variant == "default" ? r.id : r.id + "[" + r.variant + "]";
        id_w = std::max(id_w, id.size());
        param_w = std::max(param_w, params_string(r.params).size());
    }
    std::string out = pad("STATUS", 17) + "  " + pad("ID", id_w) + "  " + pad("PARAMS", param_w) + "  GAP";
    out += timing ? "  TIME\n" : "\n";
    long counts[4] = {0, 0, 0, 0};
    long expected = 0;
    for (const auto& r : records) {
        ++counts[static_cast<int>(r.status)];
        if (r.expect_refuted && r.status == Status::refuted) {
            ++expected;
        }
        const std::string id = r.variant == "default" ? r.id : r.id + "[" + r.variant + "]";
        std::string line = pad(to_string(r.status), 17) + "  " + pad(id, id_w) + "  " + pad(params_string(r.params), param_w)
                           + "  " + r.gap;
        if (timing) {
            line += "  " + fixed_seconds(r.wall_time);
        }
        if (r.expect_refuted) {
            line += "  (expected refutation)";
        }
        if (!r.note.empty()) {
            line += "  # " + r.note;
        }
        out += line + "\n";
    }
    out += std::to_string(records.size()) + " records: " + std::to_string(counts[0]) + " VERIFIED_EXACT, "
           + std::to_string(counts[1]) + " VERIFIED_NUMERIC, " + std::to_string(counts[2]) + " REFUTED ("
           + std::to_string(expected) + " expected), " + std::to_string(counts[3]) + " INCONCLUSIVE\n";
    return out;
}

}  // namespace

std::string report(const std::vector<VerificationRecord>& records, ReportFormat format, bool include_timing)
{
    switch (format) {
    case ReportFormat::json:
        return json_report(records, include_timing);
    case ReportFormat::csv:
        return csv_report(records, include_timing);
    case ReportFormat::text:
        return text_report(records, include_timing);
    }
    return {};
}

}  // namespace binetkit
