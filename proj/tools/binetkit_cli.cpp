// binetkit command-line front end.

#include "binetkit/harness.hpp"
#include "binetkit/oeis.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace binetkit;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "text";
    std::string output;
    long prec = 0;
    std::string tol = "1e-30";
    long max_terms = 1000000;
    unsigned threads = 0;
    bool timing = false;
    bool expect_refuted = false;
    std::string variant = "default";
};

void add_common(CLI::App* app, Common& c, bool verification)
{
    app->add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app->add_option("-o,--output", c.output, "write the report here instead of stdout");
    app->add_option("--prec", c.prec, "working precision in bits (default 256, or $BINETKIT_PRECISION)");
    if (verification) {
        app->add_option("--tol", c.tol, "comparison tolerance, e.g. 1e-30 or 1/1000");
        app->add_option("--max-terms", c.max_terms, "cap on summed series terms");
        app->add_option("--threads", c.threads, "worker threads for sweeps (0 = all cores)");
        app->add_flag("--timing", c.timing, "include wall_time in reports");
        app->add_flag("--expect-refuted", c.expect_refuted, "treat REFUTED as the expected outcome");
        app->add_option("--variant", c.variant, "identity variant (default, paper-printed)");
    }
}

long resolve_precision(long requested)
{
    long prec = requested;
    if (prec == 0) {
        prec = default_precision;
        if (const char* env = std::getenv("BINETKIT_PRECISION"); env != nullptr && *env != '\0') {
            try {
                prec = std::stol(env);
            } catch (const std::exception&) {
                throw UsageError(std::string("BINETKIT_PRECISION is not an integer: ") + env);
            }
        }
    }
    if (prec < min_precision || prec > max_precision) {
        throw UsageError("precision must lie in [" + std::to_string(min_precision) + ", " + std::to_string(max_precision)
                         + "], got " + std::to_string(prec));
    }
    return prec;
}

HarnessSettings settings_from(const Common& c)
{
    HarnessSettings s;
    s.prec = resolve_precision(c.prec);
    s.max_prec = std::max(4096L, s.prec);
    try {
        s.tol = parse_rational(c.tol);
    } catch (const std::exception& e) {
        throw UsageError("bad --tol: " + std::string(e.what()));
    }
    if (s.tol <= 0) {
        throw UsageError("--tol must be positive");
    }
    if (c.max_terms < 1) {
        throw UsageError("--max-terms must be positive");
    }
    s.max_terms = c.max_terms;
    s.threads = c.threads;
    return s;
}

void emit(const Common& c, const std::string& text)
{
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + c.output);
    }
    out << text;
}

std::pair<std::string, std::string> split_assignment(const std::string& text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
        throw UsageError("expected k=v, got '" + text + "'");
    }
    return {text.substr(0, eq), text.substr(eq + 1)};
}

Rational parse_value(const std::string& key, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw UsageError("bad value for " + key + ": '" + text + "'");
    }
}

// k=a..b (integers), k=v1|v2|..., k=v
GridAxis parse_axis(const std::string& text)
{
    const auto [key, rhs] = split_assignment(text);
    if (const auto dots = rhs.find(".."); dots != std::string::npos) {
        const Rational lo = parse_value(key, rhs.substr(0, dots));
        const Rational hi = parse_value(key, rhs.substr(dots + 2));
        if (!is_integer(lo) || !is_integer(hi) || lo > hi) {
            throw UsageError("range " + text + " needs integer bounds lo <= hi");
        }
        if (hi - lo > 100000) {
            throw UsageError("range " + text + " is too large");
        }
        return axis(key, lo.get_num().get_si(), hi.get_num().get_si());
    }
    std::vector<Rational> values;
    std::size_t start = 0;
    for (;;) {
        const auto bar = rhs.find('|', start);
        values.push_back(parse_value(key, rhs.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
        if (bar == std::string::npos) {
            break;
        }
        start = bar + 1;
    }
    return axis(key, std::move(values));
}

int finish(const Common& c, std::vector<VerificationRecord> records)
{
    if (c.expect_refuted) {
        for (auto& r : records) {
            r.expect_refuted = true;
        }
    }
    emit(c, report(records, parse_format(c.format), c.timing));
    const bool ok = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.as_expected(); });
    return ok ? 0 : 1;
}

std::string list_text()
{
    std::string out;
    for (const auto& d : registry()) {
        std::string params;
        for (const auto& s : d.schema) {
            params += (params.empty() ? "" : " ") + s.name;
        }
        out += d.id + "  [" + to_string(d.mode) + "]";
        if (!params.empty()) {
            out += "  (" + params + ")";
        }
        if (d.variants.size() > 1) {
            out += "  variants:";
            for (const auto& v : d.variants) {
                out += " " + v;
            }
        }
        out += "\n    " + d.anchor + "\n";
    }
    return out;
}

std::string list_json()
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& d : registry()) {
        nlohmann::ordered_json o;
        o["id"] = d.id;
        o["mode"] = to_string(d.mode);
        auto schema = nlohmann::ordered_json::array();
        for (const auto& s : d.schema) {
            nlohmann::ordered_json p;
            p["name"] = s.name;
            p["integer"] = s.integer;
            p["min"] = s.min ? nlohmann::ordered_json(to_string(*s.min)) : nlohmann::ordered_json(nullptr);
            p["max"] = s.max ? nlohmann::ordered_json(to_string(*s.max)) : nlohmann::ordered_json(nullptr);
            p["default"] = s.fallback ? nlohmann::ordered_json(to_string(*s.fallback)) : nlohmann::ordered_json(nullptr);
            schema.push_back(std::move(p));
        }
        o["params"] = schema;
        o["variants"] = d.variants;
        o["anchor"] = d.anchor;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string constants_report(long prec, const std::string& format)
{
    if (format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : printed_constants()) {
            const Ball v = c.value(prec);
            nlohmann::ordered_json o;
            o["id"] = c.id;
            o["formula"] = c.formula;
            o["value"] = mid_string(v);
            o["rad"] = rad_string(v);
            o["expect_refuted"] = c.expect_refuted;
            arr.push_back(std::move(o));
        }
        return arr.dump(2) + "\n";
    }
    std::string out;
    if (format == "csv") {
        out = "id,formula,value,rad\n";
    }
    for (const auto& c : printed_constants()) {
        const Ball v = c.value(prec);
        if (format == "csv") {
            out += c.id + ",\"" + c.formula + "\"," + mid_string(v) + "," + rad_string(v) + "\n";
        } else {
            out += c.id + "\n    " + c.formula + "\n    " + to_string(v) + "\n";
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and certified-numeric checks of reciprocal binomial identities over Fibonacci, Lucas and "
                 "Horadam sequences"};
    app.require_subcommand(1);

    Common common;

    auto* list = app.add_subcommand("list", "list registered identities");
    add_common(list, common, false);

    auto* verify = app.add_subcommand("verify", "verify one identity at one parameter point");
    std::string verify_id;
    std::vector<std::string> verify_params;
    verify->add_option("id", verify_id, "identity id")->required();
    verify->add_option("-p,--param", verify_params, "parameters k=v (integers or p/q)");
    add_common(verify, common, true);

    auto* sweep_cmd = app.add_subcommand("sweep", "verify identities over parameter grids");
    std::vector<std::string> sweep_ids;
    std::vector<std::string> grid_specs;
    sweep_cmd->add_option("ids", sweep_ids, "identity ids (default: whole registry)");
    sweep_cmd->add_option("-g,--grid", grid_specs, "axes k=a..b, k=v1|v2 or k=v; replaces the default grid");
    add_common(sweep_cmd, common, true);

    auto* constants = app.add_subcommand("constants", "print printed closed-form constants as balls");
    add_common(constants, common, false);

    auto* oeis = app.add_subcommand("oeis-check", "cross-check a bundled b-file against its generator");
    std::string anum;
    long terms = 51;
    std::string generator;
    std::string fixture_path;
    bool fetch = false;
    oeis->add_option("anum", anum, "A-number, e.g. A000045")->required();
    oeis->add_option("--terms", terms, "number of leading entries to check")->check(CLI::PositiveNumber);
    oeis->add_option("--generator", generator, "override the generator mapping");
    oeis->add_option("--fixture", fixture_path, "read this b-file instead of the bundled one");
    oeis->add_flag("--fetch", fetch, "download the b-file from oeis.org (needs a build with BINETKIT_WITH_FETCH)");
    add_common(oeis, common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            emit(common, common.format == "json" ? list_json() : list_text());
            return 0;
        }
        if (constants->parsed()) {
            emit(common, constants_report(resolve_precision(common.prec), common.format));
            return 0;
        }
        if (verify->parsed()) {
            const HarnessSettings st = settings_from(common);
            ParamMap params;
            for (const auto& p : verify_params) {
                const auto [k, v] = split_assignment(p);
                params[k] = parse_value(k, v);
            }
            const IdentityDescriptor& d = find_identity(verify_id);
            return finish(common, {verify_one(d, params, common.variant, st)});
        }
        if (sweep_cmd->parsed()) {
            const HarnessSettings st = settings_from(common);
            Grid grid;
            if (!grid_specs.empty()) {
                GridBlock block;
                for (const auto& g : grid_specs) {
                    block.push_back(parse_axis(g));
                }
                grid.push_back(std::move(block));
            }
            std::vector<SweepJob> jobs;
            if (sweep_ids.empty()) {
                if (!grid.empty()) {
                    throw UsageError("--grid needs explicit ids");
                }
                jobs = default_jobs();
                for (auto& j : jobs) {
                    j.variant = common.variant;
                }
                if (common.variant != "default") {
                    std::vector<SweepJob> kept;
                    for (auto& j : jobs) {
                        const auto& v = find_identity(j.id).variants;
                        if (std::find(v.begin(), v.end(), common.variant) != v.end()) {
                            kept.push_back(std::move(j));
                        }
                    }
                    jobs = std::move(kept);
                }
            } else {
                for (const auto& id : sweep_ids) {
                    jobs.push_back(SweepJob{id, common.variant, grid});
                }
            }
            return finish(common, sweep(jobs, st));
        }
        if (oeis->parsed()) {
            BFile b;
            if (fetch) {
#ifdef BINETKIT_WITH_FETCH
                b = fetch_bfile(anum);
#else
                throw UsageError("this build has no fetch support (configure with -DBINETKIT_WITH_FETCH=ON)");
#endif
            } else if (!fixture_path.empty()) {
                std::ifstream in(fixture_path);
                if (!in) {
                    throw std::runtime_error("cannot read " + fixture_path);
                }
                b = load_bfile(in, normalize_anum(anum));
            } else {
                b = load_fixture(anum);
            }
            std::optional<SequenceGenerator> gen =
                generator.empty() ? generator_for(anum) : std::optional<SequenceGenerator>(named_generator(generator));
            if (!gen) {
                throw std::runtime_error(normalize_anum(anum) + " has no generator mapping (data-only fixture)");
            }
            const long lo = b.first_index();
            return finish(common, {cross_check(b, *gen, lo, lo + terms - 1)});
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
