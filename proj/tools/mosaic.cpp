// mosaic: verify mosaic supercongruences of Ramanujan-type series over prime
// ranges, evaluate the series numerically against 1/pi and 1/pi^2, and emit
// machine-readable reports.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mosaic/analytic.hpp"
#include "mosaic/catalog.hpp"
#include "mosaic/report.hpp"
#include "mosaic/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string default_catalog_path() {
    const char* env = std::getenv("MOSAIC_CATALOG");
    return env ? env : "";
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw mosaic::Error("cannot write to " + out_path);
    out << text;
}

std::vector<mosaic::SeriesSpec> select_series(const std::vector<mosaic::SeriesSpec>& catalog,
                                              const std::string& id) {
    if (id == "all") return catalog;
    for (const mosaic::SeriesSpec& s : catalog) {
        if (s.id == id) return {s};
    }
    throw mosaic::UnknownSeries("no series named \"" + id + "\" in the catalog");
}

std::string radicand_list(const mosaic::SeriesSpec& spec) {
    std::ostringstream os;
    bool first = true;
    for (const mosaic::CongruenceTarget& t : spec.targets) {
        if (!first) os << ",";
        os << t.component_radicand;
        first = false;
    }
    return first ? "-" : os.str();
}

int cmd_list(const std::string& catalog_path, const std::string& format) {
    const auto catalog = mosaic::merged_catalog(catalog_path);
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const mosaic::SeriesSpec& s : catalog) {
            nlohmann::ordered_json j;
            j["id"] = s.id;
            j["sequence"] = s.kind.name();
            j["radicands"] = radicand_list(s);
            j["p_min"] = s.p_min;
            j["target"] = mosaic::target_name(s.target);
            j["convergent"] = s.convergent;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << std::left << std::setw(8) << "id" << std::setw(30) << "sequence"
              << std::setw(14) << "radicands" << std::setw(7) << "p_min" << std::setw(8)
              << "target" << "convergent\n";
    for (const mosaic::SeriesSpec& s : catalog) {
        std::cout << std::left << std::setw(8) << s.id << std::setw(30) << s.kind.name()
                  << std::setw(14) << radicand_list(s) << std::setw(7) << s.p_min
                  << std::setw(8) << mosaic::target_name(s.target)
                  << (s.convergent ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string series = "all";
    std::string catalog_path;
    std::string pmin = "auto";
    long long pmax = 200;
    std::string mod_power = "auto";
    std::string path = "auto";
    std::string out;
    std::string format = "json";
    int jobs = 1;
};

int cmd_verify(const VerifyArgs& args) {
    const auto catalog = mosaic::merged_catalog(args.catalog_path);
    const auto specs = select_series(catalog, args.series);

    mosaic::VerifyOptions options;
    if (args.path == "auto") {
        options.path = mosaic::VerifyPath::ModularWithAudit;
    } else if (args.path == "exact") {
        options.path = mosaic::VerifyPath::Exact;
    } else if (args.path == "modular") {
        options.path = mosaic::VerifyPath::Modular;
    } else if (args.path == "both") {
        options.path = mosaic::VerifyPath::Both;
    } else {
        throw CLI::ValidationError("--path", "must be exact, modular or both");
    }
    if (args.mod_power != "auto") {
        const int k = std::stoi(args.mod_power);
        if (k < 1) throw CLI::ValidationError("--mod-power", "must be >= 1");
        options.mod_power = static_cast<unsigned>(k);
    }
    options.jobs = args.jobs;

    long long p_lo = 2;
    if (args.pmin != "auto") p_lo = std::stoll(args.pmin);
    if (p_lo > args.pmax) throw CLI::ValidationError("--pmin", "exceeds --pmax");

    std::vector<mosaic::VerificationReport> reports;
    bool all_passed = true;
    for (const mosaic::SeriesSpec& spec : specs) {
        mosaic::VerificationReport report =
            mosaic::verify_series(spec, p_lo, args.pmax, options);
        std::cerr << mosaic::summary_line(report) << "\n";
        all_passed = all_passed && report.summary.all_passed();
        reports.push_back(std::move(report));
    }

    const std::string text = args.format == "csv" ? mosaic::reports_to_csv(reports)
                                                  : mosaic::reports_to_json(reports);
    write_output(text, args.out);
    return all_passed ? kExitOk : kExitCheckFailed;
}

struct EvaluateArgs {
    std::string series;
    std::string catalog_path;
    unsigned long terms = 50;
    unsigned long digits = 60;
    long require = 0;
};

int cmd_evaluate(const EvaluateArgs& args) {
    const auto catalog = mosaic::merged_catalog(args.catalog_path);
    const auto specs = select_series(catalog, args.series);
    if (specs.size() != 1) {
        throw CLI::ValidationError("--series", "evaluate takes a single series id");
    }
    const mosaic::SeriesSpec& spec = specs.front();
    if (spec.target == mosaic::AnalyticTarget::None) {
        throw mosaic::Error(spec.id + " has no target constant to compare against");
    }
    if (!spec.convergent) {
        std::cerr << "warning: " << spec.id
                  << " is flagged divergent; the numeric sum does not approach the target\n";
    } else {
        const double z_mag = mosaic::mq_embed(spec.z, 30).magnitude().to_double();
        if (z_mag >= 1.0 - 1e-12) {
            std::cerr << "warning: " << spec.id << " has |z| = " << z_mag
                      << "; convergence is too slow for digit-matching checks\n";
        }
    }

    const mosaic::BigComplex value = mosaic::evaluate_series(spec, args.terms, args.digits);
    const mosaic::BigFloat target = mosaic::target_constant(spec.target, args.digits);
    const long matched = mosaic::matched_digits(value, target);

    std::cout << "series: " << spec.id << "\n";
    std::cout << "terms: " << args.terms << "\n";
    std::cout << "value: " << value.str(args.digits) << "\n";
    std::cout << "target(" << mosaic::target_name(spec.target) << "): " << target.str(args.digits)
              << "\n";
    std::cout << "matched_digits: " << matched << "\n";
    return matched >= args.require ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mosaic supercongruence verifier for Ramanujan-type series"};
    app.require_subcommand(1);

    std::string list_catalog = default_catalog_path();
    std::string list_format = "text";
    CLI::App* list = app.add_subcommand("list", "list catalog entries");
    list->add_option("--catalog", list_catalog, "extra catalog JSON file");
    list->add_option("--format", list_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyArgs vargs;
    vargs.catalog_path = default_catalog_path();
    CLI::App* verify = app.add_subcommand("verify", "check congruences over a prime range");
    verify->add_option("--series", vargs.series, "series id or 'all'")->required();
    verify->add_option("--catalog", vargs.catalog_path, "extra catalog JSON file");
    verify->add_option("--pmin", vargs.pmin, "lowest prime to test, or 'auto'");
    verify->add_option("--pmax", vargs.pmax, "highest prime to test (default 200)");
    verify->add_option("--mod-power", vargs.mod_power,
                       "modulus exponent override, or 'auto' (per target)");
    verify->add_option("--path", vargs.path,
                       "exact, modular or both (default: modular with exact audit)")
        ->check(CLI::IsMember({"exact", "modular", "both", "auto"}));
    verify->add_option("--out", vargs.out, "write the report to a file instead of stdout");
    verify->add_option("--format", vargs.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--jobs", vargs.jobs, "parallel workers")->check(CLI::PositiveNumber);

    EvaluateArgs eargs;
    eargs.catalog_path = default_catalog_path();
    CLI::App* evaluate = app.add_subcommand("evaluate", "sum the series numerically");
    evaluate->add_option("--series", eargs.series, "series id")->required();
    evaluate->add_option("--catalog", eargs.catalog_path, "extra catalog JSON file");
    evaluate->add_option("--terms", eargs.terms, "number of terms (default 50)")
        ->check(CLI::PositiveNumber);
    evaluate->add_option("--digits", eargs.digits, "comparison precision (default 60, min 10)");
    evaluate->add_option("--require", eargs.require,
                         "exit nonzero unless at least this many digits match");

    try {
        app.parse(argc, argv);
        if (list->parsed()) return cmd_list(list_catalog, list_format);
        if (verify->parsed()) return cmd_verify(vargs);
        if (evaluate->parsed()) return cmd_evaluate(eargs);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const mosaic::PathMismatch& e) {
        std::cerr << "path mismatch (implementation bug): " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mosaic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
