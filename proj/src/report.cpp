#include "mosaic/report.hpp"

#include <sstream>

#include <json.hpp>

namespace mosaic {

using nlohmann::ordered_json;

namespace {

std::string valuation_str(const ComponentVerdict& v) {
    if (!v.residual_valuation) return "";
    const std::string s = v.residual_valuation->str();
    return v.valuation_is_lower_bound ? ">=" + s : s;
}

ordered_json verdict_to_json(const ComponentVerdict& v) {
    ordered_json j;
    j["radicand"] = v.radicand;
    if (v.expected_residue) {
        j["modulus"] = v.expected_residue->modulus.get_str();
        j["expected"] = v.expected_residue->value.get_str();
        j["actual"] = v.actual_residue->value.get_str();
    } else {
        j["modulus"] = nullptr;
        j["expected"] = nullptr;
        j["actual"] = nullptr;
    }
    if (v.residual_valuation) {
        if (v.residual_valuation->is_infinite()) {
            j["valuation"] = "inf";
        } else {
            j["valuation"] = v.residual_valuation->value();
        }
    } else {
        j["valuation"] = nullptr;
    }
    j["valuation_is_lower_bound"] = v.valuation_is_lower_bound;
    j["pass"] = v.pass;
    j["applicable"] = v.applicable;
    return j;
}

ordered_json report_to_json_value(const VerificationReport& r) {
    ordered_json j;
    j["series"] = r.series_id;
    j["range"] = {{"lo", r.p_lo}, {"hi", r.p_hi}};
    j["path"] = path_name(r.path);
    if (r.mod_power) {
        j["mod_power"] = *r.mod_power;
    } else {
        j["mod_power"] = "auto";
    }
    ordered_json primes = ordered_json::array();
    for (const PrimeResult& pr : r.primes) {
        ordered_json pj;
        pj["p"] = pr.prime;
        pj["applicable"] = pr.applicable;
        pj["audited"] = pr.audited;
        ordered_json comps = ordered_json::array();
        for (const ComponentVerdict& v : pr.components) comps.push_back(verdict_to_json(v));
        pj["components"] = comps;
        primes.push_back(pj);
    }
    j["primes"] = primes;
    j["summary"] = {{"primes", r.summary.primes},
                    {"checks", r.summary.checks},
                    {"passed", r.summary.passed},
                    {"failed", r.summary.failed},
                    {"inapplicable", r.summary.inapplicable},
                    {"inapplicable_primes", r.summary.inapplicable_primes},
                    {"all_passed", r.summary.all_passed()}};
    return j;
}

} // namespace

std::string report_to_json(const VerificationReport& report) {
    return report_to_json_value(report).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    if (reports.size() == 1) return report_to_json(reports.front());
    ordered_json arr = ordered_json::array();
    for (const VerificationReport& r : reports) arr.push_back(report_to_json_value(r));
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "series,prime,radicand,expected,actual,valuation,pass,applicable\n";
    for (const VerificationReport& r : reports) {
        for (const PrimeResult& pr : r.primes) {
            for (const ComponentVerdict& v : pr.components) {
                os << r.series_id << ',' << pr.prime << ',' << v.radicand << ',';
                if (v.expected_residue) os << v.expected_residue->value.get_str();
                os << ',';
                if (v.actual_residue) os << v.actual_residue->value.get_str();
                os << ',' << valuation_str(v) << ',' << (v.pass ? "true" : "false") << ','
                   << (v.applicable ? "true" : "false") << '\n';
            }
        }
    }
    return os.str();
}

std::string summary_line(const VerificationReport& report) {
    std::ostringstream os;
    os << report.series_id << ": " << report.summary.primes << " primes, "
       << report.summary.checks << " checks, " << report.summary.passed << " passed, "
       << report.summary.failed << " failed, " << report.summary.inapplicable
       << " inapplicable";
    return os.str();
}

} // namespace mosaic
