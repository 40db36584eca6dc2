#include "mosaic/catalog.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace mosaic {

using nlohmann::ordered_json;

std::string target_name(AnalyticTarget t) {
    switch (t) {
        case AnalyticTarget::PiInverse: return "1/pi";
        case AnalyticTarget::PiSquaredInverse: return "1/pi^2";
        case AnalyticTarget::None: return "none";
    }
    throw std::logic_error("unknown analytic target");
}

AnalyticTarget target_from_name(const std::string& name) {
    if (name == "1/pi") return AnalyticTarget::PiInverse;
    if (name == "1/pi^2") return AnalyticTarget::PiSquaredInverse;
    if (name == "none") return AnalyticTarget::None;
    throw ParseError("unknown target \"" + name + "\" (expected 1/pi, 1/pi^2 or none)");
}

void SeriesSpec::validate() const {
    if (id.empty()) throw ValidationError("series id must be nonempty");
    kind.validate();
    const auto check_mq = [&](const MultiQuadElement& x, const std::string& what) {
        for (const auto& [d, c] : x.components()) {
            if (d == 0 || !is_square_free(d)) {
                throw ValidationError(id + ": " + what + " has non-square-free radicand " +
                                      std::to_string(d));
            }
        }
    };
    check_mq(z, "z");
    check_mq(scale, "scale");
    for (const MultiQuadElement& c : poly) check_mq(c, "poly");
    if (poly.size() != 2 && poly.size() != 3) {
        throw ValidationError(id + ": poly must have length 2 or 3, got " +
                              std::to_string(poly.size()));
    }
    if (target == AnalyticTarget::PiInverse && poly.size() != 2) {
        throw ValidationError(id + ": 1/pi entries take a linear polynomial (length 2)");
    }
    if (target == AnalyticTarget::PiSquaredInverse && poly.size() != 3) {
        throw ValidationError(id + ": 1/pi^2 entries take a quadratic polynomial (length 3)");
    }
    if (target != AnalyticTarget::None && scale.is_zero()) {
        throw ValidationError(id + ": scale must be nonzero when a target constant is set");
    }
    if (p_min < 2) throw ValidationError(id + ": p_min must be >= 2");
    const unsigned expected_mod_exp = poly.size() == 2 ? 3 : 5;
    std::set<long long> seen;
    for (const CongruenceTarget& t : targets) {
        t.validate();
        if (t.modulus_exponent != expected_mod_exp) {
            throw ValidationError(id + ": congruence modulus exponent " +
                                  std::to_string(t.modulus_exponent) +
                                  " does not match polynomial arity (expected " +
                                  std::to_string(expected_mod_exp) + ")");
        }
        if (!seen.insert(t.component_radicand).second) {
            throw ValidationError(id + ": duplicate congruence radicand " +
                                  std::to_string(t.component_radicand));
        }
    }
}

namespace {

Rational rat(long long num, long long den = 1) { return make_rational(num, den); }

MultiQuadElement mq(std::initializer_list<std::pair<long long, Rational>> terms) {
    MultiQuadElement x;
    for (const auto& [d, c] : terms) x += MultiQuadElement::term(d, c);
    return x;
}

std::vector<SeriesSpec> build_catalog() {
    std::vector<SeriesSpec> specs;
    const Rational one(1);

    {
        SeriesSpec s;
        s.id = "EX1";
        s.kind = SequenceKind::hypergeometric({rat(1, 2), rat(1, 6), rat(5, 6)},
                                              {one, one, one});
        s.z = mq({{1, rat(-1, 512000)}}); // (-1)^n / 80^(3n)
        s.poly = {mq({{1, rat(263)}}), mq({{1, rat(5418)}})};
        s.scale = mq({{15, rat(1, 3200)}}); // sqrt(15) / (2^7 * 5^2)
        s.target = AnalyticTarget::PiInverse;
        s.p_min = 5;
        s.convergent = true;
        // sqrt(15) is factored out of the sum, so the partial sum itself is
        // rational and the single radicand-1 target carries (-15/p).
        s.targets = {CongruenceTarget(1, rat(263), -15, 1, 3)};
        specs.push_back(std::move(s));
    }
    {
        SeriesSpec s;
        s.id = "EX2";
        s.kind = SequenceKind::hypergeometric({rat(1, 2), rat(1, 3), rat(2, 3)},
                                              {one, one, one});
        s.z = mq({{1, rat(-17, 27)}, {7, rat(13, 54)}}); // (13 sqrt(7) - 34) / 54
        s.poly = {mq({{1, rat(-10)}, {7, rat(7)}}), mq({{1, rat(-21)}, {7, rat(39)}})};
        s.scale = mq({{1, rat(1, 27)}}); // congruence form is 27x the series form
        s.target = AnalyticTarget::PiInverse;
        s.p_min = 7;
        s.convergent = true;
        s.targets = {CongruenceTarget(1, rat(-10), -1, 1, 3),
                     CongruenceTarget(7, rat(7), -7, 1, 3)};
        specs.push_back(std::move(s));
    }
    {
        SeriesSpec s;
        s.id = "EX3";
        s.kind = SequenceKind::apery();
        // ((sqrt(5)-1)/2)^12 = 161 - 72 sqrt(5)
        s.z = mq({{1, rat(-1, 2)}, {5, rat(1, 2)}}).pow(12);
        s.poly = {mq({{3, rat(-134)}, {15, rat(60)}}), mq({{3, rat(-160)}, {15, rat(72)}})};
        s.scale = MultiQuadElement::one();
        s.target = AnalyticTarget::PiInverse;
        s.p_min = 5;
        s.convergent = true;
        s.targets = {CongruenceTarget(3, rat(-134), -3, 1, 3),
                     CongruenceTarget(15, rat(60), -15, 1, 3)};
        specs.push_back(std::move(s));
    }
    {
        SeriesSpec s;
        s.id = "EX4";
        s.kind = SequenceKind::hypergeometric({rat(1, 2), rat(1, 2), rat(1, 2)},
                                              {one, one, one});
        s.z = mq({{1, rat(-18872)}, {2, rat(-13344)}, {3, rat(10896)}, {6, rat(7704)}});
        s.poly = {mq({{1, rat(73)}, {2, rat(52)}, {3, rat(-42)}, {6, rat(-30)}}),
                  mq({{1, rat(168)}, {2, rat(120)}, {3, rat(-96)}, {6, rat(-69)}})};
        s.scale = MultiQuadElement::one();
        s.target = AnalyticTarget::PiInverse;
        s.p_min = 3;
        s.convergent = true;
        s.targets = {CongruenceTarget(1, rat(73), -1, 1, 3),
                     CongruenceTarget(2, rat(52), -2, 1, 3),
                     CongruenceTarget(3, rat(-42), -3, 1, 3),
                     CongruenceTarget(6, rat(-30), -6, 1, 3)};
        specs.push_back(std::move(s));
    }
    {
        SeriesSpec s;
        s.id = "EX5";
        s.kind = SequenceKind::hypergeometric({rat(1, 2), rat(1, 2), rat(1, 2)},
                                              {one, one, one});
        s.z = mq({{1, rat(47, 128)}, {-7, rat(45, 128)}});
        s.poly = {mq({{-1, rat(-13)}, {7, rat(7)}}), mq({{-1, rat(-42)}, {7, rat(30)}})};
        s.scale = mq({{1, rat(1, 64)}});
        s.target = AnalyticTarget::PiInverse;
        s.p_min = 7;
        // |z| = 1 exactly (47^2 + 45^2*7 = 128^2): converges, but far too
        // slowly for digit-matching checks.
        s.convergent = true;
        s.targets = {CongruenceTarget(-1, rat(-13), 1, 1, 3),
                     CongruenceTarget(7, rat(7), -7, 1, 3)};
        specs.push_back(std::move(s));
    }
    {
        SeriesSpec s;
        s.id = "EX6";
        s.kind = SequenceKind::hypergeometric(
            {rat(1, 2), rat(1, 3), rat(2, 3), rat(1, 6), rat(5, 6)},
            {one, one, one, one, one});
        s.z = mq({{1, rat(-729, 4096)}}); // (-1)^n (3/4)^(6n)
        s.poly = {mq({{1, rat(45)}}), mq({{1, rat(549)}}), mq({{1, rat(1930)}})};
        s.scale = mq({{1, rat(1, 384)}}); // series sums to 384/pi^2
        s.target = AnalyticTarget::PiSquaredInverse;
        s.p_min = 3;
        s.convergent = true;
        s.targets = {CongruenceTarget(1, rat(45), 1, 2, 5)};
        specs.push_back(std::move(s));
    }
    {
        SeriesSpec s;
        s.id = "EX7";
        s.kind = SequenceKind::hypergeometric(
            {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 3), rat(2, 3)},
            {one, one, one, one, one});
        // ((15 sqrt(5) - 33)/2)^3 = 8235 sqrt(5) - 18414
        s.z = mq({{1, rat(-33, 2)}, {5, rat(15, 2)}}).pow(3);
        s.poly = {mq({{1, rat(56)}, {5, rat(-25)}}),
                  mq({{1, rat(303)}, {5, rat(-135)}}),
                  mq({{1, rat(1220, 3)}, {5, rat(-180)}})};
        s.scale = MultiQuadElement::one();
        s.target = AnalyticTarget::PiSquaredInverse;
        s.p_min = 5;
        s.convergent = true;
        // the Jacobi argument here is +5, not -5
        s.targets = {CongruenceTarget(1, rat(56), 1, 2, 5),
                     CongruenceTarget(5, rat(-25), 5, 2, 5)};
        specs.push_back(std::move(s));
    }

    for (const SeriesSpec& s : specs) s.validate();
    return specs;
}

ordered_json mq_to_json(const MultiQuadElement& x) {
    ordered_json arr = ordered_json::array();
    for (const auto& [d, c] : x.components()) {
        arr.push_back({{"radicand", d}, {"coeff", format_rational(c)}});
    }
    return arr;
}

MultiQuadElement mq_from_json(const ordered_json& j, const std::string& context) {
    if (!j.is_array()) throw ParseError(context + ": expected an array of {radicand, coeff}");
    MultiQuadElement x;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("radicand") || !item.contains("coeff")) {
            throw ParseError(context + ": each component needs radicand and coeff");
        }
        if (!item["radicand"].is_number_integer()) {
            throw ParseError(context + ": radicand must be an integer");
        }
        const long long d = item["radicand"].get<long long>();
        const Rational c = parse_rational(item["coeff"].get<std::string>());
        if (d == 0) throw ValidationError(context + ": radicand must be nonzero");
        if (!is_square_free(d)) {
            throw ValidationError(context + ": radicand " + std::to_string(d) +
                                  " is not square-free");
        }
        x += MultiQuadElement::term(d, c);
    }
    return x;
}

ordered_json kind_to_json(const SequenceKind& kind) {
    ordered_json j;
    j["kind"] = kind.name();
    if (kind.tag == SequenceTag::Hypergeometric) {
        ordered_json upper = ordered_json::array();
        ordered_json lower = ordered_json::array();
        for (const Rational& u : kind.upper) upper.push_back(format_rational(u));
        for (const Rational& l : kind.lower) lower.push_back(format_rational(l));
        j["upper"] = upper;
        j["lower"] = lower;
    }
    return j;
}

SequenceKind kind_from_json(const ordered_json& j, const std::string& context) {
    if (!j.is_object() || !j.contains("kind")) {
        throw ParseError(context + ": sequence needs a kind");
    }
    const std::string name = j["kind"].get<std::string>();
    if (name == "hypergeometric") {
        if (!j.contains("upper") || !j.contains("lower")) {
            throw ParseError(context + ": hypergeometric sequence needs upper and lower lists");
        }
        std::vector<Rational> upper, lower;
        for (const auto& u : j["upper"]) upper.push_back(parse_rational(u.get<std::string>()));
        for (const auto& l : j["lower"]) lower.push_back(parse_rational(l.get<std::string>()));
        return SequenceKind::hypergeometric(std::move(upper), std::move(lower));
    }
    if (name == "apery") return SequenceKind::apery();
    if (name == "domb") return SequenceKind::domb();
    if (name == "almkvist_zudilin") return SequenceKind::almkvist_zudilin();
    if (name == "convolution_squares") return SequenceKind::convolution_squares();
    if (name == "central_times_cubes") return SequenceKind::central_times_cubes();
    if (name == "central_times_square_catalan") return SequenceKind::central_times_square_catalan();
    throw ParseError(context + ": unknown sequence kind \"" + name + "\"");
}

ordered_json target_to_json(const CongruenceTarget& t) {
    ordered_json j;
    j["component_radicand"] = t.component_radicand;
    j["coefficient"] = format_rational(t.coefficient);
    j["jacobi_radicand"] = t.jacobi_radicand;
    j["p_exponent"] = t.p_exponent;
    j["modulus_exponent"] = t.modulus_exponent;
    return j;
}

CongruenceTarget target_from_json(const ordered_json& j, const std::string& context) {
    for (const char* field : {"component_radicand", "coefficient", "jacobi_radicand",
                              "p_exponent", "modulus_exponent"}) {
        if (!j.contains(field)) {
            throw ParseError(context + ": congruence target missing field " + field);
        }
    }
    return CongruenceTarget(j["component_radicand"].get<long long>(),
                            parse_rational(j["coefficient"].get<std::string>()),
                            j["jacobi_radicand"].get<long long>(),
                            j["p_exponent"].get<unsigned>(),
                            j["modulus_exponent"].get<unsigned>());
}

ordered_json spec_to_json(const SeriesSpec& s) {
    ordered_json j;
    j["id"] = s.id;
    j["sequence"] = kind_to_json(s.kind);
    j["z"] = mq_to_json(s.z);
    ordered_json poly = ordered_json::array();
    for (const MultiQuadElement& c : s.poly) poly.push_back(mq_to_json(c));
    j["poly"] = poly;
    j["scale"] = mq_to_json(s.scale);
    j["target"] = target_name(s.target);
    j["p_min"] = s.p_min;
    j["convergent"] = s.convergent;
    ordered_json congruences = ordered_json::array();
    for (const CongruenceTarget& t : s.targets) congruences.push_back(target_to_json(t));
    j["congruences"] = congruences;
    return j;
}

SeriesSpec spec_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("catalog entry must be an object");
    if (!j.contains("id") || !j["id"].is_string()) {
        throw ParseError("catalog entry needs a string id");
    }
    SeriesSpec s;
    s.id = j["id"].get<std::string>();
    const std::string ctx = "entry " + s.id;
    for (const char* field : {"sequence", "z", "poly", "scale", "target", "p_min",
                              "convergent", "congruences"}) {
        if (!j.contains(field)) throw ParseError(ctx + ": missing field " + field);
    }
    s.kind = kind_from_json(j["sequence"], ctx);
    s.z = mq_from_json(j["z"], ctx + ".z");
    for (const auto& c : j["poly"]) s.poly.push_back(mq_from_json(c, ctx + ".poly"));
    s.scale = mq_from_json(j["scale"], ctx + ".scale");
    s.target = target_from_name(j["target"].get<std::string>());
    s.p_min = j["p_min"].get<long long>();
    s.convergent = j["convergent"].get<bool>();
    for (const auto& t : j["congruences"]) s.targets.push_back(target_from_json(t, ctx));
    s.validate();
    return s;
}

} // namespace

const std::vector<SeriesSpec>& builtin_catalog() {
    static const std::vector<SeriesSpec> catalog = build_catalog();
    return catalog;
}

SeriesSpec builtin(const std::string& id) {
    for (const SeriesSpec& s : builtin_catalog()) {
        if (s.id == id) return s;
    }
    throw UnknownSeries("no builtin series named \"" + id + "\"");
}

std::vector<SeriesSpec> load_catalog(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("catalog top level must be an array of entries");
    std::vector<SeriesSpec> specs;
    std::set<std::string> ids;
    try {
        for (const auto& entry : doc) {
            SeriesSpec s = spec_from_json(entry);
            if (!ids.insert(s.id).second) {
                throw DuplicateId("duplicate series id \"" + s.id + "\"");
            }
            specs.push_back(std::move(s));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed catalog entry: ") + e.what());
    }
    return specs;
}

std::vector<SeriesSpec> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_catalog(buf.str());
}

std::string serialize_catalog(const std::vector<SeriesSpec>& specs) {
    ordered_json arr = ordered_json::array();
    for (const SeriesSpec& s : specs) arr.push_back(spec_to_json(s));
    return arr.dump(2) + "\n";
}

std::vector<SeriesSpec> merged_catalog(const std::string& catalog_path) {
    std::vector<SeriesSpec> specs = builtin_catalog();
    if (catalog_path.empty()) return specs;
    std::set<std::string> ids;
    for (const SeriesSpec& s : specs) ids.insert(s.id);
    for (SeriesSpec& s : load_catalog_file(catalog_path)) {
        if (!ids.insert(s.id).second) {
            throw DuplicateId("catalog file redefines builtin id \"" + s.id +
                              "\"; rename the entry");
        }
        specs.push_back(std::move(s));
    }
    return specs;
}

} // namespace mosaic
