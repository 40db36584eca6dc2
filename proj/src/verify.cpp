#include "mosaic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "mosaic/modring.hpp"

namespace mosaic {

std::string path_name(VerifyPath p) {
    switch (p) {
        case VerifyPath::Exact: return "exact";
        case VerifyPath::Modular: return "modular";
        case VerifyPath::Both: return "both";
        case VerifyPath::ModularWithAudit: return "modular+audit";
    }
    throw std::logic_error("unknown verify path");
}

MultiQuadElement accumulate_exact(const SeriesSpec& spec, unsigned long terms) {
    MultiQuadElement acc;
    MultiQuadElement zpow = MultiQuadElement::one();
    auto stream = make_stream(spec.kind);
    for (unsigned long n = 0; n < terms; ++n) {
        if (n > 0) zpow = zpow * spec.z;
        const Rational a_n = stream->next();
        // Horner over the polynomial coefficients
        MultiQuadElement poly_n = spec.poly.back();
        const Rational n_r(static_cast<unsigned long>(n));
        for (std::size_t j = spec.poly.size() - 1; j-- > 0;) {
            poly_n = poly_n.scaled(n_r) + spec.poly[j];
        }
        acc += (poly_n * zpow).scaled(a_n);
    }
    return acc;
}

namespace {

void require_above_pmin(const SeriesSpec& spec, long long p) {
    if (p <= spec.p_min) {
        throw std::invalid_argument("prime " + std::to_string(p) + " is <= p_min = " +
                                    std::to_string(spec.p_min) + " for " + spec.id);
    }
}

} // namespace

std::map<long long, Rational> partial_sum_exact(const SeriesSpec& spec, long long p) {
    require_above_pmin(spec, p);
    const MultiQuadElement acc = accumulate_exact(spec, static_cast<unsigned long>(p));
    std::map<long long, Rational> out(acc.components().begin(), acc.components().end());
    for (const CongruenceTarget& t : spec.targets) {
        out.emplace(t.component_radicand, Rational(0));
    }
    return out;
}

std::map<long long, ResidueClass> partial_sum_modular(const SeriesSpec& spec, long long p,
                                                      unsigned k) {
    require_above_pmin(spec, p);
    const ModContext ctx(static_cast<std::uint64_t>(p), k);
    const ModQuad z = ModQuad::of(spec.z, ctx);
    std::vector<ModQuad> poly;
    poly.reserve(spec.poly.size());
    for (const MultiQuadElement& c : spec.poly) poly.push_back(ModQuad::of(c, ctx));

    auto stream = make_mod_stream(spec.kind, ctx);
    ModQuad acc;
    ModQuad zpow = ModQuad::one(ctx);
    for (long long n = 0; n < p; ++n) {
        if (n > 0) zpow = zpow.mul(z, ctx);
        const std::uint64_t a_n = stream->next();
        const std::uint64_t n_mod = static_cast<std::uint64_t>(n) % ctx.modulus();
        ModQuad poly_n = poly.back();
        for (std::size_t j = poly.size() - 1; j-- > 0;) {
            poly_n = poly_n.scaled(n_mod, ctx).add(poly[j], ctx);
        }
        acc = acc.add(poly_n.mul(zpow, ctx).scaled(a_n, ctx), ctx);
    }

    const Integer prime = to_integer(p);
    std::map<long long, ResidueClass> out;
    for (const auto& [d, c] : acc.components()) {
        out.emplace(d, make_residue(Integer(static_cast<unsigned long>(c)), prime, k));
    }
    for (const CongruenceTarget& t : spec.targets) {
        out.emplace(t.component_radicand, make_residue(0, prime, k));
    }
    return out;
}

namespace {

unsigned required_exponent(const CongruenceTarget& t, const VerifyOptions& options) {
    return options.mod_power.value_or(t.modulus_exponent);
}

unsigned max_required_exponent(const SeriesSpec& spec, const VerifyOptions& options) {
    unsigned k = 1;
    for (const CongruenceTarget& t : spec.targets) {
        k = std::max(k, required_exponent(t, options));
    }
    return k;
}

// Modular-path verdict from residues mod p^k_max, reduced to p^required.
ComponentVerdict modular_verdict(const std::map<long long, ResidueClass>& comps,
                                 const CongruenceTarget& target, long long p,
                                 unsigned required) {
    const Integer prime = to_integer(p);
    ComponentVerdict v;
    v.prime = p;
    v.radicand = target.component_radicand;

    const int chi = jacobi_symbol(to_integer(target.jacobi_radicand), prime);
    Integer p_power;
    mpz_pow_ui(p_power.get_mpz_t(), prime.get_mpz_t(), target.p_exponent);
    Rational expected = target.coefficient * chi;
    expected *= p_power;
    ResidueClass expected_res;
    try {
        expected_res = residue_of_rational(expected, prime, required);
    } catch (const DenominatorNotInvertible&) {
        v.applicable = false;
        v.pass = false;
        return v;
    }

    const auto it = comps.find(target.component_radicand);
    Integer actual_value = it == comps.end() ? Integer(0) : it->second.value;
    const ResidueClass actual_res = make_residue(actual_value, prime, required);

    Integer diff = actual_res.value - expected_res.value;
    mpz_mod(diff.get_mpz_t(), diff.get_mpz_t(), actual_res.modulus.get_mpz_t());

    v.applicable = true;
    v.expected_residue = expected_res;
    v.actual_residue = actual_res;
    if (diff == 0) {
        v.residual_valuation = Valuation::finite(static_cast<long>(required));
        v.valuation_is_lower_bound = true;
        v.pass = true;
    } else {
        const long val = integer_valuation(diff, prime);
        v.residual_valuation = Valuation::finite(val);
        v.valuation_is_lower_bound = false;
        v.pass = val >= static_cast<long>(required);
    }
    return v;
}

void cross_check_paths(const SeriesSpec& spec, long long p, unsigned k_max,
                       const std::map<long long, Rational>& exact,
                       const std::map<long long, ResidueClass>& modular) {
    const Integer prime = to_integer(p);
    std::set<long long> radicands;
    for (const auto& [d, c] : exact) radicands.insert(d);
    for (const auto& [d, c] : modular) radicands.insert(d);
    for (const long long d : radicands) {
        const auto ex = exact.find(d);
        const Rational exact_comp = ex == exact.end() ? Rational(0) : ex->second;
        const ResidueClass exact_res = residue_of_rational(exact_comp, prime, k_max);
        const auto mo = modular.find(d);
        const Integer modular_value = mo == modular.end() ? Integer(0) : mo->second.value;
        if (exact_res.value != modular_value) {
            throw PathMismatch(spec.id + " p=" + std::to_string(p) + " sqrt(" +
                               std::to_string(d) + "): exact path gives " +
                               exact_res.value.get_str() + ", modular path gives " +
                               modular_value.get_str() + " mod " + exact_res.modulus.get_str());
        }
    }
}

PrimeResult inapplicable_prime(const SeriesSpec& spec, long long p) {
    PrimeResult r;
    r.prime = p;
    r.applicable = false;
    for (const CongruenceTarget& t : spec.targets) {
        ComponentVerdict v;
        v.prime = p;
        v.radicand = t.component_radicand;
        v.applicable = false;
        v.pass = false;
        r.components.push_back(std::move(v));
    }
    return r;
}

PrimeResult verify_one_prime(const SeriesSpec& spec, long long p, bool audit,
                             const VerifyOptions& options) {
    PrimeResult result;
    result.prime = p;
    const unsigned k_max = max_required_exponent(spec, options);

    std::map<long long, Rational> exact;
    std::map<long long, ResidueClass> modular;
    const bool want_exact = options.path == VerifyPath::Exact ||
                            options.path == VerifyPath::Both || audit;
    const bool want_modular = options.path != VerifyPath::Exact;

    if (want_modular) {
        try {
            modular = partial_sum_modular(spec, p, k_max);
        } catch (const DenominatorNotInvertible&) {
            return inapplicable_prime(spec, p);
        }
    }
    if (want_exact) {
        exact = partial_sum_exact(spec, p);
        if (want_modular) cross_check_paths(spec, p, k_max, exact, modular);
    }
    result.audited = want_exact && want_modular;

    for (const CongruenceTarget& t : spec.targets) {
        const unsigned required = required_exponent(t, options);
        ComponentVerdict v = want_exact
                                 ? check_target(exact.at(t.component_radicand), t, p, required)
                                 : modular_verdict(modular, t, p, required);
        result.components.push_back(std::move(v));
    }
    result.applicable = std::all_of(result.components.begin(), result.components.end(),
                                    [](const ComponentVerdict& v) { return v.applicable; });
    return result;
}

} // namespace

VerificationReport verify_series(const SeriesSpec& spec, long long p_lo, long long p_hi,
                                 const VerifyOptions& options) {
    if (p_lo > p_hi) throw std::invalid_argument("verify_series: p_lo > p_hi");
    spec.validate();

    VerificationReport report;
    report.series_id = spec.id;
    report.p_lo = p_lo;
    report.p_hi = p_hi;
    report.path = options.path;
    report.mod_power = options.mod_power;

    // primes p with p_lo <= p <= p_hi, p > p_min (catalog threshold), p odd
    const long long lo = std::max({p_lo, spec.p_min + 1, 3LL});
    std::vector<long long> primes;
    if (lo <= p_hi) primes = primes_in(lo, p_hi);

    std::vector<PrimeResult> results(primes.size());
    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(primes.size())));
    const int stride = std::max(1, options.audit_stride);

    if (jobs <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const bool audit = options.path == VerifyPath::ModularWithAudit &&
                               i % static_cast<std::size_t>(stride) == 0;
            results[i] = verify_one_prime(spec, primes[i], audit, options);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= primes.size()) return;
                try {
                    const bool audit = options.path == VerifyPath::ModularWithAudit &&
                                       i % static_cast<std::size_t>(stride) == 0;
                    results[i] = verify_one_prime(spec, primes[i], audit, options);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    next.store(primes.size());
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    report.primes = std::move(results);
    for (const PrimeResult& pr : report.primes) {
        ++report.summary.primes;
        if (!pr.applicable) ++report.summary.inapplicable_primes;
        for (const ComponentVerdict& v : pr.components) {
            ++report.summary.checks;
            if (!v.applicable) {
                ++report.summary.inapplicable;
            } else if (v.pass) {
                ++report.summary.passed;
            } else {
                ++report.summary.failed;
            }
        }
    }
    return report;
}

} // namespace mosaic
