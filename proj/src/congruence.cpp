#include "mosaic/congruence.hpp"

#include <stdexcept>
#include <utility>

namespace mosaic {

int jacobi_symbol(const Integer& a_in, const Integer& n_in) {
    if (n_in < 1) throw std::invalid_argument("jacobi_symbol: n must be positive");
    if (mpz_even_p(n_in.get_mpz_t())) {
        throw EvenModulus("jacobi_symbol: n must be odd, got " + n_in.get_str());
    }
    Integer a, n = n_in;
    mpz_mod(a.get_mpz_t(), a_in.get_mpz_t(), n.get_mpz_t()); // also fixes negatives
    int result = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), 1);
            const unsigned long n_mod8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (n_mod8 == 3 || n_mod8 == 5) result = -result; // (2/n) rule
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) {
            result = -result; // reciprocity sign
        }
        mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    }
    return n == 1 ? result : 0;
}

int jacobi_symbol(long long a, long long n) {
    return jacobi_symbol(to_integer(a), to_integer(n));
}

std::vector<long long> primes_in(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("primes_in: lo > hi");
    constexpr long long kSieveCap = 100'000'000;
    if (hi > kSieveCap) {
        throw std::invalid_argument("primes_in: range end beyond desk-scale sieve cap");
    }
    std::vector<long long> primes;
    if (hi < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
    for (long long p = 2; p * p <= hi; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (long long q = p * p; q <= hi; q += p) composite[static_cast<std::size_t>(q)] = true;
    }
    for (long long p = std::max<long long>(lo, 2); p <= hi; ++p) {
        if (!composite[static_cast<std::size_t>(p)]) primes.push_back(p);
    }
    return primes;
}

CongruenceTarget::CongruenceTarget(long long radicand, Rational coeff, long long jacobi,
                                   unsigned p_exp, unsigned mod_exp)
    : component_radicand(radicand),
      coefficient(std::move(coeff)),
      jacobi_radicand(jacobi),
      p_exponent(p_exp),
      modulus_exponent(mod_exp) {
    validate();
}

CongruenceTarget CongruenceTarget::with_default_jacobi(long long radicand, Rational coeff) {
    return CongruenceTarget(radicand, std::move(coeff), -radicand, 1, 3);
}

void CongruenceTarget::validate() const {
    const bool pi_shape = p_exponent == 1 && modulus_exponent == 3;
    const bool pi2_shape = p_exponent == 2 && modulus_exponent == 5;
    if (!pi_shape && !pi2_shape) {
        throw ValidationError("congruence exponents must be (1,3) or (2,5), got (" +
                              std::to_string(p_exponent) + "," +
                              std::to_string(modulus_exponent) + ")");
    }
    if (jacobi_radicand == 0) {
        throw ValidationError("jacobi_radicand must be nonzero");
    }
    if (component_radicand == 0 || !is_square_free(component_radicand)) {
        throw ValidationError("component radicand " + std::to_string(component_radicand) +
                              " is not a square-free nonzero integer");
    }
}

ComponentVerdict check_target(const Rational& component, const CongruenceTarget& target,
                              long long p, unsigned required_exponent) {
    if (p <= 2 || p % 2 == 0) {
        throw std::invalid_argument("check_target: p must be an odd prime > 2");
    }
    const Integer prime = to_integer(p);
    ComponentVerdict v;
    v.prime = p;
    v.radicand = target.component_radicand;

    const int chi = jacobi_symbol(to_integer(target.jacobi_radicand), prime);
    Integer p_power;
    mpz_pow_ui(p_power.get_mpz_t(), prime.get_mpz_t(), target.p_exponent);
    Rational expected = target.coefficient * chi;
    expected *= p_power;

    v.applicable = !mpz_divisible_p(component.get_den().get_mpz_t(), prime.get_mpz_t()) &&
                   !mpz_divisible_p(expected.get_den().get_mpz_t(), prime.get_mpz_t());
    const Rational residual = component - expected;
    v.residual_valuation = padic_valuation(residual, prime);
    v.valuation_is_lower_bound = false;
    v.pass = v.applicable && *v.residual_valuation >= static_cast<long>(required_exponent);
    if (v.applicable) {
        v.expected_residue = residue_of_rational(expected, prime, required_exponent);
        v.actual_residue = residue_of_rational(component, prime, required_exponent);
    }
    return v;
}

} // namespace mosaic
