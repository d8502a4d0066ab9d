#include "alertval/analytics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace alertval::analytics {

double overhead(ReliabilityPolicy policy, const ThreatMix& mix) {
    const double ic = static_cast<double>(mix.total());
    switch (policy) {
        case ReliabilityPolicy::Low:
            return 2.0 * ic;
        case ReliabilityPolicy::Medium:
            return mix.m_t * ic;
        case ReliabilityPolicy::High:
            return 2.0 * mix.m_t * ic;
        case ReliabilityPolicy::IntrusionAware:
            return 2.0 * static_cast<double>(mix.low) +
                   (static_cast<double>(mix.medium) + 2.0 * static_cast<double>(mix.high)) *
                       mix.m_t;
    }
    return 0.0;
}

Rational::Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

bool operator==(const Rational& a, const Rational& b) {
    Rational ra(a.num, a.den), rb(b.num, b.den);
    return ra.num == rb.num && ra.den == rb.den;
}

std::uint64_t zero_sum_outcomes(unsigned n_res) {
    // counts[s + n] = number of length-i prefixes with sum s
    std::vector<std::uint64_t> counts(2 * n_res + 1, 0);
    counts[n_res] = 1;
    for (unsigned i = 0; i < n_res; ++i) {
        std::vector<std::uint64_t> next(counts.size(), 0);
        for (std::size_t s = 0; s < counts.size(); ++s) {
            if (counts[s] == 0) continue;
            if (s > 0) next[s - 1] += counts[s];
            next[s] += counts[s];
            if (s + 1 < counts.size()) next[s + 1] += counts[s];
        }
        counts.swap(next);
    }
    return counts[n_res];
}

Rational consensus_probability_uniform(unsigned n_res) {
    if (n_res < 1 || n_res > 39)
        throw std::invalid_argument("n_res must be in [1, 39]");
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n_res; ++i) total *= 3;
    return Rational(total - zero_sum_outcomes(n_res), total);
}

bool ResponderPmf::valid(double tol) const {
    if (agree < 0.0 || dont_know < 0.0 || disagree < 0.0) return false;
    return std::abs(agree + dont_know + disagree - 1.0) <= tol;
}

ConsensusPmfResult consensus_probability_pmf(const ResponderModel& model) {
    const std::size_t n = model.n_res();
    if (n < 1 || n > kPmfEnumerationBound)
        throw std::invalid_argument(
            "n_res exceeds the enumeration bound of " + std::to_string(kPmfEnumerationBound) +
            "; use the simulator's Monte Carlo estimate for larger fan-ins");
    for (const auto& pmf : model.pmfs) {
        if (!pmf.valid()) throw std::invalid_argument("responder pmf must be non-negative and sum to 1");
    }

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;

    ConsensusPmfResult result;
    result.total_outcomes = total;

    // Outcome index m encodes one symbol per responder, base 3.
    static const int kSymbols[3] = {1, 0, -1};
    for (std::uint64_t m = 0; m < total; ++m) {
        std::uint64_t code = m;
        int sum = 0;
        double prob = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned s = static_cast<unsigned>(code % 3);
            code /= 3;
            sum += kSymbols[s];
            const ResponderPmf& pmf = model.pmfs[i];
            prob *= (s == 0 ? pmf.agree : s == 1 ? pmf.dont_know : pmf.disagree);
        }
        if (sum != 0) {
            result.probability += prob;
            ++result.consensus_outcomes;
        }
    }
    return result;
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

namespace {

void check_scenario(const SecurityScenario& s) {
    if (s.n_t > kOracleEnumerationBound)
        throw std::invalid_argument("N_t exceeds the enumeration bound of " +
                                    std::to_string(kOracleEnumerationBound));
    if (s.m + s.m_prime > s.n_t)
        throw std::invalid_argument("m + m' must not exceed N_t");
}

// The shared expression of claims 1/2/4:
//   C(N_t, a) * sum_{i=1..a} C(N_t - a, i) / 2^(N_t - a)   when a < N_t/2
//   1                                                      otherwise
ClaimFormulaResult base_expression(unsigned n_t, unsigned a) {
    if (2 * a >= n_t) return {1.0, false};
    const unsigned free = n_t - a;
    std::uint64_t sum = 0;
    for (unsigned i = 1; i <= a; ++i) sum += binomial(free, i);
    const std::uint64_t num = binomial(n_t, a) * sum;
    const std::uint64_t den = 1ULL << free;
    const double value = static_cast<double>(num) / static_cast<double>(den);
    return {value, num > den};
}

} // namespace

ClaimFormulaResult claim_formula(int which, const SecurityScenario& s) {
    check_scenario(s);
    switch (which) {
        case 1:
            return base_expression(s.n_t, s.m);
        case 2:
            if (s.m < s.m_prime || 2 * s.m_prime > s.n_t) return {0.0, false};
            return base_expression(s.n_t, s.m - s.m_prime);
        case 3: {
            ClaimFormulaResult c1 = base_expression(s.n_t, s.m);
            return {1.0 - c1.value, c1.out_of_range};
        }
        case 4:
            return base_expression(s.n_t, s.m + s.m_prime);
        default:
            throw std::invalid_argument("claim index must be 1..4");
    }
}

ClaimOracleResult claim_oracle(int which, const SecurityScenario& s) {
    check_scenario(s);

    // Fixed votes and the free responders' two-option alphabet.
    int fixed_sum = 0;
    unsigned free = 0;
    int free_option = 0; // the non-zero option available to free responders
    switch (which) {
        case 1: // true claim, honest remainder: m agree, free pick {-1, 0}
            fixed_sum = static_cast<int>(s.m);
            free = s.n_t - s.m;
            free_option = -1;
            break;
        case 2: // true claim, m' false disagreements
            fixed_sum = static_cast<int>(s.m) - static_cast<int>(s.m_prime);
            free = s.n_t - s.m - s.m_prime;
            free_option = -1;
            break;
        case 3: // false claim, roles reversed: m disagree, free pick {1, 0}
            fixed_sum = -static_cast<int>(s.m);
            free = s.n_t - s.m;
            free_option = 1;
            break;
        case 4: // false claim, m+m' effective agreement
            fixed_sum = static_cast<int>(s.m + s.m_prime);
            free = s.n_t - s.m - s.m_prime;
            free_option = -1;
            break;
        default:
            throw std::invalid_argument("claim index must be 1..4");
    }

    // Each free responder contributes free_option or 0 with probability 1/2;
    // i of them picking the non-zero option has weight C(free, i) / 2^free.
    std::uint64_t hits_proof = 0, hits_eq = 0;
    for (unsigned i = 0; i <= free; ++i) {
        const int sum = fixed_sum + static_cast<int>(i) * free_option;
        const std::uint64_t ways = binomial(free, i);
        if (sum >= 0) hits_proof += ways;
        if (sum > 0) hits_eq += ways;
    }
    const double den = static_cast<double>(1ULL << free);
    return {static_cast<double>(hits_proof) / den, static_cast<double>(hits_eq) / den};
}

Claim5Result claim5_from_conditionals(double p, double a, double b, double c, double d) {
    Claim5Result r;
    r.pr_o_given_s = p * (1.0 - a) + (1.0 - p) * (1.0 - b);
    r.pr_o_given_not_s = p * (1.0 - c) + (1.0 - p) * (1.0 - d);
    return r;
}

Claim5Result claim5(double p, const SecurityScenario& scenario, ClaimSource source) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
    double cond[4];
    for (int which = 1; which <= 4; ++which) {
        switch (source) {
            case ClaimSource::Formula:
                cond[which - 1] = claim_formula(which, scenario).value;
                break;
            case ClaimSource::OracleProofRule:
                cond[which - 1] = claim_oracle(which, scenario).proof_rule;
                break;
            case ClaimSource::OracleEqRule:
                cond[which - 1] = claim_oracle(which, scenario).eq_rule;
                break;
        }
    }
    return claim5_from_conditionals(p, cond[0], cond[1], cond[2], cond[3]);
}

} // namespace alertval::analytics
