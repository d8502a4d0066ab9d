#pragma once

#include "alertval/types.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace alertval::analytics {

// Claim mix driving the overhead formulas: counts of low/medium/high level
// claims plus the average number of commonly trusted neighbors.
struct ThreatMix {
    std::uint64_t low = 0;    // I_l
    std::uint64_t medium = 0; // I_m
    std::uint64_t high = 0;   // I_h
    double m_t = 0.0;

    std::uint64_t total() const { return low + medium + high; } // I_c
};

// Validation message cost (requests + responses) of a reliability policy
// over a claim mix:
//   Low             2*I_c
//   Medium          m_t*I_c
//   High            2*m_t*I_c
//   IntrusionAware  2*I_l + (I_m + 2*I_h)*m_t
double overhead(ReliabilityPolicy policy, const ThreatMix& mix);

// Exact non-negative rational, kept reduced.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

bool operator==(const Rational& a, const Rational& b);

// Number of response vectors in {1,0,-1}^n summing to zero (the central
// trinomial count); the no-consensus outcome count of the uniform model.
std::uint64_t zero_sum_outcomes(unsigned n_res);

// Probability that n_res uniformly random responses reach a consensus
// (nonzero sum): P_c = N_c / 3^n_res, exact. n_res must be in [1, 39] so the
// arithmetic stays within 64 bits.
Rational consensus_probability_uniform(unsigned n_res);

// Per-responder distribution over the response alphabet {1, 0, -1}.
struct ResponderPmf {
    double agree = 1.0 / 3.0;
    double dont_know = 1.0 / 3.0;
    double disagree = 1.0 / 3.0;

    bool valid(double tol = 1e-12) const;
};

struct ResponderModel {
    std::vector<ResponderPmf> pmfs; // one per responder

    std::size_t n_res() const { return pmfs.size(); }
};

struct ConsensusPmfResult {
    double probability = 0.0;
    std::uint64_t consensus_outcomes = 0; // count of outcome vectors with nonzero sum
    std::uint64_t total_outcomes = 0;     // 3^n_res
};

// Full-enumeration consensus probability under per-responder pmfs. Outcome
// space is 3^n_res; n_res is capped (default 15, ~14M outcomes) to keep the
// enumeration desk-scale. Larger fan-ins belong in the simulator's Monte
// Carlo path.
constexpr unsigned kPmfEnumerationBound = 15;
ConsensusPmfResult consensus_probability_pmf(const ResponderModel& model);

// Scenario parameters for the security claims: N_t filtered responders, m of
// them agreeing with the sender, m' sending false responses. The m and m'
// populations are disjoint.
struct SecurityScenario {
    unsigned n_t = 0;
    unsigned m = 0;
    unsigned m_prime = 0;
};

struct ClaimFormulaResult {
    double value = 0.0;
    bool out_of_range = false; // the value is not a probability
};

// The conditional-probability expressions for claims 1..4 exactly as stated,
// including their branch conditions. The expressions can exceed 1 for some
// inputs; such values are returned as-is and flagged, never clamped. The
// enumeration oracle below is the trustworthy number.
ClaimFormulaResult claim_formula(int which, const SecurityScenario& scenario);

struct ClaimOracleResult {
    // The claims' proofs count the accused as judged malicious whenever the
    // response sum is >= 0 (no consensus taken as a true claim); the decision
    // rule of the protocol proper requires a strictly positive sum. The two
    // disagree at sum == 0, so both are reported.
    double proof_rule = 0.0;
    double eq_rule = 0.0;
};

constexpr unsigned kOracleEnumerationBound = 20;

// Exact enumeration of the free responders' choices for claims 1..4. Fixed
// votes per claim: 1 -> m agree; 2 -> m agree, m' disagree; 3 -> m disagree
// with the free responders choosing {1, 0}; 4 -> m+m' agree. Free responders
// otherwise choose {-1, 0}, each option with probability 1/2.
ClaimOracleResult claim_oracle(int which, const SecurityScenario& scenario);

enum class ClaimSource : std::uint8_t { Formula, OracleProofRule, OracleEqRule };

struct Claim5Result {
    double pr_o_given_s = 0.0;     // sender judged malicious though the claim was true
    double pr_o_given_not_s = 0.0; // sender judged malicious, claim was false
};

// Mixture over response-correctness: with p = Pr[all responses correct],
//   Pr[O|S]  = p*(1 - Pr[M|S,N])  + (1-p)*(1 - Pr[M|S,~N])
//   Pr[O|~S] = p*(1 - Pr[M|~S,N]) + (1-p)*(1 - Pr[M|~S,~N])
Claim5Result claim5(double p, const SecurityScenario& scenario, ClaimSource source);

// Same mixture from explicit conditionals (a, b, c, d) =
// (Pr[M|S,N], Pr[M|S,~N], Pr[M|~S,N], Pr[M|~S,~N]).
Claim5Result claim5_from_conditionals(double p, double a, double b, double c, double d);

// n choose k in exact integer arithmetic; overflows are the caller's
// responsibility (fine for n <= 62).
std::uint64_t binomial(unsigned n, unsigned k);

} // namespace alertval::analytics
