#pragma once

#include <optional>
#include <vector>

#include "qgem/general_code.hpp"
#include "qgem/statevector.hpp"

namespace qgem {

// H(x) = -x log2 x - (1-x) log2 (1-x)
double binary_entropy(double x);
// inverse restricted to [0, 1/2], bisection to ~1e-16
double inverse_binary_entropy(double y);

// E0 >= d - 1 for any logical state of a distance-d stabilizer code.
double stabilizer_gem_lower_bound(int d);
// E_h under Clifford circuits: d / 2^h - 1 (raw value, may be negative).
double stabilizer_clifford_gem_lower_bound(int d, int h);

// Rate-based bounds for arbitrary codes.
// E_h >= (d/2^h - 1) * Hinv(k/n)
double rate_gem_lower_bound(int n, int k, int d, int h);
// |<0^n|psi>|^2 <= prod_{i=0}^{d-2} (1 - Hinv(k/(n-i)))
double rate_overlap_upper_bound(int n, int k, int d);

// Constants of the sparse-code tail machinery. x0 and c overflow a double
// already for s >= 5 and g underflows, so the log-domain fields are the
// authoritative representation.
struct LdpcConstants {
    int s = 0;
    std::int64_t big_k = 0;  // K = s^2 + s^4
    double log_x0 = 0;       // ln x0,  x0 = exp(1 + (5/4)(K+1))
    double log_c = 0;        // ln c,   c = (5/4) x0 + 1
    double log_g = 0;        // ln g,   g = min(1/((K+1)c), ln(e-1)/(K+2)) / ln 2
    double x0 = 0, c = 0, g = 0;  // direct values (may be inf / 0)
};
LdpcConstants ldpc_constants(int s);

struct LdpcBound {
    double value = 0;      // d * g(s 2^h) / 2^h, 0 when underflowed
    double log_value = 0;  // ln of the same
    bool hypothesis_met = false;  // d > s^4 2^{5h}
};
LdpcBound ldpc_gem_lower_bound(int d, int s, int h);

// Exact alternating inclusion-exclusion identity tying the binomial moments
// S_i to the weight-distribution tail.
struct BonferroniReport {
    double lhs = 0;
    double rhs_tail = 0;        // sum C(t-1, d-1) p_t
    double rhs_cumulative = 0;  // sum C(t-2, d-2) Pr[|x| >= t], d >= 2 only
    double max_deviation = 0;
    bool pass = false;
};
BonferroniReport bonferroni_check(const WeightDistribution& wd, int d, double tol = 1e-9);

// Peaked-distribution conclusions for codes with sparse commuting checks:
// (ii) E(|x|) <= -(K+1) ln |<psi|0^n>|^2, and (iii) the exponential tail
// Pr[|x| >= t] <= exp(E - t) for t >= c(s) E(|x|).
struct WeightMomentReport {
    int s = 0;
    std::int64_t big_k = 0;
    bool hypothesis_met = false;  // d > s^4 (recorded, not assumed)
    double expected = 0;          // E(|x|)
    double overlap2 = 0;          // |<psi|0^n>|^2
    double bound_ii = 0;          // -(K+1) ln overlap2 (inf when overlap2 = 0)
    bool ii_pass = false;
    int iii_first_t = -1;  // smallest applicable t, -1 when none at this scale
    bool iii_pass = true;
    double iii_max_excess = 0;  // max Pr[|x|>=t] - exp(E-t) over applicable t
};
WeightMomentReport weight_moment_check(const StateVector& psi, const StabilizerCode& code,
                                       std::optional<int> known_distance = std::nullopt);

// max a with sum_{i<=a} C(n,i) < 2^k (always >= 0 for k >= 1)
int low_weight_counting(int n, int k);
// middle inequality sum_{i<=a} C(n,i) < 2^{n H(a/n)}; meaningful for a >= 1
bool counting_chain_holds(int n, int a);

// Normalized logical state orthogonal to every computational basis state of
// weight <= a, from the null space of the constraint matrix; nullopt when the
// null space is empty.
std::optional<StateVector> find_low_weight_avoiding_state(const GeneralCode& code, int a);

struct WeightInvarianceReport {
    bool applicable = false;  // requires distance >= 2
    double mean = 0;
    double spread = 0;  // max - min of E(|x|) over the samples
    bool pass = false;
};
WeightInvarianceReport expected_weight_invariance(const GeneralCode& code, int samples,
                                                  Rng& rng, double tol = 1e-9);

}  // namespace qgem
