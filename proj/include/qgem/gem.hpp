#pragma once

#include <array>
#include <vector>

#include "qgem/clifford.hpp"
#include "qgem/general_code.hpp"
#include "qgem/statevector.hpp"

namespace qgem {

// Product state over n qubits; each factor is a unit 2-vector.
struct ProductState {
    int n = 0;
    std::vector<std::array<cplx, 2>> factors;

    static ProductState all_zero(int n);
    static ProductState all_plus(int n);
    static ProductState haar_random(int n, Rng& rng);
};

// <psi|phi>
cplx product_overlap(const StateVector& psi, const ProductState& phi);

// Contraction of psi with the conjugated factors of every qubit except i, so
// that <psi|phi> = <v_i|phi_i>; replacing phi_i by v_i/|v_i| maximizes the
// overlap magnitude over that factor.
std::array<cplx, 2> environment_vector(const StateVector& psi, const ProductState& phi, int i);

struct GemEstimate {
    double best_overlap = 0;  // squared overlap |<psi|phi>|^2
    double e0_upper = 0;      // -log2(best_overlap); upper bound on E0
    ProductState best_product;
    int restarts_used = 0;
    int sweeps_used = 0;  // sweeps spent in the winning restart
    bool converged = false;
    std::vector<std::vector<double>> traces;  // squared overlap per sweep, per restart
};

// Alternating single-qubit maximization of |<psi|phi>|^2 (coordinate ascent /
// higher-order power iteration). Restart 0 starts from all-|0>, restart 1
// from all-|+>, the rest from Haar-random factors; the best restart wins.
// The squared overlap is non-decreasing within a restart (hard postcondition).
GemEstimate alternating_maximize(const StateVector& psi, int restarts, int max_sweeps = 500,
                                 double tol = 1e-12, std::uint64_t seed = kDefaultSeed);

struct CliffordGemTrial {
    int image_distance = 0;
    double overlap_plus = -1;    // |<0^n|U psi_+>|^2 (when within budget)
    double overlap_random = -1;  // same for a random logical state of the image
    double overlap_cap = 0;      // 2^{1-d'}
    bool distance_ok = false;
    bool overlap_ok = false;
};

struct CliffordGemReport {
    int h = 0, trials = 0;
    int base_distance = 0;
    int min_image_distance = 0;
    double mean_image_distance = 0;
    double max_overlap = -1;
    bool all_pass = false;
    std::vector<CliffordGemTrial> rows;
};

// Conjugate the code through random depth-h Clifford circuits; check that
// every image distance is >= ceil(d / 2^h) and that measured overlaps with
// |0^n> stay under 2^{1-d'}.
CliffordGemReport clifford_gem_experiment(const StabilizerCode& code, int h, int trials,
                                          std::uint64_t seed,
                                          double distance_budget = kDefaultEnumBudget,
                                          int max_qubits = kDefaultMaxQubits);

}  // namespace qgem
