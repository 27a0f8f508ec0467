#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "qgem/common.hpp"
#include "qgem/rng.hpp"
#include "qgem/stabilizer.hpp"

namespace qgem {

// Dense n-qubit state, qubit q = bit q of the amplitude index.
struct StateVector {
    int n = 0;
    std::vector<cplx> a;

    StateVector() = default;
    explicit StateVector(int nq) : n(nq), a(std::size_t(1) << nq, cplx(0, 0)) {}

    std::size_t dim() const { return a.size(); }

    static StateVector basis_state(int n, std::uint64_t index);
};

double norm(const StateVector& v);
void normalize(StateVector& v);
cplx inner(const StateVector& bra, const StateVector& ket);  // <bra|ket>

// Throws domain_error unless |norm - 1| <= tol.
void check_normalized(const StateVector& v, double tol = 1e-10);

StateVector apply_pauli(const StateVector& v, const PauliOperator& p);

// (I + sign_flip * S)/2 |v>
StateVector apply_projector(const StateVector& v, const PauliOperator& s, bool flip = false);

// State fixed by every generator with prescribed logical-Z outcomes: project a
// computational seed through all (I+S_a)/2 and (I +- Zbar_i)/2, renormalize.
// Seeds are tried in index order until the projection survives.
StateVector stabilizer_logical_state(const StabilizerCode& code,
                                     std::uint64_t logical_z_outcomes,
                                     int max_qubits = kDefaultMaxQubits);

struct DensityMatrix {
    std::vector<int> qubits;  // basis bit j of the matrix index = qubits[j]
    Eigen::MatrixXcd m;
};

// Partial trace over the complement of `qubits` (|qubits| <= 12).
DensityMatrix reduced_density_matrix(const StateVector& v, const std::vector<int>& qubits);

// Group-restriction evaluation 2^-|A| sum_{S in S(A)} S, as a matrix on A.
DensityMatrix eta_from_group(const StabilizerCode& code, const std::vector<int>& a);

// entropies in bits
double von_neumann_entropy(const DensityMatrix& rho);
double renyi_entropy(const DensityMatrix& rho, double alpha);  // alpha > 1

struct WeightDistribution {
    std::vector<double> p;  // p[t] = Pr[|x| = t], t = 0..n
};

WeightDistribution weight_distribution(const StateVector& v);
double expected_weight(const WeightDistribution& wd);
double expected_weight(const StateVector& v);
// S_i = sum_t p_t C(t, i) = E[C(|x|, i)]
double binomial_moment(const WeightDistribution& wd, int i);

std::size_t nonzero_amplitude_count(const StateVector& v, double tol = 1e-10);

// Classical mutual information I(x_i ; x_J) of the measurement distribution.
double mutual_information(const StateVector& v, int i, const std::vector<int>& j);

// (argmax qubit, entropy in bits) over single-qubit reduced states.
std::pair<int, double> max_single_qubit_entropy(const StateVector& v);

struct Postselected {
    bool annihilated = false;
    StateVector state;  // on n-1 qubits (the measured one is removed)
    double prob = 0;    // norm^2 of the projected component
};

Postselected postselect(const StateVector& v, int qubit, int outcome);

// exact C(n, k) in double (desk scale)
double binomial(int n, int k);

}  // namespace qgem
