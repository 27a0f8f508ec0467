#pragma once

#include "qgem/general_code.hpp"
#include "qgem/gem.hpp"
#include "qgem/stabilizer.hpp"
#include "qgem/statevector.hpp"

// Plain serial implementations of the parallel kernels, kept as independent
// cross-checks and as the baseline side of the benchmark. They favor the
// obviously-correct formulation over speed: the distance scan decides group
// membership by GF(2) reduction instead of precomputed syndromes, the KL scan
// materializes E|psi_j> and so on.
namespace qgem::ref {

DistanceResult distance(const StabilizerCode& code, int w_max);

WeightDistribution weight_distribution(const StateVector& v);

cplx product_overlap(const StateVector& psi, const ProductState& phi);

StateVector apply_pauli(const StateVector& v, const PauliOperator& p);

DensityMatrix reduced_density_matrix(const StateVector& v, const std::vector<int>& qubits);

KlReport kl_verify_distance(const GeneralCode& code, int d, double tol = 1e-9);

}  // namespace qgem::ref
