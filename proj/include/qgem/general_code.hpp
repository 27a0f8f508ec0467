#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgem/statevector.hpp"

namespace qgem {

// Code given by an explicit orthonormal logical basis; covers non-stabilizer
// constructions (permutation-invariant, Dicke, concatenated).
struct GeneralCode {
    int n = 0;
    int k = 0;
    std::vector<StateVector> basis;  // 2^k states
    std::optional<int> claimed_distance;
    std::vector<std::string> labels;  // optional display names per basis state

    static GeneralCode from_basis(int n, std::vector<StateVector> basis,
                                  std::optional<int> claimed = std::nullopt);
};

// Orthonormality within tol, else invalid_code_error.
void validate(const GeneralCode& code, double tol = 1e-10);

// Canonical logical basis of a stabilizer code: |b> = prod Xbar_i^{b_i} |0..0>
// so relative phases are pinned by the logical operators themselves.
GeneralCode logical_basis(const StabilizerCode& code, int max_qubits = kDefaultMaxQubits);

StateVector random_logical_state(const GeneralCode& code, Rng& rng);

// zero | one | plus | minus | random (k = 1 families); code labels win when
// they match the selector.
StateVector state_by_selector(const GeneralCode& code, const std::string& selector, Rng& rng);

struct KlViolation {
    PauliOperator pauli;
    int row = 0, col = 0;
    cplx value;
    cplx expected;
};

struct KlReport {
    bool pass = false;
    int checked_up_to_weight = 0;
    std::optional<KlViolation> witness;
};

// Knill-Laflamme scan: <psi_i|E|psi_j> = c_E delta_ij for every Pauli E of
// weight <= d-1, checked on the full basis to tolerance tol. The eventual
// witness is the first violation in (weight, subset, letters) order.
KlReport kl_verify_distance(const GeneralCode& code, int d, double tol = 1e-9,
                            double op_budget = kDefaultKlOpBudget);

// Largest d such that the KL scan passes, plus whether d+1 was refuted or ran
// out of budget.
struct KlDistance {
    int verified = 1;   // KL passes at this d
    bool exact = false; // true when the scan at verified+1 found a witness
    std::optional<KlViolation> witness;
};
KlDistance kl_distance(const GeneralCode& code, int d_max, double tol = 1e-9,
                       double op_budget = kDefaultKlOpBudget);

enum class PostselectStatus { Ok, Annihilated };

struct PostselectedCode {
    PostselectStatus status = PostselectStatus::Ok;
    GeneralCode code;       // on n-1 qubits
    double shared_norm = 0; // c(P+P), identical across the basis
};

// Basis-wise projection with the shared normalization; claimed_distance drops
// by one (clamped at 1).
PostselectedCode postselect(const GeneralCode& code, int qubit, int outcome);

}  // namespace qgem
