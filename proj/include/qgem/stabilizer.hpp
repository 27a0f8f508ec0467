#pragma once

#include <optional>
#include <vector>

#include "qgem/gf2.hpp"
#include "qgem/pauli.hpp"

namespace qgem {

struct LogicalPair {
    PauliOperator x_bar, z_bar;
};

// Stabilizer code given by m = n-k independent pairwise commuting generators.
// Constructors may preset the logical pairs (e.g. to pin a naming convention);
// otherwise they are completed deterministically by symplectic Gram-Schmidt.
struct StabilizerCode {
    int n = 0;
    int k = 0;
    std::vector<PauliOperator> generators;
    std::vector<LogicalPair> logicals;  // empty until computed or preset

    static StabilizerCode from_generators(int n, std::vector<PauliOperator> gens);
};

// Throws invalid_code_error on dependent or non-commuting generators.
void validate(const StabilizerCode& code);

struct GroupMembership {
    bool in_span = false;      // symplectic vector lies in the generator span
    bool member = false;       // in_span and the tracked sign matches
    BitVec combination;        // generator exponents when in_span
};

GroupMembership in_group(const StabilizerCode& code, const PauliOperator& p);

// Product of the generators selected by `combination`, with sign tracking.
PauliOperator group_element(const StabilizerCode& code, const BitVec& combination);

// k anticommuting logical pairs commuting with the group; deterministic given
// the generator order. Returns the preset pairs when the code carries them.
std::vector<LogicalPair> logical_operators(const StabilizerCode& code);

struct DistanceResult {
    std::optional<int> exact;           // set when a minimum-weight logical was found
    int lower_bound = 1;                // distance >= lower_bound always holds
    std::optional<PauliOperator> witness;
};

// Exact minimum weight of N(S) \ S by enumeration over increasing weight.
// Scans weights 1..w_max; the cumulative candidate count C(n,w)*3^w is capped
// by `budget` (resource_error when exceeded, never silent truncation).
DistanceResult distance(const StabilizerCode& code, int w_max,
                        double budget = kDefaultEnumBudget);

// Convenience: w_max = n.
DistanceResult distance(const StabilizerCode& code);

// Stabilizer-equivalent representative of the logical operator p supported on
// the complement of A, or nullopt when the GF(2) cleaning system is
// unsolvable. Throws contract_error if p is not logical.
std::optional<PauliOperator> clean(const StabilizerCode& code, const PauliOperator& p,
                                   const std::vector<int>& a);

// GF(2) basis of the subgroup S(A) of stabilizers supported inside A.
std::vector<PauliOperator> restricted_stabilizers(const StabilizerCode& code,
                                                  const std::vector<int>& a);

struct SubsetStep {
    PauliOperator cleaned_x, cleaned_z;  // the cleaned anticommuting pair
    int qubit = -1;                      // where they locally anticommute
    bool basis_changed = false;          // local Clifford applied to the working copy
};

struct SubsetResult {
    std::vector<int> qubits;  // |qubits| = target size, S(A) = {I}
    std::vector<SubsetStep> steps;
};

// Constructive cleaning loop: grows A one qubit per step until |A| = size
// while keeping S(A) = {I}. `size` must not exceed the code distance (the
// loop throws internal_error if cleaning ever fails early, which would
// contradict the cleaning property for |A| < d).
SubsetResult identity_support_subset(const StabilizerCode& code, int size);

// max(max generator weight, max per-qubit generator membership)
int sparsity(const StabilizerCode& code);

}  // namespace qgem
