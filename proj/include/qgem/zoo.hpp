#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgem/general_code.hpp"
#include "qgem/stabilizer.hpp"

namespace qgem {

// --- stabilizer families -----------------------------------------------

// d x d grid, n = d^2, row-major layout: qubit (i,j) -> (i-1)*d + (j-1) with
// columns as the GHZ blocks. Logical pairs are preset so that logical-Z
// outcome 0 selects the GHZ-product basis state.
StabilizerCode shor_code(int d);

// [[5,1,3]] with the cyclic XZZXI generators (logicals left to completion).
StabilizerCode five_qubit_code();

// Z_i Z_{i+1} chain, k = 1, distance 1, sparsity 2.
StabilizerCode repetition_zcheck_code(int n);

// --- permutation-invariant families --------------------------------------

// span{ sqrt(1-2/n)|0^n> + sqrt(2/n)|1^n>, uniform weight-2 superposition },
// distance 2; requires n >= 4.
GeneralCode pi_code(int n, int max_qubits = kDefaultMaxQubits);

struct ConcatLevel {
    double log_n = 0;              // natural log of the block size
    std::optional<std::int64_t> exact;  // set when representable
};

struct ConcatSchedule {
    std::vector<ConcatLevel> levels;  // levels[0] = n_1 (lowest)
    int ell() const { return int(levels.size()); }
};

// Doubling schedule n_i = (2M)^(2^(l-i)); block sizes overflow any integer
// type already at moderate (M, l), hence the log-domain representation.
ConcatSchedule concat_schedule(std::int64_t m, int ell);
ConcatSchedule schedule_from_sizes(const std::vector<std::int64_t>& sizes);

struct ConcatOverlap {
    double log_f = 0;  // natural log of F_ell
    double f = 0;      // exp(log_f)
};

// Squared overlap F_ell of the level-ell logical-0 state with |0^N> via the
// recursion F_i = (1 - 2/n_i) F_{i-1}^{n_i}, evaluated in the log domain.
ConcatOverlap concat_overlap(const ConcatSchedule& s);

// log2 of the physical qubit count N_ell, plus the exact value when it fits.
double concat_log2_qubits(const ConcatSchedule& s);
std::optional<std::int64_t> concat_exact_qubits(const ConcatSchedule& s);

// Explicit two-level concatenated code on n1*n2 qubits (distance 4).
GeneralCode concat_explicit(int n1, int n2, int max_qubits = kDefaultMaxQubits);

// --- Dicke-state family ---------------------------------------------------

StateVector dicke_state(int n, int m);

// n = d^2 qubits, odd d >= 3; basis psi_+/- of weighted Dicke superpositions.
GeneralCode dicke_pi_code(int d, int max_qubits = kDefaultMaxQubits);

// Closed form <+^n|psi_+> = 2^{-(d+n)/2} sum_l sqrt(C(d,l) C(n,dl)).
double dicke_plus_overlap(int d);

// --- registry --------------------------------------------------------------

struct ZooEntry {
    std::string name;
    std::variant<StabilizerCode, GeneralCode> code;
    int n = 0, k = 0;
    std::optional<int> known_distance;

    bool is_stabilizer() const { return std::holds_alternative<StabilizerCode>(code); }
    const StabilizerCode& stab() const { return std::get<StabilizerCode>(code); }
    const GeneralCode& gen() const { return std::get<GeneralCode>(code); }
};

// shor:<d>, pi:<n>, dicke:<d>, concat:<n1>x<n2>, five, repz:<n>
ZooEntry make_zoo_code(const std::string& spec, int max_qubits = kDefaultMaxQubits);

// The default fixture list used by the verification suites.
std::vector<std::string> zoo_default_specs();

// Logical basis of a zoo entry as a GeneralCode (statevector scale only).
GeneralCode zoo_logical_code(const ZooEntry& entry, int max_qubits = kDefaultMaxQubits);

}  // namespace qgem
