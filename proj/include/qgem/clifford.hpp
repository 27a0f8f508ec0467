#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgem/pauli.hpp"
#include "qgem/rng.hpp"

namespace qgem {

struct StabilizerCode;

// Pauli on the support of one gate (1 or 2 qubits), bit j = j-th support slot.
struct LocalPauli {
    std::uint8_t x = 0, z = 0;
    int sign = +1;
};

// Clifford gate given by its conjugation action: images of X and Z on each
// support qubit. Any symplectic + sign assignment is accepted; the named
// gates below and gate composition produce only valid ones.
struct CliffordGate {
    std::vector<int> qubits;       // size 1 or 2, distinct
    std::vector<LocalPauli> img;   // images of X_{q0}, Z_{q0} [, X_{q1}, Z_{q1}]

    std::string name;              // display only
};

struct CliffordCircuit {
    int n = 0;
    std::vector<std::vector<CliffordGate>> layers;

    int depth() const { return int(layers.size()); }
};

// Throws error on overlapping supports within a layer or out-of-range qubits.
void validate(const CliffordCircuit& c);

CliffordGate gate_named(const std::string& name, int a, int b = -1);

// g2 after g1, same support required.
CliffordGate compose(const CliffordGate& g1, const CliffordGate& g2);

// Widen a single-qubit gate to act on an ordered pair (identity on the other).
CliffordGate promote(const CliffordGate& g, int a, int b);

PauliOperator conjugate(const PauliOperator& p, const CliffordGate& g);
PauliOperator conjugate(const PauliOperator& p, const CliffordCircuit& c);
StabilizerCode conjugate(const StabilizerCode& code, const CliffordCircuit& c);

// Single-qubit Clifford sending the local Pauli `from_x` to +X and `from_z`
// to +Z (codes 1=X, 2=Z, 3=Y; the pair must anticommute).
CliffordGate local_basis_change(int from_x, int from_z, int qubit);

// Uniform over the 24 single-qubit Cliffords (mod phase).
CliffordGate random_single_clifford(Rng& rng, int qubit);

// Uniform over the 11520 two-qubit Cliffords (mod phase): uniform locals
// around an entangler class drawn with weights I:1, CX:9, CX.CX:9, SWAP:1.
CliffordGate random_two_qubit_clifford(Rng& rng, int a, int b);

// h layers; each layer pairs qubits by a uniform random matching (one qubit
// idles when n is odd) and places an independent uniform two-qubit Clifford
// on every pair.
CliffordCircuit random_circuit(int n, int h, Rng& rng);

CliffordCircuit parse_circuit(const std::string& text, int n);
std::string circuit_str(const CliffordCircuit& c);

}  // namespace qgem
