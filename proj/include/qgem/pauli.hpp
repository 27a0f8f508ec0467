#pragma once

#include <string>

#include "qgem/bitvec.hpp"
#include "qgem/common.hpp"

namespace qgem {

// n-qubit Hermitian Pauli sign * i^{|x AND z|} X^x Z^z with sign in {+1,-1}.
// Qubit q contributes X when x[q]=1,z[q]=0; Z when x[q]=0,z[q]=1; Y when both.
struct PauliOperator {
    int n = 0;
    BitVec x, z;
    int sign = +1;

    PauliOperator() = default;
    explicit PauliOperator(int nq) : n(nq), x(nq), z(nq) {}

    static PauliOperator identity(int nq) { return PauliOperator(nq); }

    // kind: 'X', 'Y' or 'Z'
    static PauliOperator single(int nq, int qubit, char kind, int sign = +1);

    bool is_identity() const { return x.none() && z.none() && sign == +1; }
    std::size_t weight() const;
    bool acts_on(int qubit) const { return x.get(qubit) || z.get(qubit); }

    // 0 = I, 1 = X, 2 = Z, 3 = Y
    int local(int qubit) const { return int(x.get(qubit)) | (int(z.get(qubit)) << 1); }

    // concatenated [x | z] vector of length 2n
    BitVec symplectic() const;

    std::string str() const;
};

bool commutes(const PauliOperator& p, const PauliOperator& q);

// Full product with phase tracking: p*q = i^phase_exp * op where op is
// Hermitian with op.sign = +1 and phase_exp is mod 4. phase_exp is even iff
// p and q commute.
struct PhasedPauli {
    PauliOperator op;
    int phase_exp = 0;  // mod 4
};
PhasedPauli mul_phased(const PauliOperator& p, const PauliOperator& q);

// Product of two commuting Hermitian Paulis (throws internal_error if the
// inputs anticommute, since the result would not be Hermitian).
PauliOperator mul(const PauliOperator& p, const PauliOperator& q);

// Parse a string over {I,X,Y,Z} with optional leading '-'.
PauliOperator parse_pauli(const std::string& s);

}  // namespace qgem
