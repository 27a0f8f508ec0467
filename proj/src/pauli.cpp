#include "qgem/pauli.hpp"

namespace qgem {

PauliOperator PauliOperator::single(int nq, int qubit, char kind, int sign) {
    PauliOperator p(nq);
    p.sign = sign;
    switch (kind) {
        case 'X': p.x.set(qubit); break;
        case 'Z': p.z.set(qubit); break;
        case 'Y':
            p.x.set(qubit);
            p.z.set(qubit);
            break;
        case 'I': break;
        default: throw domain_error("unknown Pauli kind");
    }
    return p;
}

std::size_t PauliOperator::weight() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < x.words(); ++i) c += std::popcount(x.w[i] | z.w[i]);
    return c;
}

BitVec PauliOperator::symplectic() const {
    BitVec v(2 * std::size_t(n));
    for (int i = 0; i < n; ++i) {
        if (x.get(i)) v.set(i);
        if (z.get(i)) v.set(std::size_t(n) + i);
    }
    return v;
}

std::string PauliOperator::str() const {
    static const char letter[4] = {'I', 'X', 'Z', 'Y'};
    std::string s;
    if (sign < 0) s.push_back('-');
    for (int i = 0; i < n; ++i) s.push_back(letter[local(i)]);
    return s;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    if (p.n != q.n) throw dimension_error("commutes: operand size mismatch");
    std::size_t t = BitVec::and_popcount(p.x, q.z) + BitVec::and_popcount(p.z, q.x);
    return (t & 1u) == 0;
}

PhasedPauli mul_phased(const PauliOperator& p, const PauliOperator& q) {
    if (p.n != q.n) throw dimension_error("mul: operand size mismatch");
    PauliOperator r(p.n);
    for (std::size_t i = 0; i < r.x.words(); ++i) {
        r.x.w[i] = p.x.w[i] ^ q.x.w[i];
        r.z.w[i] = p.z.w[i] ^ q.z.w[i];
    }
    // i-exponent of sign_p i^{x_p.z_p} X Z * sign_q i^{x_q.z_q} X Z rewritten
    // as i^t * (Hermitian, +1): commuting Z^{z_p} past X^{x_q} costs
    // (-1)^{|z_p & x_q|}, and the Hermitian normalization of the result
    // absorbs i^{|x_r & z_r|}.
    std::size_t t = 0;
    if (p.sign < 0) t += 2;
    if (q.sign < 0) t += 2;
    t += BitVec::and_popcount(p.x, p.z);
    t += BitVec::and_popcount(q.x, q.z);
    t += 2 * BitVec::and_popcount(p.z, q.x);
    t += 3 * BitVec::and_popcount(r.x, r.z);
    return {std::move(r), int(t & 3u)};
}

PauliOperator mul(const PauliOperator& p, const PauliOperator& q) {
    PhasedPauli r = mul_phased(p, q);
    if (r.phase_exp & 1)
        throw internal_error("mul: anticommuting operands give a non-Hermitian product");
    r.op.sign = (r.phase_exp == 0) ? +1 : -1;
    return std::move(r.op);
}

PauliOperator parse_pauli(const std::string& s) {
    std::size_t at = 0;
    int sign = +1;
    if (at < s.size() && (s[at] == '-' || s[at] == '+')) {
        sign = s[at] == '-' ? -1 : +1;
        ++at;
    }
    const std::size_t n = s.size() - at;
    PauliOperator p{int(n)};
    p.sign = sign;
    for (std::size_t i = 0; i < n; ++i) {
        switch (s[at + i]) {
            case 'I': break;
            case 'X': p.x.set(i); break;
            case 'Z': p.z.set(i); break;
            case 'Y':
                p.x.set(i);
                p.z.set(i);
                break;
            default:
                throw parse_error(std::string("invalid Pauli letter '") + s[at + i] + "'");
        }
    }
    return p;
}

}  // namespace qgem
