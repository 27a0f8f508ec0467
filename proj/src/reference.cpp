#include "qgem/reference.hpp"

#include <bit>
#include <cmath>

#include "qgem/gf2.hpp"

namespace qgem::ref {

namespace {

bool next_combination(std::vector<int>& c, int n) {
    const int w = int(c.size());
    int i = w - 1;
    while (i >= 0 && c[i] == n - w + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < w; ++j) c[j] = c[j - 1] + 1;
    return true;
}

}  // namespace

DistanceResult distance(const StabilizerCode& code, int w_max) {
    if (code.k < 1) throw domain_error("distance: code has no logical qubits");
    Gf2Eliminator span(2 * std::size_t(code.n));
    for (const auto& g : code.generators) span.insert(g.symplectic());

    static const char kinds[3] = {'X', 'Z', 'Y'};
    for (int w = 1; w <= std::min(w_max, code.n); ++w) {
        std::vector<int> qubits(w);
        for (int i = 0; i < w; ++i) qubits[i] = i;
        do {
            const std::uint64_t nassign = [&] {
                std::uint64_t r = 1;
                for (int i = 0; i < w; ++i) r *= 3;
                return r;
            }();
            for (std::uint64_t assign = 0; assign < nassign; ++assign) {
                PauliOperator e(code.n);
                std::uint64_t digits = assign;
                for (int j = 0; j < w; ++j) {
                    e = mul(e, PauliOperator::single(code.n, qubits[j], kinds[digits % 3]));
                    digits /= 3;
                }
                bool commuting = true;
                for (const auto& g : code.generators)
                    if (!commutes(e, g)) { commuting = false; break; }
                if (!commuting) continue;
                if (span.in_span(e.symplectic())) continue;
                DistanceResult res;
                res.exact = w;
                res.lower_bound = w;
                res.witness = std::move(e);
                return res;
            }
        } while (next_combination(qubits, code.n));
    }
    DistanceResult res;
    res.lower_bound = std::min(w_max, code.n) + 1;
    return res;
}

WeightDistribution weight_distribution(const StateVector& v) {
    WeightDistribution wd;
    wd.p.assign(std::size_t(v.n) + 1, 0.0);
    for (std::size_t b = 0; b < v.dim(); ++b)
        wd.p[std::popcount(std::uint64_t(b))] += std::norm(v.a[b]);
    return wd;
}

cplx product_overlap(const StateVector& psi, const ProductState& phi) {
    cplx acc(0, 0);
    for (std::size_t b = 0; b < psi.dim(); ++b) {
        cplx factor(1, 0);
        for (int q = 0; q < psi.n; ++q) factor *= phi.factors[q][(b >> q) & 1];
        acc += std::conj(psi.a[b]) * factor;
    }
    return acc;
}

StateVector apply_pauli(const StateVector& v, const PauliOperator& p) {
    StateVector out(v.n);
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::size_t b = 0; b < v.dim(); ++b) {
        std::uint64_t target = b;
        int phase = 0;
        for (int q = 0; q < v.n; ++q) {
            const bool bit = (b >> q) & 1;
            if (p.z.get(q) && bit) phase += 2;
            if (p.x.get(q) && p.z.get(q)) phase += 1;
            if (p.x.get(q)) target ^= std::uint64_t(1) << q;
        }
        if (p.sign < 0) phase += 2;
        out.a[target] += ipow[phase & 3] * v.a[b];
    }
    return out;
}

DensityMatrix reduced_density_matrix(const StateVector& v, const std::vector<int>& qubits) {
    const std::size_t da = std::size_t(1) << qubits.size();
    DensityMatrix rho;
    rho.qubits = qubits;
    rho.m = Eigen::MatrixXcd::Zero(Eigen::Index(da), Eigen::Index(da));
    auto extract = [&](std::uint64_t full) {
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j)
            if ((full >> qubits[j]) & 1) r |= std::uint64_t(1) << j;
        return r;
    };
    auto replace = [&](std::uint64_t full, std::uint64_t sub) {
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            const std::uint64_t m = std::uint64_t(1) << qubits[j];
            if ((sub >> j) & 1)
                full |= m;
            else
                full &= ~m;
        }
        return full;
    };
    for (std::size_t f = 0; f < v.dim(); ++f) {
        const std::uint64_t row = extract(f);
        for (std::uint64_t col = 0; col < da; ++col)
            rho.m(Eigen::Index(row), Eigen::Index(col)) +=
                v.a[f] * std::conj(v.a[replace(f, col)]);
    }
    return rho;
}

KlReport kl_verify_distance(const GeneralCode& code, int d, double tol) {
    KlReport rep;
    rep.checked_up_to_weight = std::min(d - 1, code.n);
    const std::size_t nb = code.basis.size();
    static const char kinds[3] = {'X', 'Z', 'Y'};
    for (int w = 1; w <= rep.checked_up_to_weight; ++w) {
        std::vector<int> qubits(w);
        for (int i = 0; i < w; ++i) qubits[i] = i;
        do {
            std::uint64_t nassign = 1;
            for (int i = 0; i < w; ++i) nassign *= 3;
            for (std::uint64_t assign = 0; assign < nassign; ++assign) {
                PauliOperator e(code.n);
                std::uint64_t digits = assign;
                for (int j = 0; j < w; ++j) {
                    e = mul(e, PauliOperator::single(code.n, qubits[j], kinds[digits % 3]));
                    digits /= 3;
                }
                std::vector<StateVector> mapped;
                for (const auto& b : code.basis) mapped.push_back(ref::apply_pauli(b, e));
                cplx diag = inner(code.basis[0], mapped[0]);
                for (std::size_t i = 0; i < nb; ++i) {
                    for (std::size_t j = i; j < nb; ++j) {
                        const cplx got = inner(code.basis[i], mapped[j]);
                        const cplx want = i == j ? diag : cplx(0, 0);
                        if (std::abs(got - want) > tol) {
                            rep.pass = false;
                            KlViolation viol;
                            viol.pauli = e;
                            viol.row = int(i);
                            viol.col = int(j);
                            viol.value = got;
                            viol.expected = want;
                            rep.witness = viol;
                            return rep;
                        }
                    }
                }
            }
        } while (next_combination(qubits, code.n));
    }
    rep.pass = true;
    return rep;
}

}  // namespace qgem::ref
