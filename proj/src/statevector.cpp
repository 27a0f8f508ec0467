#include "qgem/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qgem/parallel.hpp"

namespace qgem {

namespace {

void require_dense(int n) {
    if (n < 0 || n > kHardMaxQubits)
        throw resource_error("statevector limited to " + std::to_string(kHardMaxQubits) +
                             " qubits, got " + std::to_string(n));
}

// Pauli masks packed into machine words; only valid at dense scale.
struct PackedPauli {
    std::uint64_t x = 0, z = 0;
    cplx scale;  // sign * i^{|x & z|}
};

PackedPauli pack(const PauliOperator& p) {
    if (p.n > kHardMaxQubits) throw resource_error("Pauli too wide for dense kernels");
    PackedPauli pp;
    pp.x = p.x.w.empty() ? 0 : p.x.w[0];
    pp.z = p.z.w.empty() ? 0 : p.z.w[0];
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    pp.scale = double(p.sign) * ipow[std::popcount(pp.x & pp.z) & 3];
    return pp;
}

}  // namespace

StateVector StateVector::basis_state(int n, std::uint64_t index) {
    require_dense(n);
    StateVector v(n);
    v.a[index] = cplx(1, 0);
    return v;
}

double norm(const StateVector& v) {
    double s = chunked_sum<double>(v.dim(), [&](std::size_t i) { return std::norm(v.a[i]); });
    return std::sqrt(s);
}

void normalize(StateVector& v) {
    const double nrm = norm(v);
    if (nrm < 1e-150) throw domain_error("cannot normalize the zero vector");
    const double inv = 1.0 / nrm;
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)v.dim(); ++i) v.a[std::size_t(i)] *= inv;
}

cplx inner(const StateVector& bra, const StateVector& ket) {
    if (bra.n != ket.n) throw dimension_error("inner: size mismatch");
    return chunked_sum<cplx>(bra.dim(), [&](std::size_t i) {
        return std::conj(bra.a[i]) * ket.a[i];
    });
}

void check_normalized(const StateVector& v, double tol) {
    if (std::abs(norm(v) - 1.0) > tol) throw domain_error("state is not normalized");
}

StateVector apply_pauli(const StateVector& v, const PauliOperator& p) {
    if (v.n != p.n) throw dimension_error("apply_pauli: size mismatch");
    const PackedPauli pp = pack(p);
    StateVector out(v.n);
#pragma omp parallel for schedule(static)
    for (long long bi = 0; bi < (long long)v.dim(); ++bi) {
        const std::uint64_t b = std::uint64_t(bi);
        const double s = (std::popcount(pp.z & b) & 1) ? -1.0 : 1.0;
        out.a[b ^ pp.x] = pp.scale * s * v.a[b];
    }
    return out;
}

StateVector apply_projector(const StateVector& v, const PauliOperator& s, bool flip) {
    StateVector sv = apply_pauli(v, s);
    const double f = flip ? -0.5 : 0.5;
    StateVector out(v.n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)v.dim(); ++i)
        out.a[std::size_t(i)] = 0.5 * v.a[std::size_t(i)] + f * sv.a[std::size_t(i)];
    return out;
}

StateVector stabilizer_logical_state(const StabilizerCode& code,
                                     std::uint64_t logical_z_outcomes, int max_qubits) {
    require_dense(code.n);
    if (code.n > max_qubits)
        throw resource_error("stabilizer_logical_state: " + std::to_string(code.n) +
                             " qubits exceeds the budget of " + std::to_string(max_qubits));
    auto lps = logical_operators(code);
    for (std::uint64_t seed = 0; seed < (std::uint64_t(1) << code.n); ++seed) {
        StateVector v = StateVector::basis_state(code.n, seed);
        for (const auto& g : code.generators) v = apply_projector(v, g);
        for (std::size_t i = 0; i < lps.size(); ++i)
            v = apply_projector(v, lps[i].z_bar, (logical_z_outcomes >> i) & 1);
        if (norm(v) > 1e-8) {
            normalize(v);
            return v;
        }
    }
    throw invalid_code_error("projector annihilated every computational seed");
}

namespace {

// scatter the bits of `val` onto the positions listed in `where`
std::uint64_t scatter(std::uint64_t val, const std::vector<int>& where) {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < where.size(); ++j)
        if ((val >> j) & 1) out |= std::uint64_t(1) << where[j];
    return out;
}

}  // namespace

DensityMatrix reduced_density_matrix(const StateVector& v, const std::vector<int>& qubits) {
    if (qubits.size() > 12) throw resource_error("reduced_density_matrix: |A| > 12");
    for (int q : qubits)
        if (q < 0 || q >= v.n) throw dimension_error("reduced_density_matrix: bad qubit");
    std::vector<int> comp;
    {
        std::vector<bool> in(v.n, false);
        for (int q : qubits) in[q] = true;
        for (int q = 0; q < v.n; ++q)
            if (!in[q]) comp.push_back(q);
    }
    const std::size_t da = std::size_t(1) << qubits.size();
    const std::size_t de = std::size_t(1) << comp.size();
    std::vector<std::uint64_t> abase(da), ebase(de);
    for (std::size_t r = 0; r < da; ++r) abase[r] = scatter(r, qubits);
    for (std::size_t e = 0; e < de; ++e) ebase[e] = scatter(e, comp);

    DensityMatrix rho;
    rho.qubits = qubits;
    rho.m = Eigen::MatrixXcd::Zero(Eigen::Index(da), Eigen::Index(da));
#pragma omp parallel for schedule(static)
    for (long long ri = 0; ri < (long long)da; ++ri) {
        const std::size_t r = std::size_t(ri);
        for (std::size_t c = r; c < da; ++c) {
            cplx acc(0, 0);
            for (std::size_t e = 0; e < de; ++e)
                acc += v.a[abase[r] | ebase[e]] * std::conj(v.a[abase[c] | ebase[e]]);
            rho.m(Eigen::Index(r), Eigen::Index(c)) = acc;
            if (c != r) rho.m(Eigen::Index(c), Eigen::Index(r)) = std::conj(acc);
        }
    }
    return rho;
}

DensityMatrix eta_from_group(const StabilizerCode& code, const std::vector<int>& a) {
    if (a.size() > 12) throw resource_error("eta_from_group: |A| > 12");
    auto basis = restricted_stabilizers(code, a);
    const std::size_t r = basis.size();
    const std::size_t dim = std::size_t(1) << a.size();
    DensityMatrix eta;
    eta.qubits = a;
    eta.m = Eigen::MatrixXcd::Zero(Eigen::Index(dim), Eigen::Index(dim));

    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::uint64_t combo = 0; combo < (std::uint64_t(1) << r); ++combo) {
        PauliOperator s = PauliOperator::identity(code.n);
        for (std::size_t j = 0; j < r; ++j)
            if ((combo >> j) & 1) s = mul(s, basis[j]);
        // restriction of s to A as masks over the local bit order
        std::uint64_t lx = 0, lz = 0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (s.x.get(a[j])) lx |= std::uint64_t(1) << j;
            if (s.z.get(a[j])) lz |= std::uint64_t(1) << j;
        }
        const cplx scale = double(s.sign) * ipow[std::popcount(lx & lz) & 3];
        for (std::uint64_t col = 0; col < dim; ++col) {
            const double zs = (std::popcount(lz & col) & 1) ? -1.0 : 1.0;
            eta.m(Eigen::Index(col ^ lx), Eigen::Index(col)) += scale * zs;
        }
    }
    eta.m /= double(dim);
    return eta;
}

namespace {

std::vector<double> spectrum(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.m, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
    for (double v : ev)
        if (v < -1e-8) throw domain_error("density matrix has a negative eigenvalue");
    for (double& v : ev) v = std::max(v, 0.0);
    return ev;
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0;
    for (double l : spectrum(rho))
        if (l > 0) s -= l * std::log2(l);
    return s;
}

double renyi_entropy(const DensityMatrix& rho, double alpha) {
    if (alpha <= 1.0)
        throw domain_error("renyi_entropy requires alpha > 1 (alpha = 1 is von Neumann)");
    double s = 0;
    for (double l : spectrum(rho)) s += std::pow(l, alpha);
    return std::log2(s) / (1.0 - alpha);
}

WeightDistribution weight_distribution(const StateVector& v) {
    auto bins = chunked_bins<double>(v.dim(), std::size_t(v.n) + 1,
                                     [&](std::size_t i, std::vector<double>& local) {
                                         local[std::popcount(std::uint64_t(i))] += std::norm(v.a[i]);
                                     });
    WeightDistribution wd;
    wd.p = std::move(bins);
    return wd;
}

double expected_weight(const WeightDistribution& wd) {
    double e = 0;
    for (std::size_t t = 0; t < wd.p.size(); ++t) e += double(t) * wd.p[t];
    return e;
}

double expected_weight(const StateVector& v) { return expected_weight(weight_distribution(v)); }

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1;
    for (int i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
    return r;
}

double binomial_moment(const WeightDistribution& wd, int i) {
    double s = 0;
    for (std::size_t t = 0; t < wd.p.size(); ++t) s += wd.p[t] * binomial(int(t), i);
    return s;
}

std::size_t nonzero_amplitude_count(const StateVector& v, double tol) {
    return chunked_sum<std::size_t>(v.dim(), [&](std::size_t i) {
        return std::abs(v.a[i]) > tol ? std::size_t(1) : std::size_t(0);
    });
}

double mutual_information(const StateVector& v, int i, const std::vector<int>& j) {
    if (j.size() > 20) throw resource_error("mutual_information: subset too large");
    const std::size_t dj = std::size_t(1) << j.size();
    // joint[b_i * dj + b_J]
    auto joint = chunked_bins<double>(v.dim(), 2 * dj, [&](std::size_t b, std::vector<double>& acc) {
        std::size_t bj = 0;
        for (std::size_t t = 0; t < j.size(); ++t)
            if ((b >> j[t]) & 1) bj |= std::size_t(1) << t;
        const std::size_t bi = (b >> i) & 1;
        acc[bi * dj + bj] += std::norm(v.a[b]);
    });
    double pi[2] = {0, 0};
    std::vector<double> pj(dj, 0.0);
    for (std::size_t bi = 0; bi < 2; ++bi)
        for (std::size_t bj = 0; bj < dj; ++bj) {
            pi[bi] += joint[bi * dj + bj];
            pj[bj] += joint[bi * dj + bj];
        }
    double mi = 0;
    for (std::size_t bi = 0; bi < 2; ++bi)
        for (std::size_t bj = 0; bj < dj; ++bj) {
            const double p = joint[bi * dj + bj];
            if (p > 1e-300) mi += p * std::log2(p / (pi[bi] * pj[bj]));
        }
    return std::max(mi, 0.0);
}

std::pair<int, double> max_single_qubit_entropy(const StateVector& v) {
    int best_q = 0;
    double best_s = -1;
    for (int q = 0; q < v.n; ++q) {
        const std::uint64_t mask = std::uint64_t(1) << q;
        struct Acc {
            double p0 = 0;
            cplx off{0, 0};
            Acc& operator+=(const Acc& o) {
                p0 += o.p0;
                off += o.off;
                return *this;
            }
        };
        Acc acc = chunked_sum<Acc>(v.dim(), [&](std::size_t b) {
            Acc a;
            if (!(b & mask)) {
                a.p0 = std::norm(v.a[b]);
                a.off = v.a[b] * std::conj(v.a[b | mask]);
            }
            return a;
        });
        const double p1 = std::max(0.0, 1.0 - acc.p0);
        // eigenvalues of [[p0, off], [off*, p1]]
        const double mid = 0.5 * (acc.p0 + p1);
        const double rad = std::sqrt(0.25 * (acc.p0 - p1) * (acc.p0 - p1) + std::norm(acc.off));
        double s = 0;
        for (double l : {mid + rad, mid - rad}) {
            l = std::clamp(l, 0.0, 1.0);
            if (l > 0) s -= l * std::log2(l);
        }
        if (s > best_s + 1e-15) {
            best_s = s;
            best_q = q;
        }
    }
    return {best_q, best_s};
}

Postselected postselect(const StateVector& v, int qubit, int outcome) {
    if (qubit < 0 || qubit >= v.n) throw dimension_error("postselect: bad qubit");
    Postselected out;
    out.state = StateVector(v.n - 1);
    const std::uint64_t low = (std::uint64_t(1) << qubit) - 1;
#pragma omp parallel for schedule(static)
    for (long long ri = 0; ri < (long long)out.state.dim(); ++ri) {
        const std::uint64_t r = std::uint64_t(ri);
        const std::uint64_t full =
            (r & low) | (std::uint64_t(outcome) << qubit) | ((r & ~low) << 1);
        out.state.a[r] = v.a[full];
    }
    const double p = chunked_sum<double>(out.state.dim(),
                                         [&](std::size_t i) { return std::norm(out.state.a[i]); });
    out.prob = p;
    if (p < 1e-20) {
        out.annihilated = true;
        return out;
    }
    const double inv = 1.0 / std::sqrt(p);
    for (auto& c : out.state.a) c *= inv;
    return out;
}

}  // namespace qgem
