#include "qgem/gem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qgem {

ProductState ProductState::all_zero(int n) {
    ProductState p;
    p.n = n;
    p.factors.assign(n, {cplx(1, 0), cplx(0, 0)});
    return p;
}

ProductState ProductState::all_plus(int n) {
    ProductState p;
    p.n = n;
    const double w = 1.0 / std::sqrt(2.0);
    p.factors.assign(n, {cplx(w, 0), cplx(w, 0)});
    return p;
}

ProductState ProductState::haar_random(int n, Rng& rng) {
    ProductState p;
    p.n = n;
    p.factors.resize(n);
    for (auto& f : p.factors) {
        f[0] = cplx(rng.gauss(), rng.gauss());
        f[1] = cplx(rng.gauss(), rng.gauss());
        const double inv = 1.0 / std::sqrt(std::norm(f[0]) + std::norm(f[1]));
        f[0] *= inv;
        f[1] *= inv;
    }
    return p;
}

namespace {

// One MSB contraction: out[r] = in[r]*conj(f0) + in[r+half]*conj(f1).
void fold_msb(std::vector<cplx>& buf, std::size_t& size, const std::array<cplx, 2>& f) {
    const std::size_t half = size / 2;
    const cplx c0 = std::conj(f[0]), c1 = std::conj(f[1]);
    if (half >= (1u << 15)) {
#pragma omp parallel for schedule(static)
        for (long long r = 0; r < (long long)half; ++r)
            buf[std::size_t(r)] = buf[std::size_t(r)] * c0 + buf[std::size_t(r) + half] * c1;
    } else {
        for (std::size_t r = 0; r < half; ++r) buf[r] = buf[r] * c0 + buf[r + half] * c1;
    }
    size = half;
}

// One LSB contraction: out[r] = in[2r]*conj(f0) + in[2r+1]*conj(f1).
// In-place only in the serial ascending order; the parallel path needs a
// scratch buffer since out[r] overlaps in[2r] across threads.
void fold_lsb(std::vector<cplx>& buf, std::size_t& size, const std::array<cplx, 2>& f) {
    const std::size_t half = size / 2;
    const cplx c0 = std::conj(f[0]), c1 = std::conj(f[1]);
    if (half >= (1u << 15)) {
        std::vector<cplx> tmp(half);
#pragma omp parallel for schedule(static)
        for (long long r = 0; r < (long long)half; ++r)
            tmp[std::size_t(r)] = buf[2 * std::size_t(r)] * c0 + buf[2 * std::size_t(r) + 1] * c1;
        std::copy(tmp.begin(), tmp.end(), buf.begin());
    } else {
        for (std::size_t r = 0; r < half; ++r) buf[r] = buf[2 * r] * c0 + buf[2 * r + 1] * c1;
    }
    size = half;
}

}  // namespace

cplx product_overlap(const StateVector& psi, const ProductState& phi) {
    if (psi.n != phi.n) throw dimension_error("product_overlap: size mismatch");
    std::vector<cplx> buf = psi.a;
    std::size_t size = buf.size();
    for (int q = psi.n - 1; q >= 0; --q) fold_msb(buf, size, phi.factors[q]);
    // buf[0] = sum_b psi[b] prod conj(phi) = conj(<psi|phi>)
    return std::conj(buf[0]);
}

std::array<cplx, 2> environment_vector(const StateVector& psi, const ProductState& phi, int i) {
    if (psi.n != phi.n) throw dimension_error("environment_vector: size mismatch");
    if (i < 0 || i >= psi.n) throw dimension_error("environment_vector: bad qubit");
    std::vector<cplx> buf = psi.a;
    std::size_t size = buf.size();
    for (int q = psi.n - 1; q > i; --q) fold_msb(buf, size, phi.factors[q]);
    for (int q = 0; q < i; ++q) fold_lsb(buf, size, phi.factors[q]);
    return {buf[0], buf[1]};
}

namespace {

struct RestartResult {
    double overlap2 = 0;
    ProductState product;
    int sweeps = 0;
    bool converged = false;
    bool monotone = true;
    std::vector<double> trace;
};

RestartResult run_restart(const StateVector& psi, ProductState phi, int max_sweeps, double tol) {
    RestartResult res;
    res.product = std::move(phi);
    double prev = std::norm(product_overlap(psi, res.product));
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double last = prev;
        for (int i = 0; i < psi.n; ++i) {
            auto v = environment_vector(psi, res.product, i);
            const double nv2 = std::norm(v[0]) + std::norm(v[1]);
            if (nv2 < 1e-300) continue;  // degenerate environment: keep the factor
            const double inv = 1.0 / std::sqrt(nv2);
            res.product.factors[i] = {v[0] * inv, v[1] * inv};
            last = nv2;
        }
        res.trace.push_back(last);
        ++res.sweeps;
        if (last < prev - 1e-14) res.monotone = false;
        if (last - prev < tol) {
            res.converged = true;
            res.overlap2 = last;
            return res;
        }
        prev = last;
    }
    res.overlap2 = prev;
    return res;
}

}  // namespace

GemEstimate alternating_maximize(const StateVector& psi, int restarts, int max_sweeps,
                                 double tol, std::uint64_t seed) {
    if (restarts < 1) throw domain_error("alternating_maximize: restarts must be >= 1");
    std::vector<RestartResult> results(restarts);
    const Rng base(seed);
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) {
        ProductState init;
        if (r == 0) init = ProductState::all_zero(psi.n);
        else if (r == 1) init = ProductState::all_plus(psi.n);
        else {
            Rng sub = base.derive(std::uint64_t(r));
            init = ProductState::haar_random(psi.n, sub);
        }
        results[r] = run_restart(psi, std::move(init), max_sweeps, tol);
    }
    int best = 0;
    for (int r = 1; r < restarts; ++r)
        if (results[r].overlap2 > results[best].overlap2) best = r;
    for (const auto& rr : results)
        if (!rr.monotone)
            throw internal_error("alternating_maximize: overlap decreased within a restart");

    GemEstimate est;
    est.best_overlap = results[best].overlap2;
    est.e0_upper = est.best_overlap > 0 ? -std::log2(est.best_overlap)
                                        : std::numeric_limits<double>::infinity();
    if (est.e0_upper < 0) est.e0_upper = 0;  // roundoff guard at overlap ~ 1
    est.best_product = std::move(results[best].product);
    est.restarts_used = restarts;
    est.sweeps_used = results[best].sweeps;
    est.converged = results[best].converged;
    for (auto& rr : results) est.traces.push_back(std::move(rr.trace));
    return est;
}

CliffordGemReport clifford_gem_experiment(const StabilizerCode& code, int h, int trials,
                                          std::uint64_t seed, double distance_budget,
                                          int max_qubits) {
    CliffordGemReport rep;
    rep.h = h;
    rep.trials = trials;
    auto base_d = distance(code, code.n, distance_budget);
    if (!base_d.exact) throw resource_error("clifford_gem_experiment: base distance not exact");
    rep.base_distance = *base_d.exact;
    const int floor_d = (rep.base_distance + (1 << h) - 1) / (1 << h);  // ceil(d / 2^h)

    StabilizerCode base = code;
    base.logicals = logical_operators(code);
    Rng rng(seed);
    rep.min_image_distance = code.n + 1;
    rep.all_pass = true;
    double dsum = 0;
    for (int t = 0; t < trials; ++t) {
        CliffordCircuit circ = random_circuit(code.n, h, rng);
        StabilizerCode image = conjugate(base, circ);
        auto dres = distance(image, std::min(code.n, rep.base_distance << h), distance_budget);
        CliffordGemTrial trial;
        if (!dres.exact)
            throw internal_error("image distance above the light-cone cap");
        trial.image_distance = *dres.exact;
        trial.distance_ok = trial.image_distance >= floor_d;
        trial.overlap_cap = std::exp2(1.0 - trial.image_distance);
        trial.overlap_ok = true;
        if (code.n <= max_qubits) {
            // |psi_+> of the image: the state fixed by the image group plus
            // the image X-logical; equals U|psi_+> up to a global phase.
            StabilizerCode plus_ext = image;
            plus_ext.generators.push_back(image.logicals[0].x_bar);
            plus_ext.k -= 1;
            plus_ext.logicals.clear();
            StateVector plus = stabilizer_logical_state(plus_ext, 0, max_qubits);
            trial.overlap_plus = std::norm(plus.a[0]);

            GeneralCode gc = logical_basis(image, max_qubits);
            Rng sub = rng.derive(0x5eed + std::uint64_t(t));
            StateVector rnd = random_logical_state(gc, sub);
            trial.overlap_random = std::norm(rnd.a[0]);
            trial.overlap_ok = trial.overlap_plus <= trial.overlap_cap + 1e-9 &&
                               trial.overlap_random <= trial.overlap_cap + 1e-9;
        }
        rep.min_image_distance = std::min(rep.min_image_distance, trial.image_distance);
        dsum += trial.image_distance;
        rep.max_overlap = std::max(rep.max_overlap,
                                   std::max(trial.overlap_plus, trial.overlap_random));
        rep.all_pass = rep.all_pass && trial.distance_ok && trial.overlap_ok;
        rep.rows.push_back(trial);
    }
    rep.mean_image_distance = trials > 0 ? dsum / trials : 0;
    return rep;
}

}  // namespace qgem
