// Timing comparison between the OpenMP kernels and their serial reference
// implementations, with an agreement check on every pair.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qgem/gem.hpp"
#include "qgem/reference.hpp"
#include "qgem/zoo.hpp"

using namespace qgem;
using clock_type = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm-up
    const auto t0 = clock_type::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-28s %10.2f ms %10.2f ms %7.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, agree ? "agree" : "MISMATCH");
}

StateVector random_state(int n, Rng& rng) {
    StateVector v(n);
    double nrm = 0;
    for (auto& a : v.a) {
        a = cplx(rng.gauss(), rng.gauss());
        nrm += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(nrm);
    for (auto& a : v.a) a *= inv;
    return v;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    Rng rng(0xBE7C);

    {
        StabilizerCode shor5 = shor_code(5);
        DistanceResult a, b;
        const double serial = time_ms([&] { a = ref::distance(shor5, 5); }, 1);
        const double par = time_ms([&] { b = distance(shor5, 5); }, 1);
        report("distance shor:5", serial, par,
               a.exact == b.exact && a.witness->str() == b.witness->str());
    }
    {
        StateVector v = random_state(20, rng);
        WeightDistribution a, b;
        const double serial = time_ms([&] { a = ref::weight_distribution(v); }, 3);
        const double par = time_ms([&] { b = weight_distribution(v); }, 3);
        double dev = 0;
        for (std::size_t t = 0; t < a.p.size(); ++t) dev = std::max(dev, std::abs(a.p[t] - b.p[t]));
        report("weight_distribution n=20", serial, par, dev < 1e-12);
    }
    {
        StateVector v = random_state(20, rng);
        ProductState phi = ProductState::haar_random(20, rng);
        cplx a, b;
        const double serial = time_ms([&] { a = ref::product_overlap(v, phi); }, 3);
        const double par = time_ms([&] { b = product_overlap(v, phi); }, 3);
        report("product_overlap n=20", serial, par, std::abs(a - b) < 1e-10);
    }
    {
        StateVector v = random_state(20, rng);
        PauliOperator p = parse_pauli("XXYZZIXYZXIZYXZIIXYZ");
        StateVector a, b;
        const double serial = time_ms([&] { a = ref::apply_pauli(v, p); }, 3);
        const double par = time_ms([&] { b = apply_pauli(v, p); }, 3);
        double dev = 0;
        for (std::size_t i = 0; i < a.dim(); ++i) dev = std::max(dev, std::abs(a.a[i] - b.a[i]));
        report("apply_pauli n=20", serial, par, dev < 1e-12);
    }
    {
        StateVector v = random_state(16, rng);
        std::vector<int> qubits = {0, 3, 5, 6, 9, 12, 14, 15};
        DensityMatrix a, b;
        const double serial = time_ms([&] { a = ref::reduced_density_matrix(v, qubits); }, 1);
        const double par = time_ms([&] { b = reduced_density_matrix(v, qubits); }, 1);
        report("partial_trace n=16 |A|=8", serial, par, (a.m - b.m).cwiseAbs().maxCoeff() < 1e-12);
    }
    {
        GeneralCode cc = concat_explicit(4, 4);
        KlReport a, b;
        const double serial = time_ms([&] { a = ref::kl_verify_distance(cc, 3); }, 1);
        const double par = time_ms([&] { b = kl_verify_distance(cc, 3); }, 1);
        report("kl_scan concat:4x4 d=3", serial, par, a.pass == b.pass);
    }
    {
        GeneralCode shor = logical_basis(shor_code(3));
        Rng srng(11);
        StateVector psi = random_logical_state(shor, srng);
        GemEstimate a, b;
        const double serial = time_ms([&] { a = alternating_maximize(psi, 1, 300, 1e-12, 7); }, 3);
        const double par = time_ms([&] { b = alternating_maximize(psi, 16, 300, 1e-12, 7); }, 3);
        std::printf("%-28s %10.2f ms %10.2f ms %9s   (1 vs 16 restarts)\n",
                    "alternating_maximize shor:3", serial, par, "-");
    }
    return 0;
}
