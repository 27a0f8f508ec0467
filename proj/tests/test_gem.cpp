#include <cmath>

#include "doctest.h"
#include "qgem/gem.hpp"
#include "qgem/reference.hpp"
#include "qgem/zoo.hpp"

using namespace qgem;

TEST_CASE("product overlap basics") {
    StateVector zero = StateVector::basis_state(5, 0);
    CHECK(std::abs(product_overlap(zero, ProductState::all_zero(5)) - 1.0) < 1e-14);

    GeneralCode pi8 = pi_code(8);
    const cplx ov = product_overlap(pi8.basis[0], ProductState::all_zero(8));
    CHECK(ov.real() == doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));

    auto shor = logical_basis(shor_code(3));
    Rng rng(3);
    StateVector plus = state_by_selector(shor, "plus", rng);
    CHECK(std::norm(product_overlap(plus, ProductState::all_zero(9))) ==
          doctest::Approx(0.25).epsilon(1e-12));

    // parallel fold matches the naive contraction
    for (int t = 0; t < 10; ++t) {
        StateVector psi(7);
        double nrm = 0;
        for (auto& a : psi.a) {
            a = cplx(rng.gauss(), rng.gauss());
            nrm += std::norm(a);
        }
        for (auto& a : psi.a) a /= std::sqrt(nrm);
        ProductState phi = ProductState::haar_random(7, rng);
        CHECK(std::abs(product_overlap(psi, phi) - ref::product_overlap(psi, phi)) < 1e-12);
    }
}

TEST_CASE("environment vector identities") {
    // for a product state the environment reproduces the factor
    ProductState phi = ProductState::all_plus(4);
    StateVector psi(4);
    for (std::size_t b = 0; b < psi.dim(); ++b) {
        cplx amp(1, 0);
        for (int q = 0; q < 4; ++q) amp *= phi.factors[q][(b >> q) & 1];
        psi.a[b] = amp;
    }
    for (int i = 0; i < 4; ++i) {
        auto v = environment_vector(psi, phi, i);
        const double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
        CHECK(nv == doctest::Approx(1.0).epsilon(1e-12));
    }

    // GHZ_2 with phi = |00>: contracting qubit 0 leaves |0>/sqrt(2) on qubit 1
    StateVector ghz(2);
    ghz.a[0] = ghz.a[3] = 1.0 / std::sqrt(2.0);
    auto v = environment_vector(ghz, ProductState::all_zero(2), 1);
    CHECK(std::abs(v[0] - 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(v[1]) < 1e-14);

    // updating factor i to v/|v| realizes overlap |v| (Cauchy-Schwarz equality)
    Rng rng(5);
    StateVector r(5);
    double nrm = 0;
    for (auto& a : r.a) {
        a = cplx(rng.gauss(), rng.gauss());
        nrm += std::norm(a);
    }
    for (auto& a : r.a) a /= std::sqrt(nrm);
    ProductState p5 = ProductState::haar_random(5, rng);
    for (int i = 0; i < 5; ++i) {
        auto env = environment_vector(r, p5, i);
        const double nv = std::sqrt(std::norm(env[0]) + std::norm(env[1]));
        ProductState upd = p5;
        upd.factors[i] = {env[0] / nv, env[1] / nv};
        CHECK(std::abs(product_overlap(r, upd)) == doctest::Approx(nv).epsilon(1e-12));
    }
}

TEST_CASE("alternating maximization basics") {
    StateVector zero = StateVector::basis_state(6, 0);
    GemEstimate est = alternating_maximize(zero, 4, 100, 1e-12, 11);
    CHECK(est.best_overlap == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(est.e0_upper <= 1e-12);
    CHECK(est.converged);
    CHECK_THROWS_AS(alternating_maximize(zero, 0), domain_error);
}

TEST_CASE("traces are monotone and the runs are reproducible") {
    auto shor = logical_basis(shor_code(3));
    Rng rng(6);
    StateVector psi = random_logical_state(shor, rng);
    GemEstimate a = alternating_maximize(psi, 8, 200, 1e-12, 99);
    GemEstimate b = alternating_maximize(psi, 8, 200, 1e-12, 99);
    CHECK(a.best_overlap == b.best_overlap);
    CHECK(a.sweeps_used == b.sweeps_used);
    for (const auto& trace : a.traces)
        for (std::size_t i = 1; i < trace.size(); ++i)
            CHECK(trace[i] >= trace[i - 1] - 1e-14);
}

TEST_CASE("shor plus-state estimate is tight at the stabilizer cap") {
    for (int d : {2, 3}) {
        auto basis = logical_basis(shor_code(d));
        Rng rng(7);
        StateVector plus = state_by_selector(basis, "plus", rng);
        GemEstimate est = alternating_maximize(plus, 32, 500, 1e-12, kDefaultSeed);
        CHECK(est.best_overlap == doctest::Approx(std::exp2(1.0 - d)).epsilon(1e-9));
    }
}

TEST_CASE("five-qubit logical states respect the stabilizer cap") {
    auto basis = logical_basis(five_qubit_code());
    Rng rng(8);
    for (int t = 0; t < 10; ++t) {
        StateVector psi = random_logical_state(basis, rng);
        GemEstimate est = alternating_maximize(psi, 16, 300, 1e-12, 1000 + t);
        CHECK(est.best_overlap <= 0.25 + 1e-9);
        CHECK(est.e0_upper >= 2.0 - 1e-6);
    }
}

TEST_CASE("clifford conjugation experiment") {
    auto shor = shor_code(3);
    SUBCASE("depth 0 keeps the code") {
        auto rep = clifford_gem_experiment(shor, 0, 5, 42);
        CHECK(rep.base_distance == 3);
        CHECK(rep.min_image_distance == 3);
        CHECK(rep.all_pass);
    }
    SUBCASE("depth 1 keeps the floor and the overlap cap") {
        auto rep = clifford_gem_experiment(shor, 1, 20, 43);
        CHECK(rep.min_image_distance >= 2);
        CHECK(rep.all_pass);
        for (const auto& t : rep.rows) {
            CHECK(t.overlap_plus <= t.overlap_cap + 1e-9);
            CHECK(t.overlap_random <= t.overlap_cap + 1e-9);
        }
    }
    SUBCASE("depth 2 floor is vacuous but checked") {
        auto rep = clifford_gem_experiment(shor, 2, 10, 44);
        CHECK(rep.min_image_distance >= 1);
        CHECK(rep.all_pass);
    }
}
