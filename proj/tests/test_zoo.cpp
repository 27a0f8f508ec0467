#include <cmath>

#include "doctest.h"
#include "qgem/gem.hpp"
#include "qgem/zoo.hpp"

using namespace qgem;

TEST_CASE("shor construction") {
    for (int d : {2, 3}) {
        auto code = shor_code(d);
        CHECK(code.n == d * d);
        CHECK(code.k == 1);
        CHECK(int(code.generators.size()) == d * d - 1);
        CHECK(*distance(code).exact == d);
    }
    auto basis = logical_basis(shor_code(3));
    // 8 GHZ-product terms, all 2^(-3/2)
    int nonzero = 0;
    for (const auto& a : basis.basis[0].a) {
        if (std::abs(a) > 1e-12) {
            ++nonzero;
            CHECK(std::abs(std::abs(a) - std::exp2(-1.5)) < 1e-12);
        }
    }
    CHECK(nonzero == 8);
    Rng rng(4);
    StateVector plus = state_by_selector(basis, "plus", rng);
    CHECK(std::norm(plus.a[0]) == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("pi code family") {
    CHECK_THROWS_AS(pi_code(3), domain_error);
    for (int n : {4, 6, 8, 10}) {
        GeneralCode pi = pi_code(n);
        CHECK(std::norm(pi.basis[0].a[0]) == doctest::Approx(1.0 - 2.0 / n).epsilon(1e-12));
        CHECK(kl_verify_distance(pi, 2).pass);
        for (int q = 0; q < n; ++q) {
            for (int i = 0; i < 2; ++i) {
                StateVector zs = apply_pauli(pi.basis[i], PauliOperator::single(n, q, 'Z'));
                CHECK(inner(pi.basis[i], zs).real() ==
                      doctest::Approx(1.0 - 4.0 / n).epsilon(1e-10));
            }
        }
    }
    // E0(psi0) <= -log2(1 - 2/n) <= 4/n at n = 10
    GemEstimate est = alternating_maximize(pi_code(10).basis[0], 8, 300, 1e-12, 5);
    CHECK(est.best_overlap >= 0.8 - 1e-9);
    CHECK(-std::log2(1.0 - 2.0 / 10) <= 0.4);
}

TEST_CASE("pi basis states are permutation invariant") {
    GeneralCode pi = pi_code(6);
    Rng rng(10);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> perm(6);
        for (int i = 0; i < 6; ++i) perm[i] = i;
        rng.shuffle(perm);
        for (const auto& st : pi.basis) {
            for (std::size_t b = 0; b < st.dim(); ++b) {
                std::uint64_t pb = 0;
                for (int q = 0; q < 6; ++q)
                    if ((b >> q) & 1) pb |= std::uint64_t(1) << perm[q];
                CHECK(std::abs(st.a[b] - st.a[pb]) < 1e-12);
            }
        }
    }
}

TEST_CASE("concat schedules") {
    CHECK_THROWS_AS(concat_schedule(1, 2), domain_error);  // n_ell = 2 < 4
    auto s1 = concat_schedule(2, 1);
    REQUIRE(s1.ell() == 1);
    CHECK(*s1.levels[0].exact == 4);
    CHECK(*concat_exact_qubits(s1) == 4);

    auto s2 = concat_schedule(2, 2);
    CHECK(*s2.levels[0].exact == 16);
    CHECK(*s2.levels[1].exact == 4);
    CHECK(*concat_exact_qubits(s2) == 64);  // (2M)^(2^l - 1)

    auto s3 = concat_schedule(10, 3);
    CHECK(*s3.levels[0].exact == 160000);
    CHECK(*s3.levels[1].exact == 400);
    CHECK(*s3.levels[2].exact == 20);

    // block sizes overflow int64 here; the log form carries on
    auto s8 = concat_schedule(64, 8);
    CHECK_FALSE(s8.levels[0].exact.has_value());
    CHECK(s8.levels[0].log_n == doctest::Approx(128.0 * std::log(128.0)));
}

TEST_CASE("concat overlap recursion") {
    CHECK(concat_overlap(schedule_from_sizes({4})).f == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(concat_overlap(schedule_from_sizes({4, 4})).f ==
          doctest::Approx(0.03125).epsilon(1e-12));
    CHECK(concat_overlap(schedule_from_sizes({4, 5})).f ==
          doctest::Approx(0.01875).epsilon(1e-12));
    // F_ell >= (1 - 1/M)^ell across the doubling-schedule grid
    for (std::int64_t m : {2, 3, 10, 64}) {
        for (int ell = 1; ell <= 8; ++ell) {
            const double logf = concat_overlap(concat_schedule(m, ell)).log_f;
            CHECK(logf >= double(ell) * std::log1p(-1.0 / double(m)) - 1e-12);
        }
    }
    CHECK(concat_overlap(concat_schedule(10, 3)).f >= 0.729 - 1e-12);
}

TEST_CASE("explicit concatenated code matches the recursion") {
    GeneralCode cc = concat_explicit(4, 4);
    CHECK(cc.n == 16);
    CHECK(cc.k == 1);
    CHECK(std::norm(cc.basis[0].a[0]) == doctest::Approx(0.03125).epsilon(1e-10));
    CHECK(*cc.claimed_distance == 4);
    CHECK_THROWS_AS(concat_explicit(4, 6), resource_error);  // 24 > default budget
    // (4,5) sits right at the default budget; its overlap matches the recursion
    GeneralCode cc45 = concat_explicit(4, 5, 20);
    CHECK(std::norm(cc45.basis[0].a[0]) == doctest::Approx(0.01875).epsilon(1e-10));
}

TEST_CASE("dicke states and the dicke pi code") {
    StateVector d31 = dicke_state(3, 1);
    const double w = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(d31.a[0b001] - w) < 1e-14);
    CHECK(std::abs(d31.a[0b010] - w) < 1e-14);
    CHECK(std::abs(d31.a[0b100] - w) < 1e-14);
    CHECK(std::abs(d31.a[0b111]) < 1e-14);

    CHECK_THROWS_AS(dicke_pi_code(4), domain_error);
    GeneralCode dc = dicke_pi_code(3);
    CHECK(dc.n == 9);

    const double closed = dicke_plus_overlap(3);
    CHECK(closed == doctest::Approx((2.0 + 2.0 * std::sqrt(252.0)) / 64.0).epsilon(1e-14));
    StateVector plus_all(9);
    for (auto& a : plus_all.a) a = std::exp2(-4.5);
    CHECK(inner(plus_all, dc.basis[0]).real() == doctest::Approx(closed).epsilon(1e-10));
    // E0(psi_+) upper bound from the closed form
    CHECK(-std::log2(closed * closed) == doctest::Approx(1.8464).epsilon(1e-3));

    auto kd = kl_distance(dc, 4);
    CHECK(kd.verified == 3);
    CHECK(kd.exact);
}

TEST_CASE("zoo registry round-trip") {
    for (const auto& spec : zoo_default_specs()) {
        auto e = make_zoo_code(spec);
        CHECK(e.n >= 4);
        CHECK(e.k == 1);
        CHECK(e.known_distance.has_value());
    }
    CHECK_THROWS_AS(make_zoo_code("bogus:1"), parse_error);
    CHECK_THROWS_AS(make_zoo_code("concat:4"), parse_error);
}
