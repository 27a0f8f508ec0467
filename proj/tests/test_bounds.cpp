#include <cmath>

#include "doctest.h"
#include "qgem/bounds.hpp"
#include "qgem/zoo.hpp"

using namespace qgem;

TEST_CASE("binary entropy and its inverse") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(inverse_binary_entropy(1.0) == doctest::Approx(0.5));
    CHECK(inverse_binary_entropy(0.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(binary_entropy(-0.1), domain_error);
    CHECK_THROWS_AS(inverse_binary_entropy(1.5), domain_error);

    // the spec bracket: H(0.014) < 1/9 < H(0.015)
    const double x = inverse_binary_entropy(1.0 / 9);
    CHECK(x > 0.014);
    CHECK(x < 0.015);

    // mutual inverse on a grid, and monotone
    double prev = -1;
    for (int i = 0; i <= 10000; ++i) {
        const double y = double(i) / 10000;
        const double inv = inverse_binary_entropy(y);
        CHECK(std::abs(binary_entropy(inv) - y) < 1e-10);
        CHECK(inv >= prev);
        prev = inv;
    }
}

TEST_CASE("closed-form bound values") {
    CHECK(stabilizer_gem_lower_bound(3) == 2.0);
    CHECK(stabilizer_gem_lower_bound(1) == 0.0);
    CHECK(stabilizer_clifford_gem_lower_bound(3, 1) == doctest::Approx(0.5));
    CHECK(stabilizer_clifford_gem_lower_bound(3, 2) == doctest::Approx(-0.25));

    const double hinv19 = inverse_binary_entropy(1.0 / 9);
    CHECK(rate_gem_lower_bound(9, 1, 3, 0) == doctest::Approx(2.0 * hinv19).epsilon(1e-12));
    CHECK(rate_gem_lower_bound(9, 1, 3, 0) == doctest::Approx(0.0295).epsilon(0.02));

    const double cap = rate_overlap_upper_bound(9, 1, 3);
    const double want =
        (1.0 - hinv19) * (1.0 - inverse_binary_entropy(1.0 / 8));
    CHECK(cap == doctest::Approx(want).epsilon(1e-12));
    CHECK(cap == doctest::Approx(0.9684).epsilon(2e-3));

    // d=2 with k=n: single factor 1 - Hinv(1) = 1/2
    CHECK(rate_overlap_upper_bound(4, 4, 2) == doctest::Approx(0.5));
    CHECK_THROWS_AS(rate_overlap_upper_bound(4, 4, 3), domain_error);
}

TEST_CASE("sparse-code constants") {
    LdpcConstants c2 = ldpc_constants(2);
    CHECK(c2.big_k == 20);
    CHECK(c2.log_x0 == doctest::Approx(27.25));
    CHECK(c2.x0 == doctest::Approx(std::exp(27.25)).epsilon(1e-10));
    CHECK(c2.c == doctest::Approx(1.25 * std::exp(27.25) + 1.0).epsilon(1e-10));
    CHECK(c2.g > 0);

    // g stays positive in the log domain for every s up to 16, even where the
    // direct double underflows
    for (int s = 1; s <= 16; ++s) {
        LdpcConstants c = ldpc_constants(s);
        CHECK(std::isfinite(c.log_g));
        CHECK(c.big_k == std::int64_t(s) * s + std::int64_t(s) * s * s * s);
    }
    CHECK(std::isinf(ldpc_constants(6).x0));  // overflows the direct double
    CHECK(ldpc_constants(6).g == 0.0);        // underflow, log_g still finite

    auto lb = ldpc_gem_lower_bound(3, 6, 0);
    CHECK_FALSE(lb.hypothesis_met);  // 3 < 6^4
    auto lb2 = ldpc_gem_lower_bound(2000, 2, 0);
    CHECK(lb2.hypothesis_met);
    CHECK(lb2.value > 0);
}

TEST_CASE("bonferroni identity on fixed distributions") {
    GeneralCode pi = pi_code(4);
    auto wd1 = weight_distribution(pi.basis[1]);
    auto rep = bonferroni_check(wd1, 2);
    CHECK(rep.lhs == doctest::Approx(1.0));
    CHECK(rep.rhs_tail == doctest::Approx(1.0));
    CHECK(rep.pass);

    // d=1 reduces to Pr[|x|>0] = sum of the tail
    auto rep1 = bonferroni_check(wd1, 1);
    CHECK(rep1.pass);
    CHECK(rep1.lhs == doctest::Approx(1.0));

    auto shor = logical_basis(shor_code(3));
    Rng rng(12);
    StateVector plus = state_by_selector(shor, "plus", rng);
    auto rep3 = bonferroni_check(weight_distribution(plus), 3);
    CHECK(rep3.lhs == doctest::Approx(7.5));
    CHECK(rep3.rhs_tail == doctest::Approx(7.5));
    CHECK(rep3.rhs_cumulative == doctest::Approx(7.5));
    CHECK(rep3.pass);
}

TEST_CASE("bonferroni identity on random logical states") {
    Rng rng(13);
    for (const char* spec : {"pi:6", "five", "shor:2"}) {
        auto e = make_zoo_code(spec);
        GeneralCode logical = zoo_logical_code(e);
        for (int t = 0; t < 20; ++t) {
            auto wd = weight_distribution(random_logical_state(logical, rng));
            for (int d = 1; d <= 5; ++d) CHECK(bonferroni_check(wd, d).pass);
        }
    }
}

TEST_CASE("weight-moment conclusions") {
    auto repz = repetition_zcheck_code(5);
    StateVector zero = stabilizer_logical_state(repz, 0);
    auto rep = weight_moment_check(zero, repz, 1);
    CHECK(rep.s == 2);
    CHECK(rep.expected == doctest::Approx(0.0));
    CHECK(rep.ii_pass);
    CHECK(rep.iii_pass);

    auto shor = shor_code(3);
    GeneralCode basis = logical_basis(shor);
    Rng rng(14);
    StateVector plus = state_by_selector(basis, "plus", rng);
    auto rp = weight_moment_check(plus, shor, 3);
    CHECK(rp.big_k == 1332);
    CHECK(rp.expected == doctest::Approx(4.5));
    CHECK(rp.bound_ii == doctest::Approx(1333.0 * std::log(4.0)).epsilon(1e-12));
    CHECK(rp.ii_pass);
    CHECK_FALSE(rp.hypothesis_met);

    StateVector zero9 = basis.basis[0];
    auto rz = weight_moment_check(zero9, shor, 3);
    CHECK(rz.bound_ii == doctest::Approx(1333.0 * std::log(8.0)).epsilon(1e-12));
    CHECK(rz.ii_pass);
}

TEST_CASE("low-weight counting and the avoiding state") {
    CHECK(low_weight_counting(9, 1) == 0);
    CHECK(low_weight_counting(20, 15) == 5);
    CHECK(counting_chain_holds(20, 5));
    CHECK(counting_chain_holds(16, low_weight_counting(16, 12)));

    auto shor = logical_basis(shor_code(3));
    auto psi = find_low_weight_avoiding_state(shor, 0);
    REQUIRE(psi.has_value());
    CHECK(std::abs(psi->a[0]) < 1e-12);
    // it is the minus state up to phase
    Rng rng(15);
    StateVector minus = state_by_selector(shor, "minus", rng);
    CHECK(std::abs(inner(minus, *psi)) == doctest::Approx(1.0).epsilon(1e-10));

    // full space: a = n-1 leaves only |1^n>
    std::vector<StateVector> full;
    for (std::uint64_t b = 0; b < 8; ++b) full.push_back(StateVector::basis_state(3, b));
    GeneralCode fc = GeneralCode::from_basis(3, std::move(full));
    auto top = find_low_weight_avoiding_state(fc, 2);
    REQUIRE(top.has_value());
    CHECK(std::abs(std::abs(top->a[7]) - 1.0) < 1e-12);
    // a = n kills everything
    CHECK_FALSE(find_low_weight_avoiding_state(fc, 3).has_value());
}

TEST_CASE("expected weight is a logical invariant") {
    Rng rng(16);
    GeneralCode pi = pi_code(4);
    auto rep = expected_weight_invariance(pi, 30, rng);
    CHECK(rep.applicable);
    CHECK(rep.pass);
    CHECK(rep.mean == doctest::Approx(2.0));

    auto shor = zoo_logical_code(make_zoo_code("shor:3"));
    auto rs = expected_weight_invariance(shor, 30, rng);
    CHECK(rs.pass);
    CHECK(rs.mean == doctest::Approx(4.5));

    GeneralCode repz = zoo_logical_code(make_zoo_code("repz:5"));
    auto rr = expected_weight_invariance(repz, 5, rng);
    CHECK_FALSE(rr.applicable);
}
