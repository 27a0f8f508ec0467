#include <cmath>

#include "doctest.h"
#include "qgem/general_code.hpp"
#include "qgem/reference.hpp"
#include "qgem/zoo.hpp"

using namespace qgem;

TEST_CASE("basis validation") {
    StateVector a = StateVector::basis_state(2, 0);
    StateVector b = StateVector::basis_state(2, 0);  // duplicate, not orthogonal
    CHECK_THROWS_AS(GeneralCode::from_basis(2, {a, b}), invalid_code_error);
    StateVector c = StateVector::basis_state(2, 1);
    CHECK_NOTHROW(GeneralCode::from_basis(2, {a, c}));
}

TEST_CASE("kl verification on the pi code") {
    GeneralCode pi = pi_code(4);
    CHECK(kl_verify_distance(pi, 2).pass);
    CHECK(kl_verify_distance(pi, 1).pass);  // only the identity
    auto rep = kl_verify_distance(pi, 3);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->pauli.weight() == 2);

    // the single-qubit Z diagonal value vanishes exactly at n = 4
    StateVector z0 = apply_pauli(pi.basis[0], PauliOperator::single(4, 1, 'Z'));
    CHECK(std::abs(inner(pi.basis[0], z0)) < 1e-12);
}

TEST_CASE("kl scan matches the serial reference") {
    GeneralCode pi = pi_code(5);
    for (int d : {2, 3}) {
        auto a = kl_verify_distance(pi, d);
        auto b = ref::kl_verify_distance(pi, d);
        CHECK(a.pass == b.pass);
        if (a.witness && b.witness) CHECK(a.witness->pauli.str() == b.witness->pauli.str());
    }
    auto five = logical_basis(five_qubit_code());
    CHECK(kl_verify_distance(five, 3).pass == ref::kl_verify_distance(five, 3).pass);
    CHECK(kl_verify_distance(five, 4).pass == ref::kl_verify_distance(five, 4).pass);
}

TEST_CASE("kl distance search") {
    auto kd = kl_distance(pi_code(6), 6);
    CHECK(kd.verified == 2);
    CHECK(kd.exact);
    auto five = kl_distance(logical_basis(five_qubit_code()), 5);
    CHECK(five.verified == 3);
    CHECK(five.exact);
}

TEST_CASE("postselecting a code keeps dimension and drops one distance unit") {
    GeneralCode pi = pi_code(4);
    auto post = postselect(pi, 0, 0);
    REQUIRE(post.status == PostselectStatus::Ok);
    CHECK(post.code.n == 3);
    CHECK(post.code.basis.size() == 2);
    CHECK(post.shared_norm == doctest::Approx(0.5));
    CHECK(*post.code.claimed_distance == 1);

    auto shor = logical_basis(shor_code(3));
    shor.claimed_distance = 3;
    auto post2 = postselect(shor, 0, 0);
    REQUIRE(post2.status == PostselectStatus::Ok);
    CHECK(post2.code.basis.size() == 2);
    CHECK(kl_verify_distance(post2.code, 2).pass);
    CHECK(*post2.code.claimed_distance == 2);
}

TEST_CASE("random logical states live in the code space") {
    GeneralCode pi = pi_code(6);
    Rng rng(77);
    for (int t = 0; t < 20; ++t) {
        StateVector psi = random_logical_state(pi, rng);
        CHECK(norm(psi) == doctest::Approx(1.0).epsilon(1e-12));
        const cplx c0 = inner(pi.basis[0], psi);
        const cplx c1 = inner(pi.basis[1], psi);
        CHECK(std::norm(c0) + std::norm(c1) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("state selectors") {
    GeneralCode pi = pi_code(4);
    Rng rng(1);
    CHECK(std::abs(inner(state_by_selector(pi, "zero", rng), pi.basis[0]) - 1.0) < 1e-12);
    CHECK(std::abs(inner(state_by_selector(pi, "one", rng), pi.basis[1]) - 1.0) < 1e-12);
    StateVector plus = state_by_selector(pi, "plus", rng);
    CHECK(std::abs(inner(pi.basis[0], plus) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK_THROWS_AS(state_by_selector(pi, "nope", rng), domain_error);
    // dicke labels its own basis plus/minus
    GeneralCode dicke = dicke_pi_code(3);
    CHECK(std::abs(inner(state_by_selector(dicke, "plus", rng), dicke.basis[0]) - 1.0) < 1e-12);
}
