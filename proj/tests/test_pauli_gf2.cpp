#include "doctest.h"
#include "qgem/gf2.hpp"
#include "qgem/pauli.hpp"
#include "qgem/rng.hpp"

using namespace qgem;

TEST_CASE("commutation basics") {
    auto x1 = PauliOperator::single(2, 0, 'X');
    auto z1 = PauliOperator::single(2, 0, 'Z');
    auto z2 = PauliOperator::single(2, 1, 'Z');
    CHECK_FALSE(commutes(x1, z1));
    CHECK(commutes(x1, z2));
    CHECK(commutes(parse_pauli("XZZXI"), parse_pauli("IXZZX")));
    CHECK_THROWS_AS(commutes(x1, PauliOperator::single(3, 0, 'X')), dimension_error);
}

TEST_CASE("commutation is symmetric and reflexive") {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + int(rng.below(12));
        PauliOperator p{n}, q{n};
        for (int i = 0; i < n; ++i) {
            p.x.set(i, rng.below(2));
            p.z.set(i, rng.below(2));
            q.x.set(i, rng.below(2));
            q.z.set(i, rng.below(2));
        }
        CHECK(commutes(p, p));
        CHECK(commutes(p, q) == commutes(q, p));
    }
}

TEST_CASE("single-qubit products carry the right phases") {
    auto X = PauliOperator::single(1, 0, 'X');
    auto Y = PauliOperator::single(1, 0, 'Y');
    auto Z = PauliOperator::single(1, 0, 'Z');
    // XZ = -iY, ZX = +iY, XY = iZ, YX = -iZ, ZY = -iX, YZ = iX
    auto xz = mul_phased(X, Z);
    CHECK(xz.phase_exp == 3);
    CHECK(xz.op.local(0) == 3);
    auto zx = mul_phased(Z, X);
    CHECK(zx.phase_exp == 1);
    auto xy = mul_phased(X, Y);
    CHECK(xy.phase_exp == 1);
    CHECK(xy.op.local(0) == 2);
    auto yx = mul_phased(Y, X);
    CHECK(yx.phase_exp == 3);
    // squares are +identity
    for (const auto& p : {X, Y, Z}) {
        auto sq = mul_phased(p, p);
        CHECK(sq.phase_exp == 0);
        CHECK(sq.op.weight() == 0);
    }
    // commuting product stays Hermitian through mul()
    auto zz = mul(parse_pauli("ZZ"), parse_pauli("XX"));
    CHECK(zz.str() == "-YY");
    CHECK_THROWS_AS(mul(X, Z), internal_error);
}

TEST_CASE("pauli parse and print round-trip") {
    for (const char* s : {"IXYZ", "-ZZXI", "XXXXX", "-I"}) {
        CHECK(parse_pauli(s).str() == s);
    }
    CHECK(parse_pauli("+XZ").str() == "XZ");
    CHECK_THROWS_AS(parse_pauli("XQ"), parse_error);
    CHECK(parse_pauli("XYZ").weight() == 3);
    CHECK(parse_pauli("IXI").weight() == 1);
}

TEST_CASE("gf2 solve and kernel") {
    // x0 + x1 = 1, x1 + x2 = 0, x0 + x2 = 1
    Gf2Matrix m(3, 3);
    m.set(0, 0);
    m.set(0, 1);
    m.set(1, 1);
    m.set(1, 2);
    m.set(2, 0);
    m.set(2, 2);
    BitVec b(3);
    b.set(0);
    b.set(2);
    auto sol = m.solve(b);
    REQUIRE(sol.has_value());
    // verify A x = b
    for (std::size_t r = 0; r < 3; ++r) {
        bool lhs = false;
        for (std::size_t c = 0; c < 3; ++c) lhs ^= m.get(r, c) && sol->get(c);
        CHECK(lhs == b.get(r));
    }
    // kernel of the rank-2 matrix has dimension 1 and really annihilates
    auto ker = m.kernel();
    REQUIRE(ker.size() == 1);
    for (std::size_t r = 0; r < 3; ++r) {
        bool lhs = false;
        for (std::size_t c = 0; c < 3; ++c) lhs ^= m.get(r, c) && ker[0].get(c);
        CHECK_FALSE(lhs);
    }
    // inconsistent system
    BitVec bad(3);
    bad.set(0);
    CHECK_FALSE(m.solve(bad).has_value());
}

TEST_CASE("gf2 random solve property") {
    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        const std::size_t rows = 1 + rng.below(10), cols = 1 + rng.below(10);
        Gf2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.below(2)) m.set(r, c);
        // build a consistent rhs from a random x
        BitVec x(cols);
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.below(2)) x.set(c);
        BitVec b(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            bool v = false;
            for (std::size_t c = 0; c < cols; ++c) v ^= m.get(r, c) && x.get(c);
            b.set(r, v);
        }
        auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        for (std::size_t r = 0; r < rows; ++r) {
            bool v = false;
            for (std::size_t c = 0; c < cols; ++c) v ^= m.get(r, c) && sol->get(c);
            CHECK(v == b.get(r));
        }
    }
}
