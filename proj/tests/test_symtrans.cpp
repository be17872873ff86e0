#include <doctest.h>

#include <random>

#include "zipcone/symtrans.hpp"

using namespace zipcone;

namespace {

FiniteAction sign_group(uint32_t p) {
    MatrixFp minus = MatrixFp::identity(p, 2);
    minus.scale(p - 1);
    return FiniteAction(p, 2, {MatrixFp::identity(p, 2), minus});
}

}  // namespace

TEST_CASE("trivial group") {
    FiniteAction trivial(5, 2, {MatrixFp::identity(5, 2)});
    std::vector<uint32_t> x{3, 1};
    CHECK(sym_transform(trivial, x, 1).poly == Polynomial::linear(5, x).scaled(4));  // -x
    CHECK(orbit_norm(trivial, x).poly == Polynomial::linear(5, x));
    CHECK(orbit_trace(trivial, x) == x);
    CHECK(annihilation_check(trivial, x));
}

TEST_CASE("sign group on the plane") {
    const uint32_t p = 5;
    FiniteAction pm = sign_group(p);
    std::vector<uint32_t> e1{1, 0};
    CHECK(sym_transform(pm, e1, 1).is_zero());
    Polynomial e1sq = Polynomial::variable(p, 2, 0) * Polynomial::variable(p, 2, 0);
    CHECK(sym_transform(pm, e1, 2).poly == e1sq.scaled(p - 1));
    CHECK(orbit_trace(pm, e1) == std::vector<uint32_t>{0, 0});
    CHECK(orbit_norm(pm, e1).poly == e1sq.scaled(p - 1));
    CHECK(annihilation_check(pm, e1));
    for (std::size_t d = 1; d <= 2; ++d) CHECK(sym_transform(pm, {0, 0}, d).is_zero());
    CHECK_THROWS(sym_transform(pm, e1, 0));
    CHECK_THROWS(sym_transform(pm, e1, 3));
}

TEST_CASE("cyclic group of order three in GL_2(F_7)") {
    MatrixFp a(7, 2, 2);
    a.set(0, 0, 0);
    a.set(0, 1, -1);
    a.set(1, 0, 1);
    a.set(1, 1, -1);
    FiniteAction cyc(7, 2, {MatrixFp::identity(7, 2), a, a * a});
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<uint32_t> x{static_cast<uint32_t>(rng() % 7),
                                static_cast<uint32_t>(rng() % 7)};
        CHECK(annihilation_check(cyc, x));
        SymElement s2 = sym_transform(cyc, x, 2);
        for (std::size_t idx = 0; idx < 3; ++idx) {
            CHECK(sym_transform(cyc, cyc.elements()[idx].apply(x), 2) == s2);
            CHECK(apply_to_sym(cyc, idx, s2) == s2);
        }
        bool xzero = x[0] == 0 && x[1] == 0;
        CHECK(orbit_norm(cyc, x).is_zero() == xzero);
    }
    // norm vs top symmetric transform: odd order flips the sign
    std::vector<uint32_t> x{2, 5};
    CHECK(orbit_norm(cyc, x).poly == sym_transform(cyc, x, 3).poly.scaled(6));
}

TEST_CASE("construction validates the group axioms") {
    const uint32_t p = 5;
    MatrixFp two = MatrixFp::identity(p, 1);
    two.at(0, 0) = 2;
    CHECK_THROWS(FiniteAction(p, 1, {two}));                          // no identity
    CHECK_THROWS(FiniteAction(p, 1, {MatrixFp::identity(p, 1), two}));  // not closed
    MatrixFp four = MatrixFp::identity(p, 1);
    four.at(0, 0) = 4;
    CHECK_NOTHROW(FiniteAction(p, 1, {MatrixFp::identity(p, 1), four}));
}
