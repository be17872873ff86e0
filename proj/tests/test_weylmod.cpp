#include <doctest.h>

#include <random>

#include "zipcone/weylmod.hpp"

using namespace zipcone;

TEST_CASE("tableau enumeration and hook content") {
    CHECK(enumerate_ssyt({1, 1, 0}, 3).size() == 3);
    CHECK(enumerate_ssyt({2, 1, 0}, 3).size() == 8);
    CHECK(hook_content_count({2, 1, 0}, 3) == 8);
    CHECK(hook_content_count({1, 1, 1}, 3) == 1);
    CHECK(hook_content_count({1, 1}, 1) == 0);  // column too tall
    CHECK(enumerate_ssyt({0, 0}, 2).size() == 1);
    CHECK(conjugate({3, 1, 0}) == Partition{2, 1, 1});
}

TEST_CASE("module dimensions of small weights") {
    CHECK(build_module(Character({0, 0, 0}, 0), 2).dim() == 1);
    CHECK(build_module(Character({0, 0, 0}, 2), 3).dim() == 1);
    CHECK(build_module(lambda_Omega(3), 2).dim() == 3);
    DualWeylModule m = build_module(Character({2, 1, 0}, 3), 2);
    CHECK(m.dim() == 8);
    std::size_t mult = 0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (m.weight_of(i) == Character({1, 1, 1}, 3)) ++mult;
    CHECK(mult == 2);
}

TEST_CASE("weight spaces of a one-dimensional module") {
    Character lambda = lambda_omega(2);  // empty shape after the twist
    DualWeylModule m = build_module(lambda, 3);
    auto spaces = weight_spaces(m);
    REQUIRE(spaces.size() == 1);
    CHECK(spaces.begin()->first == lambda);
    CHECK(spaces.begin()->second.dim() == 1);
}

TEST_CASE("weight spaces of the Hodge-bundle weight") {
    DualWeylModule m = build_module(lambda_Omega(3), 3);
    auto spaces = weight_spaces(m);
    REQUIRE(spaces.size() == 3);
    for (const Character& chi :
         {Character({-1, 0, 0}, 1), Character({0, -1, 0}, 1), Character({0, 0, -1}, 1)}) {
        REQUIRE(spaces.count(chi) == 1);
        CHECK(spaces.at(chi).dim() == 1);
    }
    std::size_t total = 0;
    for (const auto& [chi, space] : spaces) total += space.dim();
    CHECK(total == m.dim());
}

TEST_CASE("identity acts as identity and the action is multiplicative") {
    for (uint32_t p : {2u, 3u}) {
        DualWeylModule m = build_module(Character({1, 0}, 1), p);
        CHECK(m.act(MatrixFp::identity(p, 2), 1) == MatrixFp::identity(p, m.dim()));
        std::mt19937_64 rng(7);
        auto random_invertible = [&]() {
            while (true) {
                MatrixFp g(p, 2, 2);
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j)
                        g.at(i, j) = static_cast<uint32_t>(rng() % p);
                if (g.det() != 0) return g;
            }
        };
        for (int trial = 0; trial < 20; ++trial) {
            MatrixFp g = random_invertible(), h = random_invertible();
            CHECK(m.act(g * h, 1) == m.act(g, 1) * m.act(h, 1));
        }
    }
}

TEST_CASE("negative weights act through the determinant twist") {
    // (p-1) * lambda_omega is the empty shape with a pure scalar action.
    for (uint32_t p : {2u, 3u}) {
        DualWeylModule m = build_module(lambda_omega(3) * (p - 1), p);
        CHECK(m.dim() == 1);
        CHECK(m.twist() == p - 1);
        CHECK(m.sim_exp() == 3 * (p - 1));
    }
}

TEST_CASE("build refuses non-dominant weights and oversized modules") {
    CHECK_THROWS_AS(build_module(Character({0, 1, 1}, 2), 2), std::invalid_argument);
    CHECK_THROWS_AS(build_module(Character({4, 2, 0}, 6), 2, 10), budget_error);
}

TEST_CASE("singular matrices and zero scalars are rejected") {
    DualWeylModule m = build_module(Character({1, 0}, 1), 3);
    MatrixFp sing(3, 2, 2);
    sing.at(0, 0) = 1;
    sing.at(1, 1) = 0;
    CHECK_THROWS(m.act(sing, 1));
    CHECK_THROWS(m.act(MatrixFp::identity(3, 2), 0));
}

TEST_CASE("monomial space counter") {
    CHECK(monomial_space_size(0, 9) == 1);
    CHECK(monomial_space_size(2, 2) == 3);
    CHECK(monomial_space_size(12, 9) == 125970);
    CHECK(monomial_space_size(18, 9) == 1562275);
}
