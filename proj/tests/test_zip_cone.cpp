#include <doctest.h>

#include "zipcone/zip_cone.hpp"

using namespace zipcone;

TEST_CASE("group orders and generator certification") {
    CHECK(gl_order(1, 2) == 1);
    CHECK(gl_order(1, 3) == 2);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(3, 2) == 168);
    CHECK(gl_order(3, 3) == 11232);
    CHECK(enumerate_gl(1, 5).size() == 4);
    CHECK(enumerate_gl(2, 2).size() == 6);
    CHECK(enumerate_gl(3, 2).size() == 168);
    for (auto [n, p] : std::vector<std::pair<std::size_t, uint32_t>>{
             {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}})
        CHECK(verify_generators(n, p));
    CHECK_THROWS(verify_generators(4, 2));
    CHECK_THROWS(verify_generators(3, 7));
}

TEST_CASE("nonpositive part") {
    for (long long m = 0; m <= 3; ++m) {
        DualWeylModule mod = build_module(lambda_omega(3) * m, 2);
        CHECK(nonpositive_part(mod).dim() == mod.dim());
    }
    DualWeylModule homega = build_module(lambda_Omega(3), 2);
    CHECK(nonpositive_part(homega).dim() == 3);
    DualWeylModule std3 = build_module(Character({1, 0, 0}, 1), 2);
    REQUIRE(std3.dim() == 3);
    CHECK(nonpositive_part(std3).dim() == 2);  // the weight (0,0,1) is excluded
}

TEST_CASE("invariants") {
    CHECK(invariants(build_module(Character({0, 0, 0}, 0), 2), InvarianceMode::GLnOnly).dim() == 1);
    for (uint32_t p : {2u, 3u}) {
        DualWeylModule hasse = build_module(lambda_omega(3) * (p - 1), p);
        CHECK(invariants(hasse, InvarianceMode::GLnOnly).dim() == 1);
        CHECK(invariants(hasse, InvarianceMode::FullL).dim() == 1);
    }
    // det^{-1} is a nontrivial character of GL_n(F_3)
    CHECK(invariants(build_module(lambda_omega(3), 3), InvarianceMode::GLnOnly).dim() == 0);
    // full_L mode adds the similitude congruence: sim_exp = 1 kills lambda_Omega
    DualWeylModule homega = build_module(lambda_Omega(2), 3);
    CHECK(invariants(homega, InvarianceMode::FullL).dim() == 0);
}

TEST_CASE("h0 reports") {
    for (uint32_t p : {2u, 3u})
        for (std::size_t n = 1; n <= 3; ++n) {
            H0Report rep = h0_gzip(lambda_omega(n) * (p - 1), p, InvarianceMode::GLnOnly);
            CHECK(rep.dim_h0 == 1);
            CHECK(rep.dim_module == 1);
        }
    H0Report zero = h0_gzip(Character({0, 0}, 0), 3, InvarianceMode::GLnOnly);
    CHECK(zero.dim_h0 >= 1);
    // regression: the first interior non-member of the rank-3 cone
    H0Report out = h0_gzip(Character({1, 0, 0}, 1), 2, InvarianceMode::GLnOnly);
    CHECK(out.dim_h0 == 0);
    // non-I-dominant weights report a vanishing module
    H0Report nondom = h0_gzip(Character({0, 1, 1}, 0), 2, InvarianceMode::GLnOnly);
    CHECK(nondom.dim_module == 0);
    CHECK(nondom.dim_h0 == 0);
}

TEST_CASE("aut and van split") {
    DualWeylModule neg = build_module(lambda_omega(3) * 2, 2);
    AutVanSplit split_neg = aut_van_split(neg);
    CHECK(split_neg.van.dim() == 0);
    CHECK(split_neg.aut.dim() == neg.dim());

    AutVanSplit split_homega = aut_van_split(build_module(lambda_Omega(3), 2));
    CHECK(split_homega.van.dim() == 0);

    DualWeylModule std3 = build_module(Character({1, 0, 0}, 1), 2);
    AutVanSplit split_std = aut_van_split(std3);
    CHECK(split_std.van.dim() == 3);  // every weight has some positive entry
    CHECK(split_std.aut.dim() + split_std.van.dim() == std3.dim());
    // pr_van is idempotent and kills exactly the aut part
    CHECK(split_std.pr_van * split_std.pr_van == split_std.pr_van);
}

TEST_CASE("membership scans") {
    ScanVerdict zero = czip_membership_scan(Character({0, 0, 0}, 0), 2, InvarianceMode::GLnOnly, 4);
    CHECK(zero.found);
    CHECK(zero.witness_d == 1);

    ScanVerdict hodge = czip_membership_scan(lambda_omega(3), 3, InvarianceMode::GLnOnly, 4);
    CHECK(hodge.found);
    CHECK(hodge.witness_d == 2);  // p - 1

    ScanVerdict out = czip_membership_scan(Character({1, 0, 0}, 1), 2, InvarianceMode::GLnOnly, 4);
    CHECK_FALSE(out.found);
    CHECK(out.skipped_d.empty());
    CHECK(out.advisory_bound == gl_order(3, 2) * 1);

    // budget skips are recorded, not fatal
    ScanVerdict skipped =
        czip_membership_scan(Character({2, 1, 1}, 4), 2, InvarianceMode::GLnOnly, 3, 100);
    CHECK(skipped.skipped_d == std::vector<int>{1, 2, 3});
}

TEST_CASE("generator invariants agree with the full-group computation") {
    // Independent oracle: stack (act(g) - id) over every group element
    // instead of the generating set.
    for (uint32_t p : {2u, 3u}) {
        for (const Character& lambda :
             {Character({1, 0}, 1), Character({1, -1}, 0), lambda_Omega(2), Character({2, 0}, 2)}) {
            DualWeylModule m = build_module(lambda, p);
            MatrixFp stacked(p, 0, m.dim());
            const MatrixFp id = MatrixFp::identity(p, m.dim());
            for (const auto& g : enumerate_gl(2, p)) stacked = stacked.stacked(m.act(g, 1) - id);
            CHECK(invariants(m, InvarianceMode::GLnOnly) == nullspace(stacked));
        }
    }
    for (const Character& lambda : {lambda_Omega(3), Character({1, 1, 0}, 2)}) {
        DualWeylModule m = build_module(lambda, 2);
        MatrixFp stacked(2, 0, m.dim());
        const MatrixFp id = MatrixFp::identity(2, m.dim());
        for (const auto& g : enumerate_gl(3, 2)) stacked = stacked.stacked(m.act(g, 1) - id);
        CHECK(invariants(m, InvarianceMode::GLnOnly) == nullspace(stacked));
    }
}

TEST_CASE("mode strings") {
    CHECK(to_string(InvarianceMode::GLnOnly) == "GLn_only");
    CHECK(to_string(InvarianceMode::FullL) == "full_L");
    CHECK(parse_mode("full_L") == InvarianceMode::FullL);
    CHECK_THROWS(parse_mode("bogus"));
}
