#include <doctest.h>

#include <map>
#include <set>

#include "zipcone/weyl.hpp"

using namespace zipcone;

namespace {

// Independent length oracle: BFS word length in the Cayley graph of the
// simple reflections.
std::map<std::vector<uint8_t>, std::size_t> bfs_lengths(std::size_t n) {
    std::map<std::vector<uint8_t>, std::size_t> dist;
    std::vector<WeylElement> queue{WeylElement::identity(n)};
    dist[queue[0].perm_one_based()] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        WeylElement cur = queue[head];
        std::size_t d = dist[cur.perm_one_based()];
        for (std::size_t i = 1; i <= n; ++i) {
            WeylElement next = cur * WeylElement::simple_reflection(n, i);
            auto key = next.perm_one_based();
            if (!dist.count(key)) {
                dist[key] = d + 1;
                queue.push_back(next);
            }
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("symplectic symmetry is enforced") {
    CHECK_THROWS(WeylElement({1, 2, 4, 3}));        // breaks w(i)+w(2n+1-i)=2n+1
    CHECK_THROWS(WeylElement({1, 1, 2, 2}));        // not a permutation
    CHECK_NOTHROW(WeylElement({2, 1, 4, 3}));
    CHECK_NOTHROW(WeylElement({3, 4, 1, 2}));
}

TEST_CASE("length examples and brute-force oracle") {
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(weyl_length(WeylElement::identity(n)) == 0);
        CHECK(weyl_length(WeylElement::longest(n)) == n * n);
        CHECK(weyl_length(WeylElement::longest_levi(n)) == n * (n - 1) / 2);
    }
    for (std::size_t n = 1; n <= 3; ++n) {
        auto oracle = bfs_lengths(n);
        auto all = enumerate_weyl(n);
        CHECK(all.size() == oracle.size());
        for (const auto& w : all) CHECK(weyl_length(w) == oracle.at(w.perm_one_based()));
    }
}

TEST_CASE("simple reflections square to identity and satisfy braid relations") {
    const std::size_t n = 3;
    SimpleReflectionSet refl(n);
    for (const auto& s : refl.s) CHECK((s * s).is_identity());
    auto& s = refl.s;
    // type C_3 braid relations: (s1 s2)^3 = (s2 s3)^4 = (s1 s3)^2 = e
    auto power = [](const WeylElement& w, int k) {
        WeylElement acc = WeylElement::identity(3);
        for (int i = 0; i < k; ++i) acc = acc * w;
        return acc;
    };
    CHECK(power(s[0] * s[1], 3).is_identity());
    CHECK(power(s[1] * s[2], 4).is_identity());
    CHECK(power(s[0] * s[2], 2).is_identity());
}

TEST_CASE("bruhat order basics") {
    for (std::size_t n = 2; n <= 3; ++n) {
        auto all = enumerate_weyl(n);
        for (const auto& w : all) {
            CHECK(bruhat_leq(WeylElement::identity(n), w));
            CHECK(bruhat_leq(w, w));
        }
    }
    // W(C_2) has exactly two elements of length 2 and they are incomparable.
    std::vector<WeylElement> len2;
    for (const auto& w : enumerate_weyl(2))
        if (weyl_length(w) == 2) len2.push_back(w);
    REQUIRE(len2.size() == 2);
    CHECK_FALSE(bruhat_leq(len2[0], len2[1]));
    CHECK_FALSE(bruhat_leq(len2[1], len2[0]));
}

TEST_CASE("minimal coset representatives") {
    {
        auto iw = enumerate_IW(1);
        REQUIRE(iw.size() == 2);
        std::multiset<std::size_t> lens{weyl_length(iw[0]), weyl_length(iw[1])};
        CHECK(lens == std::multiset<std::size_t>{0, 1});
    }
    {
        auto iw = enumerate_IW(3);
        REQUIRE(iw.size() == 8);
        std::multiset<std::size_t> lens;
        for (const auto& w : iw) lens.insert(weyl_length(w));
        CHECK(lens == std::multiset<std::size_t>{0, 1, 2, 3, 3, 4, 5, 6});
        CHECK(iw.back() == frame_element(3));
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        auto iw = enumerate_IW(n);
        CHECK(iw.size() == (1u << n));
        CHECK(weyl_length(frame_element(n)) == n * (n + 1) / 2);
        // brute-force cross-check: minimal length within the coset W_I w
        if (n <= 4) {
            auto levi = enumerate_levi(n);
            for (const auto& w : iw) {
                std::size_t lw = weyl_length(w);
                for (const auto& v : levi) CHECK(weyl_length(v * w) >= lw);
            }
        }
    }
}

TEST_CASE("twisted order") {
    for (std::size_t n = 1; n <= 3; ++n) {
        auto iw = enumerate_IW(n);
        const WeylElement z = frame_element(n);
        for (const auto& w : iw) {
            CHECK(preceq(WeylElement::identity(n), w));
            if (!(w == z)) CHECK_FALSE(preceq(z, w));
        }
    }
    // the four strata of rank 2 are totally ordered
    auto iw = enumerate_IW(2);
    REQUIRE(iw.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(preceq(iw[i], iw[j]) == (i <= j));
    // arguments outside ^I W are rejected
    WeylElement s1 = WeylElement::simple_reflection(2, 1);
    CHECK_THROWS(preceq(s1, frame_element(2)));
}

TEST_CASE("rank mismatch is an error") {
    CHECK_THROWS(bruhat_leq(WeylElement::identity(2), WeylElement::identity(3)));
}
